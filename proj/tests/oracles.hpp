#pragma once

// Test-side oracles. Everything here recomputes expected values from first
// principles (leaf enumeration, digit expansion, brute-force search) and
// stays independent of the library code paths it checks.

#include "ggt/cantor.hpp"
#include "ggt/circle.hpp"
#include "ggt/elements.hpp"
#include "ggt/hypgraph.hpp"

#include <map>
#include <set>
#include <vector>

namespace oracle {

using ggt::cantor::Arity;
using ggt::cantor::Brick;
using ggt::cantor::BrickSet;
using ggt::cantor::ClopenSet;
using ggt::cantor::Cylinder;
using ggt::cantor::Word;

using Leaf = std::pair<int, Word>; // (root, word of fixed depth)
using LeafSet = std::set<Leaf>;

inline std::vector<Word> all_words(int n, int depth) {
    std::vector<Word> out{{}};
    for (int d = 0; d < depth; ++d) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (int x = 0; x < n; ++x) {
                Word e = w;
                e.push_back(static_cast<uint8_t>(x));
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

inline std::vector<Leaf> all_leaves(Arity a, int depth) {
    std::vector<Leaf> out;
    for (int j = 0; j < a.r; ++j)
        for (const Word& w : all_words(a.n, depth)) out.push_back({j, w});
    return out;
}

// membership decided directly against the raw cylinder list
inline bool leaf_in(const Leaf& leaf, const std::vector<Cylinder>& cyls) {
    for (const Cylinder& c : cyls) {
        if (c.root != leaf.first) continue;
        if (c.word.size() <= leaf.second.size() &&
            std::equal(c.word.begin(), c.word.end(), leaf.second.begin()))
            return true;
    }
    return false;
}

inline LeafSet truncate(const ClopenSet& s, int depth) {
    LeafSet out;
    for (const Leaf& leaf : all_leaves(s.arity(), depth))
        if (leaf_in(leaf, s.cylinders())) out.insert(leaf);
    return out;
}

// sufficient depth for exact comparison of boolean identities
inline int joint_depth(std::initializer_list<const ClopenSet*> sets) {
    int d = 0;
    for (const ClopenSet* s : sets) d = std::max(d, s->max_depth());
    return d + 1;
}

inline LeafSet leaf_union(const LeafSet& a, const LeafSet& b) {
    LeafSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

inline LeafSet leaf_intersect(const LeafSet& a, const LeafSet& b) {
    LeafSet r;
    for (const Leaf& x : a)
        if (b.count(x)) r.insert(x);
    return r;
}

inline LeafSet leaf_minus(const LeafSet& a, const LeafSet& b) {
    LeafSet r;
    for (const Leaf& x : a)
        if (!b.count(x)) r.insert(x);
    return r;
}

inline LeafSet leaf_complement(const ClopenSet& s, int depth) {
    LeafSet r;
    for (const Leaf& leaf : all_leaves(s.arity(), depth))
        if (!leaf_in(leaf, s.cylinders())) r.insert(leaf);
    return r;
}

// exact-partition check by leaf counting
inline bool partition_at_depth(Arity a, const std::vector<Cylinder>& pieces, int depth) {
    std::map<Leaf, int> hits;
    for (const Leaf& leaf : all_leaves(a, depth)) hits[leaf] = 0;
    for (const Cylinder& c : pieces)
        for (auto& [leaf, k] : hits)
            if (leaf_in(leaf, {c})) ++k;
    for (auto& [leaf, k] : hits)
        if (k != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// element action oracles
// ---------------------------------------------------------------------------

// apply a tree-pair element to a point by plain prefix substitution on a
// long finite expansion of the digits
inline Word apply_by_expansion(const ggt::elements::VElement& g, int root, const Word& expansion,
                               int* out_root) {
    for (size_t i = 0; i < g.domain().size(); ++i) {
        const Cylinder& d = g.domain()[i];
        if (d.root != root) continue;
        if (d.word.size() > expansion.size()) continue;
        if (!std::equal(d.word.begin(), d.word.end(), expansion.begin())) continue;
        Word out = g.codomain()[i].word;
        out.insert(out.end(), expansion.begin() + d.word.size(), expansion.end());
        *out_root = g.codomain()[i].root;
        return out;
    }
    throw std::logic_error("oracle: no matching piece");
}

// ---------------------------------------------------------------------------
// graph oracles
// ---------------------------------------------------------------------------

// every geodesic between two vertices, by explicit descent enumeration
inline void all_geodesics_rec(const ggt::hypgraph::FiniteGraph& g,
                              const ggt::hypgraph::DistanceMatrix& dm, int cur, int to,
                              std::vector<int>& path, std::vector<std::vector<int>>& out) {
    if (cur == to) {
        out.push_back(path);
        return;
    }
    for (int w : g.neighbors(cur))
        if (dm(w, to) == dm(cur, to) - 1) {
            path.push_back(w);
            all_geodesics_rec(g, dm, w, to, path, out);
            path.pop_back();
        }
}

inline std::vector<std::vector<int>> all_geodesics(const ggt::hypgraph::FiniteGraph& g,
                                                   const ggt::hypgraph::DistanceMatrix& dm, int from,
                                                   int to) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{from};
    all_geodesics_rec(g, dm, from, to, path, out);
    return out;
}

// cone-off by literal geodesic enumeration: {u,v} joined iff some geodesic
// avoids the R-neighborhood of the orbit
inline ggt::hypgraph::FiniteGraph oracle_cone_off(const ggt::hypgraph::FiniteGraph& g,
                                                  const std::vector<int>& orbit, int radius) {
    auto dm = ggt::hypgraph::DistanceMatrix::compute(g);
    ggt::hypgraph::FiniteGraph out(g.size());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            for (const auto& geo : all_geodesics(g, dm, u, v)) {
                bool avoids = true;
                for (int w : geo) avoids = avoids && dm.dist_to_set(w, orbit) > radius;
                if (avoids) {
                    out.add_edge(u, v);
                    break;
                }
            }
    return out;
}

// four-point constant recomputed from scratch (own BFS, explicit quadruples)
inline ggt::Rat oracle_delta(const ggt::hypgraph::FiniteGraph& g) {
    int n = g.size();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::vector<int> q{s};
        d[s][s] = 0;
        for (size_t i = 0; i < q.size(); ++i)
            for (int w : g.neighbors(q[i]))
                if (d[s][w] < 0) {
                    d[s][w] = d[s][q[i]] + 1;
                    q.push_back(w);
                }
    }
    int worst = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int e = c + 1; e < n; ++e) {
                    int s1 = d[a][b] + d[c][e];
                    int s2 = d[a][c] + d[b][e];
                    int s3 = d[a][e] + d[b][c];
                    int hi = std::max({s1, s2, s3});
                    int lo = std::min({s1, s2, s3});
                    worst = std::max(worst, hi - (s1 + s2 + s3 - hi - lo));
                }
    return ggt::Rat::from_ll(worst, 2);
}

} // namespace oracle
