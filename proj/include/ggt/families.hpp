#pragma once

#include "ggt/cantor.hpp"
#include "ggt/elements.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ggt::families {

// Uniform surface over the two Cantor worlds (forest boundaries with tree
// pairs, product spaces with twisted pattern pairs) so the criterion
// machinery can be written once. Everything delegates to cantor/elements.

struct TreeFamily {
    cantor::Arity arity;

    using Set = cantor::ClopenSet;
    using Piece = cantor::Cylinder;
    using Elem = elements::VElement;
    using Point = elements::TreePoint;

    std::string name() const {
        return "V_" + std::to_string(arity.n) + "(" + std::to_string(arity.r) + ")";
    }

    Set full() const { return Set::full(arity); }
    Set empty() const { return Set::empty(arity); }
    Set complement(const Set& s) const { return cantor::complement(s); }
    Set unite(const Set& a, const Set& b) const { return cantor::set_union(a, b); }
    Set intersect(const Set& a, const Set& b) const { return cantor::set_intersect(a, b); }
    Set minus(const Set& a, const Set& b) const { return cantor::set_minus(a, b); }
    bool disjoint(const Set& a, const Set& b) const { return cantor::disjoint(a, b); }
    bool subset(const Set& a, const Set& b) const { return cantor::subset(a, b); }
    bool admissible(std::span<const Set> ts) const { return cantor::tuple_admissible(ts); }

    Elem identity() const { return Elem::identity(arity); }
    Elem compose(const Elem& g, const Elem& h) const { return elements::compose(g, h); }
    Elem inv(const Elem& g) const { return elements::inverse(g); }
    bool equal_elem(const Elem& a, const Elem& b) const { return a == b; }
    Set image(const Elem& g, const Set& s) const { return elements::image_clopen(g, s); }
    Set fixed(const Elem& g) const { return elements::fixed_clopen(g); }
    Point apply(const Elem& g, const Point& p) const { return elements::apply_point(g, p); }
    bool in_set(const Set& s, const Point& p) const { return elements::contains(s, p); }
    std::vector<Point> samples(const Set& s, int k) const { return elements::sample_points(s, k); }
    Elem random_elem(Rng& rng, int size) const { return elements::random_v_element(rng, arity, size); }

    int count(const Set& s) const { return static_cast<int>(s.size()); }
    int congruence() const { return arity.n - 1; }

    std::vector<Piece> pieces_of(const Set& s) const { return s.cylinders(); }
    Set set_of(std::span<const Piece> pieces) const {
        return Set(arity, std::vector<Piece>(pieces.begin(), pieces.end()));
    }
    Set piece_set(const Piece& p) const { return Set::single(arity, p); }

    // replace pieces[idx] by its n children
    void split_piece(std::vector<Piece>& pieces, size_t idx) const {
        Piece parent = pieces[idx];
        pieces.erase(pieces.begin() + idx);
        for (int d = 0; d < arity.n; ++d) {
            Piece child = parent;
            child.word.push_back(static_cast<uint8_t>(d));
            pieces.push_back(child);
        }
    }

    // index of the lexicographically first piece
    size_t first_piece(const std::vector<Piece>& pieces) const {
        size_t best = 0;
        for (size_t i = 1; i < pieces.size(); ++i)
            if (pieces[i] < pieces[best]) best = i;
        return best;
    }

    // p lies inside a single domain piece of g, so g acts on p by one prefix
    // substitution
    bool inside_domain_piece(const Elem& g, const Piece& p) const {
        for (const Piece& d : g.domain())
            if (d.root == p.root && cantor::is_prefix(d.word, p.word)) return true;
        return false;
    }

    // piecewise assembly of an element from restrictions of others
    struct ElemBuilder {
        std::vector<Piece> dom, cod;
    };

    // requires inside_domain_piece(g, p)
    void add_restriction(ElemBuilder& b, const Elem& g, const Piece& p) const {
        for (size_t i = 0; i < g.domain().size(); ++i) {
            const Piece& d = g.domain()[i];
            if (d.root != p.root || !cantor::is_prefix(d.word, p.word)) continue;
            Piece out = g.codomain()[i];
            out.word.insert(out.word.end(), p.word.begin() + d.word.size(), p.word.end());
            b.dom.push_back(p);
            b.cod.push_back(std::move(out));
            return;
        }
        throw std::logic_error("add_restriction: piece not inside a domain piece");
    }

    void add_identity(ElemBuilder& b, const Piece& p) const {
        b.dom.push_back(p);
        b.cod.push_back(p);
    }

    Elem build(ElemBuilder&& b) const { return elem_from(std::move(b.dom), std::move(b.cod)); }

    Elem elem_from(std::vector<Piece> domain, std::vector<Piece> codomain) const {
        std::vector<int> sigma(domain.size());
        for (size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
        return Elem::from_patterns(arity, std::move(domain), std::move(codomain), sigma);
    }

    // basic pieces in (depth, root, word) order
    std::vector<Piece> basics(int max_depth) const {
        std::vector<Piece> out;
        for (int d = 1; d <= max_depth; ++d)
            for (int j = 0; j < arity.r; ++j) {
                std::vector<cantor::Word> words{{}};
                for (int t = 0; t < d; ++t) {
                    std::vector<cantor::Word> next;
                    for (const cantor::Word& w : words)
                        for (int x = 0; x < arity.n; ++x) {
                            cantor::Word e = w;
                            e.push_back(static_cast<uint8_t>(x));
                            next.push_back(std::move(e));
                        }
                    words = std::move(next);
                }
                for (cantor::Word& w : words) out.push_back({j, std::move(w)});
            }
        return out;
    }

    // j disjoint never-merging cylinders inside c: the staircase
    // c.(n-1)^i.0 for i = 0..j-1
    Set staircase_in(const Piece& c, int j) const {
        std::vector<Piece> out;
        Piece cur = c;
        for (int i = 0; i < j; ++i) {
            Piece step = cur;
            step.word.push_back(0);
            out.push_back(step);
            cur.word.push_back(static_cast<uint8_t>(arity.n - 1));
        }
        return set_of(out);
    }

    // random element acting within s and as the identity outside: refined
    // pieces of s permuted among congruent blocks
    Elem random_supported_on(Rng& rng, const Set& s, int splits) const {
        std::vector<Piece> ps = pieces_of(s);
        for (int t = 0; t < splits && !ps.empty(); ++t) split_piece(ps, rng.uniform(ps.size()));
        std::vector<Piece> dom = ps, cod = ps;
        for (size_t i = cod.size(); i > 1; --i) std::swap(cod[i - 1], cod[rng.uniform(i)]);
        std::vector<Piece> rest = pieces_of(complement(s));
        dom.insert(dom.end(), rest.begin(), rest.end());
        cod.insert(cod.end(), rest.begin(), rest.end());
        return elem_from(std::move(dom), std::move(cod));
    }
};

struct ProductFamily {
    std::shared_ptr<const elements::TwistGroup> group;

    using Set = cantor::BrickSet;
    using Piece = cantor::Brick;
    using Elem = elements::TwistedElement;
    using Point = elements::ProductPoint;

    int dims() const { return group->dims(); }
    std::string name() const {
        bool twisted = group->elements().size() > 1;
        return std::to_string(dims()) + std::string(twisted ? "V_twisted" : "V");
    }

    Set full() const { return Set::full(dims()); }
    Set empty() const { return Set::empty(dims()); }
    Set complement(const Set& s) const { return cantor::complement(s); }
    Set unite(const Set& a, const Set& b) const { return cantor::set_union(a, b); }
    Set intersect(const Set& a, const Set& b) const { return cantor::set_intersect(a, b); }
    Set minus(const Set& a, const Set& b) const { return cantor::set_minus(a, b); }
    bool disjoint(const Set& a, const Set& b) const { return cantor::disjoint(a, b); }
    bool subset(const Set& a, const Set& b) const { return cantor::subset(a, b); }
    bool admissible(std::span<const Set> ts) const { return cantor::tuple_admissible(ts); }

    Elem identity() const { return Elem::identity(group); }
    Elem compose(const Elem& g, const Elem& h) const { return elements::compose(g, h); }
    Elem inv(const Elem& g) const { return elements::inverse(g); }
    bool equal_elem(const Elem& a, const Elem& b) const { return elements::equal(a, b); }
    Set image(const Elem& g, const Set& s) const { return elements::image_clopen(g, s); }
    Set fixed(const Elem& g) const { return elements::fixed_clopen(g); }
    Point apply(const Elem& g, const Point& p) const { return elements::apply_point(g, p); }
    bool in_set(const Set& s, const Point& p) const { return elements::contains(s, p); }
    std::vector<Point> samples(const Set& s, int k) const { return elements::sample_points(s, k); }
    Elem random_elem(Rng& rng, int size) const {
        return elements::random_twisted_element(rng, group, size);
    }

    int count(const Set& s) const { return static_cast<int>(s.size()); }
    int congruence() const { return 1; } // piece counts move freely under halving

    std::vector<Piece> pieces_of(const Set& s) const { return s.bricks(); }
    Set set_of(std::span<const Piece> pieces) const {
        return Set(dims(), std::vector<Piece>(pieces.begin(), pieces.end()));
    }
    Set piece_set(const Piece& p) const { return Set::single(p); }

    void split_piece(std::vector<Piece>& pieces, size_t idx) const {
        Piece parent = pieces[idx];
        int s_best = 0;
        for (int s = 1; s < dims(); ++s)
            if (parent.psi[s].size() < parent.psi[s_best].size()) s_best = s;
        auto [lo, hi] = cantor::brick_split(parent, s_best);
        pieces.erase(pieces.begin() + idx);
        pieces.push_back(lo);
        pieces.push_back(hi);
    }

    size_t first_piece(const std::vector<Piece>& pieces) const {
        size_t best = 0;
        for (size_t i = 1; i < pieces.size(); ++i)
            if (pieces[i] < pieces[best]) best = i;
        return best;
    }

    bool inside_domain_piece(const Elem& g, const Piece& p) const {
        for (const Piece& d : g.domain())
            if (cantor::brick_subset(p, d)) return true;
        return false;
    }

    struct ElemBuilder {
        std::vector<Piece> dom, cod;
        std::vector<elements::Perm> twists;
    };

    // requires inside_domain_piece(g, p); keeps the piece's twist
    void add_restriction(ElemBuilder& b, const Elem& g, const Piece& p) const {
        for (size_t i = 0; i < g.domain().size(); ++i) {
            const Piece& d = g.domain()[i];
            if (!cantor::brick_subset(p, d)) continue;
            const elements::Perm& gam = g.twists()[i];
            elements::Perm gaminv = gam.inverse();
            Piece out = g.codomain()[i];
            for (int s = 0; s < dims(); ++s) {
                int t = gaminv(s);
                out.psi[s].insert(out.psi[s].end(), p.psi[t].begin() + d.psi[t].size(), p.psi[t].end());
            }
            b.dom.push_back(p);
            b.cod.push_back(std::move(out));
            b.twists.push_back(gam);
            return;
        }
        throw std::logic_error("add_restriction: piece not inside a domain piece");
    }

    void add_identity(ElemBuilder& b, const Piece& p) const {
        b.dom.push_back(p);
        b.cod.push_back(p);
        b.twists.push_back(elements::Perm::identity(dims()));
    }

    Elem build(ElemBuilder&& b) const {
        std::vector<int> sigma(b.dom.size());
        for (size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
        return Elem::from_patterns(group, std::move(b.dom), std::move(b.cod), sigma,
                                   std::move(b.twists));
    }

    // witnesses only ever need canonical homeomorphisms, so twists stay
    // trivial here (SV <= SV_Gamma)
    Elem elem_from(std::vector<Piece> domain, std::vector<Piece> codomain) const {
        std::vector<int> sigma(domain.size());
        std::vector<elements::Perm> twists(domain.size(), elements::Perm::identity(dims()));
        for (size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
        return Elem::from_patterns(group, std::move(domain), std::move(codomain), sigma,
                                   std::move(twists));
    }

    // bricks in (total constraint length, lex) order
    std::vector<Piece> basics(int max_depth) const {
        std::vector<Piece> out;
        for (int total = 1; total <= max_depth; ++total) {
            // all constraint-length profiles summing to `total`, then all
            // bit choices per profile
            std::function<void(int, int, Piece&)> rec = [&](int coord, int left, Piece& b) {
                if (coord == dims()) {
                    if (left == 0) out.push_back(b);
                    return;
                }
                for (int len = 0; len <= left; ++len) {
                    std::function<void(int)> bits = [&](int k) {
                        if (k == len) {
                            rec(coord + 1, left - len, b);
                            return;
                        }
                        for (int bit = 0; bit < 2; ++bit) {
                            b.psi[coord].push_back(static_cast<uint8_t>(bit));
                            bits(k + 1);
                            b.psi[coord].pop_back();
                        }
                    };
                    bits(0);
                }
            };
            Piece scratch = Piece::whole(dims());
            rec(0, total, scratch);
        }
        std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) {
            size_t ta = 0, tb = 0;
            for (const auto& w : a.psi) ta += w.size();
            for (const auto& w : b.psi) tb += w.size();
            if (ta != tb) return ta < tb;
            return a < b;
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    Set staircase_in(const Piece& c, int j) const {
        std::vector<Piece> out;
        Piece cur = c;
        for (int i = 0; i < j; ++i) {
            Piece step = cur;
            step.psi[0].push_back(0);
            out.push_back(step);
            cur.psi[0].push_back(1);
        }
        return set_of(out);
    }

    // random element supported on s, with random twists on the moved pieces
    Elem random_supported_on(Rng& rng, const Set& s, int splits) const {
        std::vector<Piece> ps = pieces_of(s);
        for (int t = 0; t < splits && !ps.empty(); ++t) split_piece(ps, rng.uniform(ps.size()));
        std::vector<Piece> dom = ps, cod = ps;
        for (size_t i = cod.size(); i > 1; --i) std::swap(cod[i - 1], cod[rng.uniform(i)]);
        std::vector<elements::Perm> twists;
        const auto& elems = group->elements();
        for (size_t i = 0; i < dom.size(); ++i) twists.push_back(elems[rng.uniform(elems.size())]);
        std::vector<Piece> rest = pieces_of(complement(s));
        for (const Piece& p : rest) {
            dom.push_back(p);
            cod.push_back(p);
            twists.push_back(elements::Perm::identity(dims()));
        }
        std::vector<int> sigma(dom.size());
        for (size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
        return Elem::from_patterns(group, std::move(dom), std::move(cod), sigma, std::move(twists));
    }
};

} // namespace ggt::families
