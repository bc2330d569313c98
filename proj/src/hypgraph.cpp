#include "ggt/hypgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ggt::hypgraph {

void FiniteGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("FiniteGraph: no loops");
    if (u < 0 || v < 0 || u >= size() || v >= size()) throw std::invalid_argument("FiniteGraph: vertex out of range");
    if (has_edge(u, v)) return;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    std::sort(adj_[u].begin(), adj_[u].end());
    std::sort(adj_[v].begin(), adj_[v].end());
}

bool FiniteGraph::has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (int v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

size_t FiniteGraph::edge_count() const {
    size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return total / 2;
}

bool FiniteGraph::is_connected() const {
    if (size() == 0) return false;
    std::vector<char> seen(size(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int found = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++found;
                q.push_back(w);
            }
    }
    return found == size();
}

FiniteGraph FiniteGraph::path(int k) {
    FiniteGraph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

FiniteGraph FiniteGraph::cycle(int k) {
    FiniteGraph g = path(k);
    if (k > 2) g.add_edge(k - 1, 0);
    return g;
}

FiniteGraph FiniteGraph::star(int leaves) {
    FiniteGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

FiniteGraph FiniteGraph::binary_tree(int depth) {
    int n = (1 << (depth + 1)) - 1;
    FiniteGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, (v - 1) / 2);
    return g;
}

FiniteGraph FiniteGraph::random_tree(Rng& rng, int n) {
    FiniteGraph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(rng.uniform(v)));
    return g;
}

FiniteGraph FiniteGraph::from_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> es;
    int maxv = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        int u, v;
        if (ls >> u >> v) {
            es.push_back({u, v});
            maxv = std::max({maxv, u, v});
        }
    }
    FiniteGraph g(maxv + 1);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

FiniteGraph FiniteGraph::cayley_ball(const std::vector<std::vector<int>>& gens, int radius,
                                     size_t max_vertices) {
    if (gens.empty()) throw std::invalid_argument("cayley_ball: need at least one generator");
    size_t deg = gens[0].size();
    std::vector<std::vector<int>> steps;
    for (const auto& p : gens) {
        if (p.size() != deg) throw std::invalid_argument("cayley_ball: generator degrees differ");
        steps.push_back(p);
        std::vector<int> inv(deg);
        for (size_t i = 0; i < deg; ++i) inv[p[i]] = static_cast<int>(i);
        steps.push_back(inv);
    }
    std::vector<int> id(deg);
    for (size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
    std::map<std::vector<int>, int> index{{id, 0}};
    std::vector<std::vector<int>> verts{id};
    std::vector<std::pair<int, int>> es;
    std::deque<std::pair<int, int>> q{{0, 0}}; // (vertex, word length)
    while (!q.empty()) {
        auto [v, len] = q.front();
        q.pop_front();
        if (len == radius) continue;
        for (const auto& s : steps) {
            std::vector<int> w(deg);
            for (size_t i = 0; i < deg; ++i) w[i] = s[verts[v][i]];
            auto it = index.find(w);
            int u;
            if (it == index.end()) {
                if (verts.size() >= max_vertices) throw std::invalid_argument("cayley_ball: ball too large");
                u = static_cast<int>(verts.size());
                index.emplace(w, u);
                verts.push_back(std::move(w));
                q.push_back({u, len + 1});
            } else {
                u = it->second;
            }
            if (u != v) es.push_back({v, u});
        }
    }
    FiniteGraph g(static_cast<int>(verts.size()));
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

std::string FiniteGraph::to_dot(const FiniteGraph* coned) const {
    std::string s = "graph G {\n  node [shape=circle];\n";
    const FiniteGraph& full = coned ? *coned : *this;
    for (int v = 0; v < full.size(); ++v) s += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : full.edges()) {
        bool is_new = coned && !has_edge(u, v);
        s += "  " + std::to_string(u) + " -- " + std::to_string(v);
        if (is_new) s += " [style=dashed, color=red]";
        s += ";\n";
    }
    s += "}\n";
    return s;
}

DistanceMatrix DistanceMatrix::compute(const FiniteGraph& g) {
    if (!g.is_connected()) throw std::invalid_argument("DistanceMatrix: graph must be connected");
    DistanceMatrix dm;
    dm.n_ = g.size();
    dm.d_.assign(static_cast<size_t>(dm.n_) * dm.n_, -1);
    for (int s = 0; s < dm.n_; ++s) {
        int* row = &dm.d_[static_cast<size_t>(s) * dm.n_];
        std::deque<int> q{s};
        row[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v))
                if (row[w] < 0) {
                    row[w] = row[v] + 1;
                    q.push_back(w);
                }
        }
    }
    return dm;
}

int DistanceMatrix::diameter() const {
    int d = 0;
    for (int x : d_) d = std::max(d, x);
    return d;
}

int DistanceMatrix::dist_to_set(int v, const std::vector<int>& set) const {
    int best = -1;
    for (int w : set) {
        int d = (*this)(v, w);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

namespace {

// largest pairing sum minus the second largest, over one quadruple
int quad_gap(const DistanceMatrix& dm, int a, int b, int c, int d) {
    int s1 = dm(a, b) + dm(c, d);
    int s2 = dm(a, c) + dm(b, d);
    int s3 = dm(a, d) + dm(b, c);
    int hi = std::max({s1, s2, s3});
    int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
    return hi - mid;
}

} // namespace

DeltaResult delta_four_point(const DistanceMatrix& dm, int exact_limit, uint64_t sample_budget,
                             uint64_t seed) {
    DeltaResult res;
    int n = dm.n();
    int worst = 0;
    if (n <= exact_limit) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        worst = std::max(worst, quad_gap(dm, a, b, c, d));
                        ++res.quadruples;
                    }
        res.exact = true;
    } else {
        Rng rng(seed);
        for (uint64_t i = 0; i < sample_budget; ++i) {
            int a = static_cast<int>(rng.uniform(n));
            int b = static_cast<int>(rng.uniform(n));
            int c = static_cast<int>(rng.uniform(n));
            int d = static_cast<int>(rng.uniform(n));
            worst = std::max(worst, quad_gap(dm, a, b, c, d));
            ++res.quadruples;
        }
        res.exact = false;
    }
    res.delta = Rat::from_ll(worst, 2);
    return res;
}

int quasiconvexity_constant(const DistanceMatrix& dm, const std::vector<int>& z) {
    if (z.empty()) throw std::invalid_argument("quasiconvexity: empty subset");
    int worst = 0;
    for (int x : z)
        for (int y : z) {
            if (x >= y) continue;
            int dxy = dm(x, y);
            for (int v = 0; v < dm.n(); ++v)
                if (dm(x, v) + dm(v, y) == dxy) worst = std::max(worst, dm.dist_to_set(v, z));
        }
    return worst;
}

bool is_quasiconvex(const DistanceMatrix& dm, const std::vector<int>& z, int lambda) {
    return quasiconvexity_constant(dm, z) <= lambda;
}

ConeOff cone_off(const FiniteGraph& g, const std::vector<int>& orbit, int radius) {
    if (orbit.empty()) throw std::invalid_argument("cone_off: empty orbit set");
    DistanceMatrix dm = DistanceMatrix::compute(g);
    int n = g.size();
    ConeOff out{FiniteGraph(n), std::vector<char>(n, 0)};
    for (int v = 0; v < n; ++v) out.near_orbit[v] = dm.dist_to_set(v, orbit) <= radius;
    for (auto [u, v] : g.edges()) out.coned.add_edge(u, v);

    // distances within the subgraph induced on the far region; an avoiding
    // geodesic from u to v exists iff that distance equals d_g(u, v)
    std::vector<int> far;
    for (int v = 0; v < n; ++v)
        if (!out.near_orbit[v]) far.push_back(v);
    for (int s : far) {
        std::vector<int> dist(n, -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v))
                if (!out.near_orbit[w] && dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
        }
        for (int t : far)
            if (t > s && dist[t] >= 0 && dist[t] == dm(s, t)) out.coned.add_edge(s, t);
    }
    return out;
}

std::vector<int> bfs_geodesic(const FiniteGraph& g, int from, int to) {
    std::vector<int> parent(g.size(), -2);
    std::deque<int> q{from};
    parent[from] = -1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (v == to) break;
        for (int w : g.neighbors(v)) // neighbors sorted: smallest-index parents win
            if (parent[w] == -2) {
                parent[w] = v;
                q.push_back(w);
            }
    }
    if (parent[to] == -2) throw std::invalid_argument("bfs_geodesic: unreachable");
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

ConeOffVerification verify_coneoff(const FiniteGraph& g, const std::vector<int>& orbit, int radius,
                                   const std::vector<int>& z, int claimed_q, int sample_pairs,
                                   uint64_t seed) {
    ConeOffVerification rep;
    DistanceMatrix dx = DistanceMatrix::compute(g);
    rep.measured_q = quasiconvexity_constant(dx, z);
    rep.quasiconvex_ok = rep.measured_q <= claimed_q;

    ConeOff co = cone_off(g, orbit, radius);
    DistanceMatrix dy = DistanceMatrix::compute(co.coned);

    rep.lipschitz_ok = true;
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            if (dy(u, v) > dx(u, v)) rep.lipschitz_ok = false;

    // geodesic tracking on sampled pairs, Hausdorff distance measured in Y
    Rng rng(seed);
    int hmax = 0;
    for (int i = 0; i < sample_pairs; ++i) {
        int u = static_cast<int>(rng.uniform(g.size()));
        int v = static_cast<int>(rng.uniform(g.size()));
        std::vector<int> gx = bfs_geodesic(g, u, v);
        std::vector<int> gy = bfs_geodesic(co.coned, u, v);
        int h = 0;
        for (int p : gx) {
            int best = -1;
            for (int q : gy) {
                int d = dy(p, q);
                if (best < 0 || d < best) best = d;
            }
            h = std::max(h, best);
        }
        for (int p : gy) {
            int best = -1;
            for (int q : gx) {
                int d = dy(p, q);
                if (best < 0 || d < best) best = d;
            }
            h = std::max(h, best);
        }
        hmax = std::max(hmax, h);
        ++rep.samples;
    }
    rep.hausdorff_max = hmax;
    rep.d_est = hmax;
    rep.precondition_ok = radius > claimed_q + rep.d_est;

    // distortion and (K,K) fit over z-pairs
    rep.max_distortion = Rat(1);
    rep.k_fit = 1;
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) {
            int a = dx(z[i], z[j]);
            int b = dy(z[i], z[j]);
            if (b == 0) continue;
            Rat r = Rat::from_ll(a, b);
            if (rep.max_distortion < r) rep.max_distortion = r;
            while (a > rep.k_fit * b + rep.k_fit) ++rep.k_fit;
        }
    return rep;
}

GraphMap GraphMap::identity(int n) {
    GraphMap m;
    m.img.resize(n);
    for (int i = 0; i < n; ++i) m.img[i] = i;
    return m;
}

GraphMap GraphMap::from_cycle_rotation(int n, int shift) {
    GraphMap m;
    m.img.resize(n);
    for (int i = 0; i < n; ++i) m.img[i] = ((i + shift) % n + n) % n;
    return m;
}

GraphMap GraphMap::path_shift(int n, int shift) {
    GraphMap m;
    m.img.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int t = i + shift;
        if (t >= 0 && t < n) m.img[i] = t;
    }
    return m;
}

bool GraphMap::total(int n) const {
    if (static_cast<int>(img.size()) != n) return false;
    for (int v : img)
        if (v < 0 || v >= n) return false;
    return true;
}

bool GraphMap::is_isometric_where_defined(const DistanceMatrix& dm) const {
    for (int u = 0; u < static_cast<int>(img.size()); ++u)
        for (int v = u + 1; v < static_cast<int>(img.size()); ++v)
            if (defined(u) && defined(v) && dm(img[u], img[v]) != dm(u, v)) return false;
    return true;
}

TranslationEstimate translation_length_estimate(const DistanceMatrix& dm, const GraphMap& g, int x,
                                                int n_max) {
    TranslationEstimate est;
    std::vector<int> orbit{x};
    int cur = x;
    for (int k = 1; k <= n_max; ++k) {
        if (!g.defined(cur)) {
            est.truncated = true;
            break;
        }
        cur = g(cur);
        orbit.push_back(cur);
        est.dists.push_back(dm(x, cur));
    }
    est.ell_hat = Rat(0);
    for (size_t k = 0; k < est.dists.size(); ++k) {
        Rat r = Rat::from_ll(est.dists[k], static_cast<long long>(k + 1));
        if (est.ell_hat < r) est.ell_hat = r;
    }
    if (est.dists.empty()) {
        est.cls = IsometryClass::EllipticCandidate; // nothing moved anywhere
        return est;
    }
    // orbit diameter at half time vs full time
    auto diam_upto = [&](size_t count) {
        int d = 0;
        for (size_t i = 0; i < count; ++i)
            for (size_t j = i + 1; j < count; ++j) d = std::max(d, dm(orbit[i], orbit[j]));
        return d;
    };
    size_t total = orbit.size();
    size_t half = (total + 1) / 2;
    if (!est.truncated && diam_upto(half) == diam_upto(total)) {
        est.cls = IsometryClass::EllipticCandidate;
        return est;
    }
    size_t w0 = est.dists.size() / 2;
    bool growing = true;
    int prev = est.dists[w0];
    Rat cmin = Rat::from_ll(est.dists[w0], static_cast<long long>(w0 + 1));
    for (size_t k = w0 + 1; k < est.dists.size(); ++k) {
        growing = growing && est.dists[k] >= prev;
        prev = est.dists[k];
        Rat r = Rat::from_ll(est.dists[k], static_cast<long long>(k + 1));
        if (r < cmin) cmin = r;
    }
    if (growing && Rat(0) < cmin)
        est.cls = IsometryClass::LoxodromicCandidate;
    else
        est.cls = IsometryClass::Inconclusive;
    return est;
}

namespace {

std::vector<int> orbit_closure(const std::vector<GraphMap>& maps, int x, int n) {
    std::vector<std::vector<int>> steps;
    for (const GraphMap& m : maps) {
        steps.push_back(m.img);
        std::vector<int> inv(n, -1);
        for (int i = 0; i < n; ++i) inv[m.img[i]] = i;
        steps.push_back(std::move(inv));
    }
    std::vector<char> seen(n, 0);
    std::vector<int> out{x};
    seen[x] = 1;
    for (size_t i = 0; i < out.size(); ++i)
        for (const auto& s : steps) {
            int w = s[out[i]];
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

int set_diameter(const DistanceMatrix& dm, const std::vector<int>& s) {
    int d = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) d = std::max(d, dm(s[i], s[j]));
    return d;
}

} // namespace

CommutingBound commuting_elliptic_bound(const DistanceMatrix& dm, const std::vector<GraphMap>& a_maps,
                                        const std::vector<GraphMap>& b_maps, int x) {
    int n = dm.n();
    for (const GraphMap& m : a_maps)
        if (!m.total(n)) throw std::invalid_argument("commuting_elliptic_bound: maps must be total");
    for (const GraphMap& m : b_maps)
        if (!m.total(n)) throw std::invalid_argument("commuting_elliptic_bound: maps must be total");
    for (const GraphMap& a : a_maps)
        for (const GraphMap& b : b_maps)
            for (int v = 0; v < n; ++v)
                if (a(b(v)) != b(a(v)))
                    throw std::invalid_argument("commuting_elliptic_bound: families do not commute");

    CommutingBound res;
    res.m = set_diameter(dm, orbit_closure(a_maps, x, n));
    res.n = set_diameter(dm, orbit_closure(b_maps, x, n));
    std::vector<GraphMap> all = a_maps;
    all.insert(all.end(), b_maps.begin(), b_maps.end());
    res.joint = set_diameter(dm, orbit_closure(all, x, n));
    res.holds = res.joint <= res.m + res.n;
    return res;
}

} // namespace ggt::hypgraph
