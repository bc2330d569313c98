#pragma once

#include "ggt/bigint.hpp"
#include "ggt/rng.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ggt::hypgraph {

// Simple connected graph with unit-length edges.
class FiniteGraph {
public:
    explicit FiniteGraph(int n = 0) : adj_(n) {}

    int size() const { return static_cast<int>(adj_.size()); }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::vector<std::pair<int, int>> edges() const;
    size_t edge_count() const;
    bool is_connected() const;

    static FiniteGraph path(int k);
    static FiniteGraph cycle(int k);
    static FiniteGraph star(int leaves);
    static FiniteGraph binary_tree(int depth);
    static FiniteGraph random_tree(Rng& rng, int n);
    // lines "u v"; '#' comments; vertex ids 0-based
    static FiniteGraph from_edge_list(std::string_view text);
    // ball of the Cayley graph of the permutation group generated by gens
    static FiniteGraph cayley_ball(const std::vector<std::vector<int>>& gens, int radius,
                                   size_t max_vertices = 5000);

    // base edges solid, extra edges (in `coned` but not here) dashed
    std::string to_dot(const FiniteGraph* coned = nullptr) const;

private:
    std::vector<std::vector<int>> adj_;
};

// All-pairs BFS distances.
class DistanceMatrix {
public:
    static DistanceMatrix compute(const FiniteGraph& g); // throws if disconnected

    int n() const { return n_; }
    int operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    int diameter() const;
    int dist_to_set(int v, const std::vector<int>& set) const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

// Four-point hyperbolicity constant: the least delta such that among the
// three pairing sums of every vertex quadruple the two largest differ by at
// most 2*delta. Exact up to `exact_limit` vertices, sampled above (the value
// is then only a lower bound).
struct DeltaResult {
    Rat delta;
    bool exact = true;
    uint64_t quadruples = 0;
};
DeltaResult delta_four_point(const DistanceMatrix& dm, int exact_limit = 60,
                             uint64_t sample_budget = 2000000, uint64_t seed = 1);

// Least lambda making z quasiconvex: max over geodesic vertices between
// members of z of their distance to z. (v is on a geodesic from x to y iff
// d(x,v) + d(v,y) = d(x,y).)
int quasiconvexity_constant(const DistanceMatrix& dm, const std::vector<int>& z);
bool is_quasiconvex(const DistanceMatrix& dm, const std::vector<int>& z, int lambda);

// Y_R: the graph plus an edge {u,v} whenever some u-v geodesic avoids the
// R-neighborhood of the orbit set; pi_R is the identity on vertices.
struct ConeOff {
    FiniteGraph coned;
    std::vector<char> near_orbit; // membership in N_R(orbit)
};
ConeOff cone_off(const FiniteGraph& g, const std::vector<int>& orbit, int radius);

struct ConeOffVerification {
    bool quasiconvex_ok = false; // measured Q fits the claimed Q
    int measured_q = 0;
    int d_est = 0;           // max sampled geodesic-tracking distance
    bool precondition_ok = false; // R > Q + d_est
    bool lipschitz_ok = false;    // d_Y <= d_X for all pairs
    Rat max_distortion;           // sup over z-pairs of d_X / d_Y
    int k_fit = 0;                // least K with d_X <= K*d_Y + K over z-pairs
    int hausdorff_max = 0;
    uint64_t samples = 0;
};
ConeOffVerification verify_coneoff(const FiniteGraph& g, const std::vector<int>& orbit, int radius,
                                   const std::vector<int>& z, int claimed_q, int sample_pairs,
                                   uint64_t seed);

// Total or partial vertex map; -1 marks undefined images.
struct GraphMap {
    std::vector<int> img;

    static GraphMap identity(int n);
    static GraphMap from_cycle_rotation(int n, int shift);
    static GraphMap path_shift(int n, int shift); // partial near the ends
    bool defined(int v) const { return v >= 0 && v < static_cast<int>(img.size()) && img[v] >= 0; }
    int operator()(int v) const { return img[v]; }
    bool total(int n) const;
    bool is_isometric_where_defined(const DistanceMatrix& dm) const;
};

enum class IsometryClass { EllipticCandidate, LoxodromicCandidate, Inconclusive };

struct TranslationEstimate {
    Rat ell_hat;
    std::vector<int> dists; // d(x, g^k x), k = 1..n_used
    IsometryClass cls = IsometryClass::Inconclusive;
    bool truncated = false; // an iterate left the defined domain
};
TranslationEstimate translation_length_estimate(const DistanceMatrix& dm, const GraphMap& g, int x,
                                                int n_max);

struct CommutingBound {
    int m = 0;       // diam(A.x)
    int n = 0;       // diam(B.x)
    int joint = 0;   // diam(<A,B>.x)
    bool holds = false;
};
// Maps must be total bijective isometries that pairwise commute across the
// two families; orbits are closed under the maps and their inverses.
CommutingBound commuting_elliptic_bound(const DistanceMatrix& dm, const std::vector<GraphMap>& a_maps,
                                        const std::vector<GraphMap>& b_maps, int x);

// deterministic BFS geodesic (smallest-index parent tie-break)
std::vector<int> bfs_geodesic(const FiniteGraph& g, int from, int to);

} // namespace ggt::hypgraph
