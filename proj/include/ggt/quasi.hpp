#pragma once

#include "ggt/bigint.hpp"
#include "ggt/hypgraph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ggt::quasi {

// ===========================================================================
// Exactly modeled groups. Each model provides Elem, op, inv, id; evaluation
// of quasimorphisms returns exact rationals.
// ===========================================================================

struct IntGroup {
    using Elem = long long;
    static Elem id() { return 0; }
    static Elem op(Elem a, Elem b) { return a + b; }
    static Elem inv(Elem a) { return -a; }
    static std::vector<Elem> ball(long long radius) {
        std::vector<Elem> out;
        for (long long k = -radius; k <= radius; ++k) out.push_back(k);
        return out;
    }
};

// Infinite dihedral as Z x {+-1}: (t,s) acts by x -> t + s*x.
struct DihedralGroup {
    struct Elem {
        long long t = 0;
        int s = 1;
        bool operator==(const Elem&) const = default;
    };
    static Elem id() { return {0, 1}; }
    static Elem op(Elem a, Elem b) { return {a.t + a.s * b.t, a.s * b.s}; }
    static Elem inv(Elem a) { return {-a.s * a.t, a.s}; }
    static std::vector<Elem> ball(long long radius) {
        std::vector<Elem> out;
        for (long long k = -radius; k <= radius; ++k) {
            out.push_back({k, 1});
            out.push_back({k, -1});
        }
        return out;
    }
};

// Wreath model over a finite orbit slice: lamps in Z over Z/m, rotated by a
// cyclic shift generator.
struct CyclicWreath {
    int m;

    struct Elem {
        std::vector<long long> lamps;
        int rot = 0;
        bool operator==(const Elem&) const = default;
    };

    explicit CyclicWreath(int slots) : m(slots) {}

    Elem id() const { return {std::vector<long long>(m, 0), 0}; }
    Elem lamp(int slot, long long value) const {
        Elem e = id();
        e.lamps[slot] = value;
        return e;
    }
    Elem shift(int by) const {
        Elem e = id();
        e.rot = ((by % m) + m) % m;
        return e;
    }
    Elem op(const Elem& a, const Elem& b) const {
        Elem r = id();
        for (int s = 0; s < m; ++s) r.lamps[s] = a.lamps[s] + b.lamps[((s - a.rot) % m + m) % m];
        r.rot = (a.rot + b.rot) % m;
        return r;
    }
    Elem inv(const Elem& a) const {
        Elem r = id();
        r.rot = (m - a.rot) % m;
        for (int s = 0; s < m; ++s) r.lamps[s] = -a.lamps[((s + a.rot) % m) % m];
        return r;
    }
};

// Adapter exposing an element family (tree pairs, twisted pattern pairs)
// as a group model, so the estimators below can evaluate quasimorphisms
// directly on those elements.
template <typename F>
struct FamilyGroup {
    F fam;
    using Elem = typename F::Elem;
    Elem id() const { return fam.identity(); }
    Elem op(const Elem& a, const Elem& b) const { return fam.compose(a, b); }
    Elem inv(const Elem& a) const { return fam.inv(a); }
};

// ===========================================================================
// Quasimorphisms and their estimates
// ===========================================================================

template <typename Elem>
struct Quasimorphism {
    std::string name;
    std::function<Rat(const Elem&)> eval;
};

// max over the pairs of |q(gh) - q(g) - q(h)|: a certified lower bound on
// the true defect.
template <typename G, typename Elem = typename G::Elem>
Rat defect_estimate(const G& group, const Quasimorphism<typename G::Elem>& q,
                    const std::vector<std::pair<typename G::Elem, typename G::Elem>>& pairs) {
    Rat worst(0);
    for (const auto& [g, h] : pairs) {
        Rat d = (q.eval(group.op(g, h)) - q.eval(g) - q.eval(h)).abs();
        if (worst < d) worst = d;
    }
    return worst;
}

struct HomogenizeResult {
    Rat value;       // q(g^N) / N
    Rat at_g;        // q(g)
    bool bracket_ok; // |value - q(g)| <= defect_bound
};

template <typename G>
HomogenizeResult homogenize_estimate(const G& group, const Quasimorphism<typename G::Elem>& q,
                                     const typename G::Elem& g, int n, const Rat& defect_bound) {
    typename G::Elem p = group.id();
    for (int i = 0; i < n; ++i) p = group.op(p, g);
    HomogenizeResult r{q.eval(p) / Rat(n), q.eval(g), false};
    r.bracket_ok = (r.value - r.at_g).abs() <= defect_bound;
    return r;
}

// ===========================================================================
// Busemann estimates on finite graph rays
// ===========================================================================

struct RaySpec {
    const hypgraph::FiniteGraph* graph = nullptr;
    std::vector<int> vertices; // x_0 .. x_N with d(x_0, x_n) = n
};

// checks the geodesic-ray invariant
void validate_ray(const RaySpec& ray, const hypgraph::DistanceMatrix& dm);

struct BusemannEstimate {
    long long value = 0;          // d(g x_0, x_N) - d(x_0, x_N)
    std::vector<long long> tail;  // same quantity for n in [N/2, N]
    bool stabilized = false;      // tail constant
};

BusemannEstimate busemann_estimate(const RaySpec& ray, const hypgraph::GraphMap& g,
                                   const hypgraph::DistanceMatrix& dm);

struct LoxodromicLink {
    BusemannEstimate busemann;
    hypgraph::TranslationEstimate translation;
    bool consistent = false;
};

// nonzero stabilized Busemann estimate vs positive translation length
LoxodromicLink loxodromic_link_check(const RaySpec& ray, const hypgraph::GraphMap& g, int n_max);

// ===========================================================================
// Quasi-line generating sets (X = {g : |p(g)| < C})
// ===========================================================================

template <typename Elem>
struct QuasiLineReport {
    bool ok = false;
    std::string reject_reason;
    Rat defect_on_ball;
    std::vector<Elem> generating_set; // X intersected with the ball
    std::vector<long long> word_length; // |g|_X per ball element, -1 if unreached
    std::vector<Elem> ball;
    long long bound_a = 0, bound_b = 0; // |p|/a - b <= |.|_X <= a|p| + b on the ball
};

template <typename G, typename Elem = typename G::Elem>
QuasiLineReport<Elem> quasiline_generators(const G& group, const Quasimorphism<typename G::Elem>& p,
                                           const Rat& c, long long radius) {
    QuasiLineReport<Elem> rep;
    rep.ball = G::ball(radius);
    Rat half_c = c / Rat(2);

    std::vector<std::pair<Elem, Elem>> pairs;
    for (const Elem& g : rep.ball)
        for (const Elem& h : rep.ball) pairs.push_back({g, h});
    rep.defect_on_ball = defect_estimate(group, p, pairs);
    if (half_c < rep.defect_on_ball) {
        rep.reject_reason = "defect exceeds C/2 on the enumerated ball";
        return rep;
    }
    bool has_small_positive = false;
    for (const Elem& g : rep.ball) {
        Rat v = p.eval(g);
        if (Rat(0) < v && v < half_c) has_small_positive = true;
    }
    if (!has_small_positive) {
        rep.reject_reason = "no value of p in (0, C/2) on the enumerated ball";
        return rep;
    }

    for (const Elem& g : rep.ball)
        if (!(g == group.id()) && p.eval(g).abs() < c) rep.generating_set.push_back(g);

    // word lengths by BFS inside the ball
    rep.word_length.assign(rep.ball.size(), -1);
    auto index_of = [&](const Elem& e) -> long long {
        for (size_t i = 0; i < rep.ball.size(); ++i)
            if (rep.ball[i] == e) return static_cast<long long>(i);
        return -1;
    };
    std::vector<size_t> frontier;
    long long id_idx = index_of(group.id());
    rep.word_length[id_idx] = 0;
    frontier.push_back(static_cast<size_t>(id_idx));
    while (!frontier.empty()) {
        std::vector<size_t> next;
        for (size_t vi : frontier)
            for (const Elem& x : rep.generating_set) {
                long long wi = index_of(group.op(rep.ball[vi], x));
                if (wi >= 0 && rep.word_length[wi] < 0) {
                    rep.word_length[wi] = rep.word_length[vi] + 1;
                    next.push_back(static_cast<size_t>(wi));
                }
            }
        frontier = std::move(next);
    }

    // report the (a, b) pair minimizing max(a, b), then a
    long long best_a = 0, best_b = 0;
    for (long long a = 1; a <= 64; ++a) {
        Rat needed(0);
        for (size_t i = 0; i < rep.ball.size(); ++i) {
            if (rep.word_length[i] < 0) continue;
            Rat pv = p.eval(rep.ball[i]).abs();
            Rat len(rep.word_length[i]);
            Rat lower = pv / Rat(a) - len;   // need b >= this
            Rat upper = len - Rat(a) * pv;   // and b >= this
            if (needed < lower) needed = lower;
            if (needed < upper) needed = upper;
        }
        long long b = 0;
        while (Rat(b) < needed) ++b;
        if (best_a == 0 || std::max(a, b) < std::max(best_a, best_b)) {
            best_a = a;
            best_b = b;
        }
    }
    rep.bound_a = best_a;
    rep.bound_b = best_b;
    rep.ok = true;
    return rep;
}

// ===========================================================================
// Busemann quasicocycle on the infinite dihedral model
// ===========================================================================

struct EpsQuasicocycle {
    std::function<int(const DihedralGroup::Elem&)> eps;
    std::function<Rat(const DihedralGroup::Elem&)> phi;
    Rat defect_bound; // 2 * defect of the kernel quasimorphism
};

// Extends beta on the translation kernel to an eps-quasicocycle phi with
// phi(k s^i) = beta(k), where s is the chosen reflection. Rejects s with
// eps(s) = 1.
EpsQuasicocycle quasicocycle_extend(const Quasimorphism<long long>& beta, const Rat& beta_defect,
                                    const DihedralGroup::Elem& s);

// max over pairs of |phi(gh) - phi(g) - eps(g) phi(h)|
Rat eps_defect_estimate(const EpsQuasicocycle& q,
                        const std::vector<std::pair<DihedralGroup::Elem, DihedralGroup::Elem>>& pairs);

// ===========================================================================
// Wreath lift
// ===========================================================================

// ((a_s)_s, b) -> sum over the orbit slice of phi(a_s)
Quasimorphism<CyclicWreath::Elem> wreath_lift(const Quasimorphism<long long>& phi);

} // namespace ggt::quasi
