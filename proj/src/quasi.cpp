#include "ggt/quasi.hpp"

#include <stdexcept>

namespace ggt::quasi {

void validate_ray(const RaySpec& ray, const hypgraph::DistanceMatrix& dm) {
    if (!ray.graph || ray.vertices.empty()) throw std::invalid_argument("RaySpec: empty ray");
    for (size_t n = 0; n < ray.vertices.size(); ++n)
        if (dm(ray.vertices[0], ray.vertices[n]) != static_cast<int>(n))
            throw std::invalid_argument("RaySpec: d(x_0, x_n) != n at n=" + std::to_string(n));
}

BusemannEstimate busemann_estimate(const RaySpec& ray, const hypgraph::GraphMap& g,
                                   const hypgraph::DistanceMatrix& dm) {
    validate_ray(ray, dm);
    int x0 = ray.vertices[0];
    if (!g.defined(x0)) throw std::invalid_argument("busemann_estimate: g undefined at x_0");
    int gx0 = g(x0);
    size_t N = ray.vertices.size() - 1;
    BusemannEstimate est;
    est.value = dm(gx0, ray.vertices[N]) - static_cast<long long>(N);
    for (size_t n = N / 2; n <= N; ++n)
        est.tail.push_back(dm(gx0, ray.vertices[n]) - static_cast<long long>(n));
    est.stabilized = true;
    for (long long t : est.tail) est.stabilized = est.stabilized && t == est.tail.front();
    return est;
}

LoxodromicLink loxodromic_link_check(const RaySpec& ray, const hypgraph::GraphMap& g, int n_max) {
    hypgraph::DistanceMatrix dm = hypgraph::DistanceMatrix::compute(*ray.graph);
    LoxodromicLink link;
    link.busemann = busemann_estimate(ray, g, dm);
    link.translation = hypgraph::translation_length_estimate(dm, g, ray.vertices[0], n_max);
    bool busemann_drift = link.busemann.stabilized && link.busemann.value != 0;
    bool loxo = link.translation.cls == hypgraph::IsometryClass::LoxodromicCandidate;
    link.consistent = busemann_drift == loxo;
    return link;
}

EpsQuasicocycle quasicocycle_extend(const Quasimorphism<long long>& beta, const Rat& beta_defect,
                                    const DihedralGroup::Elem& s) {
    if (s.s != -1) throw std::invalid_argument("quasicocycle_extend: s must lie outside the kernel");
    EpsQuasicocycle q;
    q.eps = [](const DihedralGroup::Elem& g) { return g.s; };
    // g = k s^i with i = [g flips]; k = g * s^{-i}
    long long c = s.t;
    q.phi = [beta, c](const DihedralGroup::Elem& g) {
        long long k = g.s == 1 ? g.t : g.t - c;
        return beta.eval(k);
    };
    q.defect_bound = Rat(2) * beta_defect;
    return q;
}

Rat eps_defect_estimate(const EpsQuasicocycle& q,
                        const std::vector<std::pair<DihedralGroup::Elem, DihedralGroup::Elem>>& pairs) {
    DihedralGroup d;
    Rat worst(0);
    for (const auto& [g, h] : pairs) {
        Rat v = (q.phi(d.op(g, h)) - q.phi(g) - Rat(q.eps(g)) * q.phi(h)).abs();
        if (worst < v) worst = v;
    }
    return worst;
}

Quasimorphism<CyclicWreath::Elem> wreath_lift(const Quasimorphism<long long>& phi) {
    Quasimorphism<CyclicWreath::Elem> lift;
    lift.name = "wreath_lift(" + phi.name + ")";
    lift.eval = [phi](const CyclicWreath::Elem& e) {
        Rat sum(0);
        for (long long a : e.lamps) sum = sum + phi.eval(a);
        return sum;
    };
    return lift;
}

} // namespace ggt::quasi
