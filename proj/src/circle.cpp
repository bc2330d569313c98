#include "ggt/circle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ggt::circle {

namespace {

const Dyadic kOne(1);

Dyadic pow2_times(const Dyadic& d, int e) { return d.mul_pow2(e); }

} // namespace

CircleMap CircleMap::identity() {
    CircleMap m;
    m.x_ = {Dyadic(0)};
    m.y_ = {Dyadic(0)};
    m.slope_ = {0};
    return m;
}

CircleMap CircleMap::rotation(const Dyadic& offset) {
    CircleMap m;
    m.x_ = {Dyadic(0)};
    m.y_ = {offset.mod1()};
    m.slope_ = {0};
    return m;
}

CircleMap CircleMap::from_arcs(std::vector<Dyadic> x, std::vector<Dyadic> y, std::vector<int> slopes) {
    const size_t k = x.size();
    if (k == 0 || y.size() != k || slopes.size() != k)
        throw std::invalid_argument("CircleMap: arc table sizes differ");
    for (Dyadic& t : x) t = t.mod1();
    std::vector<size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return x[a] < x[b]; });
    CircleMap m;
    for (size_t i : idx) {
        m.x_.push_back(x[i]);
        m.y_.push_back(y[i].mod1());
        m.slope_.push_back(slopes[i]);
    }
    for (size_t i = 0; i + 1 < k; ++i)
        if (!(m.x_[i] < m.x_[i + 1])) throw std::invalid_argument("CircleMap: repeated breakpoint");

    // continuity at interior breakpoints, degree one at the wrap
    Dyadic lifted = m.y_[0];
    for (size_t i = 0; i < k; ++i) {
        Dyadic next_x = i + 1 < k ? m.x_[i + 1] : m.x_[0] + kOne;
        lifted += pow2_times(next_x - m.x_[i], m.slope_[i]);
        if (i + 1 < k) {
            if (!(lifted.mod1() == m.y_[i + 1]))
                throw std::invalid_argument("CircleMap: discontinuous at breakpoint");
        } else if (!(lifted == m.y_[0] + kOne)) {
            throw std::invalid_argument("CircleMap: not degree one");
        }
    }

    // canonical form: keep only slope changes
    bool all_same = true;
    for (size_t i = 1; i < k; ++i) all_same = all_same && m.slope_[i] == m.slope_[0];
    if (all_same) {
        // slope 2^s with total rise 1 forces s = 0: a rotation
        Dyadic off = m.eval(Dyadic(0));
        return rotation(off);
    }
    std::vector<Dyadic> nx, ny;
    std::vector<int> ns;
    for (size_t i = 0; i < k; ++i) {
        int prev = m.slope_[(i + k - 1) % k];
        if (prev == m.slope_[i]) continue;
        nx.push_back(m.x_[i]);
        ny.push_back(m.y_[i]);
        ns.push_back(m.slope_[i]);
    }
    CircleMap out;
    out.x_ = std::move(nx);
    out.y_ = std::move(ny);
    out.slope_ = std::move(ns);
    return out;
}

size_t CircleMap::arc_index(const Dyadic& t) const {
    // t must be reduced mod 1; returns the arc whose left end is the largest
    // breakpoint <= t, wrapping when t precedes the first breakpoint
    size_t lo = 0, hi = x_.size();
    if (t < x_[0]) return x_.size() - 1;
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (x_[mid] <= t)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

Dyadic CircleMap::eval(const Dyadic& t) const {
    Dyadic z = t.mod1();
    size_t i = arc_index(z);
    Dyadic left = x_[i];
    if (z < left) z += kOne; // wrapped arc
    return (y_[i] + pow2_times(z - left, slope_[i])).mod1();
}

int CircleMap::slope_at(const Dyadic& t) const { return slope_[arc_index(t.mod1())]; }

bool CircleMap::is_identity() const { return *this == identity(); }

std::string CircleMap::to_string() const {
    std::string s;
    for (size_t i = 0; i < x_.size(); ++i) {
        if (i) s += "; ";
        s += x_[i].to_string() + "->" + y_[i].to_string() + " *2^" + std::to_string(slope_[i]);
    }
    return s;
}

CircleMap circle_compose(const CircleMap& g, const CircleMap& f) {
    // breakpoints: f's own plus preimages under f of g's
    std::vector<Dyadic> breaks = f.breakpoints();

    // lifted value table of f for preimage lookup
    const size_t k = f.arcs();
    std::vector<Dyadic> ylift(k + 1);
    ylift[0] = f.values()[0];
    for (size_t i = 0; i < k; ++i) {
        Dyadic next_x = i + 1 < k ? f.breakpoints()[i + 1] : f.breakpoints()[0] + kOne;
        ylift[i + 1] = ylift[i] + pow2_times(next_x - f.breakpoints()[i], f.slopes()[i]);
    }
    for (const Dyadic& w : g.breakpoints()) {
        Dyadic wl = w.mod1();
        while (wl < ylift[0]) wl += kOne;
        while (!(wl < ylift[k])) wl -= kOne;
        size_t i = 0;
        while (i + 1 < k && !(wl < ylift[i + 1])) ++i;
        Dyadic x = f.breakpoints()[i] + pow2_times(wl - ylift[i], -f.slopes()[i]);
        breaks.push_back(x.mod1());
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<Dyadic> ys;
    std::vector<int> slopes;
    for (const Dyadic& b : breaks) {
        Dyadic fb = f.eval(b);
        ys.push_back(g.eval(fb));
        slopes.push_back(f.slope_at(b) + g.slope_at(fb));
    }
    return CircleMap::from_arcs(std::move(breaks), std::move(ys), std::move(slopes));
}

CircleMap circle_inverse(const CircleMap& f) {
    std::vector<Dyadic> x = f.values();
    std::vector<Dyadic> y = f.breakpoints();
    std::vector<int> s = f.slopes();
    for (int& e : s) e = -e;
    return CircleMap::from_arcs(std::move(x), std::move(y), std::move(s));
}

// ---------------------------------------------------------------------------
// Interval interpolation via standard dyadic intervals
// ---------------------------------------------------------------------------

namespace {

struct Sdi {
    Dyadic start;
    int t; // length 2^{-t}, t >= 0
};

// floor(log2(len)) for a positive dyadic len = m / 2^e
int floor_log2(const Dyadic& len) {
    return static_cast<int>(len.num().bit_length()) - 1 - static_cast<int>(len.exp());
}

std::vector<Sdi> sdi_decompose(const Dyadic& a, const Dyadic& b) {
    std::vector<Sdi> out;
    Dyadic cur = a;
    int guard = 0;
    while (cur < b) {
        if (++guard > 10000) throw std::logic_error("sdi_decompose: runaway");
        Dyadic len = b - cur;
        int t0 = -floor_log2(len);
        int t = std::max<int>({t0, static_cast<int>(cur.exp()), 0});
        out.push_back({cur, t});
        cur += Dyadic(BigInt(1), static_cast<unsigned>(t));
    }
    return out;
}

void split_first_largest(std::vector<Sdi>& pieces) {
    size_t best = 0;
    for (size_t i = 1; i < pieces.size(); ++i)
        if (pieces[i].t < pieces[best].t) best = i;
    Sdi p = pieces[best];
    Sdi lo{p.start, p.t + 1};
    Sdi hi{p.start + Dyadic(BigInt(1), static_cast<unsigned>(p.t + 1)), p.t + 1};
    pieces[best] = lo;
    pieces.insert(pieces.begin() + best + 1, hi);
}

} // namespace

std::vector<PlPiece> map_interval(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d) {
    if (!(a < b) || !(c < d)) throw std::invalid_argument("map_interval: degenerate interval");
    if (b - a == d - c) return {{a, c, 0}};
    std::vector<Sdi> L = sdi_decompose(a, b);
    std::vector<Sdi> R = sdi_decompose(c, d);
    while (L.size() < R.size()) split_first_largest(L);
    while (R.size() < L.size()) split_first_largest(R);
    std::vector<PlPiece> out;
    for (size_t i = 0; i < L.size(); ++i)
        out.push_back({L[i].start, R[i].start, L[i].t - R[i].t});
    return out;
}

bool positively_ordered(const std::vector<Dyadic>& tuple) {
    const size_t m = tuple.size();
    for (const Dyadic& t : tuple)
        if (t.is_negative() || !(t < kOne)) return false;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (tuple[i] == tuple[j]) return false;
    if (m <= 1) return true;
    int descents = 0;
    for (size_t i = 0; i < m; ++i)
        if (!(tuple[i] < tuple[(i + 1) % m])) ++descents;
    return descents == 1;
}

CircleMap ordered_witness(const std::vector<Dyadic>& src, const std::vector<Dyadic>& dst) {
    const size_t m = src.size();
    if (m == 0 || dst.size() != m) throw std::invalid_argument("ordered_witness: tuple sizes differ");
    if (m > 8) throw std::invalid_argument("ordered_witness: tuples longer than 8 unsupported");
    if (!positively_ordered(src) || !positively_ordered(dst))
        throw std::invalid_argument("ordered_witness: tuples must be positively ordered dyadics");

    if (m == 1) {
        // the rotation sending src_0 to dst_0
        return CircleMap::rotation(dst[0] - src[0]);
    }

    // lifted endpoints of the m arcs on each side
    std::vector<Dyadic> sa(m + 1), da(m + 1);
    sa[0] = src[0];
    da[0] = dst[0];
    for (size_t i = 0; i < m; ++i) {
        Dyadic sl = (src[(i + 1) % m] - src[i]).mod1();
        Dyadic dl = (dst[(i + 1) % m] - dst[i]).mod1();
        sa[i + 1] = sa[i] + sl;
        da[i + 1] = da[i] + dl;
    }
    std::vector<Dyadic> xs, ys;
    std::vector<int> slopes;
    for (size_t i = 0; i < m; ++i)
        for (const PlPiece& p : map_interval(sa[i], sa[i + 1], da[i], da[i + 1])) {
            xs.push_back(p.x);
            ys.push_back(p.y);
            slopes.push_back(p.slope);
        }
    return CircleMap::from_arcs(std::move(xs), std::move(ys), std::move(slopes));
}

CircleMap circle_glue(const std::vector<std::pair<Dyadic, CircleMap>>& arcs) {
    const size_t m = arcs.size();
    if (m == 0) throw std::invalid_argument("circle_glue: no arcs");
    std::vector<Dyadic> ends;
    for (const auto& [o, g] : arcs) ends.push_back(o);
    if (!positively_ordered(ends)) throw std::invalid_argument("circle_glue: endpoints must be positively ordered");
    for (size_t i = 0; i < m; ++i) {
        const CircleMap& g = arcs[i].second;
        const Dyadic& o0 = ends[i];
        const Dyadic& o1 = ends[(i + 1) % m];
        if (!(g.eval(o0) == o0) || !(g.eval(o1) == o1))
            throw std::invalid_argument("circle_glue: piece does not fix its arc endpoints");
    }
    if (m == 1) return arcs[0].second; // one arc covering the whole circle

    std::vector<Dyadic> xs, ys;
    std::vector<int> slopes;
    for (size_t i = 0; i < m; ++i) {
        const CircleMap& g = arcs[i].second;
        const Dyadic& o0 = ends[i];
        const Dyadic& o1 = ends[(i + 1) % m];
        xs.push_back(o0);
        ys.push_back(o0);
        slopes.push_back(g.slope_at(o0));
        for (const Dyadic& z : g.breakpoints()) {
            // strictly inside the (possibly wrapping) arc (o0, o1)
            Dyadic rel = (z - o0).mod1();
            Dyadic len = (o1 - o0).mod1();
            if (!rel.is_zero() && rel < len) {
                xs.push_back(z);
                ys.push_back(g.eval(z));
                slopes.push_back(g.slope_at(z));
            }
        }
    }
    return CircleMap::from_arcs(std::move(xs), std::move(ys), std::move(slopes));
}

CircleMap random_t_element(Rng& rng, int size) {
    if (size < 1) throw std::invalid_argument("random_t_element: size must be >= 1");
    if (size == 1) return CircleMap::identity();
    int m = std::min(size, 8);
    auto random_tuple = [&]() {
        std::set<long long> picked;
        while (static_cast<int>(picked.size()) < m) picked.insert(static_cast<long long>(rng.uniform(64)));
        std::vector<Dyadic> t;
        for (long long k : picked) t.push_back(Dyadic(BigInt(k), 6));
        return t;
    };
    return ordered_witness(random_tuple(), random_tuple());
}

CircleMap thompson_x0() {
    return CircleMap::from_arcs({Dyadic(0), Dyadic::from_parts(1, 1), Dyadic::from_parts(3, 2)},
                                {Dyadic(0), Dyadic::from_parts(1, 2), Dyadic::from_parts(1, 1)},
                                {-1, 0, 1});
}

CircleMap thompson_x1() {
    return CircleMap::from_arcs(
        {Dyadic(0), Dyadic::from_parts(1, 1), Dyadic::from_parts(3, 2), Dyadic::from_parts(7, 3)},
        {Dyadic(0), Dyadic::from_parts(1, 1), Dyadic::from_parts(5, 3), Dyadic::from_parts(3, 2)},
        {0, -1, 0, 1});
}

} // namespace ggt::circle
