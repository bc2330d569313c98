#pragma once

#include "ggt/dyadic.hpp"
#include "ggt/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ggt::circle {

// Orientation-preserving degree-one PL circle homeomorphism with dyadic
// breakpoints and power-of-two slopes: an element of Thompson's group T.
// Stored canonically: breakpoints are exactly the slope changes, sorted in
// [0,1); a map with no slope change keeps the single anchor breakpoint 0.
// All arithmetic is exact, so equality is representation equality.
class CircleMap {
public:
    static CircleMap identity();
    static CircleMap rotation(const Dyadic& offset);
    // arcs (x_i, y_i, slope exponent s_i), f = y_i + 2^{s_i}(t - x_i) on
    // [x_i, x_{i+1}); validates continuity and degree one; canonicalizes.
    static CircleMap from_arcs(std::vector<Dyadic> x, std::vector<Dyadic> y, std::vector<int> slopes);

    size_t arcs() const { return x_.size(); }
    const std::vector<Dyadic>& breakpoints() const { return x_; }
    const std::vector<Dyadic>& values() const { return y_; }
    const std::vector<int>& slopes() const { return slope_; }

    Dyadic eval(const Dyadic& t) const;
    // slope exponent of the arc containing t (mod 1)
    int slope_at(const Dyadic& t) const;

    bool is_identity() const;
    bool operator==(const CircleMap&) const = default;
    std::string to_string() const;

private:
    std::vector<Dyadic> x_, y_;
    std::vector<int> slope_;
    size_t arc_index(const Dyadic& t_mod1) const;
};

// compose(g, f) applies f first.
CircleMap circle_compose(const CircleMap& g, const CircleMap& f);
CircleMap circle_inverse(const CircleMap& f);
inline Dyadic circle_eval(const CircleMap& f, const Dyadic& x) { return f.eval(x); }

// One PL piece of an interval map, in lifted (non mod-1) coordinates.
struct PlPiece {
    Dyadic x, y;
    int slope;
};

// Dyadic PL homeomorphism [a,b) -> [c,d) built from standard dyadic interval
// decompositions (repeated halving until the piece counts agree).
std::vector<PlPiece> map_interval(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d);

// Checks distinctness and positive cyclic order of a tuple in [0,1).
bool positively_ordered(const std::vector<Dyadic>& tuple);

// f in T with f(src_i) = dst_i exactly; arcs are interpolated pairwise.
// Requires both tuples positively ordered, entries in [0,1), size <= 8.
CircleMap ordered_witness(const std::vector<Dyadic>& src, const std::vector<Dyadic>& dst);

// f agreeing with g_i on the closed arc [o_i, o_{i+1}]; every g_i must fix
// both endpoints of its arc.
CircleMap circle_glue(const std::vector<std::pair<Dyadic, CircleMap>>& arcs);

CircleMap random_t_element(Rng& rng, int size);

// Thompson's F generators under the interval embedding (fixing 0).
CircleMap thompson_x0();
CircleMap thompson_x1();

} // namespace ggt::circle
