#pragma once

#include "ggt/cantor.hpp"
#include "ggt/rng.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ggt::elements {

using cantor::Arity;
using cantor::Brick;
using cantor::BrickSet;
using cantor::ClopenSet;
using cantor::Cylinder;
using cantor::Word;

// ===========================================================================
// Eventually periodic words and boundary points
// ===========================================================================

// Infinite word pre . per^inf, normalized to the unique minimal form:
// primitive period, then the preperiod absorbed into the period as far as it
// goes. Closed under prefix removal and prepending, which is all the element
// actions ever do.
struct EventualWord {
    Word pre;
    Word per; // nonempty

    EventualWord() : per{0} {}
    EventualWord(Word prefix, Word period);

    uint8_t digit(size_t i) const {
        return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
    }
    bool has_prefix(const Word& w) const;
    EventualWord drop_prefix(size_t k) const;
    EventualWord prepend(const Word& w) const;
    Word expand(size_t len) const;

    bool operator==(const EventualWord&) const = default;
    std::string to_string() const; // "pre(per)"
};

struct TreePoint {
    int root = 0;
    EventualWord w;
    bool operator==(const TreePoint&) const = default;
    std::string to_string() const;
};

struct ProductPoint {
    std::vector<EventualWord> coords;
    bool operator==(const ProductPoint&) const = default;
    std::string to_string() const;
};

// Lexicographically least point of a cylinder: word followed by zeros.
TreePoint least_point(const Cylinder& c);
ProductPoint least_point(const Brick& b);

// Deterministic sample of `count` distinct points inside the set
// (lexicographically least eventually periodic extensions, in order).
std::vector<TreePoint> sample_points(const ClopenSet& s, int count);
std::vector<ProductPoint> sample_points(const BrickSet& s, int count);

bool contains(const ClopenSet& s, const TreePoint& p);
bool contains(const BrickSet& s, const ProductPoint& p);

// ===========================================================================
// V_n(r): tree-pair diagrams
// ===========================================================================

// Element of the Higman--Thompson group: a bijection between two cylinder
// partitions of the boundary, each domain piece mapped to its codomain piece
// by prefix replacement. Stored in reduced canonical form: no domain sibling
// block maps to a codomain sibling block in order, and pieces are sorted by
// domain cylinder. Group equality is representation equality.
class VElement {
public:
    static VElement identity(Arity a);
    // domain[i] -> codomain[sigma[i]]; both lists must be exact partitions.
    static VElement from_patterns(Arity a, std::vector<Cylinder> domain,
                                  std::vector<Cylinder> codomain, const std::vector<int>& sigma);

    const Arity& arity() const { return arity_; }
    size_t pieces() const { return dom_.size(); }
    const std::vector<Cylinder>& domain() const { return dom_; }
    const std::vector<Cylinder>& codomain() const { return cod_; }

    bool is_identity() const;
    bool operator==(const VElement&) const = default;

    std::string to_string() const;

private:
    Arity arity_{};
    std::vector<Cylinder> dom_; // sorted
    std::vector<Cylinder> cod_; // cod_[i] = image of dom_[i]
    void canonicalize();
    friend VElement compose(const VElement&, const VElement&);
    friend VElement inverse(const VElement&);
};

// compose(g, h) applies h first: (g*h)(x) = g(h(x)).
VElement compose(const VElement& g, const VElement& h);
VElement inverse(const VElement& g);
TreePoint apply_point(const VElement& g, const TreePoint& p);
ClopenSet image_clopen(const VElement& g, const ClopenSet& c);
// Union of the maximal cylinders on which g restricts to the identity.
ClopenSet fixed_clopen(const VElement& g);

// Deterministic per seed; domain pattern with at most `size` pieces.
VElement random_v_element(Rng& rng, Arity a, int size);

// ===========================================================================
// sV and SV_Gamma: (twisted) pattern-pair diagrams
// ===========================================================================

struct Perm {
    std::vector<int> img;

    static Perm identity(int k);
    int deg() const { return static_cast<int>(img.size()); }
    int operator()(int x) const { return img[x]; }
    Perm after(const Perm& first) const; // (*this) o first
    Perm inverse() const;
    bool is_identity() const;
    auto operator<=>(const Perm&) const = default;
};

// The permutation group Gamma <= Sym(S) given by generators, enumerated once
// so twist membership and uniform sampling are exact.
class TwistGroup {
public:
    TwistGroup(int dims, std::vector<Perm> gens);

    int dims() const { return dims_; }
    const std::vector<Perm>& elements() const { return elems_; }
    bool contains(const Perm& p) const;

    static std::shared_ptr<const TwistGroup> trivial(int dims);

private:
    int dims_;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_; // sorted
};

// Element of the (twisted) Brin--Thompson group over C^S, S = {0..dims-1}:
// domain bricks mapped to codomain bricks by strip / coordinate twist /
// prepend. With the trivial twist group this is sV.
class TwistedElement {
public:
    static TwistedElement identity(std::shared_ptr<const TwistGroup> group);
    static TwistedElement from_patterns(std::shared_ptr<const TwistGroup> group,
                                        std::vector<Brick> domain, std::vector<Brick> codomain,
                                        const std::vector<int>& sigma, std::vector<Perm> twists);

    const std::shared_ptr<const TwistGroup>& group() const { return group_; }
    int dims() const { return group_->dims(); }
    size_t pieces() const { return dom_.size(); }
    const std::vector<Brick>& domain() const { return dom_; }
    const std::vector<Brick>& codomain() const { return cod_; }
    const std::vector<Perm>& twists() const { return twists_; }

    bool is_identity() const;
    std::string to_string() const;

private:
    std::shared_ptr<const TwistGroup> group_;
    std::vector<Brick> dom_;
    std::vector<Brick> cod_;
    std::vector<Perm> twists_;
    void canonicalize();
    friend TwistedElement compose(const TwistedElement&, const TwistedElement&);
    friend TwistedElement inverse(const TwistedElement&);
};

TwistedElement compose(const TwistedElement& g, const TwistedElement& h);
TwistedElement inverse(const TwistedElement& g);
ProductPoint apply_point(const TwistedElement& g, const ProductPoint& p);
BrickSet image_clopen(const TwistedElement& g, const BrickSet& c);
BrickSet fixed_clopen(const TwistedElement& g);

// Exact equality via common refinement of the two diagrams. Reduced twisted
// diagrams are not known to be unique, so equality never relies on that.
bool equal(const TwistedElement& a, const TwistedElement& b);
inline bool equal(const VElement& a, const VElement& b) { return a == b; }

TwistedElement random_twisted_element(Rng& rng, std::shared_ptr<const TwistGroup> group, int size);

} // namespace ggt::elements
