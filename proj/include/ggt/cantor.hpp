#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ggt::cantor {

// ===========================================================================
// n-ary forest boundary: cylinders and clopen sets
// ===========================================================================

// Branching degree n >= 2 and root count r >= 1 of the forest whose boundary
// carries the action.
struct Arity {
    int n = 2;
    int r = 1;
    bool operator==(const Arity&) const = default;
};

using Word = std::vector<uint8_t>; // digits in [0, n)

std::string word_to_string(const Word& w);

// The clopen set of boundary rays through `word` in tree `root`.
struct Cylinder {
    int root = 0;
    Word word;

    auto operator<=>(const Cylinder&) const = default;

    // Text form "root:word", e.g. "0:010"; the empty word prints as "0:".
    std::string to_string() const;
    static Cylinder parse(std::string_view text);
};

bool is_prefix(const Word& p, const Word& w);

// Clopen subset of the boundary, stored canonically: the antichain of maximal
// cylinders contained in the set, sorted by (root, word). Semantic equality of
// sets is representation identity, which everything downstream relies on.
class ClopenSet {
public:
    ClopenSet() = default;
    ClopenSet(Arity arity, std::vector<Cylinder> cylinders);

    static ClopenSet empty(Arity a) { return ClopenSet(a, {}); }
    static ClopenSet full(Arity a);
    static ClopenSet single(Arity a, Cylinder c) { return ClopenSet(a, {std::move(c)}); }

    const Arity& arity() const { return arity_; }
    const std::vector<Cylinder>& cylinders() const { return cyls_; }
    size_t size() const { return cyls_.size(); }

    bool is_empty() const { return cyls_.empty(); }
    bool is_full() const;
    bool is_proper_nonempty() const { return !is_empty() && !is_full(); }
    bool contains_cylinder(const Cylinder& c) const;
    int max_depth() const;

    bool operator==(const ClopenSet&) const = default;

    // Bracketed comma list, e.g. "[0:00, 0:011]"; "[]" is the empty set.
    std::string to_string() const;
    static ClopenSet parse(Arity a, std::string_view text);

private:
    Arity arity_{};
    std::vector<Cylinder> cyls_;
};

ClopenSet complement(const ClopenSet& c);
ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_minus(const ClopenSet& a, const ClopenSet& b);

enum class BoolOp { Union, Intersect, Minus };
ClopenSet boolean(const ClopenSet& a, const ClopenSet& b, BoolOp op);

bool disjoint(const ClopenSet& a, const ClopenSet& b);
bool subset(const ClopenSet& a, const ClopenSet& b);

// Membership in the tuple family: entries proper nonempty, pairwise disjoint,
// union proper. (Closures coincide with the sets themselves.)
bool tuple_admissible(std::span<const ClopenSet> ts);

// Exact partition of the whole boundary into cylinders; owner[i] tells which
// input set piece i refines (-1 for the leftover region).
struct CylinderPattern {
    Arity arity{};
    std::vector<Cylinder> pieces;
    std::vector<int> owner;
};

bool is_partition(Arity a, std::span<const Cylinder> pieces);

// Smallest piece count any completion of `sets` can have.
int min_partition_size(Arity a, std::span<const ClopenSet> sets);

// Completes pairwise disjoint sets to a partition of exactly k cylinders by
// repeatedly splitting the lexicographically first piece. Throws
// std::invalid_argument when k is unreachable (below the minimum, or off the
// (n-1)-residue splitting can reach).
CylinderPattern complete_to_partition(Arity a, std::span<const ClopenSet> sets, int k);

// ===========================================================================
// Product Cantor space C^S, S = {0, .., dims-1}: bricks and brick sets
// ===========================================================================

// B(psi): the set of points whose coordinate s extends psi[s]. All
// coordinates binary; psi.size() == dims of the ambient space.
struct Brick {
    std::vector<Word> psi;

    int dims() const { return static_cast<int>(psi.size()); }
    static Brick whole(int dims) { return Brick{std::vector<Word>(dims)}; }

    auto operator<=>(const Brick&) const = default;

    // Text form "{1:01, 3:1}": nonempty constraints only; "{}" is the whole space.
    std::string to_string() const;
    static Brick parse(int dims, std::string_view text);
};

// Halves the brick along coordinate s: constraints extended by 0 and by 1.
std::pair<Brick, Brick> brick_split(const Brick& b, int s);

bool bricks_disjoint(const Brick& a, const Brick& b);
// Empty optional when disjoint.
std::optional<Brick> brick_intersect(const Brick& a, const Brick& b);
bool brick_subset(const Brick& inner, const Brick& outer);

// Clopen subset of C^S as a disjoint union of bricks. Canonical form is
// computed semantically: membership is tabulated on the grid refined to the
// minimal per-coordinate depths, then a fixed greedy extraction rebuilds the
// brick list, so equal sets always get identical representations.
class BrickSet {
public:
    BrickSet() = default;
    BrickSet(int dims, std::vector<Brick> bricks);

    static BrickSet empty(int dims) { return BrickSet(dims, {}); }
    static BrickSet full(int dims) { return BrickSet(dims, {Brick::whole(dims)}); }
    static BrickSet single(Brick b);

    int dims() const { return dims_; }
    const std::vector<Brick>& bricks() const { return bricks_; }
    size_t size() const { return bricks_.size(); }

    bool is_empty() const { return bricks_.empty(); }
    bool is_full() const { return bricks_.size() == 1 && bricks_[0] == Brick::whole(dims_); }
    bool is_proper_nonempty() const { return !is_empty() && !is_full(); }

    bool operator==(const BrickSet&) const = default;

    std::string to_string() const;

private:
    int dims_ = 0;
    std::vector<Brick> bricks_;
};

BrickSet complement(const BrickSet& c);
BrickSet set_union(const BrickSet& a, const BrickSet& b);
BrickSet set_intersect(const BrickSet& a, const BrickSet& b);
BrickSet set_minus(const BrickSet& a, const BrickSet& b);
BrickSet boolean(const BrickSet& a, const BrickSet& b, BoolOp op);
bool disjoint(const BrickSet& a, const BrickSet& b);
bool subset(const BrickSet& a, const BrickSet& b);
bool tuple_admissible(std::span<const BrickSet> ts);

struct BrickPattern {
    int dims = 0;
    std::vector<Brick> pieces;
    std::vector<int> owner;
};

bool is_partition(int dims, std::span<const Brick> pieces);
int min_partition_size(int dims, std::span<const BrickSet> sets);
BrickPattern complete_to_partition(int dims, std::span<const BrickSet> sets, int k);

} // namespace ggt::cantor
