#include "ggt/elements.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace ggt::elements;
using ggt::Rng;
using ggt::cantor::Arity;
using ggt::cantor::ClopenSet;
using ggt::cantor::Cylinder;
using ggt::cantor::Word;

namespace {

Cylinder cyl(int root, std::initializer_list<int> digits) {
    Cylinder c;
    c.root = root;
    for (int d : digits) c.word.push_back(static_cast<uint8_t>(d));
    return c;
}

// C_0 <-> C_1
VElement make_swap() {
    return VElement::from_patterns(Arity{2, 1}, {cyl(0, {0}), cyl(0, {1})},
                                   {cyl(0, {0}), cyl(0, {1})}, {1, 0});
}

// C_00 -> C_0, C_01 -> C_10, C_1 -> C_11
VElement make_x0_like() {
    return VElement::from_patterns(Arity{2, 1}, {cyl(0, {0, 0}), cyl(0, {0, 1}), cyl(0, {1})},
                                   {cyl(0, {0}), cyl(0, {1, 0}), cyl(0, {1, 1})}, {0, 1, 2});
}

} // namespace

TEST_CASE("eventually periodic words normalize uniquely") {
    EventualWord a({0, 1}, {1});      // 01 (1) = 0 (1)
    EventualWord b({0}, {1});
    CHECK(a == b);
    EventualWord c({}, {0, 1, 0, 1}); // period collapses to 01
    CHECK(c == EventualWord({}, {0, 1}));
    EventualWord d({1, 0}, {0, 1});
    CHECK(d.digit(0) == 1);
    CHECK(d.digit(5) == 1);
    CHECK(d.drop_prefix(2) == EventualWord({}, {0, 1}));
    CHECK(d.drop_prefix(3) == EventualWord({}, {1, 0}));
    CHECK(EventualWord({}, {0}).prepend({1, 1}) == EventualWord({1, 1}, {0}));
}

TEST_CASE("compose and inverse on tree pairs") {
    Arity a{2, 1};
    VElement id = VElement::identity(a);
    VElement swap = make_swap();
    VElement x0 = make_x0_like();

    CHECK(compose(id, swap) == swap);
    CHECK(compose(swap, id) == swap);
    CHECK(compose(swap, swap) == id);
    CHECK(inverse(id) == id);
    CHECK(inverse(swap) == swap);
    CHECK(compose(x0, inverse(x0)) == id);
    CHECK(compose(inverse(x0), x0) == id);
}

TEST_CASE("random composition agrees with sequential application pointwise") {
    Arity a{2, 1};
    Rng rng(2024);
    for (int iter = 0; iter < 40; ++iter) {
        VElement g = random_v_element(rng, a, 1 + static_cast<int>(rng.uniform(8)));
        VElement h = random_v_element(rng, a, 1 + static_cast<int>(rng.uniform(8)));
        VElement gh = compose(g, h);
        auto points = sample_points(ClopenSet::full(a), 50);
        for (const TreePoint& p : points) {
            TreePoint via_seq = apply_point(g, apply_point(h, p));
            TreePoint via_comp = apply_point(gh, p);
            CHECK(via_seq == via_comp);
        }
    }
}

TEST_CASE("apply_point matches the 40-digit expansion oracle") {
    Arity a{2, 1};
    VElement swap = make_swap();
    TreePoint p{0, EventualWord({0}, {1})}; // 0 1^inf
    CHECK(apply_point(swap, p) == TreePoint{0, EventualWord({1}, {1})});
    CHECK(apply_point(VElement::identity(a), p) == p);

    VElement x0 = make_x0_like();
    TreePoint q{0, EventualWord({}, {0, 1})}; // (01)^inf
    TreePoint img = apply_point(x0, q);
    int oroot = -1;
    Word expect = oracle::apply_by_expansion(x0, q.root, q.w.expand(42), &oroot);
    CHECK(img.root == oroot);
    CHECK(img.w.expand(40) == Word(expect.begin(), expect.begin() + 40));

    Rng rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        VElement g = random_v_element(rng, a, 6);
        for (const TreePoint& pt : sample_points(ClopenSet::full(a), 10)) {
            TreePoint im = apply_point(g, pt);
            int r2 = -1;
            Word ex = oracle::apply_by_expansion(g, pt.root, pt.w.expand(48), &r2);
            CHECK(im.root == r2);
            CHECK(im.w.expand(40) == Word(ex.begin(), ex.begin() + 40));
        }
    }
}

TEST_CASE("image_clopen: examples and membership consistency") {
    Arity a{2, 1};
    VElement swap = make_swap();
    ClopenSet c0 = ClopenSet::single(a, cyl(0, {0}));
    CHECK(image_clopen(swap, c0) == ClopenSet::single(a, cyl(0, {1})));
    CHECK(image_clopen(swap, ClopenSet::full(a)).is_full());

    Rng rng(99);
    ClopenSet c010 = ClopenSet::single(a, cyl(0, {0, 1, 0}));
    for (int iter = 0; iter < 25; ++iter) {
        VElement g = random_v_element(rng, a, 6);
        ClopenSet img = image_clopen(g, c010);
        for (const TreePoint& p : sample_points(c010, 20))
            CHECK(contains(img, apply_point(g, p)));
        // p in c <=> g(p) in g(c), both directions on ambient samples
        for (const TreePoint& p : sample_points(ClopenSet::full(a), 24))
            CHECK(contains(c010, p) == contains(img, apply_point(g, p)));
        // commutes with complement
        CHECK(image_clopen(g, complement(c010)) == complement(img));
        // image of a partition is a partition
        CHECK(set_union(img, image_clopen(g, complement(c010))).is_full());
    }
}

TEST_CASE("fixed_clopen finds the identity locus") {
    Arity a{2, 1};
    CHECK(fixed_clopen(VElement::identity(a)).is_full());
    CHECK(fixed_clopen(make_swap()).is_empty());

    // acts as the identity exactly on C_1
    VElement g = VElement::from_patterns(a, {cyl(0, {0, 0}), cyl(0, {0, 1}), cyl(0, {1})},
                                         {cyl(0, {0, 1}), cyl(0, {0, 0}), cyl(0, {1})}, {0, 1, 2});
    ClopenSet f = fixed_clopen(g);
    CHECK(f == ClopenSet::single(a, cyl(0, {1})));
    for (const TreePoint& p : sample_points(f, 12)) CHECK(apply_point(g, p) == p);

    Rng rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        VElement h = random_v_element(rng, a, 7);
        CHECK(fixed_clopen(compose(h, inverse(h))).is_full());
    }
}

TEST_CASE("group axioms hold on random tree pairs") {
    Rng rng(11);
    for (Arity a : {Arity{2, 1}, Arity{3, 2}}) {
        VElement id = VElement::identity(a);
        for (int iter = 0; iter < 60; ++iter) {
            VElement g = random_v_element(rng, a, 1 + static_cast<int>(rng.uniform(9)));
            VElement h = random_v_element(rng, a, 1 + static_cast<int>(rng.uniform(9)));
            VElement k = random_v_element(rng, a, 1 + static_cast<int>(rng.uniform(9)));
            CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
            CHECK(compose(g, id) == g);
            CHECK(compose(id, g) == g);
            CHECK(compose(g, inverse(g)) == id);
        }
    }
}

TEST_CASE("random elements are deterministic and valid") {
    Arity a{2, 1};
    Rng r1(123), r2(123);
    for (int i = 0; i < 20; ++i) {
        VElement g1 = random_v_element(r1, a, 8);
        VElement g2 = random_v_element(r2, a, 8);
        CHECK(g1 == g2);
    }
    Rng r3(9);
    CHECK(random_v_element(r3, a, 1) == VElement::identity(a));
    for (int i = 0; i < 100; ++i) {
        VElement g = random_v_element(r3, a, 1 + static_cast<int>(r3.uniform(10)));
        CHECK(g.pieces() <= 10);
        CHECK(ggt::cantor::is_partition(a, g.domain()));
        CHECK(ggt::cantor::is_partition(a, g.codomain()));
    }
}

TEST_CASE("tuple admissibility is invariant under the group action") {
    Arity a{2, 1};
    Rng rng(17);
    ClopenSet m = ClopenSet::single(a, cyl(0, {0, 0}));
    ClopenSet n = ClopenSet::single(a, cyl(0, {0, 1, 0}));
    ClopenSet p = ClopenSet::single(a, cyl(0, {1, 0}));
    std::vector<ClopenSet> tup{m, n, p};
    REQUIRE(ggt::cantor::tuple_admissible(tup));
    for (int iter = 0; iter < 40; ++iter) {
        VElement g = random_v_element(rng, a, 7);
        std::vector<ClopenSet> mapped;
        for (const ClopenSet& s : tup) mapped.push_back(image_clopen(g, s));
        CHECK(ggt::cantor::tuple_admissible(mapped));
    }
}

// ===========================================================================
// twisted elements
// ===========================================================================

namespace {

std::shared_ptr<const TwistGroup> sym3() {
    Perm swap01{{1, 0, 2}};
    Perm cyc{{1, 2, 0}};
    return std::make_shared<TwistGroup>(3, std::vector<Perm>{swap01, cyc});
}

} // namespace

TEST_CASE("twist group enumeration") {
    auto g = sym3();
    CHECK(g->elements().size() == 6);
    CHECK(g->contains(Perm{{2, 1, 0}}));
    CHECK(TwistGroup::trivial(2)->elements().size() == 1);
    CHECK(!TwistGroup::trivial(3)->contains(Perm{{1, 0, 2}}));
}

TEST_CASE("twisted inverses cancel, including the twists") {
    auto grp = sym3();
    Rng rng(31);
    TwistedElement id = TwistedElement::identity(grp);
    for (int iter = 0; iter < 40; ++iter) {
        TwistedElement g = random_twisted_element(rng, grp, 1 + static_cast<int>(rng.uniform(7)));
        CHECK(equal(compose(g, inverse(g)), id));
        CHECK(equal(compose(inverse(g), g), id));
        CHECK(fixed_clopen(compose(g, inverse(g))).is_full());
    }
}

TEST_CASE("twisted composition agrees with sequential application pointwise") {
    auto grp = sym3();
    Rng rng(32);
    using ggt::cantor::BrickSet;
    for (int iter = 0; iter < 30; ++iter) {
        TwistedElement g = random_twisted_element(rng, grp, 1 + static_cast<int>(rng.uniform(6)));
        TwistedElement h = random_twisted_element(rng, grp, 1 + static_cast<int>(rng.uniform(6)));
        TwistedElement gh = compose(g, h);
        for (const ProductPoint& p : sample_points(BrickSet::full(3), 50))
            CHECK(apply_point(gh, p) == apply_point(g, apply_point(h, p)));
    }
}

TEST_CASE("twisted group axioms via exact equality") {
    auto grp = sym3();
    Rng rng(33);
    TwistedElement id = TwistedElement::identity(grp);
    for (int iter = 0; iter < 40; ++iter) {
        TwistedElement g = random_twisted_element(rng, grp, 1 + static_cast<int>(rng.uniform(5)));
        TwistedElement h = random_twisted_element(rng, grp, 1 + static_cast<int>(rng.uniform(5)));
        TwistedElement k = random_twisted_element(rng, grp, 1 + static_cast<int>(rng.uniform(5)));
        CHECK(equal(compose(compose(g, h), k), compose(g, compose(h, k))));
        CHECK(equal(compose(g, id), g));
        CHECK(equal(compose(id, g), g));
    }
}

TEST_CASE("twisted image_clopen is consistent with the point action") {
    auto grp = sym3();
    using ggt::cantor::Brick;
    using ggt::cantor::BrickSet;
    Rng rng(34);
    BrickSet c = BrickSet::single(Brick::parse(3, "{0:01, 2:1}"));
    for (int iter = 0; iter < 25; ++iter) {
        TwistedElement g = random_twisted_element(rng, grp, 5);
        BrickSet img = image_clopen(g, c);
        for (const ProductPoint& p : sample_points(BrickSet::full(3), 30))
            CHECK(contains(c, p) == contains(img, apply_point(g, p)));
        CHECK(image_clopen(g, complement(c)) == complement(img));
    }
}
