#include "ggt/criterion.hpp"

#include <doctest.h>

using namespace ggt::criterion;
using ggt::Rng;
using ggt::cantor::Arity;
using ggt::cantor::ClopenSet;
using ggt::cantor::Cylinder;
using ggt::elements::TwistGroup;
using ggt::elements::VElement;
using ggt::families::ProductFamily;
using ggt::families::TreeFamily;

namespace {

Cylinder cyl(int root, std::initializer_list<int> digits) {
    Cylinder c;
    c.root = root;
    for (int d : digits) c.word.push_back(static_cast<uint8_t>(d));
    return c;
}

TreeFamily v21() { return TreeFamily{Arity{2, 1}}; }

VElement make_swap() {
    return VElement::from_patterns(Arity{2, 1}, {cyl(0, {0}), cyl(0, {1})},
                                   {cyl(0, {0}), cyl(0, {1})}, {1, 0});
}

VElement make_x0_like() {
    return VElement::from_patterns(Arity{2, 1}, {cyl(0, {0, 0}), cyl(0, {0, 1}), cyl(0, {1})},
                                   {cyl(0, {0}), cyl(0, {1, 0}), cyl(0, {1, 1})}, {0, 1, 2});
}

std::vector<ClopenSet> random_admissible_tuple(Rng& rng, const TreeFamily& fam, size_t m) {
    // random disjoint cylinders at depth 3-4 with proper union
    for (;;) {
        std::vector<ClopenSet> out;
        std::vector<Cylinder> used;
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i) {
            int tries = 40;
            for (; tries > 0; --tries) {
                Cylinder c{0, {}};
                int depth = 3 + static_cast<int>(rng.uniform(2));
                for (int d = 0; d < depth; ++d) c.word.push_back(static_cast<uint8_t>(rng.coin()));
                bool clash = false;
                for (const Cylinder& u : used)
                    clash = clash || ggt::cantor::is_prefix(u.word, c.word) ||
                            ggt::cantor::is_prefix(c.word, u.word);
                if (!clash) {
                    used.push_back(c);
                    out.push_back(fam.piece_set(c));
                    break;
                }
            }
            ok = tries > 0;
        }
        if (ok && fam.admissible(out)) return out;
    }
}

} // namespace

TEST_CASE("transitivity witness: identity, componentwise images, inverses") {
    TreeFamily fam = v21();
    std::vector<ClopenSet> src{fam.piece_set(cyl(0, {0, 0})), fam.piece_set(cyl(0, {0, 1}))};
    CHECK(transitivity_witness(fam, src, src).is_identity());

    std::vector<ClopenSet> dst{fam.piece_set(cyl(0, {1, 0})), fam.piece_set(cyl(0, {1, 1, 0}))};
    VElement g = transitivity_witness(fam, src, dst);
    for (size_t i = 0; i < src.size(); ++i) CHECK(fam.image(g, src[i]) == dst[i]);

    // composing with the reverse witness fixes every src entry setwise
    VElement back = transitivity_witness(fam, dst, src);
    VElement round = fam.compose(back, g);
    for (const ClopenSet& s : src) CHECK(fam.image(round, s) == s);

    Rng rng(2025);
    for (int iter = 0; iter < 100; ++iter) {
        auto a = random_admissible_tuple(rng, fam, 4);
        auto b = random_admissible_tuple(rng, fam, 4);
        VElement w = transitivity_witness(fam, a, b);
        for (size_t i = 0; i < 4; ++i) CHECK(fam.image(w, a[i]) == b[i]);
    }
}

TEST_CASE("transitivity witness respects conjugation covariance") {
    TreeFamily fam = v21();
    Rng rng(5150);
    for (int iter = 0; iter < 20; ++iter) {
        auto src = random_admissible_tuple(rng, fam, 3);
        auto dst = random_admissible_tuple(rng, fam, 3);
        VElement g = transitivity_witness(fam, src, dst);
        VElement t = fam.random_elem(rng, 6);
        VElement conj = fam.compose(t, fam.compose(g, fam.inv(t)));
        // the conjugated witness solves the transported problem
        for (size_t i = 0; i < src.size(); ++i)
            CHECK(fam.image(conj, fam.image(t, src[i])) == fam.image(t, dst[i]));
    }
}

TEST_CASE("the piece-count invariant obstructs ternary transitivity") {
    TreeFamily fam{Arity{3, 1}};
    // C_0 has 1 piece; C_00 u C_01 has 2: counts differ mod n-1 = 2, so no
    // element of V_3 can map one to the other
    std::vector<ClopenSet> src{fam.piece_set(cyl(0, {0}))};
    std::vector<ClopenSet> dst{ClopenSet(Arity{3, 1}, {cyl(0, {0, 0}), cyl(0, {0, 1})})};
    CHECK(transitivity_obstructed(fam, src, dst));
    CHECK_THROWS(transitivity_witness(fam, src, dst));
    // counts 1 and 3 share a residue mod 2, so this target is reachable
    std::vector<ClopenSet> dst2{ClopenSet(Arity{3, 1}, {cyl(0, {0, 0}), cyl(0, {0, 1}), cyl(0, {1})})};
    CHECK(!transitivity_obstructed(fam, src, dst2));
    VElement w2 = transitivity_witness(fam, src, dst2);
    CHECK(fam.image(w2, src[0]) == dst2[0]);
    std::vector<ClopenSet> dst3{fam.piece_set(cyl(0, {2, 1}))};
    VElement w = transitivity_witness(fam, src, dst3);
    CHECK(fam.image(w, src[0]) == dst3[0]);
}

TEST_CASE("glue assembles local actions exactly") {
    TreeFamily fam = v21();
    VElement id = fam.identity();
    ClopenSet c0 = fam.piece_set(cyl(0, {0}));
    ClopenSet c1 = fam.piece_set(cyl(0, {1}));

    CHECK(glue(fam, {{c0, id}, {c1, id}}).is_identity());

    // a single invariant piece carrying a nontrivial action
    Rng rng(31);
    for (int iter = 0; iter < 25; ++iter) {
        VElement w = fam.random_supported_on(rng, c0, 3);
        REQUIRE(fam.image(w, c0) == c0);
        VElement b = glue(fam, {{c0, w}});
        for (const auto& p : fam.samples(c0, 30)) CHECK(fam.apply(b, p) == fam.apply(w, p));
        for (const auto& p : fam.samples(c1, 10)) CHECK(fam.apply(b, p) == p);
        // image agreement on depth <= 2 subcylinders within the piece
        for (const auto& sub : fam.basics(2)) {
            ClopenSet ss = fam.piece_set(sub);
            if (!fam.subset(ss, c0)) continue;
            CHECK(fam.image(b, ss) == fam.image(w, ss));
        }
        CHECK(fam.subset(c1, fam.fixed(b)));
    }

    // (L)-style triple: b = g on I, h on J, identity on K
    ClopenSet I = fam.piece_set(cyl(0, {0, 0}));
    ClopenSet J = fam.piece_set(cyl(0, {0, 1}));
    ClopenSet K = fam.piece_set(cyl(0, {1, 0}));
    VElement gI = fam.random_supported_on(rng, I, 2);
    VElement hJ = fam.random_supported_on(rng, J, 2);
    VElement b = glue(fam, {{I, gI}, {J, hJ}});
    CHECK(fam.subset(K, fam.fixed(b)));
    for (const auto& p : fam.samples(I, 15)) CHECK(fam.apply(b, p) == fam.apply(gI, p));
    for (const auto& p : fam.samples(J, 15)) CHECK(fam.apply(b, p) == fam.apply(hJ, p));

    // rejects overlapping or non-invariant pieces
    CHECK_THROWS(glue(fam, {{c0, id}, {fam.piece_set(cyl(0, {0, 1})), id}}));
    CHECK_THROWS(glue(fam, {{c0, make_swap()}}));
}

TEST_CASE("weak triple witness") {
    TreeFamily fam = v21();
    VElement id = fam.identity();

    TripleWitness<TreeFamily> t0 = weak_triple_witness(fam, id, id);
    REQUIRE(t0.ok);
    CHECK(fam.image(t0.b, t0.p) == t0.p);

    VElement swap = make_swap();
    TripleWitness<TreeFamily> t1 = weak_triple_witness(fam, swap, id);
    REQUIRE(t1.ok);
    CHECK(fam.image(t1.b, fam.image(swap, t1.m)) == t1.m);
    CHECK(fam.image(t1.b, t1.n) == t1.n);
    CHECK(fam.image(t1.b, t1.p) == t1.p);

    Rng rng(6);
    for (int iter = 0; iter < 50; ++iter) {
        VElement g = fam.random_elem(rng, 1 + static_cast<int>(rng.uniform(7)));
        VElement h = fam.random_elem(rng, 1 + static_cast<int>(rng.uniform(7)));
        TripleWitness<TreeFamily> w = weak_triple_witness(fam, g, h);
        REQUIRE(w.ok);
        std::vector<ClopenSet> tgt{w.m, w.n, w.p};
        CHECK(fam.admissible(tgt));
        CHECK(fam.image(w.b, fam.image(g, w.m)) == w.m);
        CHECK(fam.image(w.b, fam.image(h, w.n)) == w.n);
        CHECK(fam.image(w.b, w.p) == w.p);
    }
}

TEST_CASE("cover A: binary and ternary") {
    TreeFamily fam = v21();
    CoverA<TreeFamily> cover = build_cover_A(fam);
    CHECK(cover.sets.size() == 4); // depth-2 cylinders
    for (size_t i = 0; i < cover.sets.size(); ++i)
        for (size_t j = 0; j < cover.sets.size(); ++j) {
            int k = cover.third[i][j];
            REQUIRE(k >= 0);
            CHECK(fam.disjoint(cover.sets[k], cover.sets[i]));
            CHECK(fam.disjoint(cover.sets[k], cover.sets[j]));
        }

    TreeFamily t3{Arity{3, 1}};
    CoverA<TreeFamily> cover3 = build_cover_A(t3);
    CHECK(cover3.sets.size() == 3); // depth-1 cylinders suffice
}

TEST_CASE("bounded generation: decompose into at most 3 cover fixators") {
    TreeFamily fam = v21();
    CoverA<TreeFamily> cover = build_cover_A(fam);

    auto factors_id = decompose_A(fam, fam.identity(), cover);
    CHECK(factors_id.size() == 1);
    CHECK(factors_id[0].is_identity());

    VElement swap = make_swap();
    auto fs = decompose_A(fam, swap, cover);
    CHECK(fs.size() <= 3);
    VElement prod = fam.identity();
    for (const auto& f : fs) {
        prod = fam.compose(prod, f);
        CHECK(fixed_cover_member(fam, f, cover).has_value());
    }
    CHECK(prod == swap);

    Rng rng(12);
    for (int iter = 0; iter < 50; ++iter) {
        VElement g = fam.random_elem(rng, 1 + static_cast<int>(rng.uniform(9)));
        auto factors = decompose_A(fam, g, cover);
        CHECK(factors.size() <= 3);
        VElement p = fam.identity();
        for (const auto& f : factors) {
            p = fam.compose(p, f);
            CHECK(fixed_cover_member(fam, f, cover).has_value());
        }
        CHECK(p == g);
    }
}

TEST_CASE("property 2: commutation chains") {
    TreeFamily fam = v21();
    VElement id = fam.identity();
    Property2Witness<TreeFamily> triv = property2_witness(fam, id, id);
    CHECK(triv.verified);

    Rng rng(14);
    ClopenSet c0 = fam.piece_set(cyl(0, {0}));
    ClopenSet c1 = fam.piece_set(cyl(0, {1}));
    for (int iter = 0; iter < 25; ++iter) {
        VElement b1 = fam.random_supported_on(rng, c0, 2 + static_cast<int>(rng.uniform(3)));
        VElement b2 = fam.random_supported_on(rng, c1, 2 + static_cast<int>(rng.uniform(3)));
        Property2Witness<TreeFamily> w = property2_witness(fam, b1, b2);
        CHECK(w.verified);
    }

    // members of B with big support still work
    for (int iter = 0; iter < 15; ++iter) {
        VElement b1 = fam.random_supported_on(rng, fam.complement(fam.piece_set(cyl(0, {1, 1, 1}))), 3);
        VElement b2 = fam.random_supported_on(rng, fam.complement(fam.piece_set(cyl(0, {0, 0}))), 3);
        Property2Witness<TreeFamily> w = property2_witness(fam, b1, b2);
        CHECK(w.verified);
    }

    CHECK_THROWS(property2_witness(fam, make_swap(), id)); // swap fixes nothing
}

TEST_CASE("property 3: conjugated products stay in B") {
    TreeFamily fam = v21();
    CoverA<TreeFamily> cover = build_cover_A(fam);
    Rng rng(15);

    auto make_sample_a = [&](int count) {
        std::vector<std::pair<VElement, int>> out;
        for (int i = 0; i < count; ++i) {
            int idx = static_cast<int>(rng.uniform(cover.sets.size()));
            ClopenSet supp = fam.complement(cover.sets[idx]);
            out.push_back({fam.random_supported_on(rng, supp, 2), idx});
        }
        return out;
    };

    Property3Report<TreeFamily> triv =
        property3_witness(fam, fam.identity(), fam.identity(), cover, make_sample_a(3));
    CHECK(!triv.inconclusive);
    CHECK(triv.passed == triv.checked);

    Property3Report<TreeFamily> main =
        property3_witness(fam, make_swap(), make_x0_like(), cover, make_sample_a(10));
    CHECK(!main.inconclusive);
    CHECK(main.checked == 10);
    CHECK(main.passed == 10);
    CHECK(main.conjugators.size() == 10);

    for (int iter = 0; iter < 10; ++iter) {
        VElement g = fam.random_elem(rng, 1 + static_cast<int>(rng.uniform(6)));
        VElement h = fam.random_elem(rng, 1 + static_cast<int>(rng.uniform(6)));
        Property3Report<TreeFamily> rep = property3_witness(fam, g, h, cover, make_sample_a(4));
        CHECK(!rep.inconclusive);
        CHECK(rep.passed == rep.checked);
    }
}

TEST_CASE("extremal proximality witnesses") {
    TreeFamily fam = v21();
    ClopenSet u0 = fam.piece_set(cyl(0, {0, 0}));
    ClopenSet v0 = fam.piece_set(cyl(0, {0}));
    CHECK(extremely_proximal_witness(fam, u0, v0).is_identity()); // u already inside v

    ClopenSet u(Arity{2, 1}, {cyl(0, {0}), cyl(0, {1, 0})});
    ClopenSet v = fam.piece_set(cyl(0, {1, 1, 1}));
    VElement f = extremely_proximal_witness(fam, u, v);
    CHECK(fam.subset(fam.image(f, u), v));

    Rng rng(16);
    for (int iter = 0; iter < 40; ++iter) {
        ClopenSet uu = fam.piece_set(fam.basics(3)[rng.uniform(14)]);
        ClopenSet vv = fam.piece_set(fam.basics(3)[rng.uniform(14)]);
        VElement w = extremely_proximal_witness(fam, uu, vv);
        CHECK(fam.subset(fam.image(w, uu), vv));
    }
}

TEST_CASE("criterion machinery over the product families") {
    ProductFamily twoV{TwistGroup::trivial(2)};
    Rng rng(17);

    // transitivity on brick tuples
    auto b1 = twoV.piece_set(ggt::cantor::Brick::parse(2, "{0:00}"));
    auto b2 = twoV.piece_set(ggt::cantor::Brick::parse(2, "{0:01, 1:1}"));
    auto d1 = twoV.piece_set(ggt::cantor::Brick::parse(2, "{0:11}"));
    auto d2 = twoV.piece_set(ggt::cantor::Brick::parse(2, "{0:10, 1:0}"));
    std::vector<ggt::cantor::BrickSet> src{b1, b2}, dst{d1, d2};
    REQUIRE(twoV.admissible(src));
    REQUIRE(twoV.admissible(dst));
    auto w = transitivity_witness(twoV, src, dst);
    CHECK(twoV.image(w, src[0]) == dst[0]);
    CHECK(twoV.image(w, src[1]) == dst[1]);

    // weak triples for random 2V elements
    for (int iter = 0; iter < 10; ++iter) {
        auto g = twoV.random_elem(rng, 1 + static_cast<int>(rng.uniform(5)));
        auto h = twoV.random_elem(rng, 1 + static_cast<int>(rng.uniform(5)));
        TripleWitness<ProductFamily> t = weak_triple_witness(twoV, g, h, 4);
        REQUIRE(t.ok);
        CHECK(twoV.image(t.b, twoV.image(g, t.m)) == t.m);
        CHECK(twoV.image(t.b, twoV.image(h, t.n)) == t.n);
        CHECK(twoV.image(t.b, t.p) == t.p);
    }

    // glue keeps twisted restrictions twisted
    ProductFamily sv3{std::make_shared<TwistGroup>(
        3, std::vector<ggt::elements::Perm>{ggt::elements::Perm{{1, 0, 2}},
                                            ggt::elements::Perm{{1, 2, 0}}})};
    auto piece = sv3.piece_set(ggt::cantor::Brick::parse(3, "{0:0}"));
    for (int iter = 0; iter < 12; ++iter) {
        auto g = sv3.random_supported_on(rng, piece, 2);
        REQUIRE(sv3.image(g, piece) == piece);
        auto glued = glue(sv3, {{piece, g}});
        for (const auto& p : sv3.samples(piece, 25)) CHECK(sv3.apply(glued, p) == sv3.apply(g, p));
        for (const auto& p : sv3.samples(sv3.complement(piece), 10)) CHECK(sv3.apply(glued, p) == p);
    }

    // bounded generation over 2V
    CoverA<ProductFamily> cover = build_cover_A(twoV);
    CHECK(cover.sets.size() >= 3);
    for (int iter = 0; iter < 10; ++iter) {
        auto g = twoV.random_elem(rng, 1 + static_cast<int>(rng.uniform(5)));
        auto factors = decompose_A(twoV, g, cover);
        CHECK(factors.size() <= 3);
        auto p = twoV.identity();
        for (const auto& f : factors) p = twoV.compose(p, f);
        CHECK(twoV.equal_elem(p, g));
    }

    // bounded generation with genuinely twisted inputs: the decomposition
    // restricts the twisted element through glue, so the twists must survive
    // the round trip exactly
    CoverA<ProductFamily> cover3 = build_cover_A(sv3);
    for (int iter = 0; iter < 10; ++iter) {
        auto g = sv3.random_elem(rng, 2 + static_cast<int>(rng.uniform(4)));
        auto factors = decompose_A(sv3, g, cover3);
        CHECK(factors.size() <= 3);
        auto p = sv3.identity();
        for (const auto& f : factors) {
            CHECK(fixed_cover_member(sv3, f, cover3).has_value());
            p = sv3.compose(p, f);
        }
        CHECK(sv3.equal_elem(p, g));
    }

    // weak triples and extremal proximality for the twisted family
    for (int iter = 0; iter < 6; ++iter) {
        auto g = sv3.random_elem(rng, 1 + static_cast<int>(rng.uniform(4)));
        auto h = sv3.random_elem(rng, 1 + static_cast<int>(rng.uniform(4)));
        TripleWitness<ProductFamily> t = weak_triple_witness(sv3, g, h, 3);
        REQUIRE(t.ok);
        CHECK(sv3.image(t.b, sv3.image(g, t.m)) == t.m);
        CHECK(sv3.image(t.b, sv3.image(h, t.n)) == t.n);
        CHECK(sv3.image(t.b, t.p) == t.p);
    }
    auto u3 = sv3.piece_set(ggt::cantor::Brick::parse(3, "{0:0, 1:1}"));
    auto v3 = sv3.piece_set(ggt::cantor::Brick::parse(3, "{2:01}"));
    auto f3 = extremely_proximal_witness(sv3, u3, v3);
    CHECK(sv3.subset(sv3.image(f3, u3), v3));
}

TEST_CASE("exhausted searches report inconclusive, never false positives") {
    TreeFamily fam = v21();
    Rng rng(88);
    VElement g = fam.random_elem(rng, 6);
    VElement h = fam.random_elem(rng, 6);
    TripleWitness<TreeFamily> t = weak_triple_witness(fam, g, h, 0); // no search room
    CHECK(!t.ok);

    CoverA<TreeFamily> cover = build_cover_A(fam);
    std::vector<std::pair<VElement, int>> sample_a{{fam.identity(), 0}};
    Property3Report<TreeFamily> rep = property3_witness(fam, g, h, cover, sample_a, 0);
    CHECK(rep.inconclusive); // propagated from the triple search
}
