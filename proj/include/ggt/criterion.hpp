#pragma once

#include "ggt/families.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ggt::criterion {

// Constructive witness generators for the dynamical criterion conditions
// (C), (2T), (3T), (L) and the derived bounded-generation / commutation
// properties, written once over the family interface. Every generator
// re-verifies its output with exact set/element operations before returning;
// searches that exhaust their budget report Inconclusive instead of
// guessing.

// ===========================================================================
// transitivity on admissible tuples
// ===========================================================================

// In V_n(r) with n >= 3 the canonical piece count mod (n-1) is preserved by
// every element, so tuples can only be matched componentwise within that
// residue. Binary families are unobstructed.
template <typename F>
bool transitivity_obstructed(const F& fam, std::span<const typename F::Set> src,
                             std::span<const typename F::Set> dst) {
    for (size_t i = 0; i < src.size(); ++i)
        if ((fam.count(src[i]) - fam.count(dst[i])) % fam.congruence() != 0) return true;
    return false;
}

// g with image(g, src_i) = dst_i for all i: complete both tuples to matched
// partitions piece by piece, map correspondingly.
template <typename F>
typename F::Elem transitivity_witness(const F& fam, std::span<const typename F::Set> src,
                                      std::span<const typename F::Set> dst) {
    using Piece = typename F::Piece;
    if (src.size() != dst.size() || src.empty())
        throw std::invalid_argument("transitivity_witness: tuple sizes differ");
    if (!fam.admissible(src) || !fam.admissible(dst))
        throw std::invalid_argument("transitivity_witness: tuples must be admissible");
    if (transitivity_obstructed(fam, src, dst))
        throw std::invalid_argument("transitivity_witness: piece counts differ mod n-1");

    std::vector<Piece> dpieces, cpieces;
    auto push_matched = [&](const typename F::Set& a, const typename F::Set& b) {
        std::vector<Piece> pa = fam.pieces_of(a);
        std::vector<Piece> pb = fam.pieces_of(b);
        while (pa.size() < pb.size()) fam.split_piece(pa, fam.first_piece(pa));
        while (pb.size() < pa.size()) fam.split_piece(pb, fam.first_piece(pb));
        dpieces.insert(dpieces.end(), pa.begin(), pa.end());
        cpieces.insert(cpieces.end(), pb.begin(), pb.end());
    };
    typename F::Set src_rest = fam.full(), dst_rest = fam.full();
    for (size_t i = 0; i < src.size(); ++i) {
        push_matched(src[i], dst[i]);
        src_rest = fam.minus(src_rest, src[i]);
        dst_rest = fam.minus(dst_rest, dst[i]);
    }
    push_matched(src_rest, dst_rest);

    typename F::Elem g = fam.elem_from(std::move(dpieces), std::move(cpieces));
    for (size_t i = 0; i < src.size(); ++i)
        if (!(fam.image(g, src[i]) == dst[i]))
            throw std::logic_error("transitivity_witness: verification failed");
    return g;
}

// ===========================================================================
// gluing local actions (the topological-full-group step)
// ===========================================================================

// b acting as piece.second on piece.first and as the identity elsewhere.
// Pieces must be pairwise disjoint and invariant under their elements (the
// hypothesis of condition (L)).
template <typename F>
typename F::Elem glue(const F& fam,
                      const std::vector<std::pair<typename F::Set, typename F::Elem>>& pieces) {
    using Piece = typename F::Piece;
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j)
            if (!fam.disjoint(pieces[i].first, pieces[j].first))
                throw std::invalid_argument("glue: pieces overlap");
    for (const auto& [set, g] : pieces)
        if (!(fam.image(g, set) == set))
            throw std::invalid_argument("glue: piece is not invariant under its element");

    typename F::ElemBuilder builder;
    typename F::Set untouched = fam.full();
    for (const auto& [set, g] : pieces) {
        untouched = fam.minus(untouched, set);
        // refine the piece's cells until each lies inside one domain piece
        // of g, where g restricts to a single local substitution
        std::vector<Piece> work = fam.pieces_of(set);
        size_t guard = 0;
        while (!work.empty()) {
            if (++guard > 100000) throw std::logic_error("glue: refinement runaway");
            Piece p = work.back();
            work.pop_back();
            if (fam.inside_domain_piece(g, p)) {
                fam.add_restriction(builder, g, p);
            } else {
                std::vector<Piece> split{p};
                fam.split_piece(split, 0);
                work.insert(work.end(), split.begin(), split.end());
            }
        }
    }
    for (const Piece& p : fam.pieces_of(untouched)) fam.add_identity(builder, p);
    typename F::Elem b = fam.build(std::move(builder));
    for (const auto& [set, g] : pieces)
        for (const auto& pt : fam.samples(set, 8))
            if (!(fam.apply(b, pt) == fam.apply(g, pt)))
                throw std::logic_error("glue: sample verification failed");
    return b;
}

// ===========================================================================
// weak triple transitivity (3T)
// ===========================================================================

template <typename F>
struct TripleWitness {
    bool ok = false; // false = Inconclusive (search exhausted)
    typename F::Set m, n, p;
    typename F::Elem b;
};

template <typename F>
TripleWitness<F> weak_triple_witness(const F& fam, const typename F::Elem& g,
                                     const typename F::Elem& h, int depth_budget = 5) {
    TripleWitness<F> out;
    auto basics = fam.basics(depth_budget);
    for (const auto& mp : basics) {
        typename F::Set m = fam.piece_set(mp);
        typename F::Set gm = fam.image(g, m);
        for (const auto& np : basics) {
            typename F::Set n = fam.piece_set(np);
            if (!fam.disjoint(m, n)) continue;
            typename F::Set hn = fam.image(h, n);
            if (!fam.disjoint(gm, hn)) continue;
            for (const auto& pp : basics) {
                typename F::Set p = fam.piece_set(pp);
                if (!fam.disjoint(p, m) || !fam.disjoint(p, n)) continue;
                if (!fam.disjoint(p, gm) || !fam.disjoint(p, hn)) continue;
                std::vector<typename F::Set> tgt{m, n, p};
                std::vector<typename F::Set> cur{gm, hn, p};
                if (!fam.admissible(tgt) || !fam.admissible(cur)) continue;
                if (transitivity_obstructed(fam, std::span<const typename F::Set>(cur),
                                            std::span<const typename F::Set>(tgt)))
                    continue;
                typename F::Elem b = transitivity_witness(
                    fam, std::span<const typename F::Set>(cur), std::span<const typename F::Set>(tgt));
                // verify (b g M, b h N, b P) = (M, N, P)
                if (!(fam.image(b, gm) == m) || !(fam.image(b, hn) == n) || !(fam.image(b, p) == p))
                    continue;
                out.ok = true;
                out.m = m;
                out.n = n;
                out.p = p;
                out.b = b;
                return out;
            }
        }
    }
    return out; // Inconclusive
}

// ===========================================================================
// the finite cover A with designated disjoint thirds
// ===========================================================================

template <typename F>
struct CoverA {
    std::vector<typename F::Set> sets;
    std::vector<std::vector<int>> third; // third[i][j]: member disjoint from sets i and j
};

template <typename F>
CoverA<F> build_cover_A(const F& fam) {
    CoverA<F> cover;
    // the smallest uniform refinement with at least three pieces: pairwise
    // disjoint cover, so any pair admits a disjoint third
    for (int depth = 1;; ++depth) {
        auto basics = fam.basics(depth);
        std::vector<typename F::Piece> level;
        for (const auto& p : basics) {
            // keep only pieces of exactly this refinement level that tile
            // the space: tree cylinders of length `depth`, bricks of total
            // constraint `depth`
            size_t total = 0;
            if constexpr (std::is_same_v<F, families::TreeFamily>) {
                total = p.word.size();
            } else {
                for (const auto& w : p.psi) total += w.size();
            }
            if (static_cast<int>(total) == depth) level.push_back(p);
        }
        // restrict to a tiling subfamily: for products, keep bricks
        // constraining only coordinate 0
        std::vector<typename F::Piece> tiling;
        for (const auto& p : level) {
            bool only_first = true;
            if constexpr (!std::is_same_v<F, families::TreeFamily>) {
                for (size_t s = 1; s < p.psi.size(); ++s) only_first = only_first && p.psi[s].empty();
            }
            if (only_first) tiling.push_back(p);
        }
        if (tiling.size() < 3) continue;
        for (const auto& p : tiling) cover.sets.push_back(fam.piece_set(p));
        break;
    }
    const size_t k = cover.sets.size();
    cover.third.assign(k, std::vector<int>(k, -1));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            for (size_t t = 0; t < k; ++t)
                if (t != i && t != j && fam.disjoint(cover.sets[t], cover.sets[i]) &&
                    fam.disjoint(cover.sets[t], cover.sets[j])) {
                    cover.third[i][j] = static_cast<int>(t);
                    break;
                }
            if (cover.third[i][j] < 0) throw std::logic_error("build_cover_A: no disjoint third");
        }
    // the cover really covers
    typename F::Set u = fam.empty();
    for (const auto& s : cover.sets) u = fam.unite(u, s);
    if (!u.is_full()) throw std::logic_error("build_cover_A: not a cover");
    return cover;
}

// ===========================================================================
// bounded generation: every element is a product of <= 3 cover fixators
// ===========================================================================

template <typename F>
bool fixes_pointwise(const F& fam, const typename F::Elem& g, const typename F::Set& s) {
    return fam.intersect(fam.fixed(g), s) == s;
}

template <typename F>
std::optional<int> fixed_cover_member(const F& fam, const typename F::Elem& g, const CoverA<F>& cover) {
    for (size_t i = 0; i < cover.sets.size(); ++i)
        if (fixes_pointwise(fam, g, cover.sets[i])) return static_cast<int>(i);
    return std::nullopt;
}

template <typename F>
std::vector<typename F::Elem> decompose_A(const F& fam, const typename F::Elem& g,
                                          const CoverA<F>& cover, int depth_budget = 7) {
    using Set = typename F::Set;
    if (fixed_cover_member(fam, g, cover)) return {g}; // already a cover fixator (or identity)

    // a small piece moved off itself, within one cover member, landing in one
    auto basics = fam.basics(depth_budget);
    int ii = -1, jj = -1;
    Set ip, jp;
    for (const auto& cp : basics) {
        Set c = fam.piece_set(cp);
        Set img = fam.image(g, c);
        if (!fam.disjoint(c, img)) continue;
        ii = jj = -1;
        for (size_t t = 0; t < cover.sets.size(); ++t) {
            if (fam.subset(c, cover.sets[t])) ii = static_cast<int>(t);
            if (fam.subset(img, cover.sets[t])) jj = static_cast<int>(t);
        }
        if (ii >= 0 && jj >= 0) {
            ip = c;
            jp = img;
            break;
        }
    }
    if (ii < 0 || jj < 0) throw std::logic_error("decompose_A: no moved piece found in budget");

    const Set& J = cover.sets[jj];
    const Set& K = cover.sets[cover.third[ii][jj]];
    const Set& Iprime = ip; // the found moved piece; g Iprime = jp inside J

    auto pair_witness = [&](const Set& a1, const Set& a2, const Set& b1, const Set& b2) {
        std::vector<Set> from{a1, a2}, to{b1, b2};
        return transitivity_witness(fam, std::span<const Set>(from), std::span<const Set>(to));
    };

    // a := a0 b^-1 with a0 (J,K) -> (I',K), b = a0 on K, id on J
    typename F::Elem a0 = pair_witness(J, K, Iprime, K);
    typename F::Elem b = glue(fam, {{K, a0}, {J, fam.identity()}});
    typename F::Elem a = fam.compose(a0, fam.inv(b));
    if (!fixes_pointwise(fam, a, K)) throw std::logic_error("decompose_A: a does not fix K");

    // c := c0 d0^-1 with c0 (J',K) -> (J,K), J' = g a J
    Set Jprime = fam.image(g, fam.image(a, J));
    typename F::Elem c0 = pair_witness(Jprime, K, J, K);
    typename F::Elem d0 = glue(fam, {{K, c0}});
    typename F::Elem c = fam.compose(c0, fam.inv(d0));
    if (!fixes_pointwise(fam, c, K)) throw std::logic_error("decompose_A: c does not fix K");

    // d := (c g a) on J, identity elsewhere; e := d^-1 c
    typename F::Elem cga = fam.compose(c, fam.compose(g, a));
    if (!(fam.image(cga, J) == J)) throw std::logic_error("decompose_A: cga does not stabilize J");
    typename F::Elem d = glue(fam, {{J, cga}});
    typename F::Elem e = fam.compose(fam.inv(d), c);
    typename F::Elem ega = fam.compose(e, fam.compose(g, a));

    std::vector<typename F::Elem> factors{fam.inv(e), ega, fam.inv(a)};
    // every factor fixes a cover member; the product recomposes g exactly
    for (const auto& f : factors)
        if (!fixed_cover_member(fam, f, cover)) throw std::logic_error("decompose_A: factor not in A");
    typename F::Elem prod = fam.compose(factors[0], fam.compose(factors[1], factors[2]));
    if (!fam.equal_elem(prod, g)) throw std::logic_error("decompose_A: recomposition failed");
    return factors;
}

// ===========================================================================
// Property (2): commutation chains through conjugates
// ===========================================================================

template <typename F>
struct Property2Witness {
    typename F::Elem g, h;
    bool verified = false;
};

template <typename F>
typename F::Elem conjugate(const F& fam, const typename F::Elem& t, const typename F::Elem& x) {
    return fam.compose(t, fam.compose(x, fam.inv(t))); // x^t = t x t^-1
}

template <typename F>
bool commute(const F& fam, const typename F::Elem& x, const typename F::Elem& y) {
    return fam.equal_elem(fam.compose(x, y), fam.compose(y, x));
}

template <typename F>
Property2Witness<F> property2_witness(const F& fam, const typename F::Elem& b1,
                                      const typename F::Elem& b2, int depth_budget = 6) {
    using Set = typename F::Set;
    Property2Witness<F> out{fam.identity(), fam.identity(), false};
    Set f1 = fam.fixed(b1);
    Set f2 = fam.fixed(b2);
    if (f1.is_empty() || f2.is_empty())
        throw std::invalid_argument("property2_witness: inputs must fix some set pointwise");
    if (f1.is_full() || f2.is_full()) { // an identity input commutes with everything
        out.verified = commute(fam, b1, conjugate(fam, out.g, b1)) &&
                       commute(fam, conjugate(fam, out.g, b1), conjugate(fam, out.h, b1)) &&
                       commute(fam, conjugate(fam, out.h, b1), b2);
        return out;
    }

    const Set& I = f1;
    const Set& J = f2;
    Set Iprime = fam.complement(I); // supp(b1) lives here
    int j_count = fam.count(Iprime) % fam.congruence();
    if (j_count == 0) j_count = fam.congruence();
    // congruence-compatible piece count for the staircase targets
    while ((fam.count(Iprime) - j_count) % fam.congruence() != 0) ++j_count;

    // K inside I with J not inside K
    auto basics = fam.basics(depth_budget);
    std::optional<Set> K;
    for (const auto& cp : basics) {
        Set c = fam.piece_set(cp);
        if (!fam.subset(c, I)) continue;
        Set k = fam.staircase_in(cp, j_count);
        if (fam.minus(J, k).is_empty()) continue;
        K = k;
        break;
    }
    if (!K) throw std::logic_error("property2_witness: no suitable K in budget");

    std::vector<Set> from{Iprime}, toK{*K};
    out.g = transitivity_witness(fam, std::span<const Set>(from), std::span<const Set>(toK));

    // L inside J \ K
    Set jmk = fam.minus(J, *K);
    std::optional<Set> L;
    for (const auto& cp : basics) {
        Set c = fam.piece_set(cp);
        if (!fam.subset(c, jmk)) continue;
        L = fam.staircase_in(cp, j_count);
        break;
    }
    if (!L) throw std::logic_error("property2_witness: no suitable L in budget");
    std::vector<Set> toL{*L};
    out.h = transitivity_witness(fam, std::span<const Set>(from), std::span<const Set>(toL));

    typename F::Elem bg = conjugate(fam, out.g, b1);
    typename F::Elem bh = conjugate(fam, out.h, b1);
    out.verified = commute(fam, b1, bg) && commute(fam, bg, bh) && commute(fam, bh, b2);
    return out;
}

// ===========================================================================
// Property (3): conjugating supports away from the triple
// ===========================================================================

template <typename F>
struct Property3Report {
    bool inconclusive = false;
    typename F::Elem b;
    int checked = 0;
    int passed = 0;
    // per sampled a: the conjugator f = f(g, h, I) (its factorization through
    // cyclic groups is recorded, not verified)
    std::vector<typename F::Elem> conjugators;
};

template <typename F>
Property3Report<F> property3_witness(const F& fam, const typename F::Elem& g,
                                     const typename F::Elem& h, const CoverA<F>& cover,
                                     const std::vector<std::pair<typename F::Elem, int>>& sample_a,
                                     int depth_budget = 5) {
    using Set = typename F::Set;
    Property3Report<F> rep;
    rep.b = fam.identity();
    TripleWitness<F> wt = weak_triple_witness(fam, g, h, depth_budget);
    if (!wt.ok) {
        rep.inconclusive = true;
        return rep;
    }
    const Set &M = wt.m, &N = wt.n, &P = wt.p;
    const typename F::Elem& b0 = wt.b;

    typename F::Elem b0g = fam.compose(b0, g);
    typename F::Elem b0h = fam.compose(b0, h);
    typename F::Elem c0 = glue(fam, {{P, b0}, {M, b0g}});
    typename F::Elem c1 = glue(fam, {{N, b0h}});
    rep.b = fam.compose(fam.inv(c1), fam.compose(fam.inv(c0), b0));

    typename F::Elem bg = fam.compose(rep.b, g);
    typename F::Elem bh = fam.compose(rep.b, h);
    if (!fixes_pointwise(fam, rep.b, P) || !fixes_pointwise(fam, bg, M) ||
        !fixes_pointwise(fam, bh, N))
        throw std::logic_error("property3_witness: b construction failed");

    Set mnp = fam.unite(M, fam.unite(N, P));
    auto basics = fam.basics(depth_budget);
    for (const auto& [a, cover_idx] : sample_a) {
        const Set& I = cover.sets[cover_idx];
        if (!fixes_pointwise(fam, a, I))
            throw std::invalid_argument("property3_witness: sampled a does not fix its cover member");
        // Y clear of M, N, P with complement-count matching count(I)
        int want = fam.count(I) % fam.congruence();
        std::optional<Set> Y;
        for (const auto& yp : basics) {
            Set base = fam.piece_set(yp);
            if (!fam.disjoint(base, mnp)) continue;
            for (int j = 1; j <= 1 + 2 * fam.congruence(); ++j) {
                Set y = fam.staircase_in(yp, j);
                if (!fam.disjoint(y, mnp)) continue;
                if ((fam.count(fam.complement(y)) - want) % fam.congruence() != 0) continue;
                Y = y;
                break;
            }
            if (Y) break;
        }
        if (!Y) {
            rep.inconclusive = true;
            return rep;
        }
        Set J = fam.complement(*Y);
        std::vector<Set> from{I}, to{J};
        typename F::Elem f = transitivity_witness(fam, std::span<const Set>(from), std::span<const Set>(to));
        typename F::Elem af = conjugate(fam, f, a);
        bool ok = fixes_pointwise(fam, fam.compose(af, rep.b), P) &&
                  fixes_pointwise(fam, fam.compose(af, bg), M) &&
                  fixes_pointwise(fam, fam.compose(af, bh), N);
        rep.conjugators.push_back(f);
        ++rep.checked;
        if (ok) ++rep.passed;
    }
    return rep;
}

// ===========================================================================
// extremal proximality
// ===========================================================================

template <typename F>
typename F::Elem extremely_proximal_witness(const F& fam, const typename F::Set& u,
                                            const typename F::Set& v, int depth_budget = 7) {
    using Set = typename F::Set;
    if (!u.is_proper_nonempty() || !v.is_proper_nonempty())
        throw std::invalid_argument("extremely_proximal_witness: sets must be proper nonempty");
    if (fam.subset(u, v)) return fam.identity();

    int j = fam.count(u);
    for (const auto& cp : fam.basics(depth_budget)) {
        Set c = fam.piece_set(cp);
        if (!fam.subset(c, v)) continue;
        Set target = fam.staircase_in(cp, j);
        if (fam.count(target) != j) continue;
        if (!u.is_proper_nonempty() || !target.is_proper_nonempty()) continue;
        std::vector<Set> from{u}, to{target};
        if (transitivity_obstructed(fam, std::span<const Set>(from), std::span<const Set>(to))) continue;
        typename F::Elem g = transitivity_witness(fam, std::span<const Set>(from), std::span<const Set>(to));
        if (!fam.subset(fam.image(g, u), v))
            throw std::logic_error("extremely_proximal_witness: verification failed");
        return g;
    }
    throw std::logic_error("extremely_proximal_witness: no target found in budget");
}

} // namespace ggt::criterion
