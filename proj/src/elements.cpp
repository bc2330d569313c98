#include "ggt/elements.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ggt::elements {

// ===========================================================================
// EventualWord
// ===========================================================================

EventualWord::EventualWord(Word prefix, Word period) : pre(std::move(prefix)), per(std::move(period)) {
    if (per.empty()) throw std::invalid_argument("EventualWord: empty period");
    // primitive period
    for (size_t d = 1; d < per.size(); ++d) {
        if (per.size() % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < per.size() && ok; ++i) ok = per[i] == per[i % d];
        if (ok) {
            per.resize(d);
            break;
        }
    }
    // absorb the preperiod tail into the period
    while (!pre.empty() && pre.back() == per.back()) {
        per.insert(per.begin(), per.back());
        per.pop_back();
        pre.pop_back();
    }
}

bool EventualWord::has_prefix(const Word& w) const {
    for (size_t i = 0; i < w.size(); ++i)
        if (digit(i) != w[i]) return false;
    return true;
}

EventualWord EventualWord::drop_prefix(size_t k) const {
    if (k <= pre.size()) return EventualWord(Word(pre.begin() + k, pre.end()), per);
    size_t m = (k - pre.size()) % per.size();
    Word rot(per.begin() + m, per.end());
    rot.insert(rot.end(), per.begin(), per.begin() + m);
    return EventualWord({}, std::move(rot));
}

EventualWord EventualWord::prepend(const Word& w) const {
    Word p = w;
    p.insert(p.end(), pre.begin(), pre.end());
    return EventualWord(std::move(p), per);
}

Word EventualWord::expand(size_t len) const {
    Word w(len);
    for (size_t i = 0; i < len; ++i) w[i] = digit(i);
    return w;
}

std::string EventualWord::to_string() const {
    return cantor::word_to_string(pre) + "(" + cantor::word_to_string(per) + ")";
}

std::string TreePoint::to_string() const { return std::to_string(root) + ":" + w.to_string(); }

std::string ProductPoint::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].to_string();
    }
    return s + ")";
}

TreePoint least_point(const Cylinder& c) { return {c.root, EventualWord(c.word, {0})}; }

ProductPoint least_point(const Brick& b) {
    ProductPoint p;
    for (const Word& w : b.psi) p.coords.emplace_back(w, Word{0});
    return p;
}

std::vector<TreePoint> sample_points(const ClopenSet& s, int count) {
    std::vector<TreePoint> out;
    std::set<std::pair<int, std::pair<Word, Word>>> seen;
    int n = s.arity().n;
    for (int depth = 0; static_cast<int>(out.size()) < count; ++depth) {
        if (depth > 24) break; // set too small to yield that many points
        std::vector<Word> suffixes{{}};
        for (int d = 0; d < depth; ++d) {
            std::vector<Word> next;
            for (const Word& w : suffixes)
                for (int x = 0; x < n; ++x) {
                    Word e = w;
                    e.push_back(static_cast<uint8_t>(x));
                    next.push_back(std::move(e));
                }
            suffixes = std::move(next);
        }
        for (const Cylinder& c : s.cylinders())
            for (const Word& suf : suffixes) {
                Word w = c.word;
                w.insert(w.end(), suf.begin(), suf.end());
                TreePoint p{c.root, EventualWord(std::move(w), {0})};
                if (seen.insert({p.root, {p.w.pre, p.w.per}}).second) {
                    out.push_back(std::move(p));
                    if (static_cast<int>(out.size()) == count) return out;
                }
            }
        if (s.is_empty()) break;
    }
    return out;
}

std::vector<ProductPoint> sample_points(const BrickSet& s, int count) {
    std::vector<ProductPoint> out;
    std::set<std::string> seen;
    int dims = s.dims();
    for (int depth = 0; static_cast<int>(out.size()) < count; ++depth) {
        if (depth > 16) break;
        // extend coordinate (t mod dims) by the bits of t / dims, depth digits total
        std::vector<std::vector<Word>> suffix_tuples{{std::vector<Word>(dims)}};
        for (int d = 0; d < depth; ++d) {
            std::vector<std::vector<Word>> next;
            for (const auto& tup : suffix_tuples)
                for (int s2 = 0; s2 < dims; ++s2)
                    for (int bit = 0; bit < 2; ++bit) {
                        auto e = tup;
                        e[s2].push_back(static_cast<uint8_t>(bit));
                        next.push_back(std::move(e));
                    }
            suffix_tuples = std::move(next);
            if (suffix_tuples.size() > 4096) break;
        }
        for (const Brick& b : s.bricks())
            for (const auto& tup : suffix_tuples) {
                ProductPoint p;
                for (int s2 = 0; s2 < dims; ++s2) {
                    Word w = b.psi[s2];
                    w.insert(w.end(), tup[s2].begin(), tup[s2].end());
                    p.coords.emplace_back(std::move(w), Word{0});
                }
                if (seen.insert(p.to_string()).second) {
                    out.push_back(std::move(p));
                    if (static_cast<int>(out.size()) == count) return out;
                }
            }
        if (s.is_empty()) break;
    }
    return out;
}

bool contains(const ClopenSet& s, const TreePoint& p) {
    for (const Cylinder& c : s.cylinders())
        if (c.root == p.root && p.w.has_prefix(c.word)) return true;
    return false;
}

bool contains(const BrickSet& s, const ProductPoint& p) {
    for (const Brick& b : s.bricks()) {
        bool in = true;
        for (int t = 0; t < b.dims() && in; ++t) in = p.coords[t].has_prefix(b.psi[t]);
        if (in) return true;
    }
    return false;
}

// ===========================================================================
// VElement
// ===========================================================================

VElement VElement::identity(Arity a) {
    VElement e;
    e.arity_ = a;
    for (int j = 0; j < a.r; ++j) {
        e.dom_.push_back({j, {}});
        e.cod_.push_back({j, {}});
    }
    return e;
}

VElement VElement::from_patterns(Arity a, std::vector<Cylinder> domain, std::vector<Cylinder> codomain,
                                 const std::vector<int>& sigma) {
    if (domain.size() != codomain.size() || sigma.size() != domain.size())
        throw std::invalid_argument("VElement: pattern sizes differ");
    if (!cantor::is_partition(a, domain) || !cantor::is_partition(a, codomain))
        throw std::invalid_argument("VElement: patterns must be exact partitions");
    std::vector<char> hit(sigma.size(), 0);
    for (int s : sigma) {
        if (s < 0 || s >= static_cast<int>(sigma.size()) || hit[s])
            throw std::invalid_argument("VElement: sigma is not a bijection");
        hit[s] = 1;
    }
    VElement e;
    e.arity_ = a;
    e.dom_ = std::move(domain);
    e.cod_.resize(e.dom_.size());
    for (size_t i = 0; i < e.dom_.size(); ++i) e.cod_[i] = codomain[sigma[i]];
    e.canonicalize();
    return e;
}

void VElement::canonicalize() {
    const int n = arity_.n;
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < dom_.size() && !merged; ++i) {
            if (dom_[i].word.empty() || dom_[i].word.back() != 0) continue;
            if (cod_[i].word.empty() || cod_[i].word.back() != 0) continue;
            Word dparent = dom_[i].word;
            dparent.pop_back();
            Word cparent = cod_[i].word;
            cparent.pop_back();
            std::vector<size_t> block(n, SIZE_MAX);
            block[0] = i;
            bool ok = true;
            for (int d = 1; d < n && ok; ++d) {
                Word dw = dparent;
                dw.push_back(static_cast<uint8_t>(d));
                Word cw = cparent;
                cw.push_back(static_cast<uint8_t>(d));
                ok = false;
                for (size_t j = 0; j < dom_.size(); ++j)
                    if (dom_[j].root == dom_[i].root && dom_[j].word == dw &&
                        cod_[j].root == cod_[i].root && cod_[j].word == cw) {
                        block[d] = j;
                        ok = true;
                        break;
                    }
            }
            if (!ok) continue;
            std::vector<size_t> sorted(block.begin(), block.end());
            std::sort(sorted.rbegin(), sorted.rend());
            Cylinder dnew{dom_[i].root, dparent};
            Cylinder cnew{cod_[i].root, cparent};
            for (size_t j : sorted) {
                dom_.erase(dom_.begin() + j);
                cod_.erase(cod_.begin() + j);
            }
            dom_.push_back(dnew);
            cod_.push_back(cnew);
            merged = true;
        }
    }
    std::vector<size_t> idx(dom_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return dom_[x] < dom_[y]; });
    std::vector<Cylinder> d2, c2;
    for (size_t i : idx) {
        d2.push_back(dom_[i]);
        c2.push_back(cod_[i]);
    }
    dom_ = std::move(d2);
    cod_ = std::move(c2);
}

bool VElement::is_identity() const { return *this == identity(arity_); }

std::string VElement::to_string() const {
    std::string s;
    for (size_t i = 0; i < dom_.size(); ++i) {
        if (i) s += "; ";
        s += dom_[i].to_string() + "->" + cod_[i].to_string();
    }
    return s;
}

VElement compose(const VElement& g, const VElement& h) {
    if (!(g.arity_ == h.arity_)) throw std::invalid_argument("compose: arity mismatch");
    VElement out;
    out.arity_ = g.arity_;
    for (size_t i = 0; i < h.dom_.size(); ++i) {
        const Cylinder& dh = h.dom_[i];
        const Cylinder& ch = h.cod_[i];
        for (size_t j = 0; j < g.dom_.size(); ++j) {
            const Cylinder& dg = g.dom_[j];
            const Cylinder& cg = g.cod_[j];
            if (dg.root != ch.root) continue;
            if (cantor::is_prefix(dg.word, ch.word)) {
                // h's whole image piece lands inside g's domain piece
                Cylinder cod = cg;
                cod.word.insert(cod.word.end(), ch.word.begin() + dg.word.size(), ch.word.end());
                out.dom_.push_back(dh);
                out.cod_.push_back(std::move(cod));
            } else if (cantor::is_prefix(ch.word, dg.word)) {
                // restrict h's piece to the preimage of g's domain piece
                Cylinder dom = dh;
                dom.word.insert(dom.word.end(), dg.word.begin() + ch.word.size(), dg.word.end());
                out.dom_.push_back(std::move(dom));
                out.cod_.push_back(cg);
            }
        }
    }
    out.canonicalize();
    return out;
}

VElement inverse(const VElement& g) {
    VElement out;
    out.arity_ = g.arity_;
    out.dom_ = g.cod_;
    out.cod_ = g.dom_;
    out.canonicalize();
    return out;
}

TreePoint apply_point(const VElement& g, const TreePoint& p) {
    for (size_t i = 0; i < g.domain().size(); ++i) {
        const Cylinder& d = g.domain()[i];
        if (d.root == p.root && p.w.has_prefix(d.word)) {
            const Cylinder& c = g.codomain()[i];
            return {c.root, p.w.drop_prefix(d.word.size()).prepend(c.word)};
        }
    }
    throw std::invalid_argument("apply_point: point outside the element's space");
}

ClopenSet image_clopen(const VElement& g, const ClopenSet& c) {
    if (!(g.arity() == c.arity())) throw std::invalid_argument("image_clopen: arity mismatch");
    std::vector<Cylinder> out;
    for (const Cylinder& x : c.cylinders())
        for (size_t i = 0; i < g.domain().size(); ++i) {
            const Cylinder& d = g.domain()[i];
            const Cylinder& im = g.codomain()[i];
            if (d.root != x.root) continue;
            if (cantor::is_prefix(d.word, x.word)) {
                Cylinder y = im;
                y.word.insert(y.word.end(), x.word.begin() + d.word.size(), x.word.end());
                out.push_back(std::move(y));
            } else if (cantor::is_prefix(x.word, d.word) && x.word != d.word) {
                out.push_back(im);
            }
        }
    return ClopenSet(c.arity(), std::move(out));
}

ClopenSet fixed_clopen(const VElement& g) {
    std::vector<Cylinder> out;
    for (size_t i = 0; i < g.domain().size(); ++i)
        if (g.domain()[i] == g.codomain()[i]) out.push_back(g.domain()[i]);
    return ClopenSet(g.arity(), std::move(out));
}

namespace {

std::vector<Cylinder> random_pattern(Rng& rng, Arity a, int splits) {
    std::vector<Cylinder> pieces;
    for (int j = 0; j < a.r; ++j) pieces.push_back({j, {}});
    for (int t = 0; t < splits; ++t) {
        size_t i = rng.uniform(pieces.size());
        Cylinder parent = pieces[i];
        pieces.erase(pieces.begin() + i);
        for (int d = 0; d < a.n; ++d) {
            Cylinder child = parent;
            child.word.push_back(static_cast<uint8_t>(d));
            pieces.push_back(child);
        }
    }
    return pieces;
}

std::vector<int> random_perm(Rng& rng, size_t k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    for (size_t i = k; i > 1; --i) std::swap(p[i - 1], p[rng.uniform(i)]);
    return p;
}

} // namespace

VElement random_v_element(Rng& rng, Arity a, int size) {
    if (size < 1) throw std::invalid_argument("random_v_element: size must be >= 1");
    if (size <= a.r || size == 1) return VElement::identity(a);
    int splits = (size - a.r) / (a.n - 1);
    auto dom = random_pattern(rng, a, splits);
    auto cod = random_pattern(rng, a, splits);
    auto sigma = random_perm(rng, dom.size());
    return VElement::from_patterns(a, std::move(dom), std::move(cod), sigma);
}

// ===========================================================================
// Permutations and the twist group
// ===========================================================================

Perm Perm::identity(int k) {
    Perm p;
    p.img.resize(k);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Perm Perm::after(const Perm& first) const {
    Perm out;
    out.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) out.img[i] = img[first.img[i]];
    return out;
}

Perm Perm::inverse() const {
    Perm out;
    out.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) out.img[img[i]] = static_cast<int>(i);
    return out;
}

bool Perm::is_identity() const {
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] != static_cast<int>(i)) return false;
    return true;
}

TwistGroup::TwistGroup(int dims, std::vector<Perm> gens) : dims_(dims), gens_(std::move(gens)) {
    for (const Perm& g : gens_) {
        if (g.deg() != dims) throw std::invalid_argument("TwistGroup: generator degree mismatch");
        std::vector<char> hit(dims, 0);
        for (int x : g.img) {
            if (x < 0 || x >= dims || hit[x]) throw std::invalid_argument("TwistGroup: not a permutation");
            hit[x] = 1;
        }
    }
    std::set<Perm> all{Perm::identity(dims)};
    std::vector<Perm> frontier{Perm::identity(dims)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : gens_) {
                Perm q = g.after(p);
                if (all.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
        if (all.size() > 100000) throw std::invalid_argument("TwistGroup: group too large");
    }
    elems_.assign(all.begin(), all.end());
}

bool TwistGroup::contains(const Perm& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
}

std::shared_ptr<const TwistGroup> TwistGroup::trivial(int dims) {
    return std::make_shared<TwistGroup>(dims, std::vector<Perm>{});
}

// ===========================================================================
// TwistedElement
// ===========================================================================

TwistedElement TwistedElement::identity(std::shared_ptr<const TwistGroup> group) {
    TwistedElement e;
    int d = group->dims();
    e.group_ = std::move(group);
    e.dom_.push_back(Brick::whole(d));
    e.cod_.push_back(Brick::whole(d));
    e.twists_.push_back(Perm::identity(d));
    return e;
}

TwistedElement TwistedElement::from_patterns(std::shared_ptr<const TwistGroup> group,
                                             std::vector<Brick> domain, std::vector<Brick> codomain,
                                             const std::vector<int>& sigma, std::vector<Perm> twists) {
    int d = group->dims();
    if (domain.size() != codomain.size() || sigma.size() != domain.size() || twists.size() != domain.size())
        throw std::invalid_argument("TwistedElement: pattern sizes differ");
    if (!cantor::is_partition(d, domain) || !cantor::is_partition(d, codomain))
        throw std::invalid_argument("TwistedElement: patterns must be exact partitions");
    std::vector<char> hit(sigma.size(), 0);
    for (int s : sigma) {
        if (s < 0 || s >= static_cast<int>(sigma.size()) || hit[s])
            throw std::invalid_argument("TwistedElement: sigma is not a bijection");
        hit[s] = 1;
    }
    for (const Perm& t : twists)
        if (!group->contains(t)) throw std::invalid_argument("TwistedElement: twist outside the group");
    TwistedElement e;
    e.group_ = std::move(group);
    e.dom_ = std::move(domain);
    e.cod_.resize(e.dom_.size());
    for (size_t i = 0; i < e.dom_.size(); ++i) e.cod_[i] = codomain[sigma[i]];
    e.twists_ = std::move(twists);
    e.canonicalize();
    return e;
}

void TwistedElement::canonicalize() {
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < dom_.size() && !merged; ++i) {
            for (size_t j = 0; j < dom_.size() && !merged; ++j) {
                if (i == j || !(twists_[i] == twists_[j])) continue;
                // domain bricks must split a parent along some s, codomains
                // along gamma(s), with i taking the 0 side of both
                int s = -1;
                bool fit = true;
                for (int t = 0; t < dims() && fit; ++t) {
                    if (dom_[i].psi[t] == dom_[j].psi[t]) continue;
                    if (s != -1 || dom_[i].psi[t].empty() || dom_[j].psi[t].empty()) {
                        fit = false;
                        break;
                    }
                    Word a = dom_[i].psi[t], b = dom_[j].psi[t];
                    if (a.size() != b.size() || a.back() != 0 || b.back() != 1) {
                        fit = false;
                        break;
                    }
                    a.pop_back();
                    b.pop_back();
                    if (a != b) {
                        fit = false;
                        break;
                    }
                    s = t;
                }
                if (!fit || s == -1) continue;
                int gs = twists_[i](s);
                for (int t = 0; t < dims() && fit; ++t) {
                    if (t == gs) {
                        Word a = cod_[i].psi[t], b = cod_[j].psi[t];
                        if (a.empty() || b.empty() || a.size() != b.size() || a.back() != 0 || b.back() != 1) {
                            fit = false;
                            break;
                        }
                        a.pop_back();
                        b.pop_back();
                        fit = a == b;
                    } else {
                        fit = cod_[i].psi[t] == cod_[j].psi[t];
                    }
                }
                if (!fit) continue;
                Brick dnew = dom_[i];
                dnew.psi[s].pop_back();
                Brick cnew = cod_[i];
                cnew.psi[gs].pop_back();
                Perm tw = twists_[i];
                size_t hi = std::max(i, j), lo = std::min(i, j);
                dom_.erase(dom_.begin() + hi);
                cod_.erase(cod_.begin() + hi);
                twists_.erase(twists_.begin() + hi);
                dom_.erase(dom_.begin() + lo);
                cod_.erase(cod_.begin() + lo);
                twists_.erase(twists_.begin() + lo);
                dom_.push_back(std::move(dnew));
                cod_.push_back(std::move(cnew));
                twists_.push_back(std::move(tw));
                merged = true;
            }
        }
    }
    std::vector<size_t> idx(dom_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return dom_[x] < dom_[y]; });
    std::vector<Brick> d2, c2;
    std::vector<Perm> t2;
    for (size_t i : idx) {
        d2.push_back(dom_[i]);
        c2.push_back(cod_[i]);
        t2.push_back(twists_[i]);
    }
    dom_ = std::move(d2);
    cod_ = std::move(c2);
    twists_ = std::move(t2);
}

bool TwistedElement::is_identity() const {
    for (size_t i = 0; i < dom_.size(); ++i)
        if (!(dom_[i] == cod_[i]) || !twists_[i].is_identity()) return false;
    return true;
}

std::string TwistedElement::to_string() const {
    std::string s;
    for (size_t i = 0; i < dom_.size(); ++i) {
        if (i) s += "; ";
        s += dom_[i].to_string() + "->" + cod_[i].to_string();
        if (!twists_[i].is_identity()) {
            s += " tw[";
            for (size_t t = 0; t < twists_[i].img.size(); ++t) {
                if (t) s += ",";
                s += std::to_string(twists_[i].img[t]);
            }
            s += "]";
        }
    }
    return s;
}

namespace {

Word word_suffix(const Word& longer, const Word& prefix) {
    return Word(longer.begin() + prefix.size(), longer.end());
}

} // namespace

TwistedElement compose(const TwistedElement& g, const TwistedElement& h) {
    if (g.dims() != h.dims()) throw std::invalid_argument("compose: dims mismatch");
    TwistedElement out;
    out.group_ = g.group();
    int dims = g.dims();
    for (size_t i = 0; i < h.dom_.size(); ++i)
        for (size_t j = 0; j < g.dom_.size(); ++j) {
            auto inter = cantor::brick_intersect(h.cod_[i], g.dom_[j]);
            if (!inter) continue;
            const Perm& gam = h.twists_[i];
            const Perm& del = g.twists_[j];
            // pull the refinement back through h's piece
            Brick dom = h.dom_[i];
            Perm gaminv = gam.inverse();
            for (int s = 0; s < dims; ++s) {
                Word extra = word_suffix(inter->psi[s], h.cod_[i].psi[s]);
                Word& tgt = dom.psi[gaminv(s)];
                tgt.insert(tgt.end(), extra.begin(), extra.end());
            }
            // push it forward through g's piece
            Brick cod = g.cod_[j];
            Perm delinv = del.inverse();
            for (int s = 0; s < dims; ++s) {
                Word extra = word_suffix(inter->psi[delinv(s)], g.dom_[j].psi[delinv(s)]);
                cod.psi[s].insert(cod.psi[s].end(), extra.begin(), extra.end());
            }
            out.dom_.push_back(std::move(dom));
            out.cod_.push_back(std::move(cod));
            out.twists_.push_back(del.after(gam));
        }
    out.canonicalize();
    return out;
}

TwistedElement inverse(const TwistedElement& g) {
    TwistedElement out = g;
    std::swap(out.dom_, out.cod_);
    for (Perm& t : out.twists_) t = t.inverse();
    out.canonicalize();
    return out;
}

ProductPoint apply_point(const TwistedElement& g, const ProductPoint& p) {
    int dims = g.dims();
    for (size_t i = 0; i < g.domain().size(); ++i) {
        const Brick& d = g.domain()[i];
        bool in = true;
        for (int s = 0; s < dims && in; ++s) in = p.coords[s].has_prefix(d.psi[s]);
        if (!in) continue;
        const Brick& c = g.codomain()[i];
        const Perm& gam = g.twists()[i];
        Perm gaminv = gam.inverse();
        ProductPoint out;
        out.coords.resize(dims);
        for (int s = 0; s < dims; ++s) {
            int t = gaminv(s);
            out.coords[s] = p.coords[t].drop_prefix(d.psi[t].size()).prepend(c.psi[s]);
        }
        return out;
    }
    throw std::invalid_argument("apply_point: point outside the element's space");
}

BrickSet image_clopen(const TwistedElement& g, const BrickSet& c) {
    if (g.dims() != c.dims()) throw std::invalid_argument("image_clopen: dims mismatch");
    int dims = g.dims();
    std::vector<Brick> out;
    for (const Brick& x : c.bricks())
        for (size_t i = 0; i < g.domain().size(); ++i) {
            auto inter = cantor::brick_intersect(x, g.domain()[i]);
            if (!inter) continue;
            Brick y = g.codomain()[i];
            Perm gaminv = g.twists()[i].inverse();
            for (int s = 0; s < dims; ++s) {
                Word extra = word_suffix(inter->psi[gaminv(s)], g.domain()[i].psi[gaminv(s)]);
                y.psi[s].insert(y.psi[s].end(), extra.begin(), extra.end());
            }
            out.push_back(std::move(y));
        }
    return BrickSet(dims, std::move(out));
}

BrickSet fixed_clopen(const TwistedElement& g) {
    std::vector<Brick> out;
    for (size_t i = 0; i < g.domain().size(); ++i)
        if (g.domain()[i] == g.codomain()[i] && g.twists()[i].is_identity())
            out.push_back(g.domain()[i]);
    return BrickSet(g.dims(), std::move(out));
}

bool equal(const TwistedElement& a, const TwistedElement& b) {
    if (a.dims() != b.dims()) return false;
    int dims = a.dims();
    for (size_t i = 0; i < a.domain().size(); ++i)
        for (size_t j = 0; j < b.domain().size(); ++j) {
            auto inter = cantor::brick_intersect(a.domain()[i], b.domain()[j]);
            if (!inter) continue;
            if (!(a.twists()[i] == b.twists()[j])) return false;
            // both restricted to the common domain brick must share the image
            Perm ainv = a.twists()[i].inverse();
            Brick ya = a.codomain()[i];
            for (int s = 0; s < dims; ++s) {
                Word extra = word_suffix(inter->psi[ainv(s)], a.domain()[i].psi[ainv(s)]);
                ya.psi[s].insert(ya.psi[s].end(), extra.begin(), extra.end());
            }
            Perm binv = b.twists()[j].inverse();
            Brick yb = b.codomain()[j];
            for (int s = 0; s < dims; ++s) {
                Word extra = word_suffix(inter->psi[binv(s)], b.domain()[j].psi[binv(s)]);
                yb.psi[s].insert(yb.psi[s].end(), extra.begin(), extra.end());
            }
            if (!(ya == yb)) return false;
        }
    return true;
}

TwistedElement random_twisted_element(Rng& rng, std::shared_ptr<const TwistGroup> group, int size) {
    if (size < 1) throw std::invalid_argument("random_twisted_element: size must be >= 1");
    int dims = group->dims();
    auto random_brick_pattern = [&](int splits) {
        std::vector<Brick> pieces{Brick::whole(dims)};
        for (int t = 0; t < splits; ++t) {
            size_t i = rng.uniform(pieces.size());
            Brick parent = pieces[i];
            pieces.erase(pieces.begin() + i);
            int s = static_cast<int>(rng.uniform(dims));
            auto [lo, hi] = cantor::brick_split(parent, s);
            pieces.push_back(lo);
            pieces.push_back(hi);
        }
        return pieces;
    };
    int splits = size - 1;
    if (splits == 0) return TwistedElement::identity(std::move(group));
    auto dom = random_brick_pattern(splits);
    auto cod = random_brick_pattern(splits);
    std::vector<int> sigma(dom.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    for (size_t i = sigma.size(); i > 1; --i) std::swap(sigma[i - 1], sigma[rng.uniform(i)]);
    std::vector<Perm> twists;
    const auto& elems = group->elements();
    for (size_t i = 0; i < dom.size(); ++i) twists.push_back(elems[rng.uniform(elems.size())]);
    return TwistedElement::from_patterns(std::move(group), std::move(dom), std::move(cod), sigma,
                                         std::move(twists));
}

} // namespace ggt::elements
