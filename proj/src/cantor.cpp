#include "ggt/cantor.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace ggt::cantor {

std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (uint8_t d : w) s.push_back(static_cast<char>('0' + d));
    return s;
}

std::string Cylinder::to_string() const {
    return std::to_string(root) + ":" + word_to_string(word);
}

Cylinder Cylinder::parse(std::string_view text) {
    size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("Cylinder: missing ':'");
    Cylinder c;
    c.root = std::stoi(std::string(text.substr(0, colon)));
    for (char ch : text.substr(colon + 1)) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("Cylinder: bad digit");
        c.word.push_back(static_cast<uint8_t>(ch - '0'));
    }
    return c;
}

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

// ---------------------------------------------------------------------------
// Canonicalization: one trie per root, mark the given cylinders, then read
// off the maximal covered nodes. A node is covered when it is marked or all
// n children exist and are covered; emitting only maximal covered nodes
// performs absorption and sibling merging in a single pass.
// ---------------------------------------------------------------------------

namespace {

// arena trie: nodes in one vector, child blocks of n indices in another
struct Trie {
    int n;
    std::vector<int8_t> mark{0};
    std::vector<int> kids_off{-1};
    std::vector<int> pool;
    std::vector<int8_t> cov; // filled by close()

    explicit Trie(int branching) : n(branching) {}

    bool empty() const { return mark.size() == 1 && !mark[0] && kids_off[0] < 0; }

    int child(int node, int d) const {
        int off = kids_off[node];
        return off < 0 ? -1 : pool[off + d];
    }

    void insert(const Word& w) {
        int cur = 0;
        for (uint8_t d : w) {
            if (kids_off[cur] < 0) {
                kids_off[cur] = static_cast<int>(pool.size());
                pool.insert(pool.end(), n, -1);
            }
            int off = kids_off[cur];
            if (pool[off + d] < 0) {
                pool[off + d] = static_cast<int>(mark.size());
                mark.push_back(0);
                kids_off.push_back(-1);
            }
            cur = pool[off + d];
        }
        mark[cur] = 1;
    }

    // compute coverage bottom-up (nodes are created parent-first, so a
    // reverse index sweep is a valid post-order)
    void close() {
        cov.assign(mark.size(), 0);
        for (size_t i = mark.size(); i-- > 0;) {
            if (mark[i]) {
                cov[i] = 1;
                continue;
            }
            if (kids_off[i] < 0) continue;
            bool all = true;
            for (int d = 0; d < n && all; ++d) {
                int c = pool[kids_off[i] + d];
                all = c >= 0 && cov[c];
            }
            cov[i] = all;
        }
    }

    void emit_covered(int node, Word& w, int rootIdx, std::vector<Cylinder>& out) const {
        if (cov[node]) {
            out.push_back({rootIdx, w});
            return;
        }
        if (kids_off[node] < 0) return;
        for (int d = 0; d < n; ++d) {
            int c = pool[kids_off[node] + d];
            if (c < 0) continue;
            w.push_back(static_cast<uint8_t>(d));
            emit_covered(c, w, rootIdx, out);
            w.pop_back();
        }
    }

    void emit_complement(int node, Word& w, int rootIdx, std::vector<Cylinder>& out) const {
        if (cov[node]) return;
        if (kids_off[node] < 0) {
            out.push_back({rootIdx, w});
            return;
        }
        for (int d = 0; d < n; ++d) {
            int c = pool[kids_off[node] + d];
            w.push_back(static_cast<uint8_t>(d));
            if (c >= 0)
                emit_complement(c, w, rootIdx, out);
            else
                out.push_back({rootIdx, w});
            w.pop_back();
        }
    }
};

std::vector<Trie> build_tries(const Arity& a, const std::vector<Cylinder>& cyls) {
    std::vector<Trie> tries;
    tries.reserve(a.r);
    for (int j = 0; j < a.r; ++j) tries.emplace_back(a.n);
    for (const Cylinder& c : cyls) tries[c.root].insert(c.word);
    for (Trie& t : tries) t.close();
    return tries;
}

} // namespace

ClopenSet::ClopenSet(Arity arity, std::vector<Cylinder> cylinders) : arity_(arity) {
    if (arity.n < 2 || arity.r < 1) throw std::invalid_argument("Arity: need n >= 2, r >= 1");
    for (const Cylinder& c : cylinders) {
        if (c.root < 0 || c.root >= arity.r) throw std::invalid_argument("ClopenSet: root out of range");
        for (uint8_t d : c.word)
            if (d >= arity.n) throw std::invalid_argument("ClopenSet: digit out of range");
    }
    auto tries = build_tries(arity, cylinders);
    Word w;
    for (int j = 0; j < arity.r; ++j) {
        if (!tries[j].empty()) tries[j].emit_covered(0, w, j, cyls_);
    }
}

ClopenSet ClopenSet::full(Arity a) {
    std::vector<Cylinder> cs;
    for (int j = 0; j < a.r; ++j) cs.push_back({j, {}});
    return ClopenSet(a, std::move(cs));
}

bool ClopenSet::is_full() const {
    if (static_cast<int>(cyls_.size()) != arity_.r) return false;
    for (int j = 0; j < arity_.r; ++j)
        if (cyls_[j].root != j || !cyls_[j].word.empty()) return false;
    return true;
}

bool ClopenSet::contains_cylinder(const Cylinder& c) const {
    for (const Cylinder& mine : cyls_)
        if (mine.root == c.root && is_prefix(mine.word, c.word)) return true;
    return false;
}

int ClopenSet::max_depth() const {
    int d = 0;
    for (const Cylinder& c : cyls_) d = std::max<int>(d, static_cast<int>(c.word.size()));
    return d;
}

std::string ClopenSet::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < cyls_.size(); ++i) {
        if (i) s += ", ";
        s += cyls_[i].to_string();
    }
    return s + "]";
}

ClopenSet ClopenSet::parse(Arity a, std::string_view text) {
    size_t b = text.find('['), e = text.rfind(']');
    if (b == std::string_view::npos || e == std::string_view::npos || e < b)
        throw std::invalid_argument("ClopenSet: expected [..]");
    std::string_view body = text.substr(b + 1, e - b - 1);
    std::vector<Cylinder> cs;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view item = body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
        size_t s0 = item.find_first_not_of(" \t");
        size_t s1 = item.find_last_not_of(" \t");
        if (s0 != std::string_view::npos) cs.push_back(Cylinder::parse(item.substr(s0, s1 - s0 + 1)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return ClopenSet(a, std::move(cs));
}

ClopenSet complement(const ClopenSet& c) {
    auto tries = build_tries(c.arity(), c.cylinders());
    std::vector<Cylinder> out;
    Word w;
    for (int j = 0; j < c.arity().r; ++j) {
        if (tries[j].empty())
            out.push_back({j, {}});
        else
            tries[j].emit_complement(0, w, j, out);
    }
    return ClopenSet(c.arity(), std::move(out));
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b) {
    if (!(a.arity() == b.arity())) throw std::invalid_argument("boolean: arity mismatch");
    std::vector<Cylinder> cs = a.cylinders();
    cs.insert(cs.end(), b.cylinders().begin(), b.cylinders().end());
    return ClopenSet(a.arity(), std::move(cs));
}

ClopenSet set_intersect(const ClopenSet& a, const ClopenSet& b) {
    if (!(a.arity() == b.arity())) throw std::invalid_argument("boolean: arity mismatch");
    std::vector<Cylinder> cs;
    for (const Cylinder& x : a.cylinders())
        for (const Cylinder& y : b.cylinders()) {
            if (x.root != y.root) continue;
            if (is_prefix(x.word, y.word))
                cs.push_back(y);
            else if (is_prefix(y.word, x.word))
                cs.push_back(x);
        }
    return ClopenSet(a.arity(), std::move(cs));
}

ClopenSet set_minus(const ClopenSet& a, const ClopenSet& b) {
    return set_intersect(a, complement(b));
}

ClopenSet boolean(const ClopenSet& a, const ClopenSet& b, BoolOp op) {
    switch (op) {
        case BoolOp::Union: return set_union(a, b);
        case BoolOp::Intersect: return set_intersect(a, b);
        case BoolOp::Minus: return set_minus(a, b);
    }
    throw std::logic_error("boolean: bad op");
}

bool disjoint(const ClopenSet& a, const ClopenSet& b) {
    for (const Cylinder& x : a.cylinders())
        for (const Cylinder& y : b.cylinders())
            if (x.root == y.root && (is_prefix(x.word, y.word) || is_prefix(y.word, x.word)))
                return false;
    return true;
}

bool subset(const ClopenSet& a, const ClopenSet& b) {
    return set_intersect(a, b) == a;
}

bool tuple_admissible(std::span<const ClopenSet> ts) {
    if (ts.empty()) return false;
    ClopenSet u = ClopenSet::empty(ts[0].arity());
    for (size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i].arity() == ts[0].arity())) return false;
        if (!ts[i].is_proper_nonempty()) return false;
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (!disjoint(ts[i], ts[j])) return false;
        u = set_union(u, ts[i]);
    }
    return !u.is_full();
}

bool is_partition(Arity a, std::span<const Cylinder> pieces) {
    std::vector<Cylinder> sorted(pieces.begin(), pieces.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i] == sorted[i + 1]) return false;
        if (sorted[i].root == sorted[i + 1].root && is_prefix(sorted[i].word, sorted[i + 1].word))
            return false;
    }
    return ClopenSet(a, std::move(sorted)).is_full();
}

int min_partition_size(Arity a, std::span<const ClopenSet> sets) {
    int total = 0;
    ClopenSet u = ClopenSet::empty(a);
    for (const ClopenSet& s : sets) {
        total += static_cast<int>(s.size());
        u = set_union(u, s);
    }
    return total + static_cast<int>(complement(u).size());
}

CylinderPattern complete_to_partition(Arity a, std::span<const ClopenSet> sets, int k) {
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (!disjoint(sets[i], sets[j]))
                throw std::invalid_argument("complete_to_partition: sets overlap");

    CylinderPattern pat;
    pat.arity = a;
    ClopenSet u = ClopenSet::empty(a);
    for (size_t i = 0; i < sets.size(); ++i) {
        for (const Cylinder& c : sets[i].cylinders()) {
            pat.pieces.push_back(c);
            pat.owner.push_back(static_cast<int>(i));
        }
        u = set_union(u, sets[i]);
    }
    const ClopenSet rest = complement(u);
    for (const Cylinder& c : rest.cylinders()) {
        pat.pieces.push_back(c);
        pat.owner.push_back(-1);
    }

    int minsize = static_cast<int>(pat.pieces.size());
    if (k < minsize)
        throw std::invalid_argument("complete_to_partition: k below minimum " + std::to_string(minsize));
    if ((k - minsize) % (a.n - 1) != 0)
        throw std::invalid_argument("complete_to_partition: k unreachable, counts are " +
                                    std::to_string(minsize) + " + t*" + std::to_string(a.n - 1));

    while (static_cast<int>(pat.pieces.size()) < k) {
        size_t first = 0;
        for (size_t i = 1; i < pat.pieces.size(); ++i)
            if (pat.pieces[i] < pat.pieces[first]) first = i;
        Cylinder parent = pat.pieces[first];
        int own = pat.owner[first];
        pat.pieces.erase(pat.pieces.begin() + first);
        pat.owner.erase(pat.owner.begin() + first);
        for (int d = 0; d < a.n; ++d) {
            Cylinder child = parent;
            child.word.push_back(static_cast<uint8_t>(d));
            pat.pieces.push_back(child);
            pat.owner.push_back(own);
        }
    }

    // keep the pattern in a stable display order: by owner run order is lost
    // after splits, so sort by (root, word) carrying owners along
    std::vector<size_t> idx(pat.pieces.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return pat.pieces[x] < pat.pieces[y]; });
    CylinderPattern sorted;
    sorted.arity = a;
    for (size_t i : idx) {
        sorted.pieces.push_back(pat.pieces[i]);
        sorted.owner.push_back(pat.owner[i]);
    }
    return sorted;
}

// ===========================================================================
// Bricks
// ===========================================================================

std::string Brick::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < dims(); ++i) {
        if (psi[i].empty()) continue;
        if (!first) s += ", ";
        first = false;
        s += std::to_string(i) + ":" + word_to_string(psi[i]);
    }
    return s + "}";
}

Brick Brick::parse(int dims, std::string_view text) {
    size_t b = text.find('{'), e = text.rfind('}');
    if (b == std::string_view::npos || e == std::string_view::npos || e < b)
        throw std::invalid_argument("Brick: expected {..}");
    Brick out = Brick::whole(dims);
    std::string_view body = text.substr(b + 1, e - b - 1);
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view item = body.substr(pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
        size_t s0 = item.find_first_not_of(" \t");
        if (s0 != std::string_view::npos) {
            size_t s1 = item.find_last_not_of(" \t");
            item = item.substr(s0, s1 - s0 + 1);
            size_t colon = item.find(':');
            if (colon == std::string_view::npos) throw std::invalid_argument("Brick: missing ':'");
            int s = std::stoi(std::string(item.substr(0, colon)));
            if (s < 0 || s >= dims) throw std::invalid_argument("Brick: coordinate out of range");
            Word w;
            for (char ch : item.substr(colon + 1)) {
                if (ch != '0' && ch != '1') throw std::invalid_argument("Brick: bad bit");
                w.push_back(static_cast<uint8_t>(ch - '0'));
            }
            out.psi[s] = std::move(w);
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::pair<Brick, Brick> brick_split(const Brick& b, int s) {
    if (s < 0 || s >= b.dims()) throw std::invalid_argument("brick_split: coordinate out of range");
    Brick lo = b, hi = b;
    lo.psi[s].push_back(0);
    hi.psi[s].push_back(1);
    return {lo, hi};
}

bool bricks_disjoint(const Brick& a, const Brick& b) {
    for (int s = 0; s < a.dims(); ++s)
        if (!is_prefix(a.psi[s], b.psi[s]) && !is_prefix(b.psi[s], a.psi[s])) return true;
    return false;
}

std::optional<Brick> brick_intersect(const Brick& a, const Brick& b) {
    Brick out = a;
    for (int s = 0; s < a.dims(); ++s) {
        if (is_prefix(a.psi[s], b.psi[s]))
            out.psi[s] = b.psi[s];
        else if (!is_prefix(b.psi[s], a.psi[s]))
            return std::nullopt;
    }
    return out;
}

bool brick_subset(const Brick& inner, const Brick& outer) {
    for (int s = 0; s < inner.dims(); ++s)
        if (!is_prefix(outer.psi[s], inner.psi[s])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Grid tabulation. Unions of bricks have no unique maximal-brick antichain,
// so canonical form is defined semantically: tabulate membership at the
// minimal per-coordinate depths, then rebuild bricks with a fixed greedy
// extraction. Identical sets then always produce identical brick lists.
// ---------------------------------------------------------------------------

namespace {

struct Grid {
    std::vector<int> depths;
    std::vector<size_t> stride; // stride[s] for coordinate value s
    size_t cells = 1;
    std::vector<char> member;

    explicit Grid(std::vector<int> d) : depths(std::move(d)) {
        stride.assign(depths.size(), 1);
        int total_bits = 0;
        for (int dep : depths) total_bits += dep;
        if (total_bits > 24) throw std::invalid_argument("BrickSet: grid too fine for desk scale");
        for (size_t s = depths.size(); s-- > 0;) {
            stride[s] = cells;
            cells <<= depths[s];
        }
        member.assign(cells, 0);
    }

    // [lo, hi) value range of coordinate s compatible with prefix w
    std::pair<size_t, size_t> range(int s, const Word& w) const {
        size_t lo = 0;
        for (uint8_t bit : w) lo = (lo << 1) | bit;
        int free_bits = depths[s] - static_cast<int>(w.size());
        lo <<= free_bits;
        return {lo, lo + (size_t(1) << free_bits)};
    }

    template <typename F>
    void for_brick(const Brick& b, F&& f) const {
        std::vector<std::pair<size_t, size_t>> ranges;
        for (int s = 0; s < b.dims(); ++s) ranges.push_back(range(s, b.psi[s]));
        std::vector<size_t> cur(ranges.size());
        for (size_t s = 0; s < ranges.size(); ++s) cur[s] = ranges[s].first;
        while (true) {
            size_t id = 0;
            for (size_t s = 0; s < cur.size(); ++s) id += cur[s] * stride[s];
            f(id);
            size_t s = cur.size();
            while (s-- > 0) {
                if (++cur[s] < ranges[s].second) break;
                cur[s] = ranges[s].first;
                if (s == 0) return;
            }
            if (s == SIZE_MAX) return;
        }
    }

    void mark(const Brick& b) {
        for_brick(b, [&](size_t id) { member[id] = 1; });
    }

    Word coord_word(size_t id, int s) const {
        size_t v = (id / stride[s]) & ((size_t(1) << depths[s]) - 1);
        Word w(depths[s]);
        for (int j = depths[s]; j-- > 0;) {
            w[j] = static_cast<uint8_t>(v & 1);
            v >>= 1;
        }
        return w;
    }
};

// membership independent of the last bit of coordinate s?
bool depth_reducible(const Grid& g, int s) {
    if (g.depths[s] == 0) return false;
    const size_t half = g.stride[s]; // weight of the last bit of coordinate s
    for (size_t id = 0; id < g.cells; ++id) {
        size_t v = (id / g.stride[s]) & ((size_t(1) << g.depths[s]) - 1);
        if (v & 1) continue;
        if (g.member[id] != g.member[id + half]) return false;
    }
    return true;
}

Grid reduce_depth(const Grid& g, int s) {
    std::vector<int> nd = g.depths;
    nd[s] -= 1;
    Grid out(nd);
    for (size_t id = 0; id < out.cells; ++id) {
        // expand reduced id back to a full id with last bit of s = 0
        size_t v_out = (id / out.stride[s]) & ((size_t(1) << out.depths[s]) - 1);
        size_t rest_hi = id / (out.stride[s] << out.depths[s]);
        size_t rest_lo = id % out.stride[s];
        size_t v_in = v_out << 1;
        size_t full = rest_hi * (g.stride[s] << g.depths[s]) + v_in * g.stride[s] + rest_lo;
        out.member[id] = g.member[full];
    }
    return out;
}

Grid tabulate(int dims, const std::vector<Brick>& bricks, const std::vector<int>* force_depths = nullptr) {
    std::vector<int> depths(dims, 0);
    for (const Brick& b : bricks)
        for (int s = 0; s < dims; ++s)
            depths[s] = std::max<int>(depths[s], static_cast<int>(b.psi[s].size()));
    if (force_depths)
        for (int s = 0; s < dims; ++s) depths[s] = std::max(depths[s], (*force_depths)[s]);
    Grid g(depths);
    for (const Brick& b : bricks) g.mark(b);
    return g;
}

std::vector<Brick> extract_bricks(Grid g, int dims) {
    // first reduce every coordinate to its semantic depth
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < dims; ++s)
            if (depth_reducible(g, s)) {
                g = reduce_depth(g, s);
                changed = true;
            }
    }
    std::vector<char> covered(g.cells, 0);
    std::vector<Brick> out;
    for (size_t id = 0; id < g.cells; ++id) {
        if (!g.member[id] || covered[id]) continue;
        Brick b{std::vector<Word>(dims)};
        for (int s = 0; s < dims; ++s) b.psi[s] = g.coord_word(id, s);
        // grow: pop constraints while the doubled brick stays inside the
        // uncovered part of the set
        bool grew = true;
        while (grew) {
            grew = false;
            for (int s = 0; s < dims; ++s) {
                if (b.psi[s].empty()) continue;
                Brick cand = b;
                cand.psi[s].pop_back();
                bool ok = true;
                g.for_brick(cand, [&](size_t cid) {
                    if (!g.member[cid] || covered[cid]) ok = false;
                });
                if (ok) {
                    b = cand;
                    grew = true;
                }
            }
        }
        g.for_brick(b, [&](size_t cid) { covered[cid] = 1; });
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

BrickSet::BrickSet(int dims, std::vector<Brick> bricks) : dims_(dims) {
    if (dims < 1) throw std::invalid_argument("BrickSet: need dims >= 1");
    for (const Brick& b : bricks) {
        if (b.dims() != dims) throw std::invalid_argument("BrickSet: brick dims mismatch");
        for (const Word& w : b.psi)
            for (uint8_t d : w)
                if (d > 1) throw std::invalid_argument("BrickSet: bits must be 0/1");
    }
    if (bricks.empty()) return;
    bricks_ = extract_bricks(tabulate(dims, bricks), dims);
}

BrickSet BrickSet::single(Brick b) {
    int d = b.dims();
    return BrickSet(d, {std::move(b)});
}

std::string BrickSet::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < bricks_.size(); ++i) {
        if (i) s += ", ";
        s += bricks_[i].to_string();
    }
    return s + "]";
}

namespace {

BrickSet from_grid_op(const BrickSet& a, const BrickSet& b, char op) {
    if (a.dims() != b.dims()) throw std::invalid_argument("boolean: dims mismatch");
    std::vector<Brick> all = a.bricks();
    all.insert(all.end(), b.bricks().begin(), b.bricks().end());
    Grid ga = tabulate(a.dims(), all);
    // re-mark separately at the common depths
    Grid g1 = ga, g2 = ga;
    std::fill(g1.member.begin(), g1.member.end(), 0);
    std::fill(g2.member.begin(), g2.member.end(), 0);
    for (const Brick& x : a.bricks()) g1.mark(x);
    for (const Brick& x : b.bricks()) g2.mark(x);
    for (size_t id = 0; id < ga.cells; ++id) {
        switch (op) {
            case 'u': ga.member[id] = g1.member[id] | g2.member[id]; break;
            case 'i': ga.member[id] = g1.member[id] & g2.member[id]; break;
            case 'm': ga.member[id] = g1.member[id] & static_cast<char>(!g2.member[id]); break;
        }
    }
    return BrickSet(a.dims(), extract_bricks(std::move(ga), a.dims()));
}

} // namespace

BrickSet complement(const BrickSet& c) {
    Grid g = tabulate(c.dims(), c.bricks());
    for (size_t id = 0; id < g.cells; ++id) g.member[id] = static_cast<char>(!g.member[id]);
    return BrickSet(c.dims(), extract_bricks(std::move(g), c.dims()));
}

BrickSet set_union(const BrickSet& a, const BrickSet& b) { return from_grid_op(a, b, 'u'); }
BrickSet set_intersect(const BrickSet& a, const BrickSet& b) { return from_grid_op(a, b, 'i'); }
BrickSet set_minus(const BrickSet& a, const BrickSet& b) { return from_grid_op(a, b, 'm'); }

BrickSet boolean(const BrickSet& a, const BrickSet& b, BoolOp op) {
    switch (op) {
        case BoolOp::Union: return set_union(a, b);
        case BoolOp::Intersect: return set_intersect(a, b);
        case BoolOp::Minus: return set_minus(a, b);
    }
    throw std::logic_error("boolean: bad op");
}

bool disjoint(const BrickSet& a, const BrickSet& b) {
    for (const Brick& x : a.bricks())
        for (const Brick& y : b.bricks())
            if (!bricks_disjoint(x, y)) return false;
    return true;
}

bool subset(const BrickSet& a, const BrickSet& b) { return set_intersect(a, b) == a; }

bool tuple_admissible(std::span<const BrickSet> ts) {
    if (ts.empty()) return false;
    BrickSet u = BrickSet::empty(ts[0].dims());
    for (size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].dims() != ts[0].dims()) return false;
        if (!ts[i].is_proper_nonempty()) return false;
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (!disjoint(ts[i], ts[j])) return false;
        u = set_union(u, ts[i]);
    }
    return !u.is_full();
}

bool is_partition(int dims, std::span<const Brick> pieces) {
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j)
            if (!bricks_disjoint(pieces[i], pieces[j])) return false;
    std::vector<Brick> all(pieces.begin(), pieces.end());
    return BrickSet(dims, std::move(all)).is_full();
}

int min_partition_size(int dims, std::span<const BrickSet> sets) {
    int total = 0;
    BrickSet u = BrickSet::empty(dims);
    for (const BrickSet& s : sets) {
        total += static_cast<int>(s.size());
        u = set_union(u, s);
    }
    return total + static_cast<int>(complement(u).size());
}

BrickPattern complete_to_partition(int dims, std::span<const BrickSet> sets, int k) {
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (!disjoint(sets[i], sets[j]))
                throw std::invalid_argument("complete_to_partition: sets overlap");

    BrickPattern pat;
    pat.dims = dims;
    BrickSet u = BrickSet::empty(dims);
    for (size_t i = 0; i < sets.size(); ++i) {
        for (const Brick& b : sets[i].bricks()) {
            pat.pieces.push_back(b);
            pat.owner.push_back(static_cast<int>(i));
        }
        u = set_union(u, sets[i]);
    }
    const BrickSet rest = complement(u);
    for (const Brick& b : rest.bricks()) {
        pat.pieces.push_back(b);
        pat.owner.push_back(-1);
    }

    int minsize = static_cast<int>(pat.pieces.size());
    if (k < minsize)
        throw std::invalid_argument("complete_to_partition: k below minimum " + std::to_string(minsize));

    while (static_cast<int>(pat.pieces.size()) < k) {
        size_t first = 0;
        for (size_t i = 1; i < pat.pieces.size(); ++i)
            if (pat.pieces[i] < pat.pieces[first]) first = i;
        Brick parent = pat.pieces[first];
        int own = pat.owner[first];
        // split along the least-constrained coordinate, smallest index first
        int s_best = 0;
        for (int s = 1; s < dims; ++s)
            if (parent.psi[s].size() < parent.psi[s_best].size()) s_best = s;
        auto [lo, hi] = brick_split(parent, s_best);
        pat.pieces.erase(pat.pieces.begin() + first);
        pat.owner.erase(pat.owner.begin() + first);
        pat.pieces.push_back(lo);
        pat.owner.push_back(own);
        pat.pieces.push_back(hi);
        pat.owner.push_back(own);
    }

    std::vector<size_t> idx(pat.pieces.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return pat.pieces[x] < pat.pieces[y]; });
    BrickPattern sorted;
    sorted.dims = dims;
    for (size_t i : idx) {
        sorted.pieces.push_back(pat.pieces[i]);
        sorted.owner.push_back(pat.owner[i]);
    }
    return sorted;
}

} // namespace ggt::cantor
