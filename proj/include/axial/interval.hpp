#pragma once

// Intervals [1,w] in groups of isometries: Hurwitz action, windowed interval
// posets built by bidirectional BFS with certified lengths, meets, joins and
// bowties.

#include "axial/coxeter.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace axial {

using Word = std::vector<Isometry>;
using LengthOracle = std::function<int(const Isometry&)>;
using LetterTest = std::function<bool(const Isometry&)>;

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = w.size();
        for (const auto& g : w) h ^= g.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

inline Isometry evaluate(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cannot evaluate an empty word without a dimension");
    return product(w, w.front().dim());
}

class ClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Positions are 1-based: position i acts on letters i and i+1.
// forward: (a, b) -> (a b a^-1, a); backward: (a, b) -> (b, b^-1 a b).
inline Word hurwitz_move(const Word& w, int i, bool forward = true, const LetterTest& in_closure = nullptr) {
    if (i < 1 || i >= static_cast<int>(w.size())) throw std::out_of_range("Hurwitz position out of range");
    Word r = w;
    const Isometry& a = w[i - 1];
    const Isometry& b = w[i];
    if (forward) {
        r[i - 1] = conjugate(a, b);
        r[i] = a;
    } else {
        r[i - 1] = b;
        r[i] = conjugate(inverse(b), a);
    }
    if (in_closure && (!in_closure(r[i - 1]) || !in_closure(r[i])))
        throw ClosureError("Hurwitz move leaves the generator set");
    return r;
}

struct OrbitResult {
    std::vector<Word> words;  // sorted lexicographically
    bool complete = true;
};

inline bool word_less(const Word& x, const Word& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

inline OrbitResult hurwitz_orbit(const Word& start, std::size_t max_states, const LetterTest& in_closure = nullptr) {
    if (max_states == 0) throw std::invalid_argument("orbit budget must be positive");
    std::unordered_set<Word, WordHash> seen{start};
    std::vector<Word> queue{start};
    OrbitResult res;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Word cur = queue[head];
        for (int i = 1; i < static_cast<int>(cur.size()); ++i)
            for (bool fwd : {true, false}) {
                Word nxt = hurwitz_move(cur, i, fwd, in_closure);
                if (seen.count(nxt)) continue;
                if (seen.size() >= max_states) {
                    res.complete = false;
                    continue;
                }
                seen.insert(nxt);
                queue.push_back(std::move(nxt));
            }
    }
    res.words = std::move(queue);
    std::sort(res.words.begin(), res.words.end(), word_less);
    return res;
}

// Relations ab = ca seen on single Hurwitz moves inside an orbit.
struct DualPresentation {
    std::vector<Isometry> generators;        // sorted
    std::vector<std::array<int, 3>> relations;  // (a, b, c) with a b = c a
    bool complete = true;

    int index_of(const Isometry& g) const {
        auto it = std::lower_bound(generators.begin(), generators.end(), g);
        if (it == generators.end() || !(*it == g)) return -1;
        return static_cast<int>(it - generators.begin());
    }
};

inline DualPresentation extract_dual_presentation(const OrbitResult& orbit) {
    DualPresentation p;
    p.complete = orbit.complete;
    std::set<Isometry> gens;
    for (const auto& w : orbit.words)
        for (const auto& g : w) gens.insert(g);
    p.generators.assign(gens.begin(), gens.end());
    std::set<std::array<int, 3>> rels;
    for (const auto& w : orbit.words)
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            const Isometry& a = w[i];
            const Isometry& b = w[i + 1];
            Isometry c = conjugate(a, b);
            int ic = p.index_of(c);
            if (ic < 0) continue;  // conjugate outside the observed letters (partial orbit)
            rels.insert({p.index_of(a), p.index_of(b), ic});
        }
    p.relations.assign(rels.begin(), rels.end());
    return p;
}

// ---- interval posets --------------------------------------------------------

struct Generator {
    Isometry g;
    std::string label;
    std::optional<AffineReflection> refl;
    QVector coroot;
};

inline std::string reflection_label(const AffineReflection& r) {
    std::string s = format_root(r.root);
    if (r.offset.is_zero()) return s;
    s.pop_back();
    return s + ";" + r.offset.str() + "}";
}

inline Generator reflection_generator(const AffineReflection& r) {
    return {r.isometry(), reflection_label(r), r, coroot_of(r.root)};
}

inline Isometry times_generator(const Isometry& u, const Generator& g) {
    if (g.refl) return times_reflection(u, g.refl->root, g.coroot, g.refl->offset);
    return u * g.g;
}

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend Bits operator&(const Bits& a, const Bits& b) {
        Bits r(a.n_);
        for (std::size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] & b.w_[i];
        return r;
    }
    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < w_.size(); ++k) {
            uint64_t x = w_[k];
            while (x) {
                out.push_back(static_cast<int>(k * 64 + static_cast<std::size_t>(__builtin_ctzll(x))));
                x &= x - 1;
            }
        }
        return out;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct Edge {
    int to;
    int gen;
};

struct IntervalPoset {
    Isometry top;
    int length = 0;
    std::vector<Generator> gens;
    LengthOracle oracle;
    std::vector<Isometry> nodes;  // sorted by (rank, isometry)
    std::vector<int> rank;
    std::vector<std::vector<Edge>> up;
    std::vector<std::vector<Edge>> down;
    std::unordered_map<Isometry, int, IsometryHash> index;
    std::vector<Isometry> rejected;  // reached from one end only
    // Filled by compute_closure.
    std::vector<Bits> below;
    std::vector<Bits> above;
    // True when the poset is the whole interval rather than a window.
    bool complete = false;

    int size() const { return static_cast<int>(nodes.size()); }
    int bottom() const { return 0; }
    int top_id() const { return size() - 1; }
    std::optional<int> find(const Isometry& g) const {
        auto it = index.find(g);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    std::vector<int> rank_sizes() const {
        std::vector<int> out(static_cast<std::size_t>(length + 1), 0);
        for (int r : rank) ++out[r];
        return out;
    }
    bool has_closure() const { return !below.empty(); }
    bool leq(int u, int v) const {
        if (!has_closure()) throw std::logic_error("closure not computed");
        return below[v].test(static_cast<std::size_t>(u));
    }
    bool exact_leq(const Isometry& u, const Isometry& v) const {
        return oracle(u) + oracle(inverse(u) * v) == oracle(v);
    }
    long long edge_count() const {
        long long e = 0;
        for (const auto& x : up) e += static_cast<long long>(x.size());
        return e;
    }
};

struct BuildOptions {
    int workers = 1;
    std::size_t max_nodes = 2000000;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// One BFS level: candidates u*g (or u*g^-1) satisfying both length conditions.
inline std::vector<Isometry> expand_level(const std::vector<Isometry>& frontier, const std::vector<Generator>& gens,
                                          const std::vector<Isometry>& gen_inverses, bool backward, int want,
                                          const Isometry& top, int total, const LengthOracle& oracle, int workers) {
    auto work = [&](std::size_t lo, std::size_t hi, std::vector<Isometry>& out) {
        std::unordered_set<Isometry, IsometryHash> seen;
        for (std::size_t f = lo; f < hi; ++f)
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                Isometry v = backward ? (gens[gi].refl ? times_generator(frontier[f], gens[gi]) : frontier[f] * gen_inverses[gi])
                                      : times_generator(frontier[f], gens[gi]);
                if (!seen.insert(v).second) continue;
                if (oracle(v) != want) continue;
                if (oracle(inverse(v) * top) != total - want) continue;
                out.push_back(std::move(v));
            }
    };
    std::vector<std::vector<Isometry>> parts(static_cast<std::size_t>(std::max(1, workers)));
    if (workers <= 1 || frontier.size() < 8) {
        work(0, frontier.size(), parts[0]);
    } else {
        std::vector<std::thread> ts;
        std::size_t chunk = (frontier.size() + parts.size() - 1) / parts.size();
        for (std::size_t t = 0; t < parts.size(); ++t) {
            std::size_t lo = t * chunk, hi = std::min(frontier.size(), lo + chunk);
            if (lo >= hi) break;
            ts.emplace_back(work, lo, hi, std::ref(parts[t]));
        }
        for (auto& t : ts) t.join();
    }
    std::vector<Isometry> all;
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

}  // namespace detail

// Nodes are admitted only when the forward depth from 1 equals oracle(u) and
// the backward depth from top equals oracle(u^-1 top).
inline IntervalPoset build_interval(const Isometry& top, const std::vector<Generator>& gens, const LengthOracle& oracle,
                                    const BuildOptions& opt = {}) {
    if (gens.empty()) throw std::invalid_argument("empty generator set");
    IntervalPoset p;
    p.top = top;
    p.gens = gens;
    p.oracle = oracle;
    p.length = oracle(top);
    int n = top.dim();
    int L = p.length;
    std::vector<Isometry> inv;
    for (const auto& g : gens) inv.push_back(inverse(g.g));

    std::vector<std::vector<Isometry>> fwd(static_cast<std::size_t>(L + 1)), bwd(static_cast<std::size_t>(L + 1));
    fwd[0] = {Isometry::identity(n)};
    bwd[0] = {top};
    std::size_t total = 0;
    for (int d = 1; d <= L; ++d) {
        fwd[d] = detail::expand_level(fwd[d - 1], gens, inv, false, d, top, L, oracle, opt.workers);
        bwd[d] = detail::expand_level(bwd[d - 1], gens, inv, true, L - d, top, L, oracle, opt.workers);
        total += fwd[d].size() + bwd[d].size();
        if (total > opt.max_nodes) throw BudgetExceeded("interval exceeds node budget");
    }
    for (int d = 0; d <= L; ++d) {
        const auto& f = fwd[d];
        const auto& b = bwd[L - d];
        std::vector<Isometry> both;
        std::set_intersection(f.begin(), f.end(), b.begin(), b.end(), std::back_inserter(both));
        std::set_symmetric_difference(f.begin(), f.end(), b.begin(), b.end(), std::back_inserter(p.rejected));
        for (auto& g : both) {
            p.index.emplace(g, static_cast<int>(p.nodes.size()));
            p.nodes.push_back(std::move(g));
            p.rank.push_back(d);
        }
    }
    p.up.assign(p.nodes.size(), {});
    p.down.assign(p.nodes.size(), {});
    for (int u = 0; u < p.size(); ++u) {
        if (p.rank[u] == L) continue;
        for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
            auto it = p.index.find(times_generator(p.nodes[u], gens[gi]));
            if (it == p.index.end() || p.rank[it->second] != p.rank[u] + 1) continue;
            p.up[u].push_back({it->second, gi});
            p.down[it->second].push_back({u, gi});
        }
    }
    return p;
}

inline void compute_closure(IntervalPoset& p, std::size_t max_nodes = 40000) {
    if (p.has_closure()) return;
    if (static_cast<std::size_t>(p.size()) > max_nodes) throw BudgetExceeded("poset too large for closure");
    std::size_t n = p.nodes.size();
    p.below.assign(n, Bits(n));
    p.above.assign(n, Bits(n));
    for (std::size_t v = 0; v < n; ++v) {
        p.below[v].set(v);
        for (const auto& e : p.down[v]) p.below[v] |= p.below[e.to];
    }
    for (std::size_t v = n; v-- > 0;) {
        p.above[v].set(v);
        for (const auto& e : p.up[v]) p.above[v] |= p.above[e.to];
    }
}

// Labels along some Hasse path from u up to v (u <= v).
inline std::vector<int> hasse_path(const IntervalPoset& p, int u, int v) {
    std::vector<int> labels;
    int cur = u;
    while (cur != v) {
        bool moved = false;
        for (const auto& e : p.up[cur])
            if (p.leq(e.to, v)) {
                labels.push_back(e.gen);
                cur = e.to;
                moved = true;
                break;
            }
        if (!moved) throw std::logic_error("no Hasse path");
    }
    return labels;
}

inline Word chain_word(const IntervalPoset& p, const std::vector<int>& through) {
    Word w;
    int cur = p.bottom();
    std::vector<int> stops = through;
    stops.push_back(p.top_id());
    for (int s : stops) {
        for (int g : hasse_path(p, cur, s)) w.push_back(p.gens[g].g);
        cur = s;
    }
    return w;
}

// Maximal elements of a down-closed candidate set, scanning by decreasing rank.
inline std::vector<int> maximal_elements(const IntervalPoset& p, const std::vector<int>& set) {
    std::vector<int> out;
    for (auto it = set.rbegin(); it != set.rend(); ++it) {
        bool covered = std::any_of(out.begin(), out.end(), [&](int m) { return p.leq(*it, m); });
        if (!covered) out.push_back(*it);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> minimal_elements(const IntervalPoset& p, const std::vector<int>& set) {
    std::vector<int> out;
    for (int x : set) {
        bool covered = std::any_of(out.begin(), out.end(), [&](int m) { return p.leq(m, x); });
        if (!covered) out.push_back(x);
    }
    return out;
}

enum class BoundStatus { unique, none, not_determined };

inline const char* bound_status_name(BoundStatus s) {
    switch (s) {
        case BoundStatus::unique: return "unique";
        case BoundStatus::none: return "none";
        default: return "not-determined";
    }
}

struct BoundResult {
    BoundStatus status;
    int node = -1;                // -1 when the bound lies outside the window
    std::vector<int> candidates;  // maximal lower (minimal upper) bounds seen in the window
    std::optional<Isometry> element;
};

inline BoundResult node_bound(const IntervalPoset& p, BoundStatus s, int node, std::vector<int> cand) {
    BoundResult r{s, node, std::move(cand), std::nullopt};
    if (node >= 0) r.element = p.nodes[node];
    return r;
}

// Exact bounds from outside the poset, when the window might hide some.
using BoundOracle = std::function<std::optional<BoundResult>(const IntervalPoset&, int, int)>;

inline BoundResult poset_meet(const IntervalPoset& p, int u, int v, const BoundOracle& exact = nullptr) {
    if (p.leq(u, v)) return node_bound(p, BoundStatus::unique, u, {u});
    if (p.leq(v, u)) return node_bound(p, BoundStatus::unique, v, {v});
    auto cand = maximal_elements(p, (p.below[u] & p.below[v]).members());
    if (p.complete) {
        if (cand.size() == 1) return node_bound(p, BoundStatus::unique, cand[0], cand);
        return node_bound(p, BoundStatus::none, -1, cand);
    }
    if (exact)
        if (auto r = exact(p, u, v)) return *r;
    return node_bound(p, BoundStatus::not_determined, -1, cand);
}

inline BoundResult poset_join(const IntervalPoset& p, int u, int v, const BoundOracle& exact = nullptr) {
    if (p.leq(u, v)) return node_bound(p, BoundStatus::unique, v, {v});
    if (p.leq(v, u)) return node_bound(p, BoundStatus::unique, u, {u});
    auto cand = minimal_elements(p, (p.above[u] & p.above[v]).members());
    if (p.complete) {
        if (cand.size() == 1) return node_bound(p, BoundStatus::unique, cand[0], cand);
        return node_bound(p, BoundStatus::none, -1, cand);
    }
    if (exact)
        if (auto r = exact(p, u, v)) return *r;
    return node_bound(p, BoundStatus::not_determined, -1, cand);
}

// ---- bowties ----------------------------------------------------------------

struct BowtieQuad {
    Isometry a, b, c, d;
};

// Maximal chains through (c,a), (d,a), (c,b), (d,b) in that order.
struct BowtieWitness {
    BowtieQuad q;
    std::array<Word, 4> words;
};

struct CertificateCheck {
    std::string name;
    bool ok;
    std::string detail;
};

struct BowtieCertificate {
    BowtieQuad q;
    LinearSubspace U;
    std::array<Word, 4> words;
    std::vector<CertificateCheck> checks;
    bool passed = false;
    std::string failed;  // name of the first failing check
};

struct WordChecker {
    LetterTest is_letter;
    LengthOracle length;
};

inline BowtieCertificate certify_bowtie(const BowtieWitness& wit, const Isometry& top, const WordChecker& chk) {
    BowtieCertificate cert;
    cert.q = wit.q;
    cert.words = wit.words;
    const auto& q = wit.q;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        cert.checks.push_back({name, ok, detail});
        if (!ok && cert.failed.empty()) cert.failed = name;
    };

    std::array<const Isometry*, 4> all{&q.a, &q.b, &q.c, &q.d};
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*all[i] == *all[j]) distinct = false;
    add("distinct", distinct);

    auto ba = basic_invariants(q.a), bb = basic_invariants(q.b);
    auto bc = basic_invariants(q.c), bd = basic_invariants(q.d);
    cert.U = ba.mov.directions();
    bool hyp = ba.kind == Kind::hyperbolic && bb.kind == Kind::hyperbolic && bb.mov.directions() == cert.U && !(ba.mov == bb.mov);
    add("hyperbolic-pattern", hyp, "Dir(Mov a) = " + cert.U.str());
    LinearSubspace Uperp = cert.U.orthogonal_complement();
    bool ell = bc.kind == Kind::elliptic && bd.kind == Kind::elliptic && bc.min.directions() == Uperp &&
               bd.min.directions() == Uperp && !(bc.min == bd.min);
    add("elliptic-pattern", ell);

    int L = chk.length(top);
    bool words_ok = true;
    std::string why;
    for (std::size_t k = 0; k < 4; ++k) {
        const Word& w = wit.words[k];
        if (static_cast<int>(w.size()) != L) {
            words_ok = false;
            why = "word " + std::to_string(k) + " has length " + std::to_string(w.size());
            break;
        }
        if (!std::all_of(w.begin(), w.end(), chk.is_letter)) {
            words_ok = false;
            why = "word " + std::to_string(k) + " has a letter outside the generator set";
            break;
        }
        if (!(product(w, top.dim()) == top)) {
            words_ok = false;
            why = "word " + std::to_string(k) + " does not evaluate to the top";
            break;
        }
    }
    add("minimal-words", words_ok, why);

    // Prefixes of a minimal word lie in [1,w] with length equal to their position.
    auto prefix_pos = [&](const Word& w, const Isometry& x) {
        Isometry cur = Isometry::identity(top.dim());
        for (std::size_t i = 0; i <= w.size(); ++i) {
            if (cur == x) return static_cast<int>(i);
            if (i < w.size()) cur = cur * w[i];
        }
        return -1;
    };
    bool order_ok = words_ok;
    const std::array<std::pair<const Isometry*, const Isometry*>, 4> pairs{
        {{&q.c, &q.a}, {&q.d, &q.a}, {&q.c, &q.b}, {&q.d, &q.b}}};
    for (std::size_t k = 0; k < 4 && order_ok; ++k) {
        int pl = prefix_pos(wit.words[k], *pairs[k].first);
        int ph = prefix_pos(wit.words[k], *pairs[k].second);
        if (pl < 0 || ph < 0 || pl >= ph) order_ok = false;
    }
    add("lower-below-upper", order_ok);
    cert.passed = cert.failed.empty();
    return cert;
}

struct BowtieSearch {
    std::vector<BowtieCertificate> certified;
    std::vector<BowtieCertificate> unconfirmed;
    std::size_t candidates = 0;
    bool truncated = false;
};

inline std::array<Word, 4> bowtie_words(const IntervalPoset& p, int a, int b, int c, int d) {
    return {chain_word(p, {c, a}), chain_word(p, {d, a}), chain_word(p, {c, b}), chain_word(p, {d, b})};
}

// Quadruples (a,b:c,d) of the windowed Hasse order; each is re-verified by
// certify_bowtie before it counts as certified.
inline BowtieSearch find_bowties(IntervalPoset& p, const WordChecker& chk, std::size_t max_candidates = 100000) {
    compute_closure(p);
    BowtieSearch out;
    int n = p.size();
    for (int c = 1; c < n - 1; ++c)
        for (int d = c + 1; d < n - 1; ++d) {
            if (p.leq(c, d) || p.leq(d, c)) continue;
            auto mub = minimal_elements(p, (p.above[c] & p.above[d]).members());
            if (mub.size() < 2) continue;
            for (std::size_t i = 0; i < mub.size(); ++i)
                for (std::size_t j = i + 1; j < mub.size(); ++j) {
                    int a = mub[i], b = mub[j];
                    auto mlb = maximal_elements(p, (p.below[a] & p.below[b]).members());
                    if (!std::binary_search(mlb.begin(), mlb.end(), c) || !std::binary_search(mlb.begin(), mlb.end(), d)) continue;
                    if (++out.candidates > max_candidates) {
                        out.truncated = true;
                        return out;
                    }
                    BowtieWitness wit{{p.nodes[a], p.nodes[b], p.nodes[c], p.nodes[d]}, bowtie_words(p, a, b, c, d)};
                    auto cert = certify_bowtie(wit, p.top, chk);
                    (cert.passed ? out.certified : out.unconfirmed).push_back(std::move(cert));
                }
        }
    return out;
}

inline WordChecker euclidean_checker(const CoxeterContext& ctx) {
    const RootSystem* phi = &ctx.phi;
    return {[phi](const Isometry& g) { return as_group_reflection(g, *phi).has_value(); },
            [](const Isometry& g) { return reflection_length(g); }};
}

// ---- euclidean windows --------------------------------------------------------

// Reflections of the group whose hyperplane contains Fix(u), for elliptic u.
inline std::vector<AffineReflection> reflections_containing(const AffineSubspace& fix, const RootSystem& phi) {
    std::vector<AffineReflection> out;
    for (const auto& a : phi.positive_roots()) {
        bool perp = std::all_of(fix.directions().basis().begin(), fix.directions().basis().end(),
                                [&](const QVector& d) { return dot(d, a).is_zero(); });
        if (!perp) continue;
        Rational i = dot(fix.basepoint(), a);
        if (i.is_integer()) out.push_back({a, i});
    }
    return out;
}

// [1,x] for elliptic x: every letter of a minimal factorization fixes Fix(x),
// so the finite set of such reflections generates the whole interval.
inline std::optional<std::vector<Isometry>> elliptic_lower_interval(const Isometry& x, const RootSystem& phi) {
    auto bi = basic_invariants(x);
    if (bi.kind != Kind::elliptic) return std::nullopt;
    if (x.is_identity()) return std::vector<Isometry>{x};
    std::vector<Generator> gens;
    for (const auto& r : reflections_containing(bi.min, phi)) gens.push_back(reflection_generator(r));
    auto q = build_interval(x, gens, [](const Isometry& g) { return reflection_length(g); });
    return q.nodes;
}

inline std::vector<Isometry> exact_maximal(const std::vector<Isometry>& xs) {
    std::vector<Isometry> out;
    for (const auto& x : xs) {
        bool dominated = std::any_of(xs.begin(), xs.end(), [&](const Isometry& y) {
            return !(y == x) && interval_order_RE(x, y, y);
        });
        if (!dominated) out.push_back(x);
    }
    return out;
}

// Meets in a euclidean window. An elliptic side has a finite lower interval
// that is enumerated exactly; two hyperbolic elements whose move-set spans
// share no root have only the identity below both.
inline BoundOracle euclidean_meet_oracle(const CoxeterContext& ctx) {
    const RootSystem* phi = &ctx.phi;
    return [phi](const IntervalPoset& p, int u, int v) -> std::optional<BoundResult> {
        for (int side : {u, v}) {
            int other = side == u ? v : u;
            auto lower = elliptic_lower_interval(p.nodes[side], *phi);
            if (!lower) continue;
            std::vector<Isometry> lb;
            for (const auto& x : *lower)
                if (p.exact_leq(x, p.nodes[other])) lb.push_back(x);
            auto mx = exact_maximal(lb);
            BoundResult r{BoundStatus::none, -1, {}, std::nullopt};
            for (const auto& m : mx) r.candidates.push_back(p.find(m).value_or(-1));
            if (mx.size() == 1) {
                r.status = BoundStatus::unique;
                r.node = p.find(mx[0]).value_or(-1);
                r.element = mx[0];
            }
            return r;
        }
        auto bx = basic_invariants(p.nodes[u]), by = basic_invariants(p.nodes[v]);
        auto common = subspace_intersection(bx.mov.span(), by.mov.span());
        for (const auto& a : phi->roots)
            if (common.contains(a)) return std::nullopt;
        return node_bound(p, BoundStatus::unique, p.bottom(), {p.bottom()});
    };
}

// Joins through the anti-isomorphism x -> x^-1 w of [1,w] onto itself:
// upper bounds of u, v correspond to lower bounds of u^-1 w, v^-1 w.
inline BoundOracle euclidean_join_oracle(const CoxeterContext& ctx) {
    const RootSystem* phi = &ctx.phi;
    return [phi](const IntervalPoset& p, int u, int v) -> std::optional<BoundResult> {
        Isometry cu = inverse(p.nodes[u]) * p.top, cv = inverse(p.nodes[v]) * p.top;
        for (const auto& [side, other] : {std::pair{cu, cv}, std::pair{cv, cu}}) {
            auto lower = elliptic_lower_interval(side, *phi);
            if (!lower) continue;
            std::vector<Isometry> lb;
            for (const auto& x : *lower)
                if (p.exact_leq(x, other)) lb.push_back(x);
            auto mx = exact_maximal(lb);
            BoundResult r{BoundStatus::none, -1, {}, std::nullopt};
            for (const auto& m : mx) r.candidates.push_back(p.find(p.top * inverse(m)).value_or(-1));
            if (mx.size() == 1) {
                r.status = BoundStatus::unique;
                r.element = p.top * inverse(mx[0]);
                r.node = p.find(*r.element).value_or(-1);
            }
            return r;
        }
        auto bx = basic_invariants(cu), by = basic_invariants(cv);
        auto common = subspace_intersection(bx.mov.span(), by.mov.span());
        for (const auto& a : phi->roots)
            if (common.contains(a)) return std::nullopt;
        return node_bound(p, BoundStatus::unique, p.top_id(), {p.top_id()});
    };
}

inline std::vector<Generator> window_generators(const CoxeterContext& ctx, const AxialData& axial) {
    std::vector<Generator> out;
    for (const auto& r : window_reflections(ctx, axial)) {
        Isometry g = r.isometry();
        // Keep only reflections below w.
        if (reflection_length(inverse(g) * ctx.w) != ctx.rank()) continue;
        out.push_back(reflection_generator(r));
    }
    return out;
}

inline IntervalPoset build_interval_window(const CoxeterContext& ctx, const std::vector<Generator>& gens, const BuildOptions& opt = {}) {
    return build_interval(ctx.w, gens, [](const Isometry& g) { return reflection_length(g); }, opt);
}

inline IntervalPoset build_interval_window(const CoxeterContext& ctx, int k, const BuildOptions& opt = {}) {
    auto axial = axial_data(ctx, k);
    return build_interval_window(ctx, window_generators(ctx, axial), opt);
}

}  // namespace axial
