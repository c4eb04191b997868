#pragma once

// Horizontal root systems, the bowtie built from a reducible one, and the
// per-(type, class) verdict.

#include "axial/interval.hpp"

namespace axial {

struct HorizontalSystem {
    std::vector<QVector> roots;  // sorted, both signs
    std::vector<RootComponent> components;

    bool reducible() const { return components.size() >= 2; }
    std::string name() const { return components_name(components); }
};

inline HorizontalSystem horizontal_roots(const CoxeterContext& ctx) {
    HorizontalSystem h;
    for (const auto& a : ctx.phi.roots)
        if (is_horizontal(a, ctx)) h.roots.push_back(a);
    h.components = decompose_irreducible(h.roots, ctx.dim());
    return h;
}

class NotApplicable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Greedy reflection factorization of a linear elliptic element: at each step a
// root reflection that lowers the length by one always exists.
inline Word factor_linear(const Isometry& e, const RootSystem& phi) {
    Word out;
    Isometry u = e;
    int len = reflection_length(u);
    auto pos = phi.positive_roots();
    while (len > 0) {
        bool found = false;
        for (const auto& a : pos) {
            Isometry r = reflection(a, 0);
            Isometry ru = r * u;
            if (reflection_length(ru) == len - 1) {
                out.push_back(r);
                u = ru;
                --len;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no length-reducing root reflection");
    }
    return out;
}

struct ReducibleBowtie {
    QVector theta;
    QVector beta;
    QVector beta_prime;
    BowtieCertificate cert;
};

// w = t L with t the translation by theta-coroot; beta, beta' horizontal from
// different components, neither orthogonal to theta. The quadruple lives in
// [1, t r r'] and is extended to [1,w] by a factorization of r' r L.
inline ReducibleBowtie bowtie_from_reducibility(const CoxeterContext& ctx) {
    auto hs = horizontal_roots(ctx);
    if (!hs.reducible()) throw NotApplicable("criterion not applicable: horizontal root system " + hs.name() + " is irreducible");
    int n = ctx.dim();
    QVector lambda = ctx.w.translation;
    QVector theta = (Rational(2) / dot(lambda, lambda)) * lambda;
    if (!ctx.phi.contains(theta)) throw std::logic_error("translation part of w is not a coroot");
    Isometry t = Isometry::translate(lambda);
    Isometry L{ctx.w.linear, zero_vector(n)};
    Isometry rt1 = reflection(theta, 1), rt0 = reflection(theta, 0);

    auto comp_of = [&](const QVector& a) {
        for (std::size_t i = 0; i < hs.components.size(); ++i)
            if (std::find(hs.components[i].roots.begin(), hs.components[i].roots.end(), a) != hs.components[i].roots.end())
                return static_cast<int>(i);
        return -1;
    };
    std::optional<QVector> beta, beta2;
    int cb = -1;
    for (const auto& a : ctx.phi.positive_roots()) {
        if (!is_horizontal(a, ctx) || dot(a, theta).is_zero()) continue;
        if (!beta) {
            beta = a;
            cb = comp_of(a);
        } else if (comp_of(a) != cb) {
            beta2 = a;
            break;
        }
    }
    if (!beta || !beta2) throw std::logic_error("no horizontal roots from two components pair with theta");
    Isometry r = reflection(*beta, 0), r2 = reflection(*beta2, 0);
    Isometry tinv = inverse(t);
    Isometry e2 = r2 * r * L;
    Word tail = factor_linear(e2, ctx.phi);
    Isometry wp = t * r * r2;

    BowtieQuad q;
    q.c = t * r * tinv;
    q.d = r;
    q.a = t * r;
    q.b = wp * (t * r2 * tinv);
    Isometry rr2 = r * r2;
    std::array<Word, 4> words{Word{q.c, rt1, rt0, r2}, Word{r, r * rt1 * r, r * rt0 * r, r2},
                              Word{q.c, r2 * rt1 * r2, r2 * rt0 * r2, t * r2 * tinv},
                              Word{r, rr2 * rt1 * inverse(rr2), rr2 * rt0 * inverse(rr2), t * r2 * tinv}};
    for (auto& w : words) w.insert(w.end(), tail.begin(), tail.end());

    ReducibleBowtie out;
    out.theta = theta;
    out.beta = *beta;
    out.beta_prime = *beta2;
    out.cert = certify_bowtie({q, words}, ctx.w, euclidean_checker(ctx));
    auto add = [&](const std::string& name, bool ok) {
        out.cert.checks.push_back({name, ok, {}});
        if (!ok && out.cert.failed.empty()) out.cert.failed = name;
    };
    add("t-not-commuting", !(t * r == r * t) && !(t * r2 == r2 * t));
    add("lambda-off-plane", !LinearSubspace::span({*beta, *beta2}, n).contains(lambda));
    out.cert.passed = out.cert.failed.empty();
    return out;
}

// ---- verdicts ---------------------------------------------------------------

enum class Verdict { lattice_consistent, not_a_lattice };

inline const char* verdict_name(Verdict v) { return v == Verdict::not_a_lattice ? "not-a-lattice" : "lattice-consistent"; }

// Non-lattice exactly for B, D, E, F and the bigon classes with q >= 2.
inline Verdict expected_verdict(DynkinType t, CoxeterClass c) {
    switch (t.family) {
        case 'B':
        case 'D':
        case 'E':
        case 'F': return Verdict::not_a_lattice;
        case 'A': return c.q >= 2 ? Verdict::not_a_lattice : Verdict::lattice_consistent;
        default: return Verdict::lattice_consistent;
    }
}

struct WindowEvidence {
    int k = 0;
    int nodes = 0;
    std::vector<int> rank_sizes;
    std::size_t certified = 0;
    std::size_t unconfirmed = 0;
    bool truncated = false;
};

struct GarsideVerdict {
    DynkinType type;
    CoxeterClass cls;
    QVector axis_dir;
    HorizontalSystem horizontal;
    std::optional<ReducibleBowtie> bowtie;
    std::optional<WindowEvidence> evidence;
    std::string note;
    Verdict verdict = Verdict::lattice_consistent;
    Verdict expected = Verdict::lattice_consistent;

    bool reducible() const { return horizontal.reducible(); }
    bool matches() const { return verdict == expected; }
};

struct VerdictOptions {
    int k = 3;
    bool window_evidence = true;
    int workers = 1;
};

inline WindowEvidence window_search(const CoxeterContext& ctx, int k, int workers) {
    auto axial = axial_data(ctx, std::max(k, 1));
    BuildOptions bo;
    bo.workers = workers;
    auto p = build_interval_window(ctx, window_generators(ctx, axial), bo);
    auto bs = find_bowties(p, euclidean_checker(ctx));
    return {k, p.size(), p.rank_sizes(), bs.certified.size(), bs.unconfirmed.size(), bs.truncated};
}

inline GarsideVerdict main_verdict(DynkinType t, CoxeterClass c, const VerdictOptions& opt = {}) {
    GarsideVerdict v;
    v.type = t;
    v.cls = c;
    auto ctx = build_context(t, c);
    v.axis_dir = ctx.axis_dir;
    v.horizontal = horizontal_roots(ctx);
    v.expected = expected_verdict(t, c);
    if (v.horizontal.reducible()) {
        v.bowtie = bowtie_from_reducibility(ctx);
        if (v.bowtie->cert.passed) {
            v.verdict = Verdict::not_a_lattice;
            v.note = "certified bowtie";
        } else {
            v.note = "constructed bowtie failed check " + v.bowtie->cert.failed;
        }
    } else {
        v.note = "criterion not applicable";
        if (opt.window_evidence) {
            v.evidence = window_search(ctx, opt.k, opt.workers);
            if (v.evidence->certified > 0) {
                v.verdict = Verdict::not_a_lattice;
                v.note += "; certified bowtie found in window";
            } else {
                v.note += "; no certified bowtie within window k=" + std::to_string(opt.k);
            }
        }
    }
    return v;
}

// The (type, class) rows of the standard table.
inline std::vector<std::pair<DynkinType, CoxeterClass>> standard_rows() {
    std::vector<std::pair<DynkinType, CoxeterClass>> rows;
    for (int n : {2, 3, 5})
        for (auto c : bigon_classes(n)) rows.push_back({DynkinType::make('A', n), c});
    for (auto [f, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'B', 4}, {'C', 2}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}})
        rows.push_back({DynkinType::make(f, n), CoxeterClass::bipartite()});
    return rows;
}

inline std::vector<std::pair<DynkinType, CoxeterClass>> rows_for(DynkinType t) {
    if (t.family == 'A') {
        std::vector<std::pair<DynkinType, CoxeterClass>> rows;
        for (auto c : bigon_classes(t.rank)) rows.push_back({t, c});
        return rows;
    }
    return {{t, CoxeterClass::bipartite()}};
}

}  // namespace axial
