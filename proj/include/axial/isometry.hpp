#pragma once

// Affine euclidean isometries x -> Lx + t with exact entries.
//
// compose(a, b) applies b first. A written product r0 r1 ... rn therefore
// acts with rn first, and product() below follows the same convention.

#include "axial/linalg.hpp"

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace axial {

struct Isometry {
    QMatrix linear;
    QVector translation;

    int dim() const { return linear.rows; }

    static Isometry identity(int n) { return {QMatrix::identity(n), zero_vector(n)}; }
    static Isometry translate(const QVector& v) {
        return {QMatrix::identity(static_cast<int>(v.size())), v};
    }

    QVector apply(const QVector& x) const { return linear * x + translation; }
    QVector apply_linear(const QVector& v) const { return linear * v; }

    bool is_orthogonal() const { return linear.transpose() * linear == QMatrix::identity(dim()); }
    bool is_identity() const { return *this == identity(dim()); }
    bool is_translation() const { return linear == QMatrix::identity(dim()); }

    friend bool operator==(const Isometry&, const Isometry&) = default;

    // Lexicographic on (linear, translation); used for deterministic ordering.
    friend std::strong_ordering operator<=>(const Isometry& a, const Isometry& b) {
        for (std::size_t i = 0; i < a.linear.a.size(); ++i)
            if (auto c = a.linear.a[i] <=> b.linear.a[i]; c != 0) return c;
        for (std::size_t i = 0; i < a.translation.size(); ++i)
            if (auto c = a.translation[i] <=> b.translation[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const { return hash_vector(translation, hash_vector(linear.a)); }
};

inline std::ostream& operator<<(std::ostream& os, const Isometry& g) {
    os << "[";
    for (int i = 0; i < g.dim(); ++i) os << (i ? "; " : "") << to_string(g.linear.row(i));
    return os << " | " << to_string(g.translation) << "]";
}

struct IsometryHash {
    std::size_t operator()(const Isometry& g) const { return g.hash(); }
};

inline Isometry compose(const Isometry& a, const Isometry& b) {
    if (a.dim() != b.dim()) throw DimensionError("compose: ambient dimensions differ");
    return {a.linear * b.linear, a.linear * b.translation + a.translation};
}

inline Isometry operator*(const Isometry& a, const Isometry& b) { return compose(a, b); }

inline Isometry inverse(const Isometry& a) {
    QMatrix lt = a.linear.transpose();
    return {lt, -(lt * a.translation)};
}

inline Isometry conjugate(const Isometry& g, const Isometry& h) { return g * h * inverse(g); }

// Product of a word, leftmost letter written first (rightmost acts first).
inline Isometry product(const std::vector<Isometry>& word, int n) {
    Isometry p = Isometry::identity(n);
    for (const auto& g : word) p = p * g;
    return p;
}

inline QVector coroot_of(const QVector& alpha) {
    Rational nn = dot(alpha, alpha);
    if (nn.is_zero()) throw std::invalid_argument("zero root");
    return (Rational(2) / nn) * alpha;
}

// r(x) = x - (<x,alpha> - i) alpha_vee; fixes the hyperplane <x,alpha> = i.
inline Isometry reflection(const QVector& alpha, const Rational& i) {
    QVector cv = coroot_of(alpha);
    int n = static_cast<int>(alpha.size());
    Isometry r = Isometry::identity(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!cv[a].is_zero() && !alpha[b].is_zero()) r.linear(a, b) -= cv[a] * alpha[b];
    r.translation = i * cv;
    return r;
}

// u * r_{alpha,i} without forming the reflection matrix.
inline Isometry times_reflection(const Isometry& u, const QVector& alpha, const QVector& coroot, const Rational& i) {
    QVector lc = u.linear * coroot;
    Isometry out = u;
    int n = u.dim();
    for (int a = 0; a < n; ++a) {
        if (lc[a].is_zero()) continue;
        for (int b = 0; b < n; ++b)
            if (!alpha[b].is_zero()) out.linear(a, b) -= lc[a] * alpha[b];
        if (!i.is_zero()) out.translation[a] += i * lc[a];
    }
    return out;
}

enum class Kind { elliptic, hyperbolic };

inline const char* kind_name(Kind k) { return k == Kind::elliptic ? "elliptic" : "hyperbolic"; }

struct BasicInvariants {
    Kind kind;
    AffineSubspace mov;  // standard form U + mu inside V
    AffineSubspace min;  // fix set when elliptic
};

inline std::vector<QVector> minus_identity_rows(const Isometry& w) {
    int n = w.dim();
    std::vector<QVector> rows;
    for (int i = 0; i < n; ++i) {
        QVector r = w.linear.row(i);
        r[i] -= 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

inline BasicInvariants basic_invariants(const Isometry& w) {
    int n = w.dim();
    auto m = minus_identity_rows(w);
    std::vector<QVector> cols;
    for (int j = 0; j < n; ++j) {
        QVector c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[i] = m[i][j];
        cols.push_back(std::move(c));
    }
    LinearSubspace u = LinearSubspace::span(cols, n);
    AffineSubspace mov = AffineSubspace::make(w.translation, u);
    Kind kind = mov.is_linear() ? Kind::elliptic : Kind::hyperbolic;
    // Points with w(x) - x = mu: (L - I)x = mu - t.
    auto min = AffineSubspace::solutions(m, mov.basepoint() - w.translation, n);
    return {kind, mov, *min};
}

// Scherk length over all euclidean reflections: dim Mov, plus 2 if hyperbolic.
inline int reflection_length(const Isometry& w) {
    auto m = minus_identity_rows(w);
    int n = w.dim();
    std::vector<QVector> aug = m;
    for (int i = 0; i < n; ++i) aug[i].push_back(w.translation[i]);
    // Column rank of (L - I) equals its row rank; the translation lies in the
    // column space iff appending it as a column keeps the rank.
    int r = rank_of(m);
    int ra = rank_of(aug);
    return ra == r ? r : r + 2;
}

inline Kind kind_of(const Isometry& w) {
    auto m = minus_identity_rows(w);
    std::vector<QVector> aug = m;
    for (int i = 0; i < w.dim(); ++i) aug[i].push_back(w.translation[i]);
    return rank_of(m) == rank_of(aug) ? Kind::elliptic : Kind::hyperbolic;
}

// Elements of the model poset: h^M for a nonlinear move-set M, e^B for a
// fix-set B.
struct ModelElement {
    Kind kind;
    AffineSubspace space;

    static ModelElement hyperbolic(const AffineSubspace& m) {
        if (m.is_linear()) throw std::invalid_argument("hyperbolic model element needs a nonlinear move-set");
        return {Kind::hyperbolic, m};
    }
    static ModelElement elliptic(const AffineSubspace& b) { return {Kind::elliptic, b}; }

    friend bool operator==(const ModelElement&, const ModelElement&) = default;
};

inline ModelElement inv(const Isometry& w) {
    auto bi = basic_invariants(w);
    if (bi.kind == Kind::hyperbolic) return ModelElement::hyperbolic(bi.mov);
    return ModelElement::elliptic(bi.min);
}

inline bool model_leq(const ModelElement& p, const ModelElement& q) {
    if (p.space.ambient_dim() != q.space.ambient_dim()) throw DimensionError("model elements in different spaces");
    if (p.kind == Kind::hyperbolic && q.kind == Kind::hyperbolic) return q.space.contains(p.space);
    if (p.kind == Kind::elliptic && q.kind == Kind::elliptic) return p.space.contains(q.space);
    if (p.kind == Kind::hyperbolic) return false;
    // e^B <= h^M iff span(M)^perp lies in Dir(B).
    return q.space.span().orthogonal_complement().subset_of(p.space.directions());
}

inline bool interval_order_RE(const Isometry& u, const Isometry& v, const Isometry& w) {
    Isometry ui = inverse(u);
    return reflection_length(u) + reflection_length(ui * v) + reflection_length(inverse(v) * w) == reflection_length(w);
}

}  // namespace axial
