#pragma once

// Exact linear and affine algebra over the rationals. Linear subspaces are
// kept in reduced row-echelon form and affine subspaces as (mu, U) with mu
// orthogonal to U, so structural equality is set equality.

#include "axial/rational.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace axial {

using QVector = std::vector<Rational>;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline QVector zero_vector(int n) { return QVector(static_cast<std::size_t>(n)); }

inline QVector unit_vector(int n, int i) {
    QVector v = zero_vector(n);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline QVector make_vector(std::initializer_list<long long> xs) {
    QVector v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

inline void check_same(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw DimensionError("vector lengths differ");
}

inline Rational dot(const QVector& a, const QVector& b) {
    check_same(a, b);
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

inline QVector operator+(const QVector& a, const QVector& b) {
    check_same(a, b);
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVector operator-(const QVector& a, const QVector& b) {
    check_same(a, b);
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVector operator-(const QVector& a) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline QVector operator*(const Rational& c, const QVector& a) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

inline std::string to_string(const QVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

inline std::size_t hash_vector(const QVector& v, std::size_t seed = 0) {
    for (const auto& x : v) seed ^= x.hash() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
}

inline mpz_class to_mpz_integer(const Rational& r) {
    mpq_class q = r.to_mpq();
    return q.get_num();
}

// Primitive integer multiple of v whose first nonzero entry is positive.
inline QVector primitive_integer(const QVector& v) {
    if (is_zero(v)) return v;
    mpz_class l = 1;
    for (const auto& x : v) {
        mpq_class q = x.to_mpq();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& x : v) {
        mpq_class q = x.to_mpq() * l;
        ints.push_back(q.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    int s = 0;
    for (const auto& z : ints)
        if (z != 0) {
            s = sgn(z);
            break;
        }
    QVector out;
    for (auto& z : ints) out.push_back(Rational::from_mpq(mpq_class(z * s / g)));
    return out;
}

// True when a and b are nonzero multiples of each other.
inline bool parallel(const QVector& a, const QVector& b) {
    check_same(a, b);
    if (is_zero(a) || is_zero(b)) return false;
    std::size_t p = 0;
    while (a[p].is_zero()) ++p;
    if (b[p].is_zero()) return false;
    Rational c = b[p] / a[p];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != c * a[i]) return false;
    return true;
}

struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c)) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static QMatrix from_rows(const std::vector<QVector>& rs, int ncols) {
        QMatrix m(static_cast<int>(rs.size()), ncols);
        for (int i = 0; i < m.rows; ++i) {
            if (static_cast<int>(rs[i].size()) != ncols) throw DimensionError("row length mismatch");
            for (int j = 0; j < ncols; ++j) m(i, j) = rs[i][j];
        }
        return m;
    }

    Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }

    QVector row(int i) const { return QVector(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
    QVector col(int j) const {
        QVector v(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
        return v;
    }

    QMatrix transpose() const {
        QMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    QVector operator*(const QVector& v) const {
        if (static_cast<int>(v.size()) != cols) throw DimensionError("matrix-vector size mismatch");
        QVector r(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            Rational s;
            for (int j = 0; j < cols; ++j) {
                const Rational& x = (*this)(i, j);
                if (!x.is_zero() && !v[j].is_zero()) s += x * v[j];
            }
            r[i] = s;
        }
        return r;
    }

    QMatrix operator*(const QMatrix& o) const {
        if (cols != o.rows) throw DimensionError("matrix product size mismatch");
        QMatrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Rational& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.cols; ++j) {
                    const Rational& y = o(k, j);
                    if (!y.is_zero()) r(i, j) += x * y;
                }
            }
        return r;
    }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

// In-place reduction to reduced row-echelon form; the first pivots.size() rows
// are the echelon rows. Columns at or beyond limit are never chosen as pivots.
inline std::vector<int> rref_in_place(std::vector<QVector>& m, int limit = -1) {
    if (m.empty()) return {};
    int cols = static_cast<int>(m[0].size());
    if (limit < 0) limit = cols;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < limit && r < static_cast<int>(m.size()); ++c) {
        int p = -1;
        for (int i = r; i < static_cast<int>(m.size()); ++i)
            if (!m[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rational inv = m[r][c].reciprocal();
        for (int j = c; j < cols; ++j)
            if (!m[r][j].is_zero()) m[r][j] *= inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank_of(std::vector<QVector> rows) {
    if (rows.empty()) return 0;
    return static_cast<int>(rref_in_place(rows).size());
}

class LinearSubspace {
public:
    LinearSubspace() = default;
    explicit LinearSubspace(int ambient) : n_(ambient) {}

    static LinearSubspace span(std::vector<QVector> rows, int ambient) {
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != ambient) throw DimensionError("rref: mismatched row lengths");
        LinearSubspace s(ambient);
        auto piv = rref_in_place(rows);
        rows.resize(piv.size());
        s.basis_ = std::move(rows);
        s.pivots_ = std::move(piv);
        return s;
    }
    static LinearSubspace whole(int ambient) {
        std::vector<QVector> rows;
        for (int i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
        return span(rows, ambient);
    }

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<QVector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    bool is_zero() const { return basis_.empty(); }

    bool contains(const QVector& v) const {
        if (static_cast<int>(v.size()) != n_) throw DimensionError("vector not in ambient space");
        QVector r = v;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const Rational& c = r[pivots_[k]];
            if (c.is_zero()) continue;
            Rational f = c;
            for (int j = 0; j < n_; ++j)
                if (!basis_[k][j].is_zero()) r[j] -= f * basis_[k][j];
        }
        return axial::is_zero(r);
    }

    bool subset_of(const LinearSubspace& o) const {
        if (o.n_ != n_) throw DimensionError("ambient dimensions differ");
        if (dim() > o.dim()) return false;
        return std::all_of(basis_.begin(), basis_.end(), [&](const QVector& b) { return o.contains(b); });
    }

    LinearSubspace orthogonal_complement() const {
        // Null space of the basis matrix, read off the RREF.
        std::vector<QVector> out;
        std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
        for (int p : pivots_) is_pivot[p] = true;
        for (int f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            QVector v = zero_vector(n_);
            v[f] = 1;
            for (std::size_t k = 0; k < basis_.size(); ++k) v[pivots_[k]] = -basis_[k][f];
            out.push_back(std::move(v));
        }
        return span(out, n_);
    }

    // Orthogonal projection of v onto this subspace.
    QVector project(const QVector& v) const;

    friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_);
        for (const auto& b : basis_) h = hash_vector(b, h);
        return h;
    }

    std::string str() const {
        std::string s = "span{";
        for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? "," : "") + to_string(basis_[i]);
        return s + "}";
    }

private:
    int n_ = 0;
    std::vector<QVector> basis_;
    std::vector<int> pivots_;
};

inline LinearSubspace rref(const std::vector<QVector>& rows, int ambient) { return LinearSubspace::span(rows, ambient); }

inline LinearSubspace subspace_sum(const LinearSubspace& a, const LinearSubspace& b) {
    std::vector<QVector> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return LinearSubspace::span(rows, a.ambient_dim());
}

inline LinearSubspace subspace_intersection(const LinearSubspace& a, const LinearSubspace& b) {
    return subspace_sum(a.orthogonal_complement(), b.orthogonal_complement()).orthogonal_complement();
}

// Solution set of M x = rhs as (particular solution, null space), or nothing.
struct LinearSolution {
    QVector particular;
    LinearSubspace kernel;
};

inline std::optional<LinearSolution> solve_linear(const std::vector<QVector>& m, const QVector& rhs, int ncols) {
    if (m.size() != rhs.size()) throw DimensionError("solve: row count mismatch");
    std::vector<QVector> aug;
    aug.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (static_cast<int>(m[i].size()) != ncols) throw DimensionError("solve: row length mismatch");
        QVector r = m[i];
        r.push_back(rhs[i]);
        aug.push_back(std::move(r));
    }
    auto piv = rref_in_place(aug, ncols);
    for (std::size_t i = piv.size(); i < aug.size(); ++i)
        if (!aug[i][ncols].is_zero()) return std::nullopt;
    QVector x = zero_vector(ncols);
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][ncols];
    std::vector<QVector> rows;
    for (std::size_t k = 0; k < piv.size(); ++k) rows.emplace_back(aug[k].begin(), aug[k].begin() + ncols);
    LinearSubspace rowspace = LinearSubspace::span(rows, ncols);
    return LinearSolution{x, rowspace.orthogonal_complement()};
}

inline QVector LinearSubspace::project(const QVector& v) const {
    if (basis_.empty()) return zero_vector(n_);
    // p = sum c_k b_k with <v - p, b_j> = 0 for all j.
    std::size_t d = basis_.size();
    std::vector<QVector> gram(d, QVector(d));
    QVector rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) gram[i][j] = dot(basis_[i], basis_[j]);
        rhs[i] = dot(basis_[i], v);
    }
    auto sol = solve_linear(gram, rhs, static_cast<int>(d));
    QVector p = zero_vector(n_);
    for (std::size_t k = 0; k < d; ++k) p = p + sol->particular[k] * basis_[k];
    return p;
}

class AffineSubspace {
public:
    AffineSubspace() = default;

    static AffineSubspace make(const QVector& point, const LinearSubspace& dirs) {
        if (static_cast<int>(point.size()) != dirs.ambient_dim()) throw DimensionError("point not in ambient space");
        AffineSubspace s;
        s.dir_ = dirs;
        s.base_ = point - dirs.project(point);
        return s;
    }
    static AffineSubspace point(const QVector& p) { return make(p, LinearSubspace(static_cast<int>(p.size()))); }
    static AffineSubspace whole(int n) { return make(zero_vector(n), LinearSubspace::whole(n)); }
    static AffineSubspace linear(const LinearSubspace& u) { return make(zero_vector(u.ambient_dim()), u); }
    // Points p + t*d for the given direction vectors.
    static AffineSubspace parametric(const QVector& p, const std::vector<QVector>& dirs) {
        return make(p, LinearSubspace::span(dirs, static_cast<int>(p.size())));
    }
    // Solution set of M x = rhs, or nothing when inconsistent.
    static std::optional<AffineSubspace> solutions(const std::vector<QVector>& m, const QVector& rhs, int n) {
        auto sol = solve_linear(m, rhs, n);
        if (!sol) return std::nullopt;
        return make(sol->particular, sol->kernel);
    }
    // The hyperplane <x, a> = c.
    static AffineSubspace hyperplane(const QVector& a, const Rational& c) {
        return *solutions({a}, {c}, static_cast<int>(a.size()));
    }

    int ambient_dim() const { return dir_.ambient_dim(); }
    int dim() const { return dir_.dim(); }
    const QVector& basepoint() const { return base_; }
    const LinearSubspace& directions() const { return dir_; }
    bool is_linear() const { return axial::is_zero(base_); }

    // Rows N and values c with the subspace equal to {x : N x = c}.
    std::pair<std::vector<QVector>, QVector> equations() const {
        auto normals = dir_.orthogonal_complement().basis();
        QVector c;
        for (const auto& nrm : normals) c.push_back(dot(nrm, base_));
        return {normals, c};
    }

    bool contains(const QVector& x) const {
        if (static_cast<int>(x.size()) != ambient_dim()) throw DimensionError("point not in ambient space");
        return dir_.contains(x - base_);
    }
    bool contains(const AffineSubspace& b) const { return b.dir_.subset_of(dir_) && contains(b.base_); }

    // Linear span of the point set.
    LinearSubspace span() const {
        std::vector<QVector> rows = dir_.basis();
        rows.push_back(base_);
        return LinearSubspace::span(rows, ambient_dim());
    }

    AffineSubspace translate(const QVector& v) const { return make(base_ + v, dir_); }

    friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
        return a.dir_ == b.dir_ && a.base_ == b.base_;
    }

    std::size_t hash() const { return hash_vector(base_, dir_.hash()); }

    std::string str() const { return to_string(base_) + "+" + dir_.str(); }

private:
    QVector base_;
    LinearSubspace dir_;
};

inline std::optional<AffineSubspace> intersect_affine(const AffineSubspace& a, const AffineSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimensions differ");
    auto [na, ca] = a.equations();
    auto [nb, cb] = b.equations();
    na.insert(na.end(), nb.begin(), nb.end());
    ca.insert(ca.end(), cb.begin(), cb.end());
    if (na.empty()) return AffineSubspace::whole(a.ambient_dim());
    return AffineSubspace::solutions(na, ca, a.ambient_dim());
}

// Standard form of the affine span of a finite set of points.
inline AffineSubspace affine_hull(const std::vector<QVector>& pts) {
    if (pts.empty()) throw std::invalid_argument("affine hull of no points");
    std::vector<QVector> dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - pts[0]);
    return AffineSubspace::parametric(pts[0], dirs);
}

}  // namespace axial

template <>
struct std::hash<axial::QVector> {
    std::size_t operator()(const axial::QVector& v) const { return axial::hash_vector(v); }
};
