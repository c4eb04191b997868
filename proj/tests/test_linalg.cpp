#include "axial/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace axial;

namespace {

QVector rv(std::mt19937& rng, int n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    QVector v;
    for (int i = 0; i < n; ++i) v.emplace_back(d(rng));
    return v;
}

}  // namespace

TEST(Linalg, RrefCanonicalBasis) {
    auto s = LinearSubspace::span({make_vector({2, 4, 0}), make_vector({1, 2, 1}), make_vector({3, 6, 1})}, 3);
    EXPECT_EQ(s.dim(), 2);
    EXPECT_EQ(s.basis()[0], make_vector({1, 2, 0}));
    EXPECT_EQ(s.basis()[1], make_vector({0, 0, 1}));
    auto t = LinearSubspace::span({make_vector({1, 2, 1}), make_vector({0, 0, 5})}, 3);
    EXPECT_EQ(s, t);
}

TEST(Linalg, DimensionMismatchThrows) {
    EXPECT_THROW(LinearSubspace::span({make_vector({1, 2})}, 3), DimensionError);
    EXPECT_THROW(dot(make_vector({1}), make_vector({1, 2})), DimensionError);
}

TEST(Linalg, OrthogonalComplement) {
    auto s = LinearSubspace::span({make_vector({1, 1, 1})}, 3);
    auto c = s.orthogonal_complement();
    EXPECT_EQ(c.dim(), 2);
    for (const auto& b : c.basis()) EXPECT_TRUE(dot(b, make_vector({1, 1, 1})).is_zero());
    EXPECT_EQ(c.orthogonal_complement(), s);
}

TEST(Linalg, SolveInconsistent) {
    auto sol = solve_linear({make_vector({1, 1}), make_vector({2, 2})}, make_vector({1, 3}), 2);
    EXPECT_FALSE(sol.has_value());
    auto ok = solve_linear({make_vector({1, 1}), make_vector({2, 2})}, make_vector({1, 2}), 2);
    ASSERT_TRUE(ok.has_value());
    EXPECT_EQ(ok->kernel.dim(), 1);
}

TEST(Linalg, AffineStandardForm) {
    auto a = AffineSubspace::parametric(make_vector({3, 1}), {make_vector({1, 0})});
    EXPECT_EQ(a.basepoint(), make_vector({0, 1}));
    auto b = AffineSubspace::parametric(make_vector({-7, 1}), {make_vector({2, 0})});
    EXPECT_EQ(a, b);
    EXPECT_TRUE(a.contains(make_vector({5, 1})));
    EXPECT_FALSE(a.contains(make_vector({5, 2})));
}

TEST(Linalg, IntersectLines) {
    auto l1 = AffineSubspace::hyperplane(make_vector({1, 0}), 2);
    auto l2 = AffineSubspace::hyperplane(make_vector({1, 1}), 5);
    auto x = intersect_affine(l1, l2);
    ASSERT_TRUE(x);
    EXPECT_EQ(x->dim(), 0);
    EXPECT_EQ(x->basepoint(), make_vector({2, 3}));
    auto par = AffineSubspace::hyperplane(make_vector({2, 0}), 1);
    EXPECT_FALSE(intersect_affine(l1, par).has_value());
}

TEST(Linalg, PrimitiveInteger) {
    QVector v{Rational(-1, 2), Rational(0), Rational(3, 4)};
    EXPECT_EQ(primitive_integer(v), make_vector({2, 0, -3}));
    EXPECT_TRUE(parallel(v, make_vector({-2, 0, 3})));
    EXPECT_FALSE(parallel(v, make_vector({-2, 1, 3})));
}

// rank + nullity = n, and the kernel really is annihilated.
TEST(Linalg, RankNullityRandom) {
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        int r = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 6);
        std::vector<QVector> rows;
        for (int i = 0; i < r; ++i) rows.push_back(rv(rng, n));
        auto sol = solve_linear(rows, zero_vector(r), n);
        ASSERT_TRUE(sol);
        EXPECT_EQ(rank_of(rows) + sol->kernel.dim(), n);
        for (const auto& k : sol->kernel.basis())
            for (const auto& row : rows) EXPECT_TRUE(dot(row, k).is_zero());
    }
}

TEST(Linalg, IntersectionDimensionFormula) {
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<QVector> a, b;
        for (int i = 0; i < static_cast<int>(rng() % 4); ++i) a.push_back(rv(rng, n));
        for (int i = 0; i < static_cast<int>(rng() % 4); ++i) b.push_back(rv(rng, n));
        auto A = LinearSubspace::span(a, n), B = LinearSubspace::span(b, n);
        EXPECT_EQ(subspace_sum(A, B).dim() + subspace_intersection(A, B).dim(), A.dim() + B.dim());
        EXPECT_TRUE(subspace_intersection(A, B).subset_of(A));
    }
}

TEST(Linalg, ProjectionIsOrthogonal) {
    std::mt19937 rng(3);
    for (int it = 0; it < 200; ++it) {
        auto U = LinearSubspace::span({rv(rng, 4), rv(rng, 4)}, 4);
        QVector v = rv(rng, 4, -9, 9);
        QVector p = U.project(v);
        EXPECT_TRUE(U.contains(p));
        for (const auto& b : U.basis()) EXPECT_TRUE(dot(v - p, b).is_zero());
    }
}
