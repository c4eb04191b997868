#include "axial/coxeter.hpp"
#include "axial/verdict.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace axial;

namespace {

CoxeterContext ctx_of(const std::string& t, const std::string& c = "bipartite") {
    return build_context(DynkinType::parse(t), CoxeterClass::parse(c));
}

QVector repeat(int n, long long v) { return QVector(static_cast<std::size_t>(n), Rational(v)); }

int coxeter_number(DynkinType t) {
    switch (t.family) {
        case 'A': return t.rank + 1;
        case 'B':
        case 'C': return 2 * t.rank;
        case 'D': return 2 * t.rank - 2;
        case 'F': return 12;
        case 'G': return 6;
        default: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    }
}

}  // namespace

TEST(Coxeter, ClassValidation) {
    EXPECT_THROW(validate_class(DynkinType::make('A', 3), CoxeterClass::bipartite()), std::invalid_argument);
    EXPECT_THROW(validate_class(DynkinType::make('A', 3), CoxeterClass::make_bigon(1, 3)), std::invalid_argument);
    EXPECT_THROW(validate_class(DynkinType::make('A', 3), CoxeterClass::make_bigon(3, 2)), std::invalid_argument);
    EXPECT_THROW(validate_class(DynkinType::make('B', 3), CoxeterClass::make_bigon(2, 2)), std::invalid_argument);
    EXPECT_NO_THROW(validate_class(DynkinType::make('A', 5), CoxeterClass::make_bigon(4, 2)));
    EXPECT_EQ(CoxeterClass::parse("(3,2)"), CoxeterClass::make_bigon(3, 2));
    EXPECT_EQ(bigon_classes(5).size(), 3u);
}

TEST(Coxeter, DiagramShapes) {
    for (auto [t, c] : standard_rows()) {
        auto s = standard_simple_system(t, c);
        EXPECT_EQ(s.size(), t.rank + 1);
        EXPECT_EQ(s.diagram.is_tree(), t.family != 'A') << t.name();
        int max_m = 0;
        for (const auto& e : s.diagram.edges) max_m = std::max(max_m, e.m);
        int want = t.family == 'G' ? 6 : (t.family == 'B' || t.family == 'C' || t.family == 'F') ? 4 : 3;
        EXPECT_EQ(max_m, want) << t.name();
        EXPECT_EQ(s.entries[s.diagram.white].offset, Rational(1));
    }
}

// Normalised so the white coefficient is 1, the dependency sums to h.
TEST(Coxeter, DependencySumsToCoxeterNumber) {
    for (auto [t, c] : standard_rows()) {
        auto s = standard_simple_system(t, c);
        QVector d = simple_dependency(s);
        Rational sum = 0;
        for (const auto& x : d) sum += x;
        EXPECT_EQ(sum / d[s.diagram.white], Rational(coxeter_number(t))) << t.name();
    }
}

// No hyperplane <x,alpha> = i of the group cuts the fundamental chamber, and
// the simple reflections permute the hyperplane family.
TEST(Coxeter, ChamberIsAnAlcove) {
    for (auto [t, c] : standard_rows()) {
        auto ctx = build_context(t, c);
        auto verts = chamber_vertices(ctx);
        for (const auto& a : ctx.phi.positive_roots())
            for (int i = -3; i <= 3; ++i) {
                bool lo = false, hi = false;
                for (const auto& v : verts) {
                    int sg = (dot(v, a) - Rational(i)).sign();
                    lo = lo || sg < 0;
                    hi = hi || sg > 0;
                }
                EXPECT_FALSE(lo && hi) << t.name() << " " << format_root(a) << " " << i;
            }
        for (int s = 0; s < ctx.simple.size(); ++s) {
            Isometry r = ctx.simple.reflection_at(s);
            EXPECT_TRUE(ctx.is_group_reflection(r)) << t.name();
            for (int u = 0; u < ctx.simple.size(); ++u)
                EXPECT_TRUE(ctx.is_group_reflection(r * ctx.simple.reflection_at(u) * r)) << t.name();
        }
    }
}

TEST(Coxeter, AcyclicOrientationCounts) {
    // A cycle on m vertices has 2^m - 2 acyclic orientations; a tree has 2^edges.
    for (int n : {2, 3, 5}) {
        auto s = standard_simple_system(DynkinType::make('A', n), CoxeterClass::make_bigon(n, 1));
        EXPECT_EQ(count_acyclic_orientations(s.diagram), (1LL << (n + 1)) - 2);
    }
    EXPECT_EQ(count_acyclic_orientations(standard_simple_system(DynkinType::make('A', 5), CoxeterClass::make_bigon(3, 3)).diagram), 62);
    for (const char* t : {"B4", "D4", "E8", "F4", "G2"}) {
        auto s = standard_simple_system(DynkinType::parse(t), CoxeterClass::bipartite());
        EXPECT_EQ(count_acyclic_orientations(s.diagram), 1LL << s.diagram.edges.size()) << t;
    }
}

TEST(Coxeter, OrientationDeterminesElement) {
    // Linear extensions of one orientation give one element.
    auto s = standard_simple_system(DynkinType::make('A', 3), CoxeterClass::make_bigon(2, 2));
    auto order = default_order(s);
    auto o = orientation_from_order(s.diagram, order);
    auto ext = linear_extension(s.diagram, o);
    ASSERT_TRUE(ext);
    EXPECT_EQ(coxeter_element(s, *ext), coxeter_element(s, order));
    EXPECT_EQ(coxeter_element(s, o), coxeter_element(s, order));
}

TEST(Coxeter, SinkSourceFlip) {
    for (auto [t, c] : standard_rows()) {
        auto s = standard_simple_system(t, c);
        auto& d = s.diagram;
        auto order = default_order(s);
        auto o = orientation_from_order(d, order);
        int v = order.front();
        ASSERT_TRUE(is_source(d, o, v)) << t.name();
        auto o2 = sink_source_flip(d, o, v);
        EXPECT_TRUE(is_sink(d, o2, v));
        EXPECT_EQ(sink_source_flip(d, o2, v), o);
        Isometry r = s.reflection_at(v);
        Isometry w = coxeter_element(s, o);
        // Same system, flipped orientation: conjugate element.
        EXPECT_EQ(coxeter_element(s, o2), r * w * r) << t.name();
        // Reflected chamber, flipped orientation: the same element.
        EXPECT_EQ(coxeter_element(flip_system(s, v), o2), w) << t.name();
        int mid = order[order.size() / 2];
        if (!is_source(d, o, mid) && !is_sink(d, o, mid)) {
            EXPECT_THROW(sink_source_flip(d, o, mid), std::invalid_argument);
        }
    }
}

TEST(Coxeter, CoxeterElementHasFullLength) {
    for (auto [t, c] : standard_rows()) {
        auto ctx = build_context(t, c);
        EXPECT_EQ(reflection_length(ctx.w), t.rank + 1);
        EXPECT_EQ(kind_of(ctx.w), Kind::hyperbolic);
        if (ctx.involutions) {
            auto [w0, w1] = *ctx.involutions;
            EXPECT_TRUE((w1 * w1).is_identity());
            EXPECT_TRUE((w0 * w0).is_identity());
            EXPECT_EQ(w1 * w0, ctx.w);
        }
    }
}

TEST(Coxeter, AxesOfClassicalFamilies) {
    for (int n = 2; n <= 6; ++n) EXPECT_TRUE(parallel(ctx_of("C" + std::to_string(n)).axis_dir, repeat(n, 2))) << n;
    for (int n = 3; n <= 6; ++n) {
        QVector v = repeat(n, 2);
        v[n - 1] = 0;
        EXPECT_TRUE(parallel(ctx_of("B" + std::to_string(n)).axis_dir, v)) << n;
    }
    for (int n = 4; n <= 6; ++n) {
        QVector v = repeat(n, 2);
        v[0] = 0;
        v[n - 1] = 0;
        EXPECT_TRUE(parallel(ctx_of("D" + std::to_string(n)).axis_dir, v)) << n;
    }
}

TEST(Coxeter, AxesOfExceptionalTypes) {
    std::map<std::string, QVector> want{{"F4", make_vector({0, 1, 1, 2})},
                                        {"E6", make_vector({1, 1, 1, -3, -3, 1, 1, 1})},
                                        {"E7", make_vector({1, 1, 1, 1, 0, 0, 2, 2})},
                                        {"E8", make_vector({1, 1, 1, 1, 3, -3, 2, 2})},
                                        {"G2", make_vector({2, -1, -1})}};
    for (const auto& [t, v] : want) {
        auto ctx = ctx_of(t);
        EXPECT_EQ(ctx.axis_dir, v) << t;
        ASSERT_TRUE(ctx.symbolic_dir);
        EXPECT_TRUE(parallel(*ctx.symbolic_dir, ctx.axis_dir)) << t;
    }
}

TEST(Coxeter, BigonAxes) {
    for (int n : {2, 3, 4, 5})
        for (auto c : bigon_classes(n)) {
            auto ctx = build_context(DynkinType::make('A', n), c);
            QVector v;
            for (int i = 0; i < c.p; ++i) v.emplace_back(c.q);
            for (int j = 0; j < c.q; ++j) v.emplace_back(-c.p);
            EXPECT_TRUE(parallel(ctx.axis_dir, v)) << n << c.name();
            EXPECT_TRUE(ctx.phi.span.contains(ctx.axis_dir));
        }
}

TEST(Coxeter, WTranslatesAlongItsAxis) {
    for (auto [t, c] : standard_rows()) {
        auto ctx = build_context(t, c);
        QVector x = ctx.axis.basepoint();
        QVector d = ctx.w.apply(x) - x;
        EXPECT_TRUE(parallel(d, ctx.axis_dir)) << t.name();
        EXPECT_TRUE(ctx.axis.contains(ctx.w.apply(x)));
    }
}

TEST(Coxeter, AxialPointsShiftUnderW) {
    std::map<std::string, int> shifts{{"A2(2,1)", 3}, {"A3(3,1)", 4}, {"A3(2,2)", 2}, {"A5(5,1)", 6}, {"A5(4,2)", 0}, {"A5(3,3)", 2}};
    for (auto [t, c] : standard_rows()) {
        auto ctx = build_context(t, c);
        int k = 8;
        auto ad = axial_data(ctx, k);
        std::string key = t.name() + c.name();
        if (c.bigon) {
            if (shifts[key] > 0) {
                EXPECT_EQ(ad.shift, shifts[key]) << key;
            }
        } else {
            EXPECT_EQ(ad.shift, 2) << key;
        }
        for (int i = -k; i + ad.shift <= k; ++i) EXPECT_EQ(ctx.w.apply(ad.point(i)), ad.point(i + ad.shift)) << key << " i=" << i;
        for (int i = -k; i <= k; ++i) {
            EXPECT_TRUE(ctx.axis.contains(ad.point(i))) << key;
            EXPECT_FALSE(ad.face(i).empty()) << key;
        }
        // Indices run monotonically along the axis, in the direction w moves points.
        int dir = (axis_param(ctx, ctx.w.apply(ad.point(0))) - axis_param(ctx, ad.point(0))).sign();
        ASSERT_NE(dir, 0);
        for (int i = -k; i < k; ++i) EXPECT_EQ((axis_param(ctx, ad.point(i + 1)) - axis_param(ctx, ad.point(i))).sign(), dir) << key;
    }
}

TEST(Coxeter, WindowTooSmallThrows) {
    auto ctx = ctx_of("A3", "3,1");
    auto ad = axial_data(ctx, 2);
    AffineReflection r{ctx.simple.entries[0].root, 0};
    EXPECT_THROW(in_R0(r, ctx, ad), WindowInsufficient);
    auto big = axial_data(ctx, 4);
    EXPECT_NO_THROW(in_R0(r, ctx, big));
}

TEST(Coxeter, WindowReflectionsLieInR0) {
    auto ctx = ctx_of("G2");
    auto ad = axial_data(ctx, 3);
    auto refl = window_reflections(ctx, ad);
    EXPECT_FALSE(refl.empty());
    for (const auto& r : refl) EXPECT_TRUE(in_R0(r, ctx, ad));
}

TEST(Coxeter, FiniteCoxeterOrders) {
    std::map<std::string, int> h{{"A2", 3}, {"A3", 4}, {"C2", 4}, {"G2", 6}, {"B3", 6}, {"D4", 6}, {"F4", 12}};
    for (const auto& [t, want] : h) {
        auto f = finite_coxeter(DynkinType::parse(t));
        EXPECT_EQ(linear_order(f.c), want) << t;
        EXPECT_EQ(reflection_length(f.c), DynkinType::parse(t).rank) << t;
    }
}
