#include "axial/verdict.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace axial;

namespace {

std::string row_key(DynkinType t, CoxeterClass c) { return t.name() + (c.bigon ? c.name() : ""); }

std::string decomposition(const HorizontalSystem& h) {
    std::string s;
    for (const auto& c : h.components) s += (s.empty() ? "" : "+") + c.type + "(" + std::to_string(c.roots.size()) + ")";
    return s;
}

}  // namespace

TEST(Horizontal, Decompositions) {
    std::map<std::string, std::string> want{
        {"A2(2,1)", "A1(2)"},        {"A3(3,1)", "A2(6)"},        {"A3(2,2)", "A1(2)+A1(2)"},
        {"A5(5,1)", "A4(20)"},       {"A5(4,2)", "A3(12)+A1(2)"}, {"A5(3,3)", "A2(6)+A2(6)"},
        {"B3", "A1(2)+A1(2)"},       {"B4", "A2(6)+A1(2)"},       {"C2", "A1(2)"},
        {"C3", "A2(6)"},             {"D4", "A1(2)+A1(2)+A1(2)"}, {"G2", "A1(2)"},
        {"F4", "A2(6)+A1(2)"},       {"E6", "A2(6)+A2(6)+A1(2)"}, {"E7", "A3(12)+A2(6)+A1(2)"},
        {"E8", "A4(20)+A2(6)+A1(2)"}};
    for (auto [t, c] : standard_rows()) {
        auto h = horizontal_roots(build_context(t, c));
        EXPECT_EQ(decomposition(h), want.at(row_key(t, c))) << row_key(t, c);
    }
}

TEST(Horizontal, LargerClassicalRanks) {
    for (int n = 4; n <= 6; ++n) {
        auto c = horizontal_roots(build_context(DynkinType::make('C', n), CoxeterClass::bipartite()));
        EXPECT_EQ(c.name(), "A" + std::to_string(n - 1));
        auto b = horizontal_roots(build_context(DynkinType::make('B', n), CoxeterClass::bipartite()));
        EXPECT_EQ(b.name(), "A" + std::to_string(n - 2) + "+A1");
    }
    for (int n = 5; n <= 6; ++n) {
        auto d = horizontal_roots(build_context(DynkinType::make('D', n), CoxeterClass::bipartite()));
        EXPECT_EQ(d.name(), "A" + std::to_string(n - 3) + "+A1+A1");
    }
    for (int n : {4, 6})
        for (auto cls : bigon_classes(n)) {
            auto h = horizontal_roots(build_context(DynkinType::make('A', n), cls));
            std::size_t want = static_cast<std::size_t>(cls.p * (cls.p - 1) + cls.q * (cls.q - 1));
            EXPECT_EQ(h.roots.size(), want) << n << cls.name();
            EXPECT_EQ(h.reducible(), cls.q >= 2) << n << cls.name();
        }
}

TEST(Horizontal, F4Roots) {
    auto ctx = build_context(DynkinType::make('F', 4), CoxeterClass::bipartite());
    auto h = horizontal_roots(ctx);
    for (const char* s : {"2/3", "1/", "123/4", "23/14"}) {
        QVector r = parse_root_notation(s, ctx.phi);
        EXPECT_TRUE(std::find(h.roots.begin(), h.roots.end(), r) != h.roots.end()) << s;
    }
}

TEST(Factor, LinearFactorizationEvaluates) {
    auto f = finite_coxeter(DynkinType::make('D', 4));
    auto w = factor_linear(f.c, f.phi);
    EXPECT_EQ(static_cast<int>(w.size()), 4);
    EXPECT_EQ(product(w, 4), f.c);
}

TEST(Bowtie, NotApplicableWhenIrreducible) {
    for (const char* t : {"C2", "C3", "G2"})
        EXPECT_THROW(bowtie_from_reducibility(build_context(DynkinType::parse(t), CoxeterClass::bipartite())), NotApplicable) << t;
    EXPECT_THROW(bowtie_from_reducibility(build_context(DynkinType::make('A', 3), CoxeterClass::make_bigon(3, 1))), NotApplicable);
}

TEST(Bowtie, ConstructedCertificatesPass) {
    for (auto [t, c] : standard_rows()) {
        auto ctx = build_context(t, c);
        if (!horizontal_roots(ctx).reducible()) continue;
        auto rb = bowtie_from_reducibility(ctx);
        EXPECT_TRUE(rb.cert.passed) << row_key(t, c) << " failed " << rb.cert.failed;
        EXPECT_TRUE(is_horizontal(rb.beta, ctx));
        EXPECT_TRUE(is_horizontal(rb.beta_prime, ctx));
        EXPECT_FALSE(dot(rb.beta, rb.theta).is_zero());
        EXPECT_FALSE(dot(rb.beta_prime, rb.theta).is_zero());
        EXPECT_TRUE(dot(rb.beta, rb.beta_prime).is_zero());
        // Independent re-check of the emitted witness.
        auto again = certify_bowtie({rb.cert.q, rb.cert.words}, ctx.w, euclidean_checker(ctx));
        EXPECT_TRUE(again.passed) << row_key(t, c);
        for (const auto& w : rb.cert.words)
            for (const auto& g : w) EXPECT_TRUE(ctx.is_group_reflection(g));
    }
}

TEST(Verdict, ExpectationTable) {
    EXPECT_EQ(expected_verdict(DynkinType::make('C', 5), CoxeterClass::bipartite()), Verdict::lattice_consistent);
    EXPECT_EQ(expected_verdict(DynkinType::make('G', 2), CoxeterClass::bipartite()), Verdict::lattice_consistent);
    EXPECT_EQ(expected_verdict(DynkinType::make('A', 4), CoxeterClass::make_bigon(4, 1)), Verdict::lattice_consistent);
    EXPECT_EQ(expected_verdict(DynkinType::make('A', 4), CoxeterClass::make_bigon(3, 2)), Verdict::not_a_lattice);
    for (char f : {'B', 'D', 'E', 'F'}) {
        int n = f == 'E' ? 6 : 4;
        EXPECT_EQ(expected_verdict(DynkinType::make(f, n), CoxeterClass::bipartite()), Verdict::not_a_lattice);
    }
}

TEST(Verdict, AllRowsMatch) {
    VerdictOptions opt;
    opt.workers = 4;
    for (auto [t, c] : standard_rows()) {
        auto v = main_verdict(t, c, opt);
        EXPECT_TRUE(v.matches()) << row_key(t, c) << ": " << v.note;
        if (v.reducible()) {
            ASSERT_TRUE(v.bowtie);
            EXPECT_FALSE(v.evidence);
        } else {
            EXPECT_FALSE(v.bowtie);
            ASSERT_TRUE(v.evidence);
            EXPECT_EQ(v.evidence->certified, 0u) << row_key(t, c);
        }
    }
}

TEST(Verdict, RowsForType) {
    EXPECT_EQ(rows_for(DynkinType::make('A', 5)).size(), 3u);
    EXPECT_EQ(rows_for(DynkinType::make('E', 7)).size(), 1u);
    EXPECT_EQ(standard_rows().size(), 16u);
}

// Frozen windowed regressions at k = 3.
TEST(WindowEvidence, FrozenCounts) {
    struct Row {
        const char* t;
        const char* c;
        int nodes;
        std::size_t certified;
    };
    for (Row r : {Row{"G2", "bipartite", 32, 0}, Row{"C2", "bipartite", 28, 0}, Row{"A2", "2,1", 22, 0},
                  Row{"A3", "3,1", 70, 0}, Row{"A3", "2,2", 98, 2}, Row{"B3", "bipartite", 110, 2},
                  Row{"C3", "bipartite", 120, 0}, Row{"D4", "bipartite", 388, 36}, Row{"B4", "bipartite", 444, 12},
                  Row{"F4", "bipartite", 618, 12}}) {
        auto ctx = build_context(DynkinType::parse(r.t), CoxeterClass::parse(r.c));
        auto e = window_search(ctx, 3, 4);
        EXPECT_EQ(e.nodes, r.nodes) << r.t << r.c;
        EXPECT_EQ(e.certified, r.certified) << r.t << r.c;
        EXPECT_FALSE(e.truncated);
    }
}
