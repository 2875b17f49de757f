#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "support.hpp"

using namespace complements;
using testing_support::R;
using F = TypeLabel::Family;

namespace {

DualGraph fixture_graph(const std::string& name) {
    std::ifstream in(std::filesystem::path(COMPLEMENTS_DATA_DIR) / "exceptional" / (name + ".json"));
    return io::graph_from_json(io::json::parse(in));
}

ComplementDatum datum(std::int64_t r, std::int64_t n, std::int64_t m) {
    ComplementDatum d;
    d.index = r;
    d.n_reduced = n;
    d.m_exceptional = m;
    return d;
}

}  // namespace

TEST(TypeLabel, Examples) {
    auto du_val = datum(1, 2, 3);
    du_val.support_singular_connected = true;
    EXPECT_EQ(type_label(du_val).str(), "A_3^2");

    auto kodaira = datum(1, 4, 0);
    kodaira.support_singular_connected = true;
    kodaira.lcs_genus = 1;
    EXPECT_EQ(type_label(kodaira), (TypeLabel{F::A, 0, 4}));
    EXPECT_EQ(type_label(kodaira).str(), "A_0^4");

    auto lines = datum(2, 1, 1);
    lines.support_singular_connected = true;
    EXPECT_EQ(type_label(lines).str(), "D_1^1");
}

TEST(TypeLabel, FamiliesByIndex) {
    auto d = datum(3, 1, 0);
    EXPECT_EQ(type_label(d).family, F::E3);
    d.index = 4;
    EXPECT_EQ(type_label(d).family, F::E4);
    d.index = 6;
    EXPECT_EQ(type_label(d).family, F::E6);
    d.index = 1;
    EXPECT_EQ(type_label(d).family, F::E1);
    d.index = 2;
    EXPECT_EQ(type_label(d).family, F::E2);
    d.index = 5;
    EXPECT_THROW(type_label(d), type_constraint_error);
}

TEST(TypeLabel, ClauseViolations) {
    auto too_many = datum(3, 2, 1);
    too_many.global = true;
    EXPECT_THROW(type_label(too_many), type_constraint_error);

    auto local_two = datum(4, 1, 1);
    local_two.lcs_connected = false;
    EXPECT_THROW(type_label(local_two), type_constraint_error);
    local_two.global = true;
    EXPECT_EQ(type_label(local_two).str(), "E4_1^1");

    auto klt = datum(1, 1, 0);
    klt.klt = true;
    EXPECT_THROW(type_label(klt), type_constraint_error);

    auto zero = datum(1, 0, 0);
    zero.support_singular_connected = true;
    zero.global = true;
    EXPECT_THROW(type_label(zero), type_constraint_error);  // A_0^0 does not exist
    auto e0 = datum(6, 0, 0);
    e0.klt = true;
    EXPECT_THROW(type_label(e0), type_constraint_error);
    e0.global = true;
    EXPECT_EQ(type_label(e0).str(), "E6_0^0");

    auto elliptic = datum(3, 0, 1);
    elliptic.lcs_genus = 1;
    EXPECT_THROW(type_label(elliptic), type_constraint_error);
    auto e1 = datum(1, 0, 1);
    e1.lcs_genus = 1;
    EXPECT_EQ(type_label(e1).str(), "E1_1^0");

    try {
        type_label(too_many);
        FAIL();
    } catch (const type_constraint_error& e) {
        EXPECT_NE(std::string(e.what()).find("n + m <= 2"), std::string::npos);
    }
}

TEST(TypeLabel, ExceptionalFamiliesNeverExceedTwo) {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> idx(0, 4), small(0, 4), coin(0, 1), genus(-1, 1);
    const std::int64_t indices[] = {1, 2, 3, 4, 6};
    int accepted = 0;
    for (int t = 0; t < 5000; ++t) {
        ComplementDatum d = datum(indices[idx(rng)], small(rng), small(rng));
        d.lcs_connected = coin(rng);
        d.support_singular_connected = coin(rng);
        d.global = coin(rng);
        d.klt = d.n_reduced + d.m_exceptional == 0 && coin(rng);
        int gval = genus(rng);
        if (gval >= 0) d.lcs_genus = gval;
        try {
            auto l = type_label(d);
            ++accepted;
            if (l.exceptional_family()) ASSERT_LE(l.m + l.n, 2);
            ASSERT_EQ(l.m, d.m_exceptional);
            ASSERT_EQ(l.n, d.n_reduced);
        } catch (const type_constraint_error&) {
        }
    }
    EXPECT_GT(accepted, 500);
}

TEST(RegularOrExceptional, Examples) {
    EXPECT_EQ(regular_or_exceptional(6), IndexKind::Regular);
    EXPECT_EQ(regular_or_exceptional(7), IndexKind::Exceptional);
    EXPECT_EQ(regular_or_exceptional(1), IndexKind::Regular);
    EXPECT_THROW(regular_or_exceptional(0), invalid_input);
}

TEST(Toric, Defect) {
    for (int n = 3; n <= 12; ++n) {
        Boundary b;
        for (int i = 0; i < n; ++i) b.add(Multiplicity(1, 1));
        EXPECT_EQ(toric_defect(n - 2, b), R(0));
        EXPECT_TRUE(toric_check(n - 2, b).formally_toric);
    }
    EXPECT_EQ(toric_defect(1, Boundary::of({R(1), R(1), R(1)})), R(0));
    EXPECT_EQ(toric_defect(1, Boundary::of({R(1), R(1)})), R(1));
    auto bad = toric_check(0, Boundary::of({R(1), R(1), R(1)}));
    EXPECT_FALSE(bad.consistent);
    EXPECT_EQ(bad.defect, R(-1));
    EXPECT_THROW(toric_defect(-1, {}), invalid_input);
}

TEST(AffineForms, InequalityText) {
    EXPECT_EQ((LinearConstraint{3, 1, R(7, 2)}).str(), "b1 + 1/3*b2 <= 7/6");
    EXPECT_EQ((AffineForm{R(-7, 2), 3, 1}).inequality(), (LinearConstraint{3, 1, R(7, 2)}).str());
    EXPECT_EQ((AffineForm{R(-2), 0, 2}).inequality(), "b2 <= 1");
}

TEST(AffineForms, MaxMultiplicity) {
    // b1 + b2 <= 27/14 allows b1 = 1 with b2 = 6/7.
    EXPECT_EQ(detail::max_multiplicity({AffineForm{R(-27, 14), 1, 1}}), R(1));
    // b1 + b2 <= 25/14 caps b1 at 25/14 - 6/7 = 13/14.
    EXPECT_EQ(detail::max_multiplicity({AffineForm{R(-25, 14), 1, 1}}), R(13, 14));
    auto tight = detail::max_multiplicity({AffineForm{R(-12, 7), 1, 1}});
    EXPECT_EQ(tight, R(6, 7));
    EXPECT_EQ(detail::max_multiplicity({AffineForm{R(-1), 1, 1}}), std::nullopt);
}

class ExceptionalFixtures : public ::testing::TestWithParam<std::pair<std::string, std::string>> {};

TEST_P(ExceptionalFixtures, AllClaimsHold) {
    auto [file, name] = GetParam();
    auto report = verify_exceptional_config(name, fixture_graph(file));
    for (const auto& c : report.failures()) ADD_FAILURE() << name << ": " << c.claim << " expected " << c.expected << " got " << c.actual;
    EXPECT_TRUE(report.passed());
    EXPECT_FALSE(report.checks.empty());
}

INSTANTIATE_TEST_SUITE_P(Cases, ExceptionalFixtures,
                         ::testing::Values(std::pair{"a21", "A21"}, std::pair{"a22", "A22"}, std::pair{"a23", "A23"},
                                           std::pair{"a24_r1", "A24"}, std::pair{"a25_r1", "A25"},
                                           std::pair{"a26", "A26"}, std::pair{"i21", "I21"},
                                           std::pair{"i22", "I22"}));

TEST(Exceptional, TransversalReadingFailsPairings) {
    auto r24 = verify_exceptional_config("A24", fixture_graph("a24_r2"));
    EXPECT_FALSE(r24.passed());
    bool nef_failed = false;
    for (const auto& c : r24.failures())
        if (c.claim.find("nef") != std::string::npos) {
            nef_failed = true;
            EXPECT_NE(c.actual.find("(K+B).D1 = 1/14"), std::string::npos) << c.actual;
        }
    EXPECT_TRUE(nef_failed);
    EXPECT_FALSE(verify_exceptional_config("A25", fixture_graph("a25_r2")).passed());
}

TEST(Exceptional, A26Details) {
    auto g = fixture_graph("a26");
    EXPECT_EQ(delta_invariant(g).count, 2);
    auto cr = crepant_discrepancies(g);
    EXPECT_EQ(pairing(g, cr.coefficients, g.index_of("C2")), R(0));
    auto r = verify_exceptional_config("A26", g);
    bool seen = false;
    for (const auto& c : r.checks)
        if (c.claim == "trivial complement index") {
            seen = true;
            EXPECT_EQ(c.actual, "7");
        }
    EXPECT_TRUE(seen);
}

TEST(Exceptional, WrongGraphIsReported) {
    auto g = fixture_graph("a22");
    EXPECT_FALSE(verify_exceptional_config("A23", g).passed());
    EXPECT_THROW(exceptional_case("A27"), invalid_input);
    EXPECT_EQ(exceptional_cases().size(), 8u);
}
