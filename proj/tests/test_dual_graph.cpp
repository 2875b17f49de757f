#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace complements;
using testing_support::R;

namespace {

DualGraph chain_graph(const std::vector<std::int64_t>& selfs) {
    DualGraph g;
    for (std::size_t i = 0; i < selfs.size(); ++i) g.add_exceptional("E" + std::to_string(i + 1), selfs[i]);
    for (std::size_t i = 1; i < selfs.size(); ++i) g.add_edge(i - 1, i);
    return g;
}

// Trees of (-2)-curves: arms of lengths p, q, r around a centre.
DualGraph star(int p, int q, int r) {
    DualGraph g;
    g.add_exceptional("E0", -2);
    int id = 1;
    for (int arm : {p, q, r}) {
        std::size_t prev = 0;
        for (int k = 0; k < arm; ++k) {
            auto v = g.add_exceptional("E" + std::to_string(id++), -2);
            g.add_edge(prev, v);
            prev = v;
        }
    }
    return g;
}

DualGraph single(std::int64_t m, const Rational& b, std::int64_t crossings = 1) {
    DualGraph g;
    g.add_exceptional("E", -m);
    g.add_ambient("C", 0, Multiplicity(b));
    g.add_edge("E", "C", crossings);
    return g;
}

std::vector<DualGraph> ade_graphs() {
    std::vector<DualGraph> out;
    for (int n = 1; n <= 8; ++n) out.push_back(chain_graph(std::vector<std::int64_t>(n, -2)));
    for (int n = 4; n <= 8; ++n) out.push_back(star(1, 1, n - 3));
    out.push_back(star(1, 2, 2));
    out.push_back(star(1, 2, 3));
    out.push_back(star(1, 2, 4));
    return out;
}

}  // namespace

TEST(DualGraph, ConstructionErrors) {
    DualGraph g;
    g.add_exceptional("E", -2);
    EXPECT_THROW(g.add_exceptional("E", -2), invalid_input);
    EXPECT_THROW(g.add_edge(0, 0), invalid_input);
    g.add_exceptional("F", -2);
    EXPECT_THROW(g.add_edge(0, 1, 0), invalid_input);
    EXPECT_THROW(g.index_of("nope"), invalid_input);
    Curve c;
    c.id = "X";
    c.role = CurveRole::Exceptional;
    c.boundary = Multiplicity(1, 2);
    EXPECT_THROW(g.add_curve(c), invalid_input);
}

TEST(DualGraph, CanonicalDegree) {
    Curve c;
    c.self_intersection = -3;
    EXPECT_EQ(c.canonical_degree(), 1);
    c.node_count = 1;
    c.self_intersection = 6;
    EXPECT_EQ(c.arithmetic_genus(), 1);
    EXPECT_EQ(c.canonical_degree(), -6);
}

TEST(IntersectionMatrix, Examples) {
    EXPECT_EQ(intersection_matrix(chain_graph({-2})), (std::vector<std::vector<std::int64_t>>{{-2}}));
    EXPECT_EQ(intersection_matrix(chain_graph({-2, -2})), (std::vector<std::vector<std::int64_t>>{{-2, 1}, {1, -2}}));
    auto d4 = star(1, 1, 1);
    auto e = d4.add_exceptional("E4", -2);
    d4.add_edge(0, e);
    auto m = intersection_matrix(d4);
    ASSERT_EQ(m.size(), 5u);
    EXPECT_EQ(std::accumulate(m[0].begin(), m[0].end(), std::int64_t{0}), 2);
    for (std::size_t i = 1; i < 5; ++i) EXPECT_EQ(std::accumulate(m[i].begin(), m[i].end(), std::int64_t{0}), -1);
    EXPECT_FALSE(is_contractible(d4));
    EXPECT_THROW(crepant_discrepancies(d4), singular_configuration);
}

TEST(Contractibility, Examples) {
    for (const auto& g : ade_graphs()) EXPECT_TRUE(is_contractible(g));
    EXPECT_FALSE(is_contractible(chain_graph({0})));
    EXPECT_FALSE(is_contractible(chain_graph({-1, -1})));
    EXPECT_TRUE(is_contractible(chain_graph({-1, -3})));
    EXPECT_FALSE(is_contractible(star(1, 2, 5)));  // affine E8
}

TEST(Crepant, SingleCurveFormula) {
    for (std::int64_t m = 2; m <= 12; ++m)
        for (std::int64_t q = 1; q <= 14; ++q)
            for (std::int64_t p = 0; p <= q; ++p) {
                auto cr = crepant_discrepancies(single(m, R(p, q)));
                ASSERT_EQ(cr.d[0], R(m - 2, m) + R(p, q) / R(m));
                ASSERT_EQ(cr.a[0], R(1) - cr.d[0]);
            }
    auto cr = crepant_discrepancies(single(3, R(6, 7)));
    EXPECT_EQ(cr.d[0], R(13, 21));
    EXPECT_EQ(cr.a[0], R(8, 21));
}

TEST(Crepant, A2ChainWithSixSevenths) {
    auto g = chain_graph({-2, -2});
    g.add_ambient("C", 0, Multiplicity(6, 7));
    g.add_edge("E1", "C");
    auto cr = crepant_discrepancies(g);
    EXPECT_EQ(cr.d, (std::vector<Rational>{R(4, 7), R(2, 7)}));
    EXPECT_EQ(mld(g), R(1, 7));
    EXPECT_EQ(log_canonical_status(g).str(), "klt(1/7)");
}

TEST(Crepant, DuValIsCrepantAndExact) {
    for (const auto& g : ade_graphs()) {
        auto cr = crepant_discrepancies(g);
        for (const auto& d : cr.d) EXPECT_EQ(d, R(0));
        for (const auto& a : cr.a) EXPECT_EQ(a, R(1));
        EXPECT_EQ(mld(g), R(1));
        EXPECT_EQ(delta_invariant(g).count, 0);
    }
}

TEST(Crepant, SubBoundaryIsFlagged) {
    DualGraph g;
    g.add_exceptional("E", -1);
    auto cr = crepant_discrepancies(g);
    EXPECT_EQ(cr.d[0], R(-1));
    EXPECT_TRUE(cr.sub_boundary);
}

TEST(Crepant, RepairingGivesZeroOnRandomGraphs) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> len(1, 5), self(2, 5), den(1, 9);
    int solved = 0;
    for (int t = 0; t < 400; ++t) {
        std::vector<std::int64_t> selfs;
        for (int k = len(rng); k > 0; --k) selfs.push_back(-self(rng));
        auto g = chain_graph(selfs);
        std::int64_t q = den(rng);
        std::uniform_int_distribution<std::int64_t> num(0, q);
        g.add_ambient("C1", 1, Multiplicity(num(rng), q));
        g.add_ambient("C2", 1, Multiplicity(num(rng), q));
        g.add_edge("E1", "C1");
        g.add_edge(selfs.size() - 1, g.index_of("C2"));
        if (!is_contractible(g)) continue;
        ++solved;
        auto cr = crepant_discrepancies(g);
        for (auto v : cr.exceptional) ASSERT_EQ(pairing(g, cr.coefficients, v), R(0));
    }
    EXPECT_GT(solved, 300);
}

TEST(Pairing, Examples) {
    // (-1)-curve C2 with coefficient 6/7, crossed once by an ambient C1 with
    // b = 6/7 and by exceptional curves with d = 3/7 and 4/7.
    DualGraph g;
    auto c2 = g.add_ambient("C2", -1, Multiplicity(6, 7));
    auto c1 = g.add_ambient("C1", 0, Multiplicity(6, 7));
    auto e1 = g.add_exceptional("E1", -2);
    auto e2 = g.add_exceptional("E2", -2);
    g.add_edge(c2, c1);
    g.add_edge(c2, e1);
    g.add_edge(c2, e2);
    EXPECT_EQ(pairing(g, {R(6, 7), R(6, 7), R(3, 7), R(4, 7)}, c2), R(0));
    EXPECT_EQ(pairing(g, {R(0), R(0), R(0), R(0)}, c2), R(-1));
    DualGraph lone;
    lone.add_exceptional("E", -2);
    EXPECT_EQ(pairing(lone, {R(0)}, 0), R(0));
    DualGraph zero;
    zero.add_ambient("C", 0, Multiplicity(0, 1));
    EXPECT_EQ(pairing(zero, {R(0)}, 0), R(-2));
}

TEST(Pairing, LemmaMoveIdentity) {
    // A26: -1 + 6/7 + 1/7 = 0 on C2.
    auto g = io::graph_from_json(io::json::parse(R"({
      "vertices": [
        {"id": "C1", "role": "ambient", "self_int": 6, "genus": 0, "nodes": 1, "mult": "6/7"},
        {"id": "C2", "role": "ambient", "self_int": -1, "mult": "6/7"},
        {"id": "E1", "role": "exceptional", "self_int": -2},
        {"id": "E2", "role": "exceptional", "self_int": -2},
        {"id": "E3", "role": "exceptional", "self_int": -2}],
      "edges": [["C1", "C2"], ["E1", "C2"], ["E2", "E3"], ["E2", "C2"]]})"));
    EXPECT_EQ(log_canonical_degree(g, g.index_of("C2")), R(0));
    EXPECT_EQ(log_canonical_degree(g, g.index_of("C1")), R(0));
    EXPECT_EQ(delta_invariant(g).count, 2);
}

TEST(LemmaIneq, GridBounds) {
    for (std::int64_t m = 2; m <= 12; ++m)
        for (std::int64_t q = 1; q <= 14; ++q)
            for (std::int64_t p = 0; p <= q; ++p) {
                Rational b = R(p, q);
                Rational d = crepant_discrepancies(single(m, b)).d[0];
                Rational bound = R(m - 1, m) * b;
                ASSERT_GE(d, bound);
                ASSERT_EQ(d == bound, m == 2 || b == R(1)) << m << " " << b.str();
                ASSERT_GE(d, b / R(2));
                if (d == b / R(2)) ASSERT_EQ(m, 2);
            }
}

TEST(LemmaIneq, RandomizedSuite) {
    std::mt19937 rng(500);
    std::uniform_int_distribution<std::int64_t> mm(2, 12), den(1, 30);
    for (int t = 0; t < 500; ++t) {
        std::int64_t m = mm(rng), q = den(rng);
        std::uniform_int_distribution<std::int64_t> num(0, q);
        Rational b = R(num(rng), q);
        auto g = single(m, b);
        ASSERT_TRUE(is_contractible(g));
        Rational d = crepant_discrepancies(g).d[0];
        ASSERT_GE(d, R(m - 1, m) * b);
        ASSERT_EQ(d == R(m - 1, m) * b, m == 2 || b == R(1));
        ASSERT_GE(d, b / R(2));
    }
}

TEST(Mld, Examples) {
    DualGraph smooth;
    smooth.add_ambient("C", 1, Multiplicity(0, 1));
    EXPECT_EQ(mld(smooth), R(1));
    DualGraph empty;
    EXPECT_EQ(mld(empty), R(2));
    DualGraph b67;
    b67.add_ambient("C", 1, Multiplicity(6, 7));
    EXPECT_EQ(mld(b67), R(1, 7));
    // A (-1)-curve of genus 0 is the blow-up of a smooth point: mld 2.
    DualGraph blowup;
    blowup.add_exceptional("E", -1);
    EXPECT_EQ(mld(blowup), R(2));
    // Genus 2 on a (-1)-curve: log discrepancy 1 - 3 = -2.
    DualGraph bad;
    bad.add_exceptional("E", -1, 2);
    EXPECT_EQ(mld(bad), std::nullopt);
    EXPECT_EQ(log_canonical_status(bad).kind, LogCanonicalStatus::Kind::NotLogCanonical);
}

TEST(Mld, MonotoneInBoundary) {
    for (std::int64_t m = 2; m <= 8; ++m)
        for (std::int64_t p = 0; p < 10; ++p) {
            auto lo = mld(single(m, R(p, 10)));
            auto hi = mld(single(m, R(p + 1, 10)));
            ASSERT_TRUE(lo && hi);
            ASSERT_LE(*hi, *lo);
        }
}

TEST(LogCanonical, ReducedCurveMakesItLcNotKlt) {
    auto g = single(3, R(1));
    EXPECT_EQ(log_canonical_status(g).kind, LogCanonicalStatus::Kind::LogCanonicalNotKLT);
    EXPECT_EQ(log_canonical_status(chain_graph({-2})).str(), "klt(1)");
}

TEST(Delta, Examples) {
    DualGraph touching;
    touching.add_ambient("C1", 1, Multiplicity(1, 1));
    touching.add_ambient("C2", 1, Multiplicity(1, 1));
    touching.add_edge("C1", "C2");
    EXPECT_TRUE(delta_invariant(touching).infinite);
    EXPECT_EQ(delta_invariant(touching).str(), "infinite");
    EXPECT_EQ(delta_invariant(chain_graph({-2, -2, -2})).count, 0);

    // Two crossing curves with a = 1/14 each: the curves plus the blow-up of
    // the node (1/7) count; (1,2) gives 3/14 > 1/7.
    DualGraph close;
    close.add_ambient("C1", 1, Multiplicity(13, 14));
    close.add_ambient("C2", 1, Multiplicity(13, 14));
    close.add_edge("C1", "C2");
    EXPECT_EQ(delta_invariant(close).count, 3);
    DualGraph bad;
    bad.add_exceptional("E", -1, 2);
    EXPECT_THROW(delta_invariant(bad), invalid_input);
}

TEST(Delta, ZeroWhenMoreThanOneSeventhLogTerminal) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::int64_t> mm(2, 9), den(1, 20);
    for (int t = 0; t < 400; ++t) {
        std::int64_t q = den(rng);
        std::uniform_int_distribution<std::int64_t> num(0, q);
        auto g = single(mm(rng), R(num(rng), q));
        auto st = log_canonical_status(g);
        if (st.kind == LogCanonicalStatus::Kind::KawamataLT && st.epsilon > R(1, 7))
            ASSERT_EQ(delta_invariant(g).count, 0);
        if (st.kind == LogCanonicalStatus::Kind::KawamataLT && st.epsilon <= R(1, 7))
            ASSERT_GE(delta_invariant(g).count, 1);
    }
}

TEST(DuVal, Classification) {
    EXPECT_EQ(classify_duval(chain_graph({-2, -2, -2})).str(), "A3");
    EXPECT_FALSE(classify_duval(chain_graph({-2, -2, -2})).exceptional());
    auto e8 = classify_duval(star(1, 2, 4));
    EXPECT_EQ(e8.str(), "E8");
    EXPECT_TRUE(e8.exceptional());
    EXPECT_EQ(classify_duval(star(1, 2, 2)).str(), "E6");
    EXPECT_EQ(classify_duval(star(1, 2, 3)).str(), "E7");
    EXPECT_EQ(classify_duval(star(1, 1, 3)).str(), "D6");
    EXPECT_FALSE(classify_duval(chain_graph({-2, -3, -2})).du_val());
    EXPECT_FALSE(classify_duval(star(2, 2, 2)).du_val());  // affine E6
    for (const auto& g : ade_graphs()) {
        auto c = classify_duval(g);
        EXPECT_TRUE(c.du_val());
        EXPECT_EQ(c.exceptional(), c.kind == SingularityClass::Kind::E6 || c.kind == SingularityClass::Kind::E7 ||
                                       c.kind == SingularityClass::Kind::E8);
    }
}

TEST(DuVal, SeveralComponents) {
    DualGraph g;
    g.add_ambient("C", 1, Multiplicity(6, 7));
    g.add_exceptional("E1", -2);
    g.add_exceptional("E2", -2);
    g.add_exceptional("E3", -2);
    g.add_edge("E2", "E3");
    g.add_edge("C", "E1");
    g.add_edge("C", "E2");
    auto s = classify_singularities(g);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0].str(), "A1");
    EXPECT_EQ(s[1].str(), "A2");
}

TEST(Adjunction, Examples) {
    EXPECT_EQ(adjunction_mult(1, 1), R(0));
    EXPECT_EQ(adjunction_mult(2, 1), R(1, 2));
    EXPECT_EQ(adjunction_mult(3, 2), R(5, 6));
    EXPECT_THROW(adjunction_mult(0, 1), invalid_input);

    EXPECT_EQ(different_at_point(1, {}).value, R(0));
    EXPECT_EQ(different_at_point(2, {{1, Multiplicity(0, 1)}}).value, R(1, 2));
    auto r = different_at_point(2, {{1, Multiplicity(6, 7)}});
    EXPECT_EQ(r.value, R(13, 14));
    EXPECT_FALSE(r.exceeds_one);
    EXPECT_TRUE(r.monotone);
    EXPECT_TRUE(different_at_point(2, {{2, Multiplicity(1, 1)}, {1, Multiplicity(1, 1)}}).exceeds_one);
}

TEST(Adjunction, MonotonicityOverGrid) {
    for (std::int64_t m = 1; m <= 8; ++m)
        for (std::int64_t k = 1; k <= 3; ++k)
            for (std::int64_t q = 1; q <= 10; ++q)
                for (std::int64_t p = 0; p <= q; ++p) {
                    auto r = different_at_point(m, {{k, Multiplicity(p, q)}});
                    ASSERT_TRUE(r.monotone) << m << " " << k << " " << p << "/" << q;
                    ASSERT_EQ(r.value, R(m - 1, m) + R(k * p, q * m));
                }
}
