#include <gtest/gtest.h>

#include "support.hpp"

using namespace complements;
using testing_support::R;
using T = KodairaType::Tag;

namespace {

FiberComponent rational(std::int64_t self, std::vector<std::string> decs = {}) {
    FiberComponent c;
    c.self_intersection = self;
    for (const auto& d : decs) c.decorations.push_back(Decoration::parse(d));
    return c;
}

FiberModel irreducible(FiberComponent c) { return {CurveShape::Irreducible, {std::move(c)}, false}; }

FiberModel wheel(int b, std::int64_t m = 1) {
    FiberModel f{CurveShape::Wheel, {}, false};
    for (int i = 0; i < b; ++i) {
        auto c = rational(-2);
        c.multiplicity = m;
        f.components.push_back(c);
    }
    return f;
}

FiberModel istar_chain(int b) {
    FiberModel f{CurveShape::Chain, {}, false};
    for (int i = 0; i <= b; ++i) {
        bool end = i == 0 || i == b;
        f.components.push_back(rational(-2, end ? std::vector<std::string>{"A1", "A1"} : std::vector<std::string>{}));
    }
    return f;
}

std::vector<KodairaType> all_types() {
    std::vector<KodairaType> out{KodairaType::multiplicative(1, 0), KodairaType::multiplicative(3, 1),
                                 KodairaType::multiplicative(2, 5), KodairaType::istar(0),
                                 KodairaType::istar(3)};
    for (auto t : {T::II, T::IIstar, T::III, T::IIIstar, T::IV, T::IVstar}) out.push_back({t, 1, 0});
    return out;
}

}  // namespace

TEST(Decoration, ParseAndDifferent) {
    EXPECT_EQ(Decoration::parse("A3"), Decoration::A(3));
    EXPECT_EQ(Decoration::parse("(-2)"), Decoration::A(1));
    EXPECT_EQ(Decoration::parse("(-6)").different(), R(5, 6));
    EXPECT_EQ(Decoration::A(5).different(), R(5, 6));
    EXPECT_THROW(Decoration::parse("B2"), invalid_input);
    EXPECT_THROW(Decoration::parse("(-1)"), invalid_input);
    EXPECT_THROW(Decoration::parse("A"), invalid_input);
}

TEST(KodairaType, Strings) {
    EXPECT_EQ(KodairaType::multiplicative(2, 3).str(), "2I_3");
    EXPECT_EQ(KodairaType::multiplicative(1, 0).str(), "I_0");
    EXPECT_EQ(KodairaType::istar(0).str(), "I_0*");
    EXPECT_EQ((KodairaType{T::IIIstar, 1, 0}).str(), "III*");
    EXPECT_THROW(KodairaType::multiplicative(0, 1), invalid_input);
    EXPECT_THROW(KodairaType::istar(-1), invalid_input);
}

TEST(ComplementIndex, Table) {
    EXPECT_EQ(complement_index(KodairaType::multiplicative(5, 2)), 1);
    EXPECT_EQ(complement_index({T::IIIstar, 1, 0}), 4);
    EXPECT_EQ(complement_index({T::IV, 1, 0}), 3);
    EXPECT_EQ(complement_index(KodairaType::istar(4)), 2);
    EXPECT_EQ(complement_index({T::II, 1, 0}), 6);
}

TEST(Different, Table) {
    EXPECT_EQ(fiber_different(KodairaType::istar(2)).values(), (std::vector<Rational>{R(1, 2), R(1, 2), R(1, 2), R(1, 2)}));
    EXPECT_EQ(fiber_different({T::IV, 1, 0}).values(), (std::vector<Rational>{R(2, 3), R(2, 3), R(2, 3)}));
    EXPECT_TRUE(fiber_different(KodairaType::multiplicative(1, 0)).empty());
    EXPECT_EQ(fiber_different({T::II, 1, 0}).values(), (std::vector<Rational>{R(1, 2), R(2, 3), R(5, 6)}));
    EXPECT_EQ(fiber_different({T::IIIstar, 1, 0}).values(), (std::vector<Rational>{R(1, 2), R(3, 4), R(3, 4)}));
}

TEST(Different, DegreeTwoOnDecoratedTypes) {
    for (const auto& t : all_types()) {
        if (t.tag == T::mI) continue;
        EXPECT_EQ(fiber_different(t).degree(), R(2)) << t.str();
    }
}

TEST(IndexCoherence, AllTypes) {
    for (const auto& t : all_types())
        EXPECT_EQ(minimal_complement_index(fiber_curve(t), 66), complement_index(t)) << t.str();
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify_fiber(wheel(3, 2)), KodairaType::multiplicative(2, 3));
    EXPECT_EQ(classify_fiber(irreducible(rational(-2, {"A1", "A1", "A1", "A1"}))), KodairaType::istar(0));
    EXPECT_EQ(classify_fiber(irreducible(rational(-1, {"A1", "(-3)", "(-6)"}))), (KodairaType{T::II, 1, 0}));
    EXPECT_EQ(classify_fiber(irreducible(rational(-1, {"(-4)", "A1", "(-4)"}))), (KodairaType{T::III, 1, 0}));
    EXPECT_EQ(classify_fiber(irreducible(rational(-1, {"(-3)", "(-3)", "(-3)"}))), (KodairaType{T::IV, 1, 0}));
    EXPECT_EQ(classify_fiber(irreducible(rational(-2, {"A5", "A1", "A2"}))), (KodairaType{T::IIstar, 1, 0}));
    EXPECT_EQ(classify_fiber(irreducible(rational(-2, {"A1", "A3", "A3"}))), (KodairaType{T::IIIstar, 1, 0}));
    EXPECT_EQ(classify_fiber(irreducible(rational(-2, {"A2", "A2", "A2"}))), (KodairaType{T::IVstar, 1, 0}));
    for (int b = 1; b <= 6; ++b) EXPECT_EQ(classify_fiber(istar_chain(b)), KodairaType::istar(b));
}

TEST(Classify, GenusOneAndNodal) {
    FiberComponent e;
    e.genus = 1;
    e.self_intersection = 0;
    e.multiplicity = 4;
    EXPECT_EQ(classify_fiber(irreducible(e)), KodairaType::multiplicative(4, 0));
    FiberComponent n;
    n.node_count = 1;
    n.self_intersection = 0;
    EXPECT_EQ(classify_fiber(irreducible(n)), KodairaType::multiplicative(1, 1));
}

// A1, A2, A5 on a (-1)-curve does not resolve to a fibre: the intersection
// matrix of that tree is not negative semi-definite.
TEST(Classify, UnstarredDuValTripleIsNotAFibre) {
    auto f = irreducible(rational(-1, {"A1", "A2", "A5"}));
    EXPECT_FALSE(fiber_kernel_ok(resolved_graph(f)));
    EXPECT_THROW(classify_fiber(f), unrecognized_fiber);
}

TEST(Classify, Rejections) {
    EXPECT_THROW(classify_fiber(irreducible(rational(-2, {"A1", "A1", "A1"}))), unrecognized_fiber);
    EXPECT_THROW(classify_fiber(irreducible(rational(-3, {"A1", "A1", "A1", "A1"}))), unrecognized_fiber);
    auto mixed = wheel(3);
    mixed.components[1].multiplicity = 2;
    EXPECT_THROW(classify_fiber(mixed), invalid_input);
    auto multiple_star = irreducible(rational(-2, {"A1", "A1", "A1", "A1"}));
    multiple_star.components[0].multiplicity = 2;
    EXPECT_THROW(classify_fiber(multiple_star), invalid_input);
    auto bad_chain = istar_chain(2);
    bad_chain.components[1].decorations.push_back(Decoration::A(1));
    EXPECT_THROW(classify_fiber(bad_chain), unrecognized_fiber);
    auto decorated_wheel = wheel(3);
    decorated_wheel.components[0].decorations.push_back(Decoration::A(1));
    EXPECT_THROW(classify_fiber(decorated_wheel), unrecognized_fiber);
    auto not_fibre = wheel(3);
    not_fibre.components[0].self_intersection = -3;
    EXPECT_THROW(classify_fiber(not_fibre), unrecognized_fiber);
}

TEST(Normalize, ContractsInteriorMinusOneCurves) {
    FiberModel f{CurveShape::Wheel, {rational(-3), rational(-1), rational(-3), rational(-2)}, true};
    auto n = normalize_fiber(f);
    ASSERT_EQ(n.components.size(), 3u);
    for (const auto& c : n.components) EXPECT_EQ(c.self_intersection, -2);
    EXPECT_EQ(classify_fiber(f), KodairaType::multiplicative(1, 3));
    f.smooth_ambient = false;
    EXPECT_EQ(normalize_fiber(f).components.size(), 4u);

    FiberModel two{CurveShape::Wheel, {rational(-1), rational(-4)}, true};
    auto n2 = normalize_fiber(two);
    ASSERT_EQ(n2.components.size(), 1u);
    EXPECT_EQ(n2.components[0].node_count, 1);
    EXPECT_EQ(n2.components[0].self_intersection, 0);
    EXPECT_EQ(classify_fiber(two), KodairaType::multiplicative(1, 1));

    auto chain = istar_chain(2);
    chain.components.insert(chain.components.begin() + 1, rational(-1));
    chain.components[0].self_intersection = -3;
    chain.components[2].self_intersection = -3;
    chain.smooth_ambient = true;
    EXPECT_EQ(classify_fiber(chain), KodairaType::istar(2));
}

TEST(ResolvedGraph, KernelIsOneDimensional) {
    std::vector<FiberModel> models{wheel(2), wheel(5), istar_chain(1), istar_chain(4),
                                   irreducible(rational(-2, {"A1", "A1", "A1", "A1"})),
                                   irreducible(rational(-1, {"A1", "(-3)", "(-6)"})),
                                   irreducible(rational(-1, {"A1", "(-4)", "(-4)"})),
                                   irreducible(rational(-1, {"(-3)", "(-3)", "(-3)"})),
                                   irreducible(rational(-2, {"A1", "A2", "A5"})),
                                   irreducible(rational(-2, {"A1", "A3", "A3"})),
                                   irreducible(rational(-2, {"A2", "A2", "A2"}))};
    for (const auto& f : models) {
        auto g = resolved_graph(f);
        EXPECT_TRUE(fiber_kernel_ok(g));
        EXPECT_FALSE(is_contractible(g));
        auto m = detail::to_rational(intersection_matrix(g));
        EXPECT_EQ(detail::rank(m), m.size() - 1);
    }
}

TEST(ResolvedGraph, StarredTypesGiveAffineE) {
    auto g = resolved_graph(irreducible(rational(-2, {"A1", "A2", "A5"})));
    EXPECT_EQ(g.size(), 9u);  // affine E8
    auto g7 = resolved_graph(irreducible(rational(-2, {"A1", "A3", "A3"})));
    EXPECT_EQ(g7.size(), 8u);
    auto g6 = resolved_graph(irreducible(rational(-2, {"A2", "A2", "A2"})));
    EXPECT_EQ(g6.size(), 7u);
    auto d = resolved_graph(istar_chain(3));
    EXPECT_EQ(d.size(), 8u);  // affine D7
}
