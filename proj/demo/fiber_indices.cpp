// Builds a log minimal model for each Kodaira type, classifies it, and
// recomputes the complement index from the different on the central curve.

#include <iostream>
#include <vector>

#include "complements/fiber.hpp"

using namespace complements;

namespace {

FiberModel decorated(std::int64_t self_int, std::vector<Decoration> decorations) {
    FiberModel f;
    f.components.push_back({0, 0, self_int, std::move(decorations), 1});
    return f;
}

}  // namespace

int main() {
    using D = Decoration;
    std::vector<FiberModel> models;

    FiberModel wheel;
    wheel.shape = CurveShape::Wheel;
    wheel.components.assign(3, FiberComponent{0, 0, -2, {}, 2});
    models.push_back(wheel);

    models.push_back(decorated(-2, {D::A(1), D::A(1), D::A(1), D::A(1)}));
    FiberModel i2star;
    i2star.shape = CurveShape::Chain;
    i2star.components = {{0, 0, -2, {D::A(1), D::A(1)}, 1}, {0, 0, -2, {}, 1}, {0, 0, -2, {D::A(1), D::A(1)}, 1}};
    models.push_back(i2star);

    models.push_back(decorated(-1, {D::A(1), D::simple(3), D::simple(6)}));
    models.push_back(decorated(-2, {D::A(1), D::A(2), D::A(5)}));
    models.push_back(decorated(-1, {D::A(1), D::simple(4), D::simple(4)}));
    models.push_back(decorated(-2, {D::A(1), D::A(3), D::A(3)}));
    models.push_back(decorated(-1, {D::simple(3), D::simple(3), D::simple(3)}));
    models.push_back(decorated(-2, {D::A(2), D::A(2), D::A(2)}));

    for (const auto& f : models) {
        KodairaType t = classify_fiber(f);
        auto recomputed = minimal_complement_index(fiber_curve(t));
        std::cout << t.str() << ": index " << complement_index(t) << ", from the different "
                  << (recomputed ? std::to_string(*recomputed) : "none") << ", B_C =";
        auto diff = fiber_different(t).values();
        if (diff.empty()) std::cout << " 0";
        for (const auto& v : diff) std::cout << ' ' << v;
        std::cout << '\n';
    }
}
