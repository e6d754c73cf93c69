#include "knotcv/projective.hpp"

#include <cmath>

#include "doctest.h"
#include "knotcv/charvariety.hpp"
#include "knotcv/error.hpp"

using namespace knotcv;

namespace {

MultiPoly PXZ(const std::string& s) { return MultiPoly::parse(s, {"x", "z"}); }
MultiPoly PH(const std::string& s) { return MultiPoly::parse(s, {"X", "Y", "Z"}); }

PlaneCurve fig8_geometric() {
    return make_plane_curve(PXZ("z^2 - (1 + x^2) z + 2 x^2 - 1"));
}

}  // namespace

TEST_CASE("projective closure of the geometric component") {
    auto pc = projective_closure(fig8_geometric());
    CHECK(pc.degree == 3);
    CHECK(pc.poly == PH("Y Z^2 - Y^2 Z - X^2 Z + 2 X^2 Y - Y^3").primitive());
    CHECK(pc.affine_vars == std::vector<std::string>{"x", "z"});
}

TEST_CASE("closure of a line is already homogeneous") {
    auto pc = projective_closure(make_plane_curve(PXZ("z - x")));
    CHECK(pc.degree == 1);
    CHECK(pc.poly == PH("X - Z").primitive());
}

TEST_CASE("dehomogenize undoes the closure on the affine part") {
    for (const auto& text : {"z^2 - (1 + x^2) z + 2 x^2 - 1", "z - x", "x z - 1",
                             "x^3 + z^3 - 3 x z + 1"}) {
        auto curve = make_plane_curve(PXZ(text));
        CHECK(dehomogenize(projective_closure(curve)).poly == curve.poly);
    }
}

TEST_CASE("ideal points of the geometric component") {
    auto pts = ideal_points(projective_closure(fig8_geometric()));
    REQUIRE(pts.size() == 2);
    CHECK(same_point(pts[0], {Complex(0, 0), Complex(0, 0), Complex(1, 0)}));
    CHECK(same_point(pts[1], {Complex(1, 0), Complex(0, 0), Complex(0, 0)}));
}

TEST_CASE("ideal points of a circle are conjugate") {
    auto pts = ideal_points(projective_closure(make_plane_curve(PXZ("x^2 + z^2 - 1"))));
    REQUIRE(pts.size() == 2);
    CHECK(same_point(pts[0], {Complex(1, 0), Complex(0, 0), Complex(0, -1)}));
    CHECK(same_point(pts[1], {Complex(1, 0), Complex(0, 0), Complex(0, 1)}));
}

TEST_CASE("a line has a single ideal point") {
    auto pts = ideal_points(projective_closure(make_plane_curve(PXZ("z - 2 x - 1"))));
    REQUIRE(pts.size() == 1);
    CHECK(same_point(pts[0], {Complex(1, 0), Complex(0, 0), Complex(2, 0)}));
}

TEST_CASE("curve containing the ideal line is rejected") {
    ProjectiveCurve bad{PH("X Y - Y^2"), 2, {"x", "z"}};
    CHECK_THROWS_AS(ideal_points(bad), Error);
}

TEST_CASE("point normalization and comparison") {
    ProjectivePoint p{Complex(2, 0), Complex(0, 0), Complex(4, 0)};
    auto np = normalize_point(p);
    CHECK(std::abs(np.Z - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(np.X - Complex(0.5, 0)) < 1e-15);
    CHECK(same_point(p, {Complex(1, 0), Complex(0, 0), Complex(2, 0)}));
    CHECK_FALSE(same_point(p, {Complex(1, 0), Complex(0, 0), Complex(0, 0)}));
    CHECK_THROWS_AS(normalize_point({Complex(0, 0), Complex(0, 0), Complex(0, 0)}), Error);
}
