#include "knotcv/boundary.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "knotcv/charvariety.hpp"
#include "knotcv/error.hpp"
#include "knotcv/polyalg.hpp"
#include "knotcv/presentation.hpp"
#include "knotcv/trace.hpp"

using namespace knotcv;

namespace {

MultiPoly PXZ(const std::string& s) { return MultiPoly::parse(s, {"x", "z"}); }
MultiPoly PML(const std::string& s) { return MultiPoly::parse(s, {"m", "l"}); }

PlaneCurve fig8_geometric() {
    return make_plane_curve(PXZ("z^2 - (1 + x^2) z + 2 x^2 - 1"));
}

PlaneCurve abelian_curve() { return make_plane_curve(abelian_trace_relation()); }

}  // namespace

TEST_CASE("boundary characters satisfy the trace surface") {
    auto t = t_D(Complex(1.0, 0.0), Complex(1.0, 0.0));
    CHECK(std::abs(t[0] - Complex(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(t[1] - Complex(2.0, 0.0)) < 1e-12);
    CHECK(std::abs(t[2] - Complex(2.0, 0.0)) < 1e-12);

    auto s = t_D(Complex(0.0, 1.0), Complex(-1.0, 0.0));
    CHECK(std::abs(s[0]) < 1e-12);
    CHECK(std::abs(s[1] - Complex(-2.0, 0.0)) < 1e-12);
    CHECK(std::abs(s[2]) < 1e-12);

    CHECK(std::abs(surface_residual(t[0], t[1], t[2])) < 1e-12);
    CHECK(std::abs(surface_residual(Complex(2, 0), Complex(2, 0), Complex(2, 0))) < 1e-12);
    CHECK(std::abs(surface_residual(Complex(0, 0), Complex(0, 0), Complex(0, 0)) -
                   Complex(-4.0, 0.0)) < 1e-12);

    CHECK_THROWS_AS(t_D(Complex(0.0, 0.0), Complex(1.0, 0.0)), Error);
    CHECK_THROWS_AS(t_D(Complex(1.0, 0.0), Complex(0.0, 0.0)), Error);
}

TEST_CASE("boundary characters are inversion invariant and generically on-surface") {
    std::mt19937 rng(2024u);
    std::uniform_real_distribution<double> box(-1.5, 1.5);
    Complex one(1.0, 0.0);
    for (int i = 0; i < 100; ++i) {
        Complex m(box(rng), box(rng));
        Complex l(box(rng), box(rng));
        if (std::abs(m) < 0.1 || std::abs(l) < 0.1) continue;
        auto t = t_D(m, l);
        auto t_inv = t_D(one / m, one / l);
        CHECK(std::abs(t[0] - t_inv[0]) < 1e-9);
        CHECK(std::abs(t[1] - t_inv[1]) < 1e-9);
        CHECK(std::abs(t[2] - t_inv[2]) < 1e-9);
        CHECK(std::abs(surface_residual(t[0], t[1], t[2])) < 1e-9);
    }
}

TEST_CASE("restriction of the figure eight geometric component") {
    auto pres = figure_eight();
    auto comp = fig8_geometric();
    auto triple = restriction_map(comp, pres);

    CHECK(triple.I_mu == MultiPoly::parse("x", {"x", "z"}));
    CHECK(triple.I_lambda == PXZ("x^4 - 5 x^2 + 2"));
    CHECK(triple.I_mulambda == PXZ("(4 x - x^3) z + x^5 - 4 x^3 - x"));
    CHECK(triple.modulus.poly == comp.poly);

    // The reduced traces land back on the trace surface modulo the component.
    MultiPoly surf = triple.I_mu * triple.I_mu + triple.I_lambda * triple.I_lambda +
                     triple.I_mulambda * triple.I_mulambda -
                     triple.I_mu * triple.I_lambda * triple.I_mulambda -
                     MultiPoly::constant({"x", "z"}, Rational(4));
    CHECK(divrem(surf, comp.poly, 1).remainder.is_zero());
}

TEST_CASE("restriction of the abelian component") {
    auto pres = figure_eight();
    auto comp = abelian_curve();
    auto triple = restriction_map(comp, pres);

    CHECK(triple.I_mu == MultiPoly::parse("x", {"x", "z"}));
    CHECK(triple.I_lambda == MultiPoly::constant({"x", "z"}, Rational(2)));
    CHECK(triple.I_mulambda == MultiPoly::parse("x", {"x", "z"}));
}

TEST_CASE("restriction rejects unusable inputs") {
    auto pres = figure_eight();
    auto no_long = pres;
    no_long.longitude = GroupWord();
    CHECK_THROWS_AS(restriction_map(fig8_geometric(), no_long), Error);

    PlaneCurve zfree{PXZ("x^2 - 3")};
    CHECK_THROWS_AS(restriction_map(zfree, pres), Error);

    PlaneCurve badlc{PXZ("x z + 1")};
    CHECK_THROWS_AS(restriction_map(badlc, pres), Error);
}

TEST_CASE("eigenvalue variety of the figure eight geometric component") {
    auto pres = figure_eight();
    auto comp = fig8_geometric();
    auto triple = restriction_map(comp, pres);
    auto curve = a_polynomial(comp, triple);

    MultiPoly expected = PML("m^4 l^2 - (m^8 - m^6 - 2 m^4 - m^2 + 1) l + m^4");
    CHECK(curve.poly == expected.primitive());

    // On the unit meridian circle m = 1 the longitude eigenvalue -1 survives.
    Complex at(0.0, 0.0);
    for (const auto& [mono, c] : curve.poly.terms()) {
        double sign = (mono[1] % 2 == 0) ? 1.0 : -1.0;
        at += Complex(sign * to_double(c), 0.0);
    }
    CHECK(std::abs(at) < 1e-12);
}

TEST_CASE("eigenvalue variety coefficients are palindromic") {
    auto pres = figure_eight();
    auto comp = fig8_geometric();
    auto curve = a_polynomial(comp, restriction_map(comp, pres));

    // (m, l) -> (1/m, 1/l) preserves the curve up to a monomial unit.
    long dm = curve.poly.degree_in(0);
    long dl = curve.poly.degree_in(1);
    MultiPoly flipped = MultiPoly::constant({"m", "l"}, Rational(0));
    for (const auto& [mono, c] : curve.poly.terms()) {
        Monomial rev{static_cast<unsigned>(dm) - mono[0], static_cast<unsigned>(dl) - mono[1]};
        flipped.add_term(rev, c);
    }
    CHECK((flipped == curve.poly || flipped == curve.poly * Rational(-1)));
}

TEST_CASE("eigenvalue variety of the abelian component") {
    auto pres = figure_eight();
    auto comp = abelian_curve();
    auto curve = a_polynomial(comp, restriction_map(comp, pres));
    CHECK(curve.poly == PML("l - 1"));
}

TEST_CASE("eigenvalue variety degree stays within the elimination bound") {
    auto pres = figure_eight();
    auto comp = fig8_geometric();
    auto triple = restriction_map(comp, pres);
    auto curve = a_polynomial(comp, triple);
    CHECK(curve.poly.degree_in(1) <= 2 * comp.poly.degree_in(1));
    CHECK(curve.poly.degree_in(1) == 2);
    CHECK(curve.poly.degree_in(0) == 8);
}
