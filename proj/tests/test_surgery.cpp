#include "knotcv/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

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

struct Fixture {
    KnotPresentation pres = figure_eight();
    PlaneCurve comp = fig8_geometric();
    BoundaryTriple triple = restriction_map(comp, pres);
};

const Fixture& fx() {
    static Fixture f;
    return f;
}

SurgeryReport report(long p, long q, unsigned seed = 0) {
    return intersection_set(make_slope(p, q), fx().comp, fx().triple, fx().pres.alexander,
                            seed);
}

std::vector<QuadExt> non_excluded_exact_x(const SurgeryReport& rep, int sign) {
    std::vector<QuadExt> out;
    for (const auto& e : rep.chi_list) {
        if (e.sign != sign || e.excluded) continue;
        REQUIRE(e.exact);
        out.push_back(e.x_exact);
    }
    return out;
}

bool contains(const std::vector<QuadExt>& xs, const QuadExt& v) {
    for (const auto& x : xs)
        if (x == v) return true;
    return false;
}

double scaled_eval(const MultiPoly& f, Complex a, Complex b) {
    Complex total(0, 0);
    double scale = 1.0;
    for (const auto& [mono, c] : f.terms()) {
        Complex term = to_double(c) * std::pow(a, static_cast<int>(mono[0])) *
                       std::pow(b, static_cast<int>(mono[1]));
        total += term;
        scale = std::max(scale, std::abs(term));
    }
    return std::abs(total) / scale;
}

// Checks one character lifts to (m, l) on the eigenvalue curve with
// m^p l^q = +-1.
bool lifts_to_eigenvalue_curve(Complex x, Complex z, long p, long q, const MultiPoly& a0) {
    Complex il = fx().triple.I_lambda.eval({x, z});
    Complex iml = fx().triple.I_mulambda.eval({x, z});
    Complex dm = std::sqrt(x * x - Complex(4, 0));
    Complex dl = std::sqrt(il * il - Complex(4, 0));
    for (int sm : {1, -1}) {
        for (int sl : {1, -1}) {
            Complex m = (x + double(sm) * dm) / 2.0;
            Complex l = (il + double(sl) * dl) / 2.0;
            if (std::abs(m) < 1e-9 || std::abs(l) < 1e-9) continue;
            Complex prod = m * l;
            if (std::abs(prod + 1.0 / prod - iml) > 1e-6 * std::max(1.0, std::abs(iml)))
                continue;
            Complex e = std::pow(m, static_cast<int>(p)) * std::pow(l, static_cast<int>(q));
            double unit = std::min(std::abs(e - Complex(1, 0)), std::abs(e + Complex(1, 0)));
            if (unit > 1e-7) continue;
            if (scaled_eval(a0, m, l) > 1e-7) continue;
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("slope validation") {
    CHECK_THROWS_AS(make_slope(0, 0), Error);
    CHECK_THROWS_AS(make_slope(2, 4), Error);
    CHECK_THROWS_AS(make_slope(-3, 6), Error);
    CHECK(make_slope(1, 0).p == 1);
    CHECK(make_slope(0, -1).q == -1);
    CHECK(make_slope(-3, 1).p == -3);
}

TEST_CASE("peripheral traces on the component") {
    const auto& t = fx().triple;
    auto F = PXZ("x^4 - 5 x^2 + 2");
    auto G = PXZ("(4 x - x^3) z + x^5 - 4 x^3 - x");
    CHECK(gamma_trace_on_component(make_slope(1, 0), t) == PXZ("x"));
    CHECK(gamma_trace_on_component(make_slope(0, 1), t) == F);
    CHECK(gamma_trace_on_component(make_slope(1, 1), t) == G);
    CHECK(gamma_trace_on_component(make_slope(-1, -1), t) == G);

    auto bracket = PXZ("x^2 - 1") * G - PXZ("x") * F;
    auto expected = divrem(bracket, fx().comp.poly, 1).remainder;
    CHECK(gamma_trace_on_component(make_slope(3, 1), t) == expected);
}

TEST_CASE("slope (3,1) intersection report") {
    auto rep = report(3, 1);
    CHECK(rep.b == 16);
    CHECK(rep.lambda == 12);

    auto plus = non_excluded_exact_x(rep, 2);
    REQUIRE(plus.size() == 3);
    CHECK(contains(plus, QuadExt(Rational(1))));
    CHECK(contains(plus, QuadExt(Rational(1), Rational(1), Integer(2))));
    CHECK(contains(plus, QuadExt(Rational(1), Rational(-1), Integer(2))));

    auto minus = non_excluded_exact_x(rep, -2);
    REQUIRE(minus.size() == 3);
    CHECK(contains(minus, QuadExt(Rational(-1))));
    CHECK(contains(minus, QuadExt(Rational(-1), Rational(1), Integer(2))));
    CHECK(contains(minus, QuadExt(Rational(-1), Rational(-1), Integer(2))));

    for (const auto& e : rep.chi_list) {
        if (e.excluded) continue;
        CHECK(e.multiplicity == 2);
        CHECK(e.z_values.size() == 1);
    }
    for (const auto& e : rep.chi_list) {
        if (e.sign == 2 && e.exact && e.x_exact == QuadExt(Rational(1))) {
            REQUIRE(e.z_values.size() == 1);
            CHECK(std::abs(e.z_values[0] - Complex(1, 0)) < 1e-9);
        }
    }

    auto target = PXZ("x^2 - 2 x - 1");
    bool factor_found = false;
    for (const auto& se : rep.eliminants) {
        if (se.sign != 2) continue;
        CHECK(divrem(se.plain, target * target, 0).remainder.is_zero());
        CHECK_FALSE(divrem(se.plain, target * target * target, 0).remainder.is_zero());
        factor_found = true;
    }
    CHECK(factor_found);
}

TEST_CASE("slope (0,1) intersection report") {
    auto rep = report(0, 1);
    CHECK(rep.b == 16);
    CHECK(rep.lambda == 12);

    auto plus = non_excluded_exact_x(rep, 2);
    REQUIRE(plus.size() == 3);
    CHECK(contains(plus, QuadExt(Rational(0))));
    CHECK(contains(plus, QuadExt(Rational(0), Rational(1), Integer(5))));
    CHECK(contains(plus, QuadExt(Rational(0), Rational(-1), Integer(5))));

    for (const auto& e : rep.chi_list) {
        if (e.sign != 2 || e.excluded) continue;
        if (e.x_exact == QuadExt(Rational(0))) {
            CHECK(e.z_values.size() == 2);
            CHECK(e.multiplicity == 4);
            CHECK_FALSE(e.reducible);
        } else {
            REQUIRE(e.z_values.size() == 1);
            CHECK(std::abs(e.z_values[0] - Complex(3, 0)) < 1e-9);
            CHECK(e.multiplicity == 2);
            CHECK(e.reducible);
        }
    }

    long excluded_mult = 0;
    for (const auto& e : rep.chi_list) {
        if (!e.excluded) continue;
        CHECK(e.sign == -2);
        CHECK(e.one_to_one);
        CHECK(e.z_values.size() == 2);
        excluded_mult += e.multiplicity;
    }
    CHECK(excluded_mult == 4);
}

TEST_CASE("slope (1,0) is entirely excluded") {
    auto rep = report(1, 0);
    CHECK(rep.b == 4);
    CHECK(rep.lambda == 0);
    REQUIRE(rep.chi_list.size() == 2);
    for (const auto& e : rep.chi_list) {
        CHECK(e.excluded);
        CHECK(e.one_to_one);
        CHECK(e.multiplicity == 2);
        CHECK(e.z_values.size() == 2);
        CHECK(e.z_mults == std::vector<long>{1, 1});
    }
}

TEST_CASE("reports are stable across shear seeds") {
    auto base = report(3, 1, 1);
    for (unsigned seed : {2u, 3u, 4u, 5u}) {
        auto rep = report(3, 1, seed);
        CHECK(rep.b == base.b);
        CHECK(rep.lambda == base.lambda);
        REQUIRE(rep.chi_list.size() == base.chi_list.size());
        for (std::size_t i = 0; i < rep.chi_list.size(); ++i) {
            CHECK(rep.chi_list[i].sign == base.chi_list[i].sign);
            CHECK(std::abs(rep.chi_list[i].x_value - base.chi_list[i].x_value) < 1e-9);
            CHECK(rep.chi_list[i].multiplicity == base.chi_list[i].multiplicity);
        }
    }
}

TEST_CASE("slope involution gives identical reports") {
    for (auto [p, q] : {std::pair<long, long>{3, 1}, {0, 1}, {1, 2}}) {
        auto a = report(p, q);
        auto b = report(-p, -q);
        CHECK(a.gamma_poly == b.gamma_poly);
        CHECK(a.b == b.b);
        CHECK(a.lambda == b.lambda);
        REQUIRE(a.chi_list.size() == b.chi_list.size());
        for (std::size_t i = 0; i < a.chi_list.size(); ++i)
            CHECK(std::abs(a.chi_list[i].x_value - b.chi_list[i].x_value) < 1e-9);
    }
}

TEST_CASE("degenerate slope on the abelian component") {
    auto abel = make_plane_curve(abelian_trace_relation());
    auto triple = restriction_map(abel, fx().pres);
    CHECK_THROWS_AS(
        intersection_set(make_slope(0, 1), abel, triple, fx().pres.alexander), Error);
    try {
        intersection_set(make_slope(0, 1), abel, triple, fx().pres.alexander);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::verification);
    }
}

TEST_CASE("non-excluded characters lift to the eigenvalue curve") {
    auto a0 = PML("m^4 l^2 - (m^8 - m^6 - 2 m^4 - m^2 + 1) l + m^4");
    for (auto [p, q] : {std::pair<long, long>{3, 1}, {0, 1}, {1, 1}}) {
        auto rep = report(p, q);
        for (const auto& e : rep.chi_list) {
            if (e.excluded) continue;
            for (Complex z : e.z_values) CHECK(lifts_to_eigenvalue_curve(e.x_value, z, p, q, a0));
        }
    }
}

TEST_CASE("norm comparison across small slopes") {
    auto form = cs_norm_form(fx().comp, fx().triple);
    for (auto [p, q] : {std::pair<long, long>{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1},
                        {1, 2}, {3, 1}, {4, 1}, {-4, 1}}) {
        auto rep = report(p, q);
        auto cmp = compare_with_norm(rep, form);
        long norm = 2 * (std::labs(p + 4 * q) + std::labs(p - 4 * q));
        CHECK(cmp.norm == norm);
        CHECK(cmp.deg_f_gamma == norm);
        CHECK(cmp.lambda_le_b);
        CHECK(cmp.degree_bound);
        CHECK(cmp.b + cmp.i_hat == norm);
        CHECK(cmp.lambda == cmp.b - 4);
        long expected_ihat = (std::labs(p) == 4 && std::labs(q) == 1) ? 4 : 0;
        CHECK(cmp.i_hat == expected_ihat);
        long pole_total = 0;
        for (long v : cmp.branch_pole_orders) pole_total += v;
        CHECK(pole_total == cmp.deg_f_gamma);
        if (expected_ihat == 4) {
            // The whole contact order sits on the branch where the limiting
            // eigenvalue of the filling curve is a root of unity; the other
            // ideal branch carries the full pole.
            std::vector<long> zo = cmp.branch_zero_orders;
            std::sort(zo.begin(), zo.end());
            CHECK(zo == std::vector<long>{0, 4});
            std::vector<long> po = cmp.branch_pole_orders;
            std::sort(po.begin(), po.end());
            CHECK(po == std::vector<long>{0, 16});
        }
    }
}
