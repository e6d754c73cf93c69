#include <doctest.h>

#include <cmath>
#include <string>

#include "knotcv/error.hpp"
#include "knotcv/presentation.hpp"

using namespace knotcv;

namespace {

// Lobachevsky function -integral_0^theta log|2 sin t| dt: series head on
// [0, eps] plus adaptive Simpson on [eps, theta].
double neg_log_2sin(double t) { return -std::log(2.0 * std::sin(t)); }

double simpson(double a, double b) {
    double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (neg_log_2sin(a) + 4.0 * neg_log_2sin(m) + neg_log_2sin(b));
}

double adaptive(double a, double b, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double left = simpson(a, m);
    double right = simpson(m, b);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(a, m, left, tol / 2.0, depth - 1) +
           adaptive(m, b, right, tol / 2.0, depth - 1);
}

double lobachevsky(double theta) {
    double eps = 0.01;
    double head = eps * (1.0 - std::log(2.0 * eps)) + eps * eps * eps / 18.0 +
                  std::pow(eps, 5) / 900.0;
    return head + adaptive(eps, theta, simpson(eps, theta), 1e-14, 40);
}

}  // namespace

TEST_CASE("built-in figure-eight data") {
    KnotPresentation p = figure_eight();
    p.validate();
    CHECK(p.name == "fig8");
    CHECK(p.relator.letters() == std::vector<int>{-2, -1, 2, 1, -2, 1, 2, -1, -2, 1});
    CHECK(p.meridian == GroupWord::parse("a"));
    CHECK(p.longitude.letters() == std::vector<int>{-2, 1, 2, -1, -1, 2, 1, -2});
    CHECK(p.alexander.eval_exact({Rational(1)}) == -1);
    REQUIRE(p.vol_constant.has_value());
    REQUIRE(p.cs_constant.has_value());
    CHECK(*p.cs_constant == 0.0);
}

TEST_CASE("volume constant matches the Lobachevsky value") {
    KnotPresentation p = figure_eight();
    double vol = 6.0 * lobachevsky(3.14159265358979323846 / 3.0);
    CHECK(std::abs(vol - *p.vol_constant) < 1e-9);
}

TEST_CASE("preset text round trip") {
    std::string text =
        "# sample\n"
        "name = demo\n"
        "relator = a b A B  # trailing comment\n"
        "meridian = a\n"
        "longitude = b\n"
        "alexander = t - 2\n"
        "vol_constant = 1.5\n";
    KnotPresentation p = parse_presentation(text);
    CHECK(p.name == "demo");
    CHECK(p.relator == GroupWord::parse("abAB"));
    CHECK(p.has_longitude());
    REQUIRE(p.vol_constant.has_value());
    CHECK(*p.vol_constant == 1.5);
    CHECK_FALSE(p.cs_constant.has_value());
}

TEST_CASE("preset file on disk matches the built-in") {
    KnotPresentation disk = load_presentation(std::string(KNOTCV_PRESET_DIR) + "/fig8.knot");
    KnotPresentation mem = figure_eight();
    CHECK(disk.relator == mem.relator);
    CHECK(disk.meridian == mem.meridian);
    CHECK(disk.longitude == mem.longitude);
    CHECK(disk.alexander == mem.alexander);
    CHECK(disk.name == mem.name);
    CHECK(*disk.vol_constant == doctest::Approx(*mem.vol_constant).epsilon(1e-12));
}

TEST_CASE("load by built-in name") {
    KnotPresentation p = load_presentation("fig8");
    CHECK(p.name == "fig8");
    CHECK_THROWS_AS(load_presentation("no_such_knot"), Error);
}

TEST_CASE("validation failures") {
    CHECK_THROWS_AS(parse_presentation("relator = a\nmeridian = a\nalexander = t - 1\n"),
                    Error);
    CHECK_THROWS_AS(parse_presentation("meridian = a\nalexander = t - 2\n"), Error);
    CHECK_THROWS_AS(parse_presentation("relator = a\nmeridian = a\nalexander = t - 2\nbogus = 1\n"),
                    Error);
    KnotPresentation free_group;
    free_group.meridian = GroupWord::parse("a");
    free_group.alexander = MultiPoly::parse("t - 2", {"t"});
    CHECK_THROWS_AS(free_group.validate(), Error);
}
