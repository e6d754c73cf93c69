#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "knotcv/error.hpp"
#include "knotcv/matrix2.hpp"
#include "knotcv/trace.hpp"

using namespace knotcv;

namespace {

MultiPoly XYZ(const std::string& s) { return MultiPoly::parse(s, trace_ring()); }
MultiPoly XZ(const std::string& s) { return MultiPoly::parse(s, {"x", "z"}); }
MultiPoly UVW(const std::string& s) { return MultiPoly::parse(s, peripheral_ring()); }

MultiPoly sigma_xz(const std::string& word) {
    return specialize_to_xz(trace_poly(GroupWord::parse(word)));
}

Complex rand_unit(std::mt19937& rng) {
    std::uniform_real_distribution<double> mag(0.7, 1.4);
    std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
    double t = phase(rng);
    return mag(rng) * Complex(std::cos(t), std::sin(t));
}

Mat2 rand_sl2(std::mt19937& rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Complex a;
    do {
        a = Complex(coef(rng), coef(rng));
    } while (std::abs(a) < 0.25);
    Complex b(coef(rng), coef(rng));
    Complex c(coef(rng), coef(rng));
    Complex d = (Complex(1.0, 0.0) + b * c) / a;
    return {a, b, c, d};
}

GroupWord rand_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    static const int alphabet[4] = {1, -1, 2, -2};
    int n = len_dist(rng);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n));
    int prev = 0;
    for (int i = 0; i < n; ++i) {
        int l;
        do {
            l = alphabet[pick(rng)];
        } while (l == -prev);
        letters.push_back(l);
        prev = l;
    }
    return GroupWord::from_letters(letters);
}

}  // namespace

TEST_CASE("base traces") {
    CHECK(trace_poly(GroupWord()) == XYZ("2"));
    CHECK(trace_poly(GroupWord::parse("a")) == XYZ("x"));
    CHECK(trace_poly(GroupWord::parse("b")) == XYZ("y"));
    CHECK(trace_poly(GroupWord::parse("a b")) == XYZ("z"));
    CHECK(trace_poly(GroupWord::parse("b a")) == XYZ("z"));
    CHECK(trace_poly(GroupWord::parse("A")) == XYZ("x"));
    CHECK(trace_poly(GroupWord::parse("a B")) == XYZ("x y - z"));
}

TEST_CASE("exact identities after binding y to x") {
    CHECK(sigma_xz("a^2") == XZ("x^2 - 2"));
    CHECK(sigma_xz("a B") == XZ("x^2 - z"));
    CHECK(sigma_xz("B a") == XZ("x^2 - z"));
    CHECK(sigma_xz("A b") == XZ("x^2 - z"));
    CHECK(sigma_xz("b A") == XZ("x^2 - z"));
    CHECK(sigma_xz("B a b A") == XZ("z^2 - x^2 z + 2 x^2 - 2"));
    CHECK(sigma_xz("A A b") == XZ("x^3 - x z - x"));
    CHECK(sigma_xz("b A A b") == XZ("x^4 - z x^2 - 2 x^2 + 2"));
    CHECK(sigma_xz("b A A b a B") == XZ("x^2 - z"));
    CHECK(sigma_xz("a B a") == XZ("x^3 - z x - x"));
    CHECK(sigma_xz("a a B") == XZ("x^3 - z x - x"));
    CHECK(sigma_xz("a a b") == XZ("x z - x"));
    CHECK(sigma_xz("a B a b A") == XZ("x"));
}

TEST_CASE("commutator trace") {
    CHECK(trace_poly(GroupWord::parse("a b A B")) ==
          XYZ("x^2 + y^2 + z^2 - x y z - 2"));
}

TEST_CASE("conjugation and inversion invariance") {
    std::vector<GroupWord> words = {
        GroupWord::parse("a b"),       GroupWord::parse("a B a b A"),
        GroupWord::parse("b A A b"),   GroupWord::parse("a^3 b^-2 a b"),
        GroupWord::parse("B A b a B a b A B a"),
    };
    std::vector<GroupWord> conjugators = {
        GroupWord::parse("a"), GroupWord::parse("b"),
        GroupWord::parse("a b"), GroupWord::parse("a B^2"),
    };
    for (const auto& w : words) {
        MultiPoly p = trace_poly(w);
        CHECK(trace_poly(w.inverse()) == p);
        for (const auto& g : conjugators) {
            CHECK(trace_poly(g * w * g.inverse()) == p);
        }
    }
}

TEST_CASE("matrix oracle over random pairs and words") {
    std::mt19937 rng(20240517u);
    const GroupWord relator = GroupWord::parse("B A b a B a b A B a");
    for (int trial = 0; trial < 520; ++trial) {
        Mat2 A = rand_sl2(rng);
        Mat2 B = rand_sl2(rng);
        GroupWord w = trial % 13 == 0 ? relator : rand_word(rng, 12);
        Complex x = A.trace();
        Complex y = B.trace();
        Complex z = (A * B).trace();
        Complex predicted = trace_poly(w).eval({x, y, z});
        Complex actual = eval_word(w, A, B).trace();
        double scale = std::max(1.0, std::abs(actual));
        REQUIRE(std::abs(predicted - actual) < 1e-8 * scale);
    }
}

TEST_CASE("peripheral trace anchors") {
    CHECK(peripheral_trace(1, 0) == UVW("u"));
    CHECK(peripheral_trace(0, 1) == UVW("v"));
    CHECK(peripheral_trace(1, 1) == UVW("w"));
    CHECK(peripheral_trace(1, -1) == UVW("u v - w"));
    CHECK(peripheral_trace(2, 1) == UVW("u w - v"));
    CHECK(peripheral_trace(3, 1) == UVW("u^2 w - w - u v"));
    CHECK(peripheral_trace(0, 2) == UVW("v^2 - 2"));
    CHECK(peripheral_trace(0, -3) == UVW("v^3 - 3 v"));
    CHECK(peripheral_trace(-2, -1) == peripheral_trace(2, 1));
    CHECK_THROWS_AS(peripheral_trace(0, 0), Error);
}

TEST_CASE("peripheral trace against commuting diagonal pairs") {
    std::mt19937 rng(777u);
    std::uniform_int_distribution<long> slope(-6, 6);
    Complex one(1.0, 0.0);
    for (int trial = 0; trial < 50; ++trial) {
        Complex m = rand_unit(rng);
        Complex l = rand_unit(rng);
        long p = slope(rng);
        long q = slope(rng);
        if (p == 0 && q == 0) p = 1;
        Complex u = m + one / m;
        Complex v = l + one / l;
        Complex w = m * l + one / (m * l);
        Complex mp = std::pow(m, static_cast<double>(p));
        Complex lq = std::pow(l, static_cast<double>(q));
        Complex expected = mp * lq + one / (mp * lq);
        Complex got = peripheral_trace(p, q).eval({u, v, w});
        double scale = std::max(1.0, std::abs(expected));
        REQUIRE(std::abs(got - expected) < 1e-9 * scale);
    }
}

TEST_CASE("peripheral degree bound in u") {
    for (long p = 1; p <= 7; ++p) {
        // Pure powers of mu reach degree p; mixing in lambda^q keeps it <= p.
        CHECK(peripheral_trace(p, 0).degree_in(0) == static_cast<unsigned>(p));
        CHECK(peripheral_trace(p, 1).degree_in(0) == static_cast<unsigned>(p - 1));
        CHECK(peripheral_trace(p, -1).degree_in(0) == static_cast<unsigned>(p));
        for (long q = -3; q <= 3; ++q) {
            CHECK(peripheral_trace(p, q).degree_in(0) <= static_cast<unsigned>(p));
        }
    }
}

TEST_CASE("specialize keeps ring and rejects lost variables") {
    MultiPoly p = XYZ("x y + z");
    std::map<std::string, MultiPoly> bind;
    bind["y"] = XYZ("x");
    MultiPoly q = specialize(p, bind);
    CHECK(q == XYZ("x^2 + z"));
    CHECK_THROWS_AS(specialize(p, bind, true), Error);
    CHECK(specialize_to_xz(p) == XZ("x^2 + z"));
}
