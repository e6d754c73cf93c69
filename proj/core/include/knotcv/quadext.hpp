#pragma once

#include <optional>
#include <string>
#include <utility>

#include "knotcv/multipoly.hpp"
#include "knotcv/rational.hpp"

namespace knotcv {

// Element a + b*sqrt(d) of a quadratic extension of the rationals. d is a
// squarefree integer, d != 0, 1; purely rational values store b = 0, d = 0.
// Mixed-field arithmetic is rejected unless one operand is rational.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(Rational rational_value) : a_(std::move(rational_value)) {}
    QuadExt(Rational a, Rational b, Integer d);

    static QuadExt sqrt_integer(const Integer& n);  // exact sqrt(n) for n != 0

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& radical_part() const noexcept { return b_; }
    const Integer& radicand() const noexcept { return d_; }
    bool is_rational() const noexcept { return b_ == 0; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    QuadExt conjugate() const;
    Rational norm() const;  // a^2 - b^2 d

    QuadExt operator-() const;
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;
    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    // Exact square root. Rational values always succeed, adjoining a new
    // radicand when needed; irrational values succeed only when the root
    // stays inside the same field.
    std::optional<QuadExt> sqrt() const;

    Complex to_complex() const;  // d < 0 lands off the real axis
    std::string str() const;

private:
    Rational a_{0};
    Rational b_{0};
    Integer d_{0};
};

// n = square * squarefree_part; trial division up to a fixed bound with a
// perfect-square check on the cofactor.
Integer squarefree_split(const Integer& n, Integer& square);

bool is_rational_square(const Rational& r);
std::optional<Rational> rational_sqrt(const Rational& r);

// Roots of A t^2 + B t + C (A != 0) expressed in a quadratic extension when
// possible; second element reports a repeated root.
struct QuadRoots {
    QuadExt first;
    QuadExt second;
    bool repeated = false;
};
std::optional<QuadRoots> solve_quadratic(const QuadExt& A, const QuadExt& B, const QuadExt& C);

// Exact evaluation of a bivariate polynomial at quadratic-field coordinates.
QuadExt eval_quad(const MultiPoly& p, const QuadExt& x, const QuadExt& z);

}  // namespace knotcv
