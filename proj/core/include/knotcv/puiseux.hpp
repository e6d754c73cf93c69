#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotcv/multipoly.hpp"
#include "knotcv/projective.hpp"

namespace knotcv {

// Truncated Laurent series in one parameter with complex coefficients.
// Exponents are exact integers; coefficients at exponents >= trunc are
// unknown. Arithmetic tracks the trusted window.
struct LaurentSeries {
    std::map<long, Complex> coef;
    long trunc = 0;
};

LaurentSeries ls_constant(Complex c, long trunc);
LaurentSeries ls_monomial(long exp, Complex c, long trunc);
LaurentSeries ls_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ls_sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ls_mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries ls_scale(const LaurentSeries& a, Complex c);
// Leading exponent of the kept coefficients; the series must be nonempty.
long ls_order(const LaurentSeries& a);
LaurentSeries ls_inverse(const LaurentSeries& a);
LaurentSeries ls_pow(const LaurentSeries& a, long n);

// One local branch of a plane curve, parametrized by t: the two affine
// coordinates of the curve are Laurent series in t and the ramification
// index e makes the chart coordinate exactly t^e.
struct PuiseuxBranch {
    ProjectivePoint center;
    int chart = 1;                          // coordinate of CP^2 fixed to 1
    std::string param = "t";
    long e = 1;
    long order = 0;                         // exponents < order are trusted
    std::vector<std::string> affine_vars;
    LaurentSeries first;                    // e.g. x (or m) along the branch
    LaurentSeries second;                   // e.g. z (or l) along the branch
    double residual = 0.0;                  // curve equation, relative
};

// Complete set of branches of the curve at the point. Exponents up to
// roughly `order` (in the branch parameter) are computed.
std::vector<PuiseuxBranch> branch_expansions(const ProjectiveCurve& pc,
                                             const ProjectivePoint& point,
                                             long order = 12);

// Quotient of polynomials in the curve's affine coordinates.
struct RatFunc {
    MultiPoly num;
    MultiPoly den;
};

RatFunc rat(MultiPoly num);
RatFunc rat(MultiPoly num, MultiPoly den);

// f restricted to the branch; f's variables must embed into the branch ring.
LaurentSeries compose_on_branch(const MultiPoly& f, const PuiseuxBranch& br);

// Order of zero (positive) or pole (negative) of f along the branch.
// A series that cancels to the truncation order raises a numeric error
// suggesting a larger expansion order.
long valuation(const RatFunc& f, const PuiseuxBranch& br);

// Leading series coefficient of f along the branch.
Complex leading_value(const RatFunc& f, const PuiseuxBranch& br);

// (-1)^{v(f)v(g)} f^{v(g)}/g^{v(f)} evaluated at the branch center.
Complex tame_symbol(const RatFunc& f, const RatFunc& g, const PuiseuxBranch& br);

}  // namespace knotcv
