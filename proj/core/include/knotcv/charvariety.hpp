#pragma once

#include <array>
#include <optional>
#include <vector>

#include "knotcv/matrix2.hpp"
#include "knotcv/multipoly.hpp"
#include "knotcv/presentation.hpp"
#include "knotcv/quadext.hpp"

namespace knotcv {

// Squarefree, primitive plane curve in two declared variables.
struct PlaneCurve {
    MultiPoly poly;

    const std::vector<std::string>& vars() const { return poly.vars(); }
};

// Normalizes to the PlaneCurve invariants; rejects polynomials that are
// zero, constant, or not bivariate.
PlaneCurve make_plane_curve(const MultiPoly& p);

// x^2 - z - 2: trace relation satisfied by every abelian character.
MultiPoly abelian_trace_relation();

// Trace conditions (sigma(R) - 2, sigma(Ra) - sigma(a), sigma(Rb) - sigma(b))
// at y = x. Their common zero locus contains every character of a
// representation killing the relator.
std::array<MultiPoly, 3> rep_conditions(const KnotPresentation& pres);

struct CharacterVariety {
    PlaneCurve curve;                 // full defining polynomial in (x, z)
    std::vector<PlaneCurve> factors;  // abelian factor first when it splits off
    bool has_abelian_factor = false;
};

// Elimination plus per-factor verification: each factor must absorb all
// three rep conditions under division and reconstruct matrices numerically
// at sampled points.
CharacterVariety character_variety(const KnotPresentation& pres);
PlaneCurve defining_polynomial(const KnotPresentation& pres);

struct ReduciblePoint {
    Complex x_value;
    Complex z_value;
    unsigned multiplicity = 1;  // z-root multiplicity over the given x
    bool exact = false;         // exact coordinates available below
    QuadExt x_exact;
    QuadExt z_exact;
};

// Characters of reducible representations on the curve: x = m + 1/m over
// the roots m^2 of the Alexander polynomial, with z solved from the curve.
std::vector<ReduciblePoint> reducible_characters(const PlaneCurve& curve,
                                                 const MultiPoly& alexander);

struct RepAtPoint {
    bool reducible = false;
    Mat2 A;
    Mat2 B;
    double relator_residual = 0.0;
    // Longitude translation at a parabolic meridian (x = +-2), when the
    // longitude is available and lands parabolic as well.
    std::optional<Complex> translation;
};

// Matrix pair with tr A = tr B = x, tr AB = z in the triangular normal
// form; reducible characters get a commuting diagonal witness instead.
RepAtPoint numeric_rep_at(const PlaneCurve& curve, Complex x, Complex z,
                          const KnotPresentation& pres, double on_curve_tol = 1e-8);

// Resultant-based emptiness test for common zeros of the curve and its two
// partial derivatives. Sound for curves monic in one variable.
bool is_smooth_curve(const PlaneCurve& curve);

}  // namespace knotcv
