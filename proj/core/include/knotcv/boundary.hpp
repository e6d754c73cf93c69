#pragma once

#include <array>

#include "knotcv/charvariety.hpp"
#include "knotcv/multipoly.hpp"
#include "knotcv/presentation.hpp"

namespace knotcv {

// Traces of the peripheral system restricted to one curve component, each
// reduced modulo the component in its second variable.
struct BoundaryTriple {
    MultiPoly I_mu;
    MultiPoly I_lambda;
    MultiPoly I_mulambda;
    PlaneCurve modulus;
};

// Boundary character of the diagonal representation with eigenvalues m, l.
std::array<Complex, 3> t_D(Complex m, Complex l);

// x^2 + y^2 + z^2 - x y z - 4: vanishes exactly on the boundary-torus
// character variety.
Complex surface_residual(Complex x, Complex y, Complex z);

// Trace polynomials of meridian, longitude, meridian*longitude at y = x,
// reduced modulo the component. Requires a longitude word and a component
// with constant leading z-coefficient.
BoundaryTriple restriction_map(const PlaneCurve& component, const KnotPresentation& pres);

// Eigenvalue-variety factor cut out by the component: eliminates (x, z)
// from the component together with the three eigenvalue relations
// m^2 - x m + 1, l^2 - I_lambda l + 1, (ml)^2 - I_mulambda (ml) + 1.
// Squarefree, integer-primitive, monomial-free in (m, l).
PlaneCurve a_polynomial(const PlaneCurve& component, const BoundaryTriple& triple);

}  // namespace knotcv
