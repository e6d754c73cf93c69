#pragma once

#include <vector>

#include "knotcv/boundary.hpp"
#include "knotcv/charvariety.hpp"
#include "knotcv/csnorm.hpp"
#include "knotcv/multipoly.hpp"
#include "knotcv/quadext.hpp"

namespace knotcv {

// Primitive slope p*mu + q*lambda on the boundary torus.
struct SurgerySlope {
    long p = 1;
    long q = 0;
};

// Enforces gcd(p, q) = 1; rejects (0, 0).
SurgerySlope make_slope(long p, long q);

// All intersection points of { component = 0, I_gamma = sign } sharing one
// meridian trace. Multiplicities are read per point from the sheared
// eliminant; the entry multiplicity sums its fiber.
struct SurgeryEntry {
    int sign = 2;
    Complex x_value;
    bool exact = false;
    QuadExt x_exact;
    std::vector<Complex> z_values;
    std::vector<long> z_mults;
    long multiplicity = 0;
    bool excluded = false;      // meridian trace is +-2
    bool reducible = false;     // matches a reducible character on the curve
    bool one_to_one = false;    // meridian and longitude traces both +-2
};

struct SignedEliminant {
    int sign = 2;
    MultiPoly plain;    // z eliminated, polynomial in x
    MultiPoly sheared;  // z eliminated after x -> x - shear*z
};

struct SurgeryReport {
    SurgerySlope slope;
    MultiPoly gamma_poly;  // I_gamma reduced mod the component
    std::vector<SurgeryEntry> chi_list;
    long b = 0;       // total multiplicity over both signs
    long lambda = 0;  // b minus excluded multiplicities
    unsigned seed = 0;
    Rational shear;
    std::vector<SignedEliminant> eliminants;
};

// tr(mu^p lambda^q) with (tr mu, tr lambda, tr mu*lambda) bound to the
// restricted triple, reduced modulo the component.
MultiPoly gamma_trace_on_component(SurgerySlope slope, const BoundaryTriple& triple);

// Solves { component = 0, I_gamma^2 - 4 = 0 } sign by sign. Multiplicity of
// a point is the multiplicity of its image in the eliminant after a seeded
// rational shear; entries with meridian trace +-2 are excluded from lambda;
// reducible entries are the Alexander-locus characters.
SurgeryReport intersection_set(SurgerySlope slope, const PlaneCurve& component,
                               const BoundaryTriple& triple, const MultiPoly& alexander,
                               unsigned seed = 0);

// Norm-side invariants of the slope read off the ideal branches, with the
// checks lambda <= b and lambda + i_hat <= norm.
struct NormComparison {
    long lambda = 0;
    long b = 0;
    long norm = 0;
    long i_hat = 0;        // total ideal zero order of I_gamma^2 - 4
    long deg_f_gamma = 0;  // total ideal pole order of I_gamma^2 - 4
    std::vector<long> branch_zero_orders;
    std::vector<long> branch_pole_orders;
    bool lambda_le_b = false;
    bool degree_bound = false;          // lambda + i_hat <= norm
    bool transversality_caveat = false;  // some point has multiplicity > 1
};

NormComparison compare_with_norm(const SurgeryReport& report, const NormForm& form);

}  // namespace knotcv
