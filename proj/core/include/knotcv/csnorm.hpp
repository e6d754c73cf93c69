#pragma once

#include <vector>

#include "knotcv/boundary.hpp"
#include "knotcv/puiseux.hpp"

namespace knotcv {

// One ideal branch with the pole data of the peripheral trace functions.
struct IdealBranchData {
    PuiseuxBranch branch;
    long v_mu = 0;       // valuation of the meridian trace
    long v_lambda = 0;   // valuation of the longitude trace
    long w_mu = 0;       // pole order of tr^2 - 4 for the meridian
    long w_lambda = 0;   // same for the longitude
    int sign = 1;        // resolved relative sign of the two weights
};

// The norm as a finite family of linear functionals, one per ideal branch:
// ||(p, q)|| = sum_i |w_mu_i p + sign_i w_lambda_i q|. Signs are the
// lexicographically first assignment under which only (0,0) has norm zero.
// The closure is kept so callers can re-expand branches at higher order.
struct NormForm {
    std::vector<IdealBranchData> points;
    ProjectiveCurve closure;
};

NormForm cs_norm_form(const PlaneCurve& component, const BoundaryTriple& triple);

long cs_norm(const NormForm& form, long p, long q);

}  // namespace knotcv
