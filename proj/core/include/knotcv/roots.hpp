#pragma once

#include <vector>

#include "knotcv/multipoly.hpp"

namespace knotcv {

struct ComplexRoot {
    Complex value;
    unsigned int multiplicity = 1;
    double residual = 0.0;  // |p(value)| on the max-coefficient-normalized input
};

struct RootOptions {
    double cluster_tol = 1e-10;
    double polish_tol = 1e-13;
    int max_sweeps = 200;
};

// Simultaneous Aberth iteration for all roots of a complex polynomial given
// by ascending coefficients; intended for squarefree inputs.
std::vector<Complex> aberth(std::vector<Complex> coeffs, const RootOptions& opts = {});

// All complex roots of a univariate polynomial with exact multiplicities:
// Yun decomposition first, Aberth on each squarefree factor, Newton polish.
std::vector<ComplexRoot> complex_roots(const MultiPoly& p, double tol,
                                       const RootOptions& opts = {});

}  // namespace knotcv
