#pragma once

#include <optional>
#include <utility>

#include "knotcv/pathtrack.hpp"
#include "knotcv/puiseux.hpp"

namespace knotcv {

struct FormIntegrals {
    double eta = 0.0;    // integral of log|l| d arg m - log|m| d arg l
    double xi = 0.0;     // integral of -(log|m| d log|l| + arg l d arg m)
    double error = 0.0;  // Richardson estimate over both channels
    Complex holonomy{1.0, 0.0};  // r(l, m) of the path when closed
};

// Composite trapezoid over the path samples; the error field compares the
// full grid against its half grid.
FormIntegrals integrate_forms(const CurvePath& path);

struct VolCsPair {
    double vol = 0.0;
    double cs = 0.0;
};

// Volume and Chern-Simons functions along the path relative to the preset
// constants. The path must start at the m = 1 base point.
VolCsPair vol_cs(const CurvePath& path, double vol_k, double cs_k);

// Flat-line-bundle holonomy of the pair (f, g) around a closed loop:
// exp((1/2pi i)(int log f dg/g - log g(t0) int df/f)) with log f tracked
// continuously and base values on the 0 <= arg < 2pi branch.
Complex holonomy(const RatFunc& f, const RatFunc& g, const CurvePath& loop);

// Nearest rational with denominator <= max_den via continued fractions;
// absent when no such rational lies within tol.
std::optional<std::pair<long, long>> detect_rational(double value, long max_den, double tol);

}  // namespace knotcv
