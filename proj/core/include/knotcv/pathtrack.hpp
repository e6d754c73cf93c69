#pragma once

#include <vector>

#include "knotcv/charvariety.hpp"
#include "knotcv/multipoly.hpp"

namespace knotcv {

// One leg of a driver in the m-plane, parametrized over [0, 1].
struct PathArc {
    bool circular = false;
    Complex from;          // line endpoints; ignored for arcs
    Complex to;
    Complex center;        // arc data; ignored for lines
    double radius = 0.0;
    double angle0 = 0.0;   // radians
    double angle1 = 0.0;   // angle1 > angle0 runs counterclockwise
};

PathArc line_arc(Complex from, Complex to);
PathArc circle_arc(Complex center, double radius, double angle0, double turns);

// Point of the driver at local parameter t in [0, 1].
Complex arc_point(const PathArc& arc, double t);

// Piecewise driver for m plus the l-fiber branch chosen at the start.
// Consecutive arc endpoints must agree; orientation -1 runs the driver
// backwards.
struct PathSpec {
    std::vector<PathArc> arcs;
    Complex start_l;
    int orientation = 1;
};

struct PathSample {
    double t;  // global parameter, [0, 1] over the whole tracked path
    Complex m;
    Complex l;
    double log_abs_m = 0.0;
    double arg_m = 0.0;  // continuously unwrapped from the base sample
    double log_abs_l = 0.0;
    double arg_l = 0.0;
};

struct CurvePath {
    std::vector<PathSample> samples;
    bool closed = false;        // endpoint returned to the start in (m, l)
    long circuits = 1;          // driver repetitions tracked
    double max_residual = 0.0;  // largest relative |A(m, l)| seen
    double max_arg_jump = 0.0;  // largest single unwrapping step
};

// Predictor-corrector continuation of the chosen l-fiber branch along the
// driver. min_samples is the per-circuit floor; steps halve adaptively near
// branch points. The base sample takes the 0 <= arg < 2pi branch; later
// samples unwrap continuously.
CurvePath track_path(const PlaneCurve& curve, const PathSpec& spec, long min_samples = 256,
                     long circuits = 1);

// Repeats the driver until the tracked branch returns to the start value,
// up to max_circuits repetitions.
CurvePath close_loop(const PlaneCurve& curve, const PathSpec& spec, long min_samples = 256,
                     long max_circuits = 8);

// Singular m-values of the curve: roots of the l-discriminant, roots of the
// leading l-coefficient, and m = 0.
std::vector<Complex> singular_m_values(const PlaneCurve& curve);

// m-circles around every singular m-value, radius half the distance to the
// nearest other singular value, one spec per l-fiber branch over the
// starting point. Branches already visited by an earlier loop's circuits
// are not restarted.
std::vector<PathSpec> loop_library(const PlaneCurve& curve);

}  // namespace knotcv
