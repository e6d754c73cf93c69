#pragma once

#include <string>
#include <vector>

#include "knotcv/charvariety.hpp"
#include "knotcv/multipoly.hpp"
#include "knotcv/roots.hpp"

namespace knotcv {

// Point of CP^2 stored on the affine slice where the largest coordinate is 1.
struct ProjectivePoint {
    Complex X{0.0, 0.0};
    Complex Y{0.0, 0.0};
    Complex Z{0.0, 0.0};
};

ProjectivePoint normalize_point(ProjectivePoint p);
bool same_point(const ProjectivePoint& a, const ProjectivePoint& b, double tol = 1e-9);

// Closure of an affine plane curve under (x, z) = (X/Y, Z/Y).
struct ProjectiveCurve {
    MultiPoly poly;                        // homogeneous in (X, Y, Z)
    long degree = 0;
    std::vector<std::string> affine_vars;  // names restored by dehomogenize
};

ProjectiveCurve projective_closure(const PlaneCurve& curve);

// Chart Y = 1; inverse of projective_closure on the affine part.
PlaneCurve dehomogenize(const ProjectiveCurve& pc);

// Distinct points of the curve on the line Y = 0, sorted by coordinates.
// A curve containing that line has no isolated points there and is rejected.
std::vector<ProjectivePoint> ideal_points(const ProjectiveCurve& pc);

}  // namespace knotcv
