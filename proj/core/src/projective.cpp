#include "knotcv/projective.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "knotcv/error.hpp"
#include "knotcv/polyalg.hpp"
#include "knotcv/quadext.hpp"

namespace knotcv {

namespace {

const std::vector<std::string>& xyz_ring() {
    static const std::vector<std::string> vars{"X", "Y", "Z"};
    return vars;
}

int arg_max_abs(const ProjectivePoint& p) {
    double ax = std::abs(p.X), ay = std::abs(p.Y), az = std::abs(p.Z);
    if (ax >= ay && ax >= az) return 0;
    if (ay >= az) return 1;
    return 2;
}

bool point_less(const ProjectivePoint& a, const ProjectivePoint& b) {
    auto key = [](const ProjectivePoint& p) {
        return std::array<double, 6>{p.X.real(), p.X.imag(), p.Y.real(),
                                     p.Y.imag(), p.Z.real(), p.Z.imag()};
    };
    return key(a) < key(b);
}

}  // namespace

ProjectivePoint normalize_point(ProjectivePoint p) {
    Complex c = p.X;
    int k = arg_max_abs(p);
    if (k == 1) c = p.Y;
    if (k == 2) c = p.Z;
    if (std::abs(c) == 0.0) throw_input("projective point has no nonzero coordinate");
    p.X /= c;
    p.Y /= c;
    p.Z /= c;
    switch (k) {
        case 0: p.X = Complex(1.0, 0.0); break;
        case 1: p.Y = Complex(1.0, 0.0); break;
        default: p.Z = Complex(1.0, 0.0); break;
    }
    return p;
}

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
    ProjectivePoint na = normalize_point(a);
    ProjectivePoint nb = normalize_point(b);
    return std::abs(na.X - nb.X) < tol && std::abs(na.Y - nb.Y) < tol &&
           std::abs(na.Z - nb.Z) < tol;
}

ProjectiveCurve projective_closure(const PlaneCurve& curve) {
    const MultiPoly& f = curve.poly;
    long d = f.total_degree();
    if (d <= 0) throw_input("projective closure needs a nonconstant curve");
    MultiPoly h = MultiPoly::constant(xyz_ring(), Rational(0));
    for (const auto& [mono, c] : f.terms()) {
        unsigned i = mono[0], j = mono[1];
        h.add_term({i, static_cast<unsigned>(d) - i - j, j}, c);
    }
    return ProjectiveCurve{h.primitive(), d, f.vars()};
}

PlaneCurve dehomogenize(const ProjectiveCurve& pc) {
    MultiPoly f = MultiPoly::constant(pc.affine_vars, Rational(0));
    for (const auto& [mono, c] : pc.poly.terms()) f.add_term({mono[0], mono[2]}, c);
    return make_plane_curve(f);
}

std::vector<ProjectivePoint> ideal_points(const ProjectiveCurve& pc) {
    // Restrict to Y = 0: a binary form b(X, Z) of degree pc.degree.
    std::vector<Rational> b(static_cast<std::size_t>(pc.degree) + 1, Rational(0));
    bool any = false;
    for (const auto& [mono, c] : pc.poly.terms()) {
        if (mono[1] != 0) continue;
        b[mono[2]] = c;
        any = true;
    }
    if (!any) throw_input("degenerate closure: curve contains the ideal line");

    std::vector<ProjectivePoint> pts;
    std::size_t lo = 0, hi = b.size() - 1;
    while (lo < b.size() && b[lo] == 0) ++lo;
    while (hi > lo && b[hi] == 0) --hi;
    if (lo > 0) pts.push_back({Complex(1, 0), Complex(0, 0), Complex(0, 0)});
    if (hi + 1 < b.size()) pts.push_back({Complex(0, 0), Complex(0, 0), Complex(1, 0)});

    // Remaining factor has nonzero ends; its roots t give points [1 : 0 : t].
    if (hi > lo) {
        std::vector<Rational> q(b.begin() + static_cast<long>(lo),
                                b.begin() + static_cast<long>(hi) + 1);
        MultiPoly qp = MultiPoly::constant({"t"}, Rational(0));
        for (std::size_t k = 0; k < q.size(); ++k)
            qp.add_term({static_cast<unsigned>(k)}, q[k]);
        MultiPoly sq = squarefree_part(qp, 0);
        std::vector<Complex> roots;
        if (sq.degree_in(0) <= 2) {
            Rational c0 = sq.coeff({0});
            Rational c1 = sq.coeff({1});
            if (sq.degree_in(0) == 1) {
                roots.push_back(Complex(to_double(Rational(-c0 / c1)), 0.0));
            } else {
                Rational c2 = sq.coeff({2});
                auto pair = solve_quadratic(QuadExt(c2), QuadExt(c1), QuadExt(c0));
                if (pair) {
                    roots.push_back(pair->first.to_complex());
                    roots.push_back(pair->second.to_complex());
                }
            }
        }
        if (roots.empty()) {
            std::vector<Complex> cs;
            for (std::size_t k = 0; k <= static_cast<std::size_t>(sq.degree_in(0)); ++k)
                cs.push_back(Complex(to_double(sq.coeff({static_cast<unsigned>(k)})), 0.0));
            roots = aberth(cs);
        }
        for (Complex t : roots)
            pts.push_back(normalize_point({Complex(1, 0), Complex(0, 0), t}));
    }

    std::sort(pts.begin(), pts.end(), point_less);
    return pts;
}

}  // namespace knotcv
