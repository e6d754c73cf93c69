#include "knotcv/pathtrack.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "knotcv/error.hpp"
#include "knotcv/polyalg.hpp"
#include "knotcv/roots.hpp"

namespace knotcv {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSeparationFloor = 1e-6;
constexpr double kResidualCap = 1e-9;

// Angle difference folded into (-pi, pi].
double principal(Complex a, Complex b) { return std::arg(b / a); }

std::string t_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", t);
    return buf;
}

// Univariate view of the curve along the fiber variable with numeric
// coefficients, plus scale data for relative residuals.
class FiberSolver {
public:
    explicit FiberSolver(const PlaneCurve& curve) {
        const MultiPoly& p = curve.poly;
        if (p.vars().size() != 2) throw_input("fiber tracking needs a bivariate curve");
        long ldeg = p.degree_in(1);
        if (ldeg < 1) throw_input("curve has no fiber variable dependence");
        coeffs_.resize(static_cast<std::size_t>(ldeg) + 1);
        for (const auto& [mono, c] : p.terms()) {
            coeffs_[static_cast<std::size_t>(mono[1])].push_back({mono[0], to_double(c)});
            max_m_deg_ = std::max(max_m_deg_, static_cast<long>(mono[0]));
        }
    }

    // Ascending fiber-polynomial coefficients at the driver value m.
    std::vector<Complex> coefficients(Complex m) const {
        std::vector<Complex> pw(static_cast<std::size_t>(max_m_deg_) + 1);
        pw[0] = Complex(1.0, 0.0);
        for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * m;
        std::vector<Complex> out(coeffs_.size());
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            Complex acc(0.0, 0.0);
            for (const auto& [e, c] : coeffs_[j]) acc += c * pw[static_cast<std::size_t>(e)];
            out[j] = acc;
        }
        return out;
    }

    std::vector<Complex> roots(Complex m, double t_global) const {
        std::vector<Complex> cs = coefficients(m);
        double scale = 0.0;
        for (const Complex& c : cs) scale = std::max(scale, std::abs(c));
        while (cs.size() > 1 && std::abs(cs.back()) < 1e-13 * scale) cs.pop_back();
        if (cs.size() < 2)
            throw_numeric("l-fiber degenerates at t=" + t_label(t_global) +
                          "; reroute the driver");
        std::vector<Complex> rs = aberth(cs);
        for (Complex& r : rs) r = polish(cs, r);
        std::sort(rs.begin(), rs.end(), [](Complex a, Complex b) {
            if (a.real() != b.real()) return a.real() < b.real();
            return a.imag() < b.imag();
        });
        return rs;
    }

    // Relative residual of the curve equation at the sample.
    double residual(Complex m, Complex l) const {
        std::vector<Complex> cs = coefficients(m);
        Complex acc(0.0, 0.0);
        Complex lp(1.0, 0.0);
        double scale = 0.0;
        for (const Complex& c : cs) {
            Complex t = c * lp;
            acc += t;
            scale = std::max(scale, std::abs(t));
            lp *= l;
        }
        return std::abs(acc) / std::max(1.0, scale);
    }

private:
    static Complex polish(const std::vector<Complex>& cs, Complex r) {
        for (int k = 0; k < 2; ++k) {
            Complex v(0.0, 0.0), d(0.0, 0.0);
            for (std::size_t j = cs.size(); j-- > 0;) {
                d = d * r + v;
                v = v * r + cs[j];
            }
            if (std::abs(d) == 0.0) break;
            r -= v / d;
        }
        return r;
    }

    std::vector<std::vector<std::pair<long, double>>> coeffs_;
    long max_m_deg_ = 0;
};

double min_separation(const std::vector<Complex>& roots) {
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            sep = std::min(sep, std::abs(roots[i] - roots[j]));
    return sep;
}

// Distance first, then the (Im, Re)-largest root; keeps branch choice
// deterministic when the prediction sits between colliding roots.
Complex nearest_root(const std::vector<Complex>& roots, Complex pred) {
    Complex best = roots.front();
    double bd = std::abs(best - pred);
    for (const Complex& r : roots) {
        double d = std::abs(r - pred);
        if (d < bd - 1e-12 * (1.0 + bd)) {
            best = r;
            bd = d;
        } else if (std::abs(d - bd) <= 1e-12 * (1.0 + bd)) {
            if (r.imag() > best.imag() ||
                (r.imag() == best.imag() && r.real() > best.real())) {
                best = r;
                bd = d;
            }
        }
    }
    return best;
}

std::vector<PathArc> oriented_arcs(const PathSpec& spec) {
    if (spec.arcs.empty()) throw_input("driver has no arcs");
    std::vector<PathArc> arcs = spec.arcs;
    if (spec.orientation < 0) {
        std::reverse(arcs.begin(), arcs.end());
        for (PathArc& a : arcs) {
            if (a.circular)
                std::swap(a.angle0, a.angle1);
            else
                std::swap(a.from, a.to);
        }
    }
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i) {
        Complex tail = arc_point(arcs[i], 1.0);
        Complex head = arc_point(arcs[i + 1], 0.0);
        if (std::abs(tail - head) > 1e-9 * (1.0 + std::abs(tail)))
            throw_input("driver arcs are not contiguous");
    }
    return arcs;
}

}  // namespace

PathArc line_arc(Complex from, Complex to) {
    PathArc a;
    a.circular = false;
    a.from = from;
    a.to = to;
    return a;
}

PathArc circle_arc(Complex center, double radius, double angle0, double turns) {
    if (radius <= 0.0) throw_input("arc radius must be positive");
    PathArc a;
    a.circular = true;
    a.center = center;
    a.radius = radius;
    a.angle0 = angle0;
    a.angle1 = angle0 + 2.0 * kPi * turns;
    return a;
}

Complex arc_point(const PathArc& arc, double t) {
    if (!arc.circular) return arc.from + (arc.to - arc.from) * t;
    double th = arc.angle0 + (arc.angle1 - arc.angle0) * t;
    return arc.center + arc.radius * Complex(std::cos(th), std::sin(th));
}

CurvePath track_path(const PlaneCurve& curve, const PathSpec& spec, long min_samples,
                     long circuits) {
    if (min_samples < 8) throw_input("min_samples must be at least 8");
    if (circuits < 1) throw_input("circuits must be at least 1");
    std::vector<PathArc> arcs = oriented_arcs(spec);
    FiberSolver fiber(curve);

    Complex m0 = arc_point(arcs.front(), 0.0);
    if (fiber.residual(m0, spec.start_l) > 1e-8)
        throw_input("start point is not on the curve");

    std::vector<Complex> roots0 = fiber.roots(m0, 0.0);
    Complex l0 = nearest_root(roots0, spec.start_l);
    bool prev_collided = min_separation(roots0) < kSeparationFloor;

    CurvePath path;
    path.circuits = circuits;
    PathSample base;
    base.t = 0.0;
    base.m = m0;
    base.l = l0;
    base.log_abs_m = std::log(std::abs(m0));
    base.arg_m = std::arg(m0) < 0 ? std::arg(m0) + 2.0 * kPi : std::arg(m0);
    base.log_abs_l = std::log(std::abs(l0));
    base.arg_l = std::arg(l0) < 0 ? std::arg(l0) + 2.0 * kPi : std::arg(l0);
    path.samples.push_back(base);
    path.max_residual = fiber.residual(m0, l0);

    long per_arc = std::max<long>(8, min_samples / static_cast<long>(arcs.size()));
    double total_legs = static_cast<double>(arcs.size()) * static_cast<double>(circuits);

    for (long cyc = 0; cyc < circuits; ++cyc) {
        for (std::size_t ai = 0; ai < arcs.size(); ++ai) {
            const PathArc& arc = arcs[ai];
            bool last_leg = (cyc == circuits - 1) && (ai == arcs.size() - 1);
            double leg_base = (static_cast<double>(cyc) * arcs.size() + ai) / total_legs;
            double dt0 = 1.0 / static_cast<double>(per_arc);
            double dt = dt0;
            double tl = 0.0;
            // secant predictor state local to the leg
            Complex prev_l = path.samples.back().l;
            double prev_t = 0.0;
            bool have_two = false;
            Complex prev2_l;
            double prev2_t = 0.0;
            while (tl < 1.0) {
                double tn = std::min(tl + dt, 1.0);
                Complex mn = arc_point(arc, tn);
                double tg = leg_base + tn / total_legs;
                std::vector<Complex> roots = fiber.roots(mn, tg);
                double sep = min_separation(roots);
                bool at_end = last_leg && tn >= 1.0;
                if (sep < kSeparationFloor && !at_end)
                    throw_numeric("fiber roots within 1e-6 of each other at t=" + t_label(tg) +
                                  "; reroute the driver");
                Complex pred = prev_l;
                if (have_two && tn > prev_t)
                    pred = prev_l + (prev_l - prev2_l) / (prev_t - prev2_t) * (tn - prev_t);
                Complex ln = nearest_root(roots, pred);
                double drift = std::abs(ln - pred);
                const PathSample& ps = path.samples.back();
                double dam = principal(ps.m, mn);
                double dal = principal(ps.l, ln);
                bool guard = !prev_collided && !(at_end && sep < kSeparationFloor) &&
                             drift * 3.0 >= sep;
                if ((guard || std::abs(dam) >= kPi / 2.0 || std::abs(dal) >= kPi / 2.0) &&
                    dt > 1e-12) {
                    dt *= 0.5;
                    continue;
                }
                if (dt <= 1e-12)
                    throw_numeric("step size underflow at t=" + t_label(tg) +
                                  "; reroute the driver");
                PathSample s;
                s.t = tg;
                s.m = mn;
                s.l = ln;
                s.log_abs_m = std::log(std::abs(mn));
                s.arg_m = ps.arg_m + dam;
                s.log_abs_l = std::log(std::abs(ln));
                s.arg_l = ps.arg_l + dal;
                path.samples.push_back(s);
                path.max_arg_jump = std::max({path.max_arg_jump, std::abs(dam), std::abs(dal)});
                path.max_residual = std::max(path.max_residual, fiber.residual(mn, ln));
                prev2_l = prev_l;
                prev2_t = prev_t;
                prev_l = ln;
                prev_t = tn;
                have_two = true;
                prev_collided = sep < kSeparationFloor;
                tl = tn;
                dt = std::min(dt * 1.5, dt0);
            }
        }
    }

    if (path.max_residual > kResidualCap)
        throw_numeric("tracked point left the curve; residual " +
                      std::to_string(path.max_residual));
    const PathSample& first = path.samples.front();
    const PathSample& last = path.samples.back();
    path.closed = std::abs(last.m - first.m) < 1e-9 * (1.0 + std::abs(first.m)) &&
                  std::abs(last.l - first.l) < 1e-8 * (1.0 + std::abs(first.l));
    return path;
}

CurvePath close_loop(const PlaneCurve& curve, const PathSpec& spec, long min_samples,
                     long max_circuits) {
    for (long c = 1; c <= max_circuits; ++c) {
        CurvePath path = track_path(curve, spec, min_samples, c);
        if (path.closed) return path;
    }
    throw_numeric("loop fails to close after " + std::to_string(max_circuits) + " circuits");
}

std::vector<Complex> singular_m_values(const PlaneCurve& curve) {
    const MultiPoly& p = curve.poly;
    if (p.vars().size() != 2) throw_input("fiber tracking needs a bivariate curve");
    std::vector<Complex> vals{Complex(0.0, 0.0)};
    auto add_roots = [&vals](const MultiPoly& q) {
        if (q.is_zero() || q.degree_in(0) < 1) return;
        MultiPoly sf = squarefree_part(q, 0);
        std::vector<Complex> cs(static_cast<std::size_t>(sf.degree_in(0)) + 1);
        for (const auto& [mono, c] : sf.terms())
            cs[static_cast<std::size_t>(mono[0])] += to_double(c);
        for (Complex r : aberth(cs)) vals.push_back(r);
    };
    add_roots(resultant(p, p.derivative(1), 1));
    add_roots(p.leading_coeff_in(1));
    std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<Complex> out;
    for (Complex v : vals)
        if (out.empty() || std::abs(v - out.back()) > 1e-9) out.push_back(v);
    return out;
}

std::vector<PathSpec> loop_library(const PlaneCurve& curve) {
    std::vector<Complex> sing = singular_m_values(curve);
    FiberSolver fiber(curve);
    std::vector<PathSpec> specs;
    for (std::size_t i = 0; i < sing.size(); ++i) {
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < sing.size(); ++j)
            if (j != i) dist = std::min(dist, std::abs(sing[i] - sing[j]));
        double radius = std::isfinite(dist) ? dist / 2.0 : 0.5;
        Complex start_m = sing[i] + radius;
        std::vector<Complex> roots;
        try {
            roots = fiber.roots(start_m, 0.0);
        } catch (const Error&) {
            continue;  // fiber degenerates on the circle start; skip the center
        }
        std::vector<bool> visited(roots.size(), false);
        for (std::size_t r = 0; r < roots.size(); ++r) {
            if (visited[r]) continue;
            PathSpec spec;
            spec.arcs = {circle_arc(sing[i], radius, 0.0, 1.0)};
            spec.start_l = roots[r];
            CurvePath path;
            try {
                path = close_loop(curve, spec, 64, static_cast<long>(roots.size()));
            } catch (const Error&) {
                visited[r] = true;  // untrackable circle; skip this branch
                continue;
            }
            // mark every branch the closed orbit passes through at angle 0
            for (long c = 0; c < path.circuits; ++c) {
                double tc = static_cast<double>(c) / static_cast<double>(path.circuits);
                const PathSample* best = &path.samples.front();
                for (const PathSample& s : path.samples)
                    if (std::abs(s.t - tc) < std::abs(best->t - tc)) best = &s;
                for (std::size_t k = 0; k < roots.size(); ++k)
                    if (std::abs(roots[k] - best->l) < 1e-6) visited[k] = true;
            }
            visited[r] = true;
            specs.push_back(std::move(spec));
        }
    }
    return specs;
}

}  // namespace knotcv
