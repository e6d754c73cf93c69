#include "knotcv/charvariety.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "knotcv/error.hpp"
#include "knotcv/polyalg.hpp"
#include "knotcv/roots.hpp"
#include "knotcv/trace.hpp"

namespace knotcv {

namespace {

// Dense univariate polynomials over a quadratic field, ascending
// coefficients. Field division makes plain Euclid and Yun exact here.

using QPoly = std::vector<QuadExt>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly qderivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * QuadExt(Rational(static_cast<long>(i))));
    qtrim(d);
    return d;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), QuadExt(Rational(0)));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    qtrim(a);
    return a;
}

QPoly qrem(QPoly a, const QPoly& b) {
    if (b.empty()) throw_numeric("field polynomial division by zero");
    qtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        QuadExt c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

QPoly qmonic(QPoly p) {
    qtrim(p);
    if (p.empty()) return p;
    QuadExt lc = p.back();
    for (auto& c : p) c = c / lc;
    return p;
}

QPoly qgcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return qmonic(a);
}

QPoly qdivide(QPoly a, const QPoly& b) {
    if (b.empty()) throw_numeric("field polynomial division by zero");
    qtrim(a);
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, QuadExt(Rational(0)));
    while (a.size() >= b.size() && !a.empty()) {
        QuadExt c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
        a.pop_back();
        qtrim(a);
    }
    if (!a.empty()) throw_numeric("field polynomial division left a remainder");
    qtrim(q);
    return q;
}

std::vector<std::pair<QPoly, unsigned>> qyun(QPoly f) {
    qtrim(f);
    std::vector<std::pair<QPoly, unsigned>> out;
    if (f.size() <= 1) return out;
    QPoly fp = qderivative(f);
    QPoly a0 = qgcd(f, fp);
    QPoly b = qdivide(f, a0);
    QPoly c = qsub(qdivide(fp, a0), qderivative(b));
    unsigned i = 1;
    const unsigned guard = static_cast<unsigned>(f.size()) + 2;
    while (b.size() > 1) {
        if (i > guard) throw_numeric("squarefree decomposition over field did not terminate");
        QPoly g = qgcd(b, c);
        if (g.size() > 1) out.emplace_back(g, i);
        b = qdivide(b, g);
        c = qsub(qdivide(c, g), qderivative(b));
        ++i;
    }
    return out;
}

struct ExactRoot {
    bool exact = false;
    QuadExt value;
    Complex approx;
};

std::vector<Complex> qpoly_complex(const QPoly& p) {
    std::vector<Complex> c;
    c.reserve(p.size());
    for (const auto& q : p) c.push_back(q.to_complex());
    return c;
}

// Roots of a squarefree field polynomial: exact through degree two, Aberth
// on the complex embedding beyond that.
std::vector<ExactRoot> qroots_squarefree(const QPoly& p) {
    std::vector<ExactRoot> out;
    if (p.size() <= 1) return out;
    if (p.size() == 2) {
        QuadExt v = -(p[0] / p[1]);
        out.push_back({true, v, v.to_complex()});
        return out;
    }
    if (p.size() == 3) {
        if (auto roots = solve_quadratic(p[2], p[1], p[0])) {
            out.push_back({true, roots->first, roots->first.to_complex()});
            if (!roots->repeated)
                out.push_back({true, roots->second, roots->second.to_complex()});
            return out;
        }
    }
    for (Complex v : aberth(qpoly_complex(p))) out.push_back({false, QuadExt{}, v});
    return out;
}

// Coefficients of the curve in its second variable, evaluated exactly at
// the first variable.
QPoly z_poly_at(const MultiPoly& curve, const QuadExt& x0) {
    QPoly p;
    for (const auto& c : curve.coeffs_in(1)) p.push_back(eval_quad(c, x0, QuadExt{}));
    qtrim(p);
    return p;
}

std::vector<std::pair<Complex, unsigned>> cluster_roots(const std::vector<Complex>& vals,
                                                        double tol) {
    std::vector<std::pair<Complex, unsigned>> out;
    for (Complex v : vals) {
        bool merged = false;
        for (auto& [center, count] : out) {
            if (std::abs(center - v) < tol * std::max(1.0, std::abs(center))) {
                center = (center * static_cast<double>(count) + v) /
                         static_cast<double>(count + 1);
                ++count;
                merged = true;
                break;
            }
        }
        if (!merged) out.emplace_back(v, 1u);
    }
    return out;
}

// Numeric z-roots above a numeric x with clustered multiplicities; loose
// clustering because multiple roots limit Aberth accuracy.
std::vector<std::pair<Complex, unsigned>> numeric_z_roots(const MultiPoly& curve, Complex x0) {
    std::vector<Complex> p;
    double maxc = 0.0;
    for (const auto& c : curve.coeffs_in(1)) {
        p.push_back(c.eval({x0, Complex(0.0, 0.0)}));
        maxc = std::max(maxc, std::abs(p.back()));
    }
    if (maxc == 0.0) throw_numeric("curve vanishes along a vertical line");
    while (!p.empty() && std::abs(p.back()) < 1e-10 * maxc) p.pop_back();
    if (p.size() <= 1) return {};
    return cluster_roots(aberth(p), 1e-5);
}

bool only_even_exponents(const QPoly& p) {
    for (std::size_t i = 1; i < p.size(); i += 2)
        if (!p[i].is_zero()) return false;
    return true;
}

// Roots of a squarefree univariate rational polynomial, exact when the
// splitting stays inside one quadratic field.
std::vector<ExactRoot> univariate_roots(const MultiPoly& sq) {
    QPoly p;
    for (const auto& c : sq.coeffs_in(0)) p.push_back(QuadExt(c.constant_value()));
    qtrim(p);
    if (p.size() <= 3) return qroots_squarefree(p);
    if (p.size() == 5 && only_even_exponents(p)) {
        QPoly even{p[0], p[2], p[4]};
        std::vector<ExactRoot> out;
        for (const auto& X : qroots_squarefree(even)) {
            if (X.exact) {
                if (auto r = X.value.sqrt()) {
                    out.push_back({true, *r, r->to_complex()});
                    out.push_back({true, -*r, (-*r).to_complex()});
                    continue;
                }
            }
            Complex s = std::sqrt(X.approx);
            out.push_back({false, QuadExt{}, s});
            out.push_back({false, QuadExt{}, -s});
        }
        return out;
    }
    std::vector<ExactRoot> out;
    for (const auto& r : complex_roots(sq, 1e-9)) out.push_back({false, QuadExt{}, r.value});
    return out;
}

Complex eval_scaled(const MultiPoly& p, Complex x, Complex z, double& scale) {
    Complex val(0.0, 0.0);
    scale = 1.0;
    for (const auto& [m, c] : p.terms()) {
        Complex t(to_double(c), 0.0);
        for (unsigned i = 0; i < m[0]; ++i) t *= x;
        for (unsigned i = 0; i < m[1]; ++i) t *= z;
        val += t;
        scale = std::max(scale, std::abs(t));
    }
    return val;
}

MultiPoly elimination_fallback(const std::array<MultiPoly, 3>& conds) {
    MultiPoly product;
    bool have = false;
    for (std::size_t var = 0; var < 2; ++var) {
        std::vector<MultiPoly> rs;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = i + 1; j < 3; ++j) {
                const MultiPoly& f = conds[i];
                const MultiPoly& g = conds[j];
                if (f.is_zero() || g.is_zero()) continue;
                if (f.degree_in(var) <= 0 && g.degree_in(var) <= 0) continue;
                MultiPoly r = resultant(f, g, var);
                if (!r.is_zero() && !r.is_constant()) rs.push_back(r);
            }
        }
        if (rs.empty()) continue;
        MultiPoly g = rs[0];
        for (std::size_t k = 1; k < rs.size(); ++k) g = poly_gcd(g, rs[k]);
        if (g.is_constant()) continue;
        MultiPoly piece = squarefree_part_all(g).primitive();
        product = have ? product * piece : piece;
        have = true;
    }
    if (!have) throw_verification("trace conditions define no plane curve");
    return product;
}

void verify_factor(const MultiPoly& factor, const std::array<MultiPoly, 3>& conds,
                   const KnotPresentation& pres) {
    std::size_t var = factor.degree_in(1) > 0 ? 1 : 0;
    for (const auto& c : conds) {
        if (c.is_zero()) continue;
        auto d = divrem(c, factor, var, true);
        if (!d.remainder.is_zero())
            throw_verification("character variety factor rejected by ideal membership: " +
                               factor.str());
    }

    PlaneCurve fc{factor};
    std::mt19937 rng(0x5eedu);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    const auto zcoeffs = factor.coeffs_in(1);
    const long dz = factor.degree_in(1);
    std::vector<Complex> xline;
    if (dz == 0) {
        MultiPoly uni = factor.in_vars({factor.vars()[0]});
        for (const auto& r : complex_roots(uni, 1e-9)) xline.push_back(r.value);
        if (xline.empty())
            throw_verification("character variety factor has no points: " + factor.str());
    }

    int accepted = 0;
    int attempts = 0;
    while (accepted < 10) {
        if (++attempts > 400)
            throw_numeric("factor verification could not sample points: " + factor.str());
        Complex x0, z0;
        if (dz > 0) {
            x0 = Complex(box(rng), box(rng));
            std::vector<Complex> p;
            double maxc = 0.0;
            for (const auto& c : zcoeffs) {
                p.push_back(c.eval({x0, Complex(0.0, 0.0)}));
                maxc = std::max(maxc, std::abs(p.back()));
            }
            if (maxc == 0.0) continue;
            while (!p.empty() && std::abs(p.back()) < 1e-10 * maxc) p.pop_back();
            if (p.size() <= 1) continue;
            auto roots = aberth(p);
            z0 = roots[rng() % roots.size()];
        } else {
            x0 = xline[static_cast<std::size_t>(attempts) % xline.size()];
            z0 = Complex(box(rng), box(rng));
        }
        RepAtPoint rep;
        try {
            rep = numeric_rep_at(fc, x0, z0, pres, 1e-6);
        } catch (const Error&) {
            continue;
        }
        if (!(rep.relator_residual < 1e-7))
            throw_verification("character variety factor failed numeric reconstruction: " +
                               factor.str());
        ++accepted;
    }
}

}  // namespace

PlaneCurve make_plane_curve(const MultiPoly& p) {
    if (p.vars().size() != 2) throw_input("plane curve requires exactly two variables");
    if (p.is_zero() || p.is_constant()) throw_input("plane curve polynomial is constant");
    return PlaneCurve{squarefree_part_all(p).primitive()};
}

MultiPoly abelian_trace_relation() { return MultiPoly::parse("x^2 - z - 2", {"x", "z"}); }

std::array<MultiPoly, 3> rep_conditions(const KnotPresentation& pres) {
    const GroupWord& R = pres.relator;
    GroupWord a = GroupWord::from_letters({1});
    GroupWord b = GroupWord::from_letters({2});
    MultiPoly two = MultiPoly::constant(trace_ring(), Rational(2));
    return {specialize_to_xz(trace_poly(R) - two),
            specialize_to_xz(trace_poly(R * a) - trace_poly(a)),
            specialize_to_xz(trace_poly(R * b) - trace_poly(b))};
}

CharacterVariety character_variety(const KnotPresentation& pres) {
    if (pres.relator.empty()) throw_input("relator defines free group");
    auto conds = rep_conditions(pres);
    if (conds[0].is_zero() && conds[1].is_zero() && conds[2].is_zero())
        throw_verification("trace conditions vanish identically");

    MultiPoly g = poly_gcd(poly_gcd(conds[0], conds[1]), conds[2]);
    MultiPoly candidate =
        g.is_constant() ? elimination_fallback(conds) : squarefree_part_all(g).primitive();

    CharacterVariety out;
    out.curve = make_plane_curve(candidate);

    MultiPoly ab = abelian_trace_relation();
    auto d = divrem(out.curve.poly, ab, 1);
    std::vector<MultiPoly> fpolys;
    if (d.remainder.is_zero()) {
        out.has_abelian_factor = true;
        fpolys.push_back(ab);
        if (!d.quotient.is_constant()) fpolys.push_back(d.quotient.primitive());
    } else {
        fpolys.push_back(out.curve.poly);
    }
    for (const auto& f : fpolys) verify_factor(f, conds, pres);
    for (const auto& f : fpolys) out.factors.push_back(make_plane_curve(f));
    return out;
}

PlaneCurve defining_polynomial(const KnotPresentation& pres) {
    return character_variety(pres).curve;
}

std::vector<ReduciblePoint> reducible_characters(const PlaneCurve& curve,
                                                 const MultiPoly& alexander) {
    if (curve.vars().size() != 2) throw_input("reducible characters: curve must be bivariate");
    if (alexander.vars().size() != 1) throw_input("alexander polynomial must be univariate");
    if (alexander.eval_exact({Rational(1)}) == 0)
        throw_input("alexander polynomial vanishes at 1");
    if (alexander.degree_in(0) <= 0) return {};

    // Meridian eigenvalue m has m^2 a root of the Alexander polynomial and
    // x = m + 1/m, so x^2 - 2 = t + 1/t over those roots t.
    MultiPoly delta = alexander.in_vars({alexander.vars()[0], "x"});
    MultiPoly pell =
        MultiPoly::parse("t^2 - x^2 t + 2 t + 1", {alexander.vars()[0], "x"});
    MultiPoly q = resultant(delta, pell, 0);
    if (q.is_zero()) throw_numeric("alexander eliminant vanished");
    MultiPoly sq = squarefree_part(q.in_vars({"x"}), 0);
    if (sq.degree_in(0) <= 0) return {};

    std::vector<ReduciblePoint> pts;
    for (const auto& xr : univariate_roots(sq)) {
        if (xr.exact) {
            QPoly zp = z_poly_at(curve.poly, xr.value);
            if (zp.empty())
                throw_numeric("curve contains a vertical line at a reducible x value");
            for (const auto& [fac, mult] : qyun(zp)) {
                for (const auto& zr : qroots_squarefree(fac)) {
                    ReduciblePoint rp;
                    rp.multiplicity = mult;
                    rp.x_value = xr.value.to_complex();
                    if (zr.exact) {
                        if (!eval_quad(curve.poly, xr.value, zr.value).is_zero())
                            throw_numeric("reducible point failed exact curve membership");
                        rp.exact = true;
                        rp.x_exact = xr.value;
                        rp.z_exact = zr.value;
                        rp.z_value = zr.value.to_complex();
                    } else {
                        rp.z_value = zr.approx;
                    }
                    pts.push_back(rp);
                }
            }
        } else {
            for (const auto& [zv, mult] : numeric_z_roots(curve.poly, xr.approx)) {
                ReduciblePoint rp;
                rp.x_value = xr.approx;
                rp.z_value = zv;
                rp.multiplicity = mult;
                pts.push_back(rp);
            }
        }
    }
    std::sort(pts.begin(), pts.end(), [](const ReduciblePoint& a, const ReduciblePoint& b) {
        return std::make_tuple(a.x_value.real(), a.x_value.imag(), a.z_value.real(),
                               a.z_value.imag()) <
               std::make_tuple(b.x_value.real(), b.x_value.imag(), b.z_value.real(),
                               b.z_value.imag());
    });
    return pts;
}

RepAtPoint numeric_rep_at(const PlaneCurve& curve, Complex x, Complex z,
                          const KnotPresentation& pres, double on_curve_tol) {
    if (curve.vars().size() != 2) throw_input("numeric_rep_at: curve must be bivariate");
    double scale = 1.0;
    Complex val = eval_scaled(curve.poly, x, z, scale);
    if (std::abs(val) > on_curve_tol * scale)
        throw_input("numeric_rep_at: point is not on the curve");

    Complex disc = std::sqrt(x * x - Complex(4.0, 0.0));
    Complex s = 0.5 * (x + disc);
    if (std::abs(s) < 1.0) s = 0.5 * (x - disc);
    if (s == Complex(0.0, 0.0)) throw_numeric("numeric_rep_at: zero meridian eigenvalue");
    Complex si = Complex(1.0, 0.0) / s;

    RepAtPoint out;
    const double rtol = 1e-8;
    Complex abelian_z = x * x - Complex(2.0, 0.0);
    if (std::abs(z - abelian_z) < rtol || std::abs(z - Complex(2.0, 0.0)) < rtol) {
        out.reducible = true;
        out.A = Mat2{s, 0.0, 0.0, si};
        out.B = std::abs(z - abelian_z) <= std::abs(z - Complex(2.0, 0.0))
                    ? Mat2{s, 0.0, 0.0, si}
                    : Mat2{si, 0.0, 0.0, s};
        out.relator_residual = eval_word(pres.relator, out.A, out.B).distance_to_identity();
        return out;
    }

    Complex u = z - x * x + Complex(2.0, 0.0);
    out.A = Mat2{s, 1.0, 0.0, si};
    out.B = Mat2{s, 0.0, u, si};
    out.relator_residual = eval_word(pres.relator, out.A, out.B).distance_to_identity();

    bool parabolic = std::min(std::abs(x - Complex(2.0, 0.0)),
                              std::abs(x + Complex(2.0, 0.0))) < rtol;
    if (parabolic && pres.has_longitude()) {
        Mat2 L = eval_word(pres.longitude, out.A, out.B);
        if (std::abs(L.c) < 1e-6 && std::abs(L.a - L.d) < 1e-6) out.translation = L.b / L.a;
    }
    return out;
}

bool is_smooth_curve(const PlaneCurve& curve) {
    const MultiPoly& f = curve.poly;
    MultiPoly fx = f.derivative(0);
    MultiPoly fz = f.derivative(1);
    if (fx.is_zero() && fz.is_zero()) return false;
    if (f.degree_in(1) <= 0 || fz.is_zero()) return false;
    MultiPoly r1 = resultant(f, fz, 1);
    if (fx.is_zero()) return r1.is_constant() && !r1.is_zero();
    MultiPoly r2 = resultant(f, fx, 1);
    if (r1.is_zero() || r2.is_zero()) return false;
    return poly_gcd(r1, r2).is_constant();
}

}  // namespace knotcv
