#include "knotcv/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "knotcv/error.hpp"
#include "knotcv/polyalg.hpp"
#include "knotcv/puiseux.hpp"
#include "knotcv/roots.hpp"
#include "knotcv/trace.hpp"

namespace knotcv {

namespace {

const std::vector<std::string>& wz_ring() {
    static const std::vector<std::string> vars{"w", "z"};
    return vars;
}

// |f(x, z)| relative to the largest term magnitude.
double scaled_abs(const MultiPoly& f, Complex x, Complex z) {
    Complex total(0, 0);
    double scale = 1.0;
    for (const auto& [mono, c] : f.terms()) {
        Complex term = to_double(c) * std::pow(x, static_cast<int>(mono[0])) *
                       std::pow(z, static_cast<int>(mono[1]));
        total += term;
        scale = std::max(scale, std::abs(term));
    }
    return std::abs(total) / scale;
}

std::vector<Rational> uni_coeffs(const MultiPoly& f, std::size_t var) {
    std::vector<Rational> out;
    for (const auto& c : f.coeffs_in(var)) out.push_back(c.constant_value());
    return out;
}

QuadExt eval_at(const std::vector<Rational>& coeffs, const QuadExt& w) {
    QuadExt acc{Rational(0)};
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * QuadExt(w) + QuadExt(coeffs[k]);
    return acc;
}

std::vector<Complex> numeric_roots(const MultiPoly& f, std::size_t var) {
    std::vector<Complex> cc;
    for (const auto& c : uni_coeffs(f, var)) cc.emplace_back(to_double(c), 0);
    return aberth(cc);
}

struct EliminantRoot {
    Complex value;
    bool exact = false;
    QuadExt exact_value;
    long plain_mult = 0;
};

std::optional<Rational> reconstruct_rational(double v, long long max_den = 1000000,
                                             double tol = 1e-9) {
    long long h_prev = 1, k_prev = 0;
    long long h = static_cast<long long>(std::llround(std::floor(v)));
    long long k = 1;
    double frac = v - std::floor(v);
    for (int i = 0; i < 40 && k <= max_den; ++i) {
        if (std::abs(v - static_cast<double>(h) / static_cast<double>(k)) <
            tol * std::max(1.0, std::abs(v)))
            return make_rational(h, k);
        if (frac < 1e-12) break;
        double inv = 1.0 / frac;
        if (inv > 1e12) break;
        long long a = static_cast<long long>(std::floor(inv));
        frac = inv - std::floor(inv);
        long long h_next = a * h + h_prev;
        long long k_next = a * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    return std::nullopt;
}

MultiPoly monic_in(const std::vector<std::string>& ring, std::size_t var,
                   const std::vector<Rational>& low_coeffs) {
    MultiPoly p(ring);
    Monomial lead(ring.size(), 0);
    lead[var] = static_cast<unsigned int>(low_coeffs.size());
    p.add_term(lead, Rational(1));
    for (std::size_t k = 0; k < low_coeffs.size(); ++k) {
        if (low_coeffs[k] == 0) continue;
        Monomial m(ring.size(), 0);
        m[var] = static_cast<unsigned int>(k);
        p.add_term(m, low_coeffs[k]);
    }
    return p;
}

QuadExt eval_rational_at(const MultiPoly& f, std::size_t var, const Rational& v) {
    return eval_at(uni_coeffs(f, var), QuadExt(v));
}

// Roots of one squarefree eliminant factor with the factor's Yun
// multiplicity. Linear and quadratic pieces are peeled off exactly, each
// split verified by exact division; whatever resists reconstruction stays
// numeric.
std::vector<EliminantRoot> factor_roots(const MultiPoly& factor, std::size_t var, long mult) {
    std::vector<EliminantRoot> out;
    auto emit = [&](const QuadExt& r) { out.push_back({r.to_complex(), true, r, mult}); };
    MultiPoly rem = factor.primitive();

    bool progress = true;
    while (rem.degree_in(var) > 2 && progress) {
        progress = false;
        auto roots = numeric_roots(rem, var);
        for (Complex r : roots) {
            if (std::abs(r.imag()) > 1e-8) continue;
            auto cand = reconstruct_rational(r.real());
            if (!cand || !eval_rational_at(rem, var, *cand).is_zero()) continue;
            rem = divrem(rem, monic_in(rem.vars(), var, {-*cand}), var).quotient;
            emit(QuadExt(*cand));
            progress = true;
            break;
        }
        if (progress) continue;
        for (std::size_t i = 0; i < roots.size() && !progress; ++i) {
            for (std::size_t j = i + 1; j < roots.size() && !progress; ++j) {
                Complex sum = roots[i] + roots[j];
                Complex prod = roots[i] * roots[j];
                if (std::abs(sum.imag()) > 1e-8 || std::abs(prod.imag()) > 1e-8) continue;
                auto cs = reconstruct_rational(sum.real());
                auto cp = reconstruct_rational(prod.real());
                if (!cs || !cp) continue;
                MultiPoly quad = monic_in(rem.vars(), var, {*cp, -*cs});
                auto d = divrem(rem, quad, var);
                if (!d.remainder.is_zero()) continue;
                rem = d.quotient;
                auto qr = solve_quadratic(QuadExt(Rational(1)), QuadExt(-*cs), QuadExt(*cp));
                if (qr) {
                    emit(qr->first);
                    if (!qr->repeated) emit(qr->second);
                } else {
                    for (Complex r : numeric_roots(quad, var))
                        out.push_back({r, false, QuadExt{}, mult});
                }
                progress = true;
            }
        }
    }

    long deg = rem.degree_in(var);
    auto cs = uni_coeffs(rem, var);
    if (deg == 1) {
        emit(QuadExt(-(cs[0] / cs[1])));
    } else if (deg == 2) {
        auto qr = solve_quadratic(QuadExt(cs[2]), QuadExt(cs[1]), QuadExt(cs[0]));
        if (qr) {
            emit(qr->first);
            if (!qr->repeated) emit(qr->second);
        } else {
            for (Complex r : numeric_roots(rem, var)) out.push_back({r, false, QuadExt{}, mult});
        }
    } else if (deg > 2) {
        for (Complex r : numeric_roots(rem, var)) out.push_back({r, false, QuadExt{}, mult});
    }
    return out;
}

MultiPoly shear_into_wz(const MultiPoly& f, const Rational& s) {
    MultiPoly w = MultiPoly::variable(wz_ring(), "w");
    MultiPoly z = MultiPoly::variable(wz_ring(), "z");
    return f.substituted({w - z * s, z});
}

// Resultant in var after reducing g modulo comp. The leading coefficient of
// comp in var is constant, so every correction factor is a nonzero constant
// and roots keep their multiplicities.
MultiPoly eliminant(const MultiPoly& comp, const MultiPoly& g, std::size_t var) {
    MultiPoly gg = g;
    if (gg.degree_in(var) >= comp.degree_in(var)) gg = prem(gg, comp, var);
    if (gg.is_zero()) throw_verification("slope degenerate on component");
    return resultant(comp, gg, var);
}

struct FiberPoint {
    Complex z;
    bool exact = false;
    QuadExt z_exact;
    long mult = 0;
};

// z-fiber of the component over x0, filtered to the zeros of g.
std::vector<FiberPoint> fiber_points(const MultiPoly& comp, const MultiPoly& g,
                                     const EliminantRoot& xr) {
    std::vector<FiberPoint> out;
    long dz = comp.degree_in(1);
    if (xr.exact && dz <= 2) {
        auto cz = comp.coeffs_in(1);
        std::vector<QuadExt> c;
        for (const auto& p : cz) c.push_back(eval_quad(p, xr.exact_value, QuadExt{}));
        std::vector<QuadExt> zs;
        bool exact_ok = true;
        if (dz == 2) {
            auto roots = solve_quadratic(c[2], c[1], c[0]);
            if (roots) {
                zs.push_back(roots->first);
                if (!roots->repeated) zs.push_back(roots->second);
            } else {
                exact_ok = false;
            }
        } else {
            zs.push_back(-(c[0] / c[1]));
        }
        if (exact_ok) {
            for (const auto& zq : zs) {
                if (!eval_quad(g, xr.exact_value, zq).is_zero()) continue;
                out.push_back({zq.to_complex(), true, zq, 0});
            }
            return out;
        }
    }
    std::vector<Complex> cc;
    for (const auto& p : comp.coeffs_in(1)) cc.push_back(p.eval({xr.value, Complex(0, 0)}));
    std::vector<Complex> uniq;
    for (Complex r : aberth(cc)) {
        bool dup = false;
        for (Complex u : uniq)
            if (std::abs(r - u) < 1e-7 * (1.0 + std::abs(u))) dup = true;
        if (!dup) uniq.push_back(r);
    }
    for (Complex z0 : uniq)
        if (scaled_abs(g, xr.value, z0) < 1e-6) out.push_back({z0, false, QuadExt{}, 0});
    return out;
}

// Multiplicity of the point from the sheared eliminant: the Yun factor it
// lands on must be unique. Returns 0 when matching fails.
long point_mult(const std::vector<std::pair<MultiPoly, unsigned int>>& shear_factors,
                const std::vector<std::vector<Complex>>& shear_roots, const Rational& s,
                const EliminantRoot& xr, const FiberPoint& fp) {
    if (xr.exact && fp.exact) {
        long hits = 0, mult = 0;
        for (const auto& [f, k] : shear_factors) {
            QuadExt w = xr.exact_value + QuadExt(s) * fp.z_exact;
            if (eval_at(uni_coeffs(f, 0), w).is_zero()) {
                ++hits;
                mult = k;
            }
        }
        return hits == 1 ? mult : 0;
    }
    Complex w = xr.value + Complex(to_double(s), 0) * fp.z;
    long hits = 0, mult = 0;
    for (std::size_t j = 0; j < shear_roots.size(); ++j) {
        bool on_factor = false;
        for (Complex r : shear_roots[j])
            if (std::abs(w - r) < 1e-6 * (1.0 + std::abs(r))) on_factor = true;
        if (on_factor) {
            ++hits;
            mult = shear_factors[j].second;
        }
    }
    return hits == 1 ? mult : 0;
}

bool is_pm_two(const EliminantRoot& xr) {
    if (xr.exact)
        return xr.exact_value == QuadExt(Rational(2)) || xr.exact_value == QuadExt(Rational(-2));
    return std::abs(xr.value - Complex(2, 0)) < 1e-8 || std::abs(xr.value + Complex(2, 0)) < 1e-8;
}

std::optional<SurgeryReport> attempt_report(SurgerySlope slope, const MultiPoly& comp,
                                            const BoundaryTriple& triple, const MultiPoly& ig,
                                            const std::vector<ReduciblePoint>& reducibles,
                                            const Rational& s, unsigned seed) {
    SurgeryReport rep;
    rep.slope = slope;
    rep.gamma_poly = ig;
    rep.seed = seed;
    rep.shear = s;

    MultiPoly comp_s = shear_into_wz(comp, s);
    if (comp_s.degree_in(1) != comp.total_degree()) return std::nullopt;

    for (int sign : {2, -2}) {
        MultiPoly g = ig - MultiPoly::constant(comp.vars(), Rational(sign));
        MultiPoly elim_plain = eliminant(comp, g, 1);
        if (elim_plain.is_zero()) throw_verification("slope degenerate on component");
        if (elim_plain.degree_in(0) <= 0) continue;

        MultiPoly g_s = shear_into_wz(g, s);
        if (g.total_degree() > 0 && g_s.degree_in(1) != g.total_degree()) return std::nullopt;
        MultiPoly elim_shear = eliminant(comp_s, g_s, 1);
        if (elim_plain.degree_in(0) != elim_shear.degree_in(0)) return std::nullopt;

        auto yun_plain = squarefree_decomposition(elim_plain, 0);
        auto yun_shear = squarefree_decomposition(elim_shear, 0);
        std::vector<std::vector<Complex>> shear_roots;
        shear_roots.reserve(yun_shear.size());
        for (const auto& [f, k] : yun_shear) shear_roots.push_back(numeric_roots(f, 0));

        long sign_total = 0;
        std::vector<Complex> all_w;
        for (const auto& [pf, pk] : yun_plain) {
            for (const EliminantRoot& xr : factor_roots(pf, 0, pk)) {
                auto fiber = fiber_points(comp, g, xr);
                if (fiber.empty()) return std::nullopt;

                SurgeryEntry e;
                e.sign = sign;
                e.x_value = xr.value;
                e.exact = xr.exact;
                e.x_exact = xr.exact_value;
                e.excluded = is_pm_two(xr);

                long fiber_total = 0;
                bool lambda_parabolic = true;
                for (auto& fp : fiber) {
                    long m = point_mult(yun_shear, shear_roots, s, xr, fp);
                    if (m == 0) return std::nullopt;
                    fp.mult = m;
                    fiber_total += m;
                    all_w.push_back(xr.value + Complex(to_double(s), 0) * fp.z);
                    e.z_values.push_back(fp.z);
                    e.z_mults.push_back(m);
                    Complex lam = triple.I_lambda.eval({xr.value, fp.z});
                    if (std::abs(lam * lam - Complex(4, 0)) > 1e-6) lambda_parabolic = false;
                    for (const auto& r : reducibles) {
                        if (std::abs(xr.value - r.x_value) < 1e-6 &&
                            std::abs(fp.z - r.z_value) < 1e-6)
                            e.reducible = true;
                    }
                }
                if (fiber_total != xr.plain_mult) return std::nullopt;
                e.multiplicity = fiber_total;
                e.one_to_one = e.excluded && lambda_parabolic;
                sign_total += fiber_total;
                rep.chi_list.push_back(std::move(e));
            }
        }
        if (sign_total != elim_shear.degree_in(0)) return std::nullopt;
        for (std::size_t i = 0; i < all_w.size(); ++i)
            for (std::size_t j = i + 1; j < all_w.size(); ++j)
                if (std::abs(all_w[i] - all_w[j]) < 1e-7 * (1.0 + std::abs(all_w[i])))
                    return std::nullopt;
        rep.eliminants.push_back({sign, elim_plain, elim_shear});
    }

    std::sort(rep.chi_list.begin(), rep.chi_list.end(),
              [](const SurgeryEntry& a, const SurgeryEntry& b) {
                  if (a.sign != b.sign) return a.sign > b.sign;
                  if (a.x_value.real() != b.x_value.real())
                      return a.x_value.real() < b.x_value.real();
                  return a.x_value.imag() < b.x_value.imag();
              });
    long excluded_total = 0;
    for (const auto& e : rep.chi_list) {
        rep.b += e.multiplicity;
        if (e.excluded) excluded_total += e.multiplicity;
    }
    rep.lambda = rep.b - excluded_total;
    return rep;
}

}  // namespace

SurgerySlope make_slope(long p, long q) {
    if (p == 0 && q == 0) throw_input("surgery slope must be nonzero");
    if (std::gcd(std::labs(p), std::labs(q)) != 1)
        throw_input("surgery slope must be a coprime pair");
    return {p, q};
}

MultiPoly gamma_trace_on_component(SurgerySlope slope, const BoundaryTriple& triple) {
    slope = make_slope(slope.p, slope.q);
    MultiPoly pt = peripheral_trace(slope.p, slope.q);
    MultiPoly img = specialize(pt, {{"u", triple.I_mu},
                                    {"v", triple.I_lambda},
                                    {"w", triple.I_mulambda}});
    return divrem(img, triple.modulus.poly, 1).remainder;
}

SurgeryReport intersection_set(SurgerySlope slope, const PlaneCurve& component,
                               const BoundaryTriple& triple, const MultiPoly& alexander,
                               unsigned seed) {
    slope = make_slope(slope.p, slope.q);
    MultiPoly ig = gamma_trace_on_component(slope, triple);
    const MultiPoly& comp = component.poly;

    MultiPoly two = MultiPoly::constant(comp.vars(), Rational(2));
    MultiPoly f24 = (ig - two) * (ig + two);
    if (f24.is_zero() || poly_gcd(comp, f24) == comp)
        throw_verification("slope degenerate on component");

    auto reducibles = reducible_characters(component, alexander);

    std::mt19937 rng(seed * 2654435761u + 1013904223u);
    std::uniform_int_distribution<int> pick_num(1, 9);
    std::uniform_int_distribution<int> pick_den(1, 7);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    for (int attempt = 0; attempt < 12; ++attempt) {
        long num = pick_num(rng) * (pick_sign(rng) ? 1 : -1);
        Rational s = make_rational(num, pick_den(rng));
        auto rep = attempt_report(slope, comp, triple, ig, reducibles, s, seed);
        if (rep) return *rep;
    }
    throw_numeric("no separating shear found for the eliminant");
}

NormComparison compare_with_norm(const SurgeryReport& report, const NormForm& form) {
    NormComparison out;
    out.lambda = report.lambda;
    out.b = report.b;
    out.norm = cs_norm(form, report.slope.p, report.slope.q);

    MultiPoly four = MultiPoly::constant(report.gamma_poly.vars(), Rational(4));
    MultiPoly fg = report.gamma_poly * report.gamma_poly - four;

    // The stored branches only hold the window needed for the weights;
    // composing fg costs roughly its total degree in window, so re-expand.
    long base_order = 16 + 3 * std::max(0L, fg.total_degree());
    std::vector<long> vals;
    std::size_t i = 0;
    while (i < form.points.size()) {
        const ProjectivePoint& center = form.points[i].branch.center;
        std::size_t j = i;
        while (j < form.points.size() && same_point(form.points[j].branch.center, center)) ++j;

        long order = base_order;
        for (;;) {
            std::vector<PuiseuxBranch> brs;
            try {
                brs = branch_expansions(form.closure, center, order);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::numeric && order < 1024) {
                    order *= 2;
                    continue;
                }
                throw;
            }
            if (brs.size() != j - i) throw_numeric("ideal branch count changed on re-expansion");
            std::vector<long> group;
            bool ok = true;
            for (const auto& br : brs) {
                try {
                    group.push_back(valuation(rat(fg), br));
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::numeric && order < 1024) {
                        ok = false;
                        order *= 2;
                        break;
                    }
                    throw;
                }
            }
            if (ok) {
                vals.insert(vals.end(), group.begin(), group.end());
                break;
            }
        }
        i = j;
    }

    for (long v : vals) {
        long zero = std::max(0L, v);
        long pole = std::max(0L, -v);
        out.branch_zero_orders.push_back(zero);
        out.branch_pole_orders.push_back(pole);
        out.i_hat += zero;
        out.deg_f_gamma += pole;
    }
    out.lambda_le_b = out.lambda <= out.b;
    out.degree_bound = out.lambda + out.i_hat <= out.norm;
    for (const auto& e : report.chi_list)
        for (long m : e.z_mults)
            if (m > 1) out.transversality_caveat = true;
    return out;
}

}  // namespace knotcv
