#include "knotcv/puiseux.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "knotcv/error.hpp"
#include "knotcv/roots.hpp"

namespace knotcv {

namespace {

constexpr double kPrune = 1e-12;
constexpr long kBigTrunc = 1L << 40;

double ls_scale_of(const LaurentSeries& a) {
    double s = 0.0;
    for (const auto& [e, c] : a.coef) s = std::max(s, std::abs(c));
    return s;
}

void ls_trim(LaurentSeries& a) {
    for (auto it = a.coef.begin(); it != a.coef.end();) {
        if (it->first >= a.trunc || std::abs(it->second) == 0.0)
            it = a.coef.erase(it);
        else
            ++it;
    }
}

// Cancellation noise is judged per exponent against the magnitude that
// accumulated there. A global cutoff would delete genuine low coefficients
// of series with a finite convergence radius, whose coefficients span many
// orders of magnitude across the window.
void ls_prune_against(LaurentSeries& a, const std::map<long, double>& mag) {
    for (auto it = a.coef.begin(); it != a.coef.end();) {
        auto m = mag.find(it->first);
        double bound = m == mag.end() ? 0.0 : kPrune * m->second;
        if (it->first >= a.trunc || std::abs(it->second) <= bound)
            it = a.coef.erase(it);
        else
            ++it;
    }
}

Complex ipow(Complex base, long n) {
    if (n < 0) return Complex(1.0, 0.0) / ipow(base, -n);
    Complex acc(1.0, 0.0);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace

LaurentSeries ls_constant(Complex c, long trunc) {
    LaurentSeries out;
    out.trunc = trunc;
    if (std::abs(c) > 0.0 && trunc > 0) out.coef[0] = c;
    return out;
}

LaurentSeries ls_monomial(long exp, Complex c, long trunc) {
    LaurentSeries out;
    out.trunc = trunc;
    if (std::abs(c) > 0.0 && exp < trunc) out.coef[exp] = c;
    return out;
}

LaurentSeries ls_add(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out = a;
    out.trunc = std::min(a.trunc, b.trunc);
    std::map<long, double> mag;
    for (const auto& [e, c] : a.coef) mag[e] = std::abs(c);
    for (const auto& [e, c] : b.coef) {
        out.coef[e] += c;
        mag[e] += std::abs(c);
    }
    ls_prune_against(out, mag);
    return out;
}

LaurentSeries ls_sub(const LaurentSeries& a, const LaurentSeries& b) {
    return ls_add(a, ls_scale(b, Complex(-1.0, 0.0)));
}

LaurentSeries ls_mul(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out;
    long orda = a.coef.empty() ? 0 : a.coef.begin()->first;
    long ordb = b.coef.empty() ? 0 : b.coef.begin()->first;
    out.trunc = std::min(a.trunc + ordb, b.trunc + orda);
    std::map<long, double> mag;
    for (const auto& [ea, ca] : a.coef)
        for (const auto& [eb, cb] : b.coef) {
            long e = ea + eb;
            if (e < out.trunc) {
                out.coef[e] += ca * cb;
                mag[e] += std::abs(ca) * std::abs(cb);
            }
        }
    ls_prune_against(out, mag);
    return out;
}

LaurentSeries ls_scale(const LaurentSeries& a, Complex c) {
    LaurentSeries out;
    out.trunc = a.trunc;
    if (std::abs(c) == 0.0) return out;
    for (const auto& [e, v] : a.coef) out.coef[e] = v * c;
    return out;
}

long ls_order(const LaurentSeries& a) {
    if (a.coef.empty())
        throw_numeric("series cancels to the truncation order; increase the expansion order");
    return a.coef.begin()->first;
}

LaurentSeries ls_inverse(const LaurentSeries& a) {
    long v = ls_order(a);
    Complex lead = a.coef.begin()->second;
    long window = a.trunc - v;  // unit part trusted below this exponent
    if (window <= 0) throw_numeric("series window too small to invert");

    LaurentSeries r;  // unit part minus one, order >= 1
    r.trunc = window;
    for (const auto& [e, c] : a.coef)
        if (e > v && e - v < window) r.coef[e - v] = -c / lead;

    LaurentSeries acc = ls_constant(Complex(1.0, 0.0), window);
    LaurentSeries term = acc;
    for (long k = 1; k < window && !term.coef.empty(); ++k) {
        term = ls_mul(term, r);
        term.trunc = window;
        ls_trim(term);
        acc = ls_add(acc, term);
    }
    LaurentSeries out;
    out.trunc = a.trunc - 2 * v;
    for (const auto& [e, c] : acc.coef)
        if (e - v < out.trunc) out.coef[e - v] = c / lead;
    ls_trim(out);
    return out;
}

LaurentSeries ls_pow(const LaurentSeries& a, long n) {
    if (n < 0) return ls_pow(ls_inverse(a), -n);
    LaurentSeries acc = ls_constant(Complex(1.0, 0.0), kBigTrunc);
    if (n == 0) return acc;
    LaurentSeries base = a;
    while (n > 0) {
        if (n & 1) acc = ls_mul(acc, base);
        n >>= 1;
        if (n > 0) base = ls_mul(base, base);
    }
    return acc;
}

namespace {

// Local bivariate polynomial with complex coefficients, exponents exact.
struct LPoly {
    std::map<std::pair<long, long>, Complex> t;  // (param exp, unknown exp)
};

double lp_scale(const LPoly& g) {
    double s = 0.0;
    for (const auto& [k, c] : g.t) s = std::max(s, std::abs(c));
    return s;
}

void lp_prune(LPoly& g) {
    double s = lp_scale(g);
    if (s == 0.0) return;
    for (auto it = g.t.begin(); it != g.t.end();) {
        if (std::abs(it->second) < kPrune * s)
            it = g.t.erase(it);
        else
            ++it;
    }
}

Complex lp_coeff(const LPoly& g, long i, long j) {
    auto it = g.t.find({i, j});
    return it == g.t.end() ? Complex(0.0, 0.0) : it->second;
}

LPoly lp_dw(const LPoly& g) {
    LPoly out;
    for (const auto& [k, c] : g.t)
        if (k.second > 0) out.t[{k.first, k.second - 1}] += c * Complex(double(k.second), 0.0);
    return out;
}

// g with the unknown replaced by a series in the parameter, truncated.
LaurentSeries lp_compose(const LPoly& g, const LaurentSeries& w, long trunc) {
    long maxj = 0;
    for (const auto& [k, c] : g.t) maxj = std::max(maxj, k.second);
    std::vector<LaurentSeries> wp(static_cast<std::size_t>(maxj) + 1);
    wp[0] = ls_constant(Complex(1.0, 0.0), trunc);
    for (long j = 1; j <= maxj; ++j) {
        wp[j] = ls_mul(wp[j - 1], w);
        wp[j].trunc = std::min(wp[j].trunc, trunc);
        ls_trim(wp[j]);
    }
    LaurentSeries acc;
    acc.trunc = trunc;
    std::map<long, double> mag;
    for (const auto& [k, c] : g.t) {
        LaurentSeries term = ls_scale(wp[k.second], c);
        // shift by the parameter power
        LaurentSeries shifted;
        shifted.trunc = std::min(term.trunc + k.first, trunc);
        for (const auto& [e, cc] : term.coef)
            if (e + k.first < shifted.trunc) shifted.coef[e + k.first] = cc;
        acc.trunc = std::min(acc.trunc, shifted.trunc);
        for (const auto& [e, cc] : shifted.coef) {
            acc.coef[e] += cc;
            mag[e] += std::abs(cc);
        }
    }
    ls_prune_against(acc, mag);
    return acc;
}

// Solves g(s, w(s)) = 0 with w(0) = 0 at a point where dg/dw(0,0) != 0.
LaurentSeries newton_lift(const LPoly& g, long order) {
    LPoly gw = lp_dw(g);
    LaurentSeries w;
    w.trunc = order;
    for (int iter = 0; iter < 64; ++iter) {
        LaurentSeries val = lp_compose(g, w, order);
        if (val.coef.empty()) break;
        LaurentSeries der = lp_compose(gw, w, order);
        LaurentSeries step = ls_mul(val, ls_inverse(der));
        if (step.coef.empty()) break;
        w = ls_sub(w, step);
        w.trunc = order;
        ls_trim(w);
        if (ls_scale_of(step) < 1e-14 * std::max(1.0, ls_scale_of(w)) &&
            ls_order(step) >= order - 1)
            break;
    }
    LaurentSeries res = lp_compose(g, w, order);
    // The residual bound scales with the lifted series magnitude; its
    // coefficients may legitimately dwarf those of g.
    if (!res.coef.empty() &&
        ls_scale_of(res) > 1e-8 * lp_scale(g) * std::max(1.0, ls_scale_of(w)))
        throw_numeric("branch lift failed to converge");
    return w;
}

struct LocalBranch {
    bool vertical = false;  // the parameter axis itself: u = 0, v = t
    long e = 1;
    LaurentSeries v;
};

struct HullPoint {
    long i, j;
};

// Lower hull of the exponent set, left to right; input reduced to the
// minimal unknown-exponent per parameter-exponent.
std::vector<HullPoint> lower_hull(const LPoly& g) {
    std::map<long, long> minj;
    for (const auto& [k, c] : g.t) {
        auto it = minj.find(k.first);
        if (it == minj.end() || k.second < it->second) minj[k.first] = k.second;
    }
    std::vector<HullPoint> pts;
    for (const auto& [i, j] : minj) pts.push_back({i, j});
    std::vector<HullPoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const HullPoint& o = hull[hull.size() - 2];
            const HullPoint& a = hull[hull.size() - 1];
            long cross = (a.i - o.i) * (p.j - o.j) - (a.j - o.j) * (p.i - o.i);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

std::vector<std::pair<Complex, int>> cluster(std::vector<Complex> roots) {
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return std::pair{a.real(), a.imag()} < std::pair{b.real(), b.imag()};
    });
    std::vector<std::pair<Complex, int>> out;
    for (Complex r : roots) {
        bool merged = false;
        for (auto& [c, n] : out) {
            if (std::abs(r - c) < 1e-6 * (1.0 + std::abs(c))) {
                c = (c * Complex(double(n), 0.0) + r) / Complex(double(n + 1), 0.0);
                ++n;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({r, 1});
    }
    return out;
}

LPoly transform_edge(const LPoly& g, long q, long p, Complex c) {
    // g(s^q, s^p (c + w)), then divide by the lowest power of s.
    LPoly out;
    for (const auto& [k, a] : g.t) {
        long base = q * k.first + p * k.second;
        long j = k.second;
        Complex binom(1.0, 0.0);
        // (c + w)^j expanded; binom tracks C(j, kk) c^(j-kk)
        std::vector<Complex> row(static_cast<std::size_t>(j) + 1);
        Complex cp = ipow(c, j);
        for (long kk = 0; kk <= j; ++kk) {
            row[kk] = binom * cp;
            binom *= Complex(double(j - kk), 0.0) / Complex(double(kk + 1), 0.0);
            if (std::abs(c) > 0.0) cp /= c;
        }
        for (long kk = 0; kk <= j; ++kk) out.t[{base, kk}] += a * row[kk];
    }
    lp_prune(out);
    long shift = kBigTrunc;
    for (const auto& [k, a] : out.t) shift = std::min(shift, k.first);
    if (out.t.empty()) return out;
    LPoly shifted;
    for (const auto& [k, a] : out.t) shifted.t[{k.first - shift, k.second}] = a;
    return shifted;
}

std::vector<LocalBranch> expand_local(LPoly g, long order, int depth) {
    if (depth > 40) throw_numeric("branch expansion recursion too deep");
    lp_prune(g);
    std::vector<LocalBranch> out;

    bool has_j0 = false, has_i0 = false;
    for (const auto& [k, c] : g.t) {
        has_j0 = has_j0 || k.second == 0;
        has_i0 = has_i0 || k.first == 0;
    }
    if (!g.t.empty() && !has_j0) {
        // the unknown divides g: the axis v = 0 is a component
        LocalBranch axis;
        axis.v.trunc = order;
        out.push_back(axis);
        LPoly rest;
        for (const auto& [k, c] : g.t) rest.t[{k.first, k.second - 1}] = c;
        g = rest;
        for (const auto& [k, c] : g.t)
            if (k.second == 0) has_j0 = true;
        if (!has_j0) throw_numeric("repeated local component; curve not squarefree");
    }
    if (!g.t.empty()) {
        has_i0 = false;
        for (const auto& [k, c] : g.t) has_i0 = has_i0 || k.first == 0;
        if (!has_i0) {
            LocalBranch vert;
            vert.vertical = true;
            vert.v = ls_monomial(1, Complex(1.0, 0.0), order);
            out.push_back(vert);
            LPoly rest;
            for (const auto& [k, c] : g.t) rest.t[{k.first - 1, k.second}] = c;
            g = rest;
            bool again = true;
            for (const auto& [k, c] : g.t) again = again && k.first > 0;
            if (again && !g.t.empty())
                throw_numeric("repeated local component; curve not squarefree");
        }
    }
    if (std::abs(lp_coeff(g, 0, 0)) > 0.0) return out;  // origin no longer on g
    if (g.t.empty()) return out;

    // Regular case: solve directly by Newton iteration.
    if (std::abs(lp_coeff(g, 0, 1)) > 0.0) {
        LocalBranch b;
        b.v = newton_lift(g, order);
        out.push_back(b);
        return out;
    }

    auto hull = lower_hull(g);
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        HullPoint P1 = hull[h], P2 = hull[h + 1];
        if (P1.j <= P2.j) continue;  // only descending edges carry branches
        long di = P2.i - P1.i, dj = P1.j - P2.j;
        long gg = std::gcd(di, dj);
        long p = di / gg, q = dj / gg;

        std::vector<Complex> phi(static_cast<std::size_t>(gg) + 1);
        for (long k = 0; k <= gg; ++k) phi[k] = lp_coeff(g, P2.i - k * p, P2.j + k * q);
        std::vector<Complex> roots;
        if (gg == 1) {
            roots.push_back(-phi[0] / phi[1]);
        } else {
            roots = aberth(phi);
        }
        for (const auto& [T, mult] : cluster(roots)) {
            if (std::abs(T) < 1e-12) continue;
            Complex c = std::pow(T, 1.0 / double(q));
            LPoly hgl = transform_edge(g, q, p, c);
            long sub_order = std::min(order * q, 4096L);
            std::vector<LocalBranch> subs;
            if (std::abs(lp_coeff(hgl, 0, 0)) > 0.0) continue;  // spurious root
            if (std::abs(lp_coeff(hgl, 0, 1)) > 0.0) {
                LocalBranch b;
                b.v = newton_lift(hgl, sub_order);
                subs.push_back(b);
            } else {
                subs = expand_local(hgl, sub_order, depth + 1);
            }
            for (const auto& sb : subs) {
                if (sb.vertical) throw_numeric("degenerate edge transform");
                LocalBranch b;
                b.e = q * sb.e;
                // v = t^{p e'} (c + w(t))
                LaurentSeries inner = ls_add(ls_constant(c, sb.v.trunc), sb.v);
                b.v = LaurentSeries{};
                b.v.trunc = std::min(inner.trunc + p * sb.e, order * b.e);
                for (const auto& [e0, cc] : inner.coef) {
                    long e = e0 + p * sb.e;
                    if (e < b.v.trunc) b.v.coef[e] = cc;
                }
                out.push_back(b);
            }
        }
    }
    return out;
}

struct ChartMap {
    int chart;        // coordinate fixed to 1
    Complex u0, v0;   // center values of the two running coordinates
};

ChartMap chart_of(const ProjectivePoint& p) {
    double ax = std::abs(p.X), ay = std::abs(p.Y), az = std::abs(p.Z);
    int k = 0;
    if (ay > ax || az > ax) k = (ay >= az) ? 1 : 2;
    switch (k) {
        case 0: return {0, p.Y / p.X, p.Z / p.X};
        case 1: return {1, p.X / p.Y, p.Z / p.Y};
        default: return {2, p.X / p.Z, p.Y / p.Z};
    }
}

// The curve in the chart's local coordinates centered at the point.
LPoly localize(const ProjectiveCurve& pc, const ChartMap& cm) {
    // coordinate -> (constant, local variable index or -1)
    std::array<std::pair<Complex, int>, 3> sub;
    switch (cm.chart) {
        case 0:
            sub = {{{Complex(1, 0), -1}, {cm.u0, 0}, {cm.v0, 1}}};
            break;
        case 1:
            sub = {{{cm.u0, 0}, {Complex(1, 0), -1}, {cm.v0, 1}}};
            break;
        default:
            sub = {{{cm.u0, 0}, {cm.v0, 1}, {Complex(1, 0), -1}}};
            break;
    }
    LPoly g;
    for (const auto& [mono, c] : pc.poly.terms()) {
        // product over coordinates of (const + var)^exp, expanded binomially
        std::map<std::pair<long, long>, Complex> acc;
        acc[{0, 0}] = Complex(to_double(c), 0.0);
        for (int coord = 0; coord < 3; ++coord) {
            unsigned n = mono[static_cast<std::size_t>(coord)];
            if (n == 0) continue;
            auto [base, var] = sub[static_cast<std::size_t>(coord)];
            std::map<std::pair<long, long>, Complex> next;
            if (var < 0) {
                next = std::move(acc);  // factor is exactly 1
            } else {
                // binomial row for (base + local)^n
                std::vector<Complex> row(n + 1);
                Complex binom(1.0, 0.0);
                Complex bp = ipow(base, n);
                for (unsigned kk = 0; kk <= n; ++kk) {
                    row[kk] = binom * bp;
                    binom *= Complex(double(n - kk), 0.0) / Complex(double(kk + 1), 0.0);
                    if (std::abs(base) > 0.0)
                        bp /= base;
                    else
                        bp = (kk + 1 == n) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                }
                for (const auto& [k0, c0] : acc)
                    for (unsigned kk = 0; kk <= n; ++kk) {
                        if (std::abs(row[kk]) == 0.0) continue;
                        std::pair<long, long> key = k0;
                        (var == 0 ? key.first : key.second) += kk;
                        next[key] += c0 * row[kk];
                    }
            }
            acc = std::move(next);
        }
        for (const auto& [k0, c0] : acc) g.t[k0] += c0;
    }
    lp_prune(g);
    return g;
}

LaurentSeries shift_const(Complex c, const LaurentSeries& s, long trunc) {
    return ls_add(ls_constant(c, trunc), s);
}

}  // namespace

std::vector<PuiseuxBranch> branch_expansions(const ProjectiveCurve& pc,
                                             const ProjectivePoint& point, long order) {
    if (order < 4) throw_input("expansion order must be at least 4");
    ProjectivePoint np = normalize_point(point);

    double scale = 0.0;
    Complex at(0.0, 0.0);
    for (const auto& [mono, c] : pc.poly.terms()) {
        Complex t = Complex(to_double(c), 0.0) * ipow(np.X, mono[0]) * ipow(np.Y, mono[1]) *
                    ipow(np.Z, mono[2]);
        at += t;
        scale = std::max(scale, std::abs(t));
    }
    if (std::abs(at) > 1e-8 * std::max(1.0, scale)) throw_input("point not on the curve");

    ChartMap cm = chart_of(np);
    LPoly g = localize(pc, cm);
    auto locals = expand_local(g, order, 0);
    if (locals.empty()) throw_numeric("no branches found at the point");

    std::vector<PuiseuxBranch> out;
    for (const auto& lb : locals) {
        PuiseuxBranch br;
        br.center = np;
        br.chart = cm.chart;
        br.e = lb.e;
        br.affine_vars = pc.affine_vars;
        long T = lb.v.trunc > 0 ? lb.v.trunc : order;
        br.order = T;

        LaurentSeries u_s = lb.vertical ? LaurentSeries{{}, T}
                                        : ls_monomial(lb.e, Complex(1.0, 0.0), T);
        LaurentSeries v_s = lb.v;
        v_s.trunc = T;

        LaurentSeries U = shift_const(cm.u0, u_s, T);  // first running coordinate
        LaurentSeries V = shift_const(cm.v0, v_s, T);  // second running coordinate
        LaurentSeries one = ls_constant(Complex(1.0, 0.0), T);
        switch (cm.chart) {
            case 0:  // X = 1, (U, V) = (Y, Z): x = 1/Y, z = Z/Y
                br.first = ls_inverse(U);
                br.second = ls_mul(V, ls_inverse(U));
                break;
            case 1:  // Y = 1: the affine chart itself
                br.first = U;
                br.second = V;
                break;
            default:  // Z = 1, (U, V) = (X, Y): x = X/Y, z = 1/Y
                br.first = ls_mul(U, ls_inverse(V));
                br.second = ls_inverse(V);
                break;
        }

        // residual of the chart equation along the branch; vertical
        // branches substitute u = 0, others u = t^e
        LaurentSeries resid;
        resid.trunc = T;
        long maxj = 0;
        for (const auto& [k, c] : g.t) maxj = std::max(maxj, k.second);
        std::vector<LaurentSeries> vp(static_cast<std::size_t>(maxj) + 1);
        vp[0] = ls_constant(Complex(1.0, 0.0), T);
        for (long j = 1; j <= maxj; ++j) vp[j] = ls_mul(vp[j - 1], v_s);
        double resid_mag = 0.0;
        for (const auto& [k, c] : g.t) {
            if (lb.vertical && k.first != 0) continue;
            long shift = lb.vertical ? 0 : k.first * lb.e;
            for (const auto& [e, cc] : vp[static_cast<std::size_t>(k.second)].coef) {
                long ee = e + shift;
                if (ee < T) {
                    resid.coef[ee] += cc * c;
                    resid_mag = std::max(resid_mag, std::abs(cc) * std::abs(c));
                }
            }
        }
        br.residual = ls_scale_of(resid) / std::max({1.0, lp_scale(g), resid_mag});
        out.push_back(std::move(br));
    }

    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b) {
            if (out[a].e != out[b].e) continue;
            LaurentSeries diff = ls_sub(out[a].second, out[b].second);
            LaurentSeries diff1 = ls_sub(out[a].first, out[b].first);
            double s = std::max({ls_scale_of(out[a].second), ls_scale_of(out[b].second),
                                 ls_scale_of(out[a].first), 1.0});
            if (ls_scale_of(diff) < 1e-9 * s && ls_scale_of(diff1) < 1e-9 * s)
                throw_numeric("expansion order too small to separate branches");
        }

    std::sort(out.begin(), out.end(), [](const PuiseuxBranch& a, const PuiseuxBranch& b) {
        if (a.e != b.e) return a.e < b.e;
        auto key = [](const PuiseuxBranch& br) {
            std::vector<double> k;
            for (const auto& [e, c] : br.second.coef) {
                k.push_back(double(e));
                k.push_back(std::round(c.real() * 1e6));
                k.push_back(std::round(c.imag() * 1e6));
            }
            return k;
        };
        return key(a) < key(b);
    });
    return out;
}

RatFunc rat(MultiPoly num) {
    MultiPoly den = MultiPoly::constant(num.vars(), Rational(1));
    return {std::move(num), std::move(den)};
}

RatFunc rat(MultiPoly num, MultiPoly den) { return {std::move(num), std::move(den)}; }

LaurentSeries compose_on_branch(const MultiPoly& f, const PuiseuxBranch& br) {
    MultiPoly g = f.in_vars(br.affine_vars);
    long maxa = std::max(0L, g.degree_in(0));
    long maxb = std::max(0L, g.degree_in(1));
    long T = br.order;
    std::vector<LaurentSeries> xp(static_cast<std::size_t>(maxa) + 1);
    std::vector<LaurentSeries> zp(static_cast<std::size_t>(maxb) + 1);
    xp[0] = ls_constant(Complex(1.0, 0.0), kBigTrunc);
    zp[0] = xp[0];
    for (long i = 1; i <= maxa; ++i) xp[i] = ls_mul(xp[i - 1], br.first);
    for (long j = 1; j <= maxb; ++j) zp[j] = ls_mul(zp[j - 1], br.second);
    LaurentSeries acc;
    acc.trunc = T;
    std::map<long, double> mag;
    for (const auto& [mono, c] : g.terms()) {
        LaurentSeries term = ls_mul(xp[mono[0]], zp[mono[1]]);
        acc.trunc = std::min(acc.trunc, term.trunc);
        for (const auto& [e, cc] : term.coef) {
            Complex v = cc * Complex(to_double(c), 0.0);
            acc.coef[e] += v;
            mag[e] += std::abs(v);
        }
    }
    ls_prune_against(acc, mag);
    return acc;
}

long valuation(const RatFunc& f, const PuiseuxBranch& br) {
    if (f.num.is_zero()) throw_input("valuation of the zero function");
    long vn = ls_order(compose_on_branch(f.num, br));
    long vd = ls_order(compose_on_branch(f.den, br));
    return vn - vd;
}

Complex leading_value(const RatFunc& f, const PuiseuxBranch& br) {
    LaurentSeries n = compose_on_branch(f.num, br);
    LaurentSeries d = compose_on_branch(f.den, br);
    return n.coef.at(ls_order(n)) / d.coef.at(ls_order(d));
}

Complex tame_symbol(const RatFunc& f, const RatFunc& g, const PuiseuxBranch& br) {
    long vf = valuation(f, br);
    long vg = valuation(g, br);
    Complex lf = leading_value(f, br);
    Complex lg = leading_value(g, br);
    Complex sign = ((vf * vg) % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
    return sign * ipow(lf, vg) / ipow(lg, vf);
}

}  // namespace knotcv
