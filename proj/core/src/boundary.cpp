#include "knotcv/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "knotcv/error.hpp"
#include "knotcv/polyalg.hpp"
#include "knotcv/roots.hpp"
#include "knotcv/trace.hpp"

namespace knotcv {

namespace {

const std::vector<std::string>& ml_ring() {
    static const std::vector<std::string> vars{"m", "l"};
    return vars;
}

MultiPoly strip_monomial_units(const MultiPoly& p) {
    if (p.is_zero()) return p;
    std::size_t n = p.vars().size();
    std::vector<unsigned> mins(n, std::numeric_limits<unsigned>::max());
    for (const auto& [mono, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i) mins[i] = std::min(mins[i], mono[i]);
    bool trivial = true;
    for (unsigned m : mins) trivial = trivial && m == 0;
    if (trivial) return p;
    MultiPoly out = MultiPoly::constant(p.vars(), Rational(0));
    for (const auto& [mono, c] : p.terms()) {
        Monomial shifted = mono;
        for (std::size_t i = 0; i < n; ++i) shifted[i] -= mins[i];
        out.add_term(shifted, c);
    }
    return out;
}

Complex eval_ml_scaled(const MultiPoly& p, Complex m, Complex l, double& scale) {
    Complex val(0.0, 0.0);
    scale = 1.0;
    for (const auto& [mono, c] : p.terms()) {
        Complex t(to_double(c), 0.0);
        for (unsigned i = 0; i < mono[0]; ++i) t *= m;
        for (unsigned i = 0; i < mono[1]; ++i) t *= l;
        val += t;
        scale = std::max(scale, std::abs(t));
    }
    return val;
}

struct EigenSample {
    Complex m;
    Complex l;
};

// Random points of the component pushed to eigenvalue coordinates: pick x,
// solve the component for z, then solve the three trace relations with the
// mu-lambda relation selecting the consistent branch pair.
std::vector<EigenSample> eigen_samples(const PlaneCurve& component,
                                       const BoundaryTriple& triple, std::size_t count) {
    std::mt19937 rng(0xb0a7u);
    std::uniform_real_distribution<double> box(-2.0, 2.0);
    const auto zcoeffs = component.poly.coeffs_in(1);
    std::vector<EigenSample> out;
    int attempts = 0;
    while (out.size() < count) {
        if (++attempts > 4000)
            throw_numeric("eigenvalue sampling failed on the component");
        Complex x0(box(rng), box(rng));
        std::vector<Complex> zp;
        double maxc = 0.0;
        for (const auto& c : zcoeffs) {
            zp.push_back(c.eval({x0, Complex(0.0, 0.0)}));
            maxc = std::max(maxc, std::abs(zp.back()));
        }
        if (maxc == 0.0) continue;
        while (!zp.empty() && std::abs(zp.back()) < 1e-10 * maxc) zp.pop_back();
        if (zp.size() <= 1) continue;
        auto zroots = aberth(zp);
        Complex z0 = zroots[static_cast<std::size_t>(attempts) % zroots.size()];

        Complex Il = triple.I_lambda.eval({x0, z0});
        Complex Iml = triple.I_mulambda.eval({x0, z0});
        Complex dm = std::sqrt(x0 * x0 - Complex(4.0, 0.0));
        Complex dl = std::sqrt(Il * Il - Complex(4.0, 0.0));
        bool found = false;
        for (int sm = 0; sm < 2 && !found; ++sm) {
            Complex m = 0.5 * (x0 + (sm ? dm : -dm));
            if (std::abs(m) < 1e-12) continue;
            for (int sl = 0; sl < 2 && !found; ++sl) {
                Complex l = 0.5 * (Il + (sl ? dl : -dl));
                if (std::abs(l) < 1e-12) continue;
                Complex ml = m * l;
                if (std::abs(ml + Complex(1.0, 0.0) / ml - Iml) <
                    1e-6 * std::max(1.0, std::abs(Iml))) {
                    out.push_back({m, l});
                    found = true;
                }
            }
        }
    }
    return out;
}

bool passes_point(const MultiPoly& p, const EigenSample& s, double tol) {
    double scale = 1.0;
    Complex v = eval_ml_scaled(p, s.m, s.l, scale);
    return std::abs(v) < tol * scale;
}

}  // namespace

std::array<Complex, 3> t_D(Complex m, Complex l) {
    if (m == Complex(0.0, 0.0) || l == Complex(0.0, 0.0))
        throw_input("boundary character requires nonzero eigenvalues");
    Complex one(1.0, 0.0);
    return {m + one / m, l + one / l, m * l + one / (m * l)};
}

Complex surface_residual(Complex x, Complex y, Complex z) {
    return x * x + y * y + z * z - x * y * z - Complex(4.0, 0.0);
}

BoundaryTriple restriction_map(const PlaneCurve& component, const KnotPresentation& pres) {
    if (!pres.has_longitude()) throw_input("restriction: presentation has no longitude");
    if (component.vars() != std::vector<std::string>{"x", "z"})
        throw_input("restriction: component must live in (x, z)");
    if (component.poly.degree_in(1) <= 0)
        throw_input("restriction: component independent of z");
    if (!component.poly.leading_coeff_in(1).is_constant())
        throw_input("restriction: component needs a constant leading z-coefficient");

    auto reduce = [&](const GroupWord& w) {
        MultiPoly p = specialize_to_xz(trace_poly(w));
        return divrem(p, component.poly, 1).remainder;
    };
    BoundaryTriple out{reduce(pres.meridian), reduce(pres.longitude),
                       reduce(pres.meridian * pres.longitude), component};
    return out;
}

PlaneCurve a_polynomial(const PlaneCurve& component, const BoundaryTriple& triple) {
    const std::vector<std::string> full{"x", "z", "m", "l"};
    MultiPoly comp4 = component.poly.in_vars(full);
    MultiPoly Il = triple.I_lambda.in_vars(full);
    MultiPoly Iml = triple.I_mulambda.in_vars(full);
    MultiPoly m = MultiPoly::variable(full, "m");
    MultiPoly l = MultiPoly::variable(full, "l");
    MultiPoly x = MultiPoly::variable(full, "x");
    MultiPoly one = MultiPoly::constant(full, Rational(1));

    MultiPoly e2 = m * m - x * m + one;
    MultiPoly e3 = l * l - Il * l + one;
    MultiPoly e4 = (m * l) * (m * l) - Iml * (m * l) + one;

    MultiPoly r3 = resultant(comp4, e3, 1);
    MultiPoly r4 = resultant(comp4, e4, 1);
    if (r3.is_zero() || r4.is_zero()) throw_verification("component maps to a point");
    MultiPoly s3 = resultant(r3, e2, 0);
    MultiPoly s4 = resultant(r4, e2, 0);
    if (s3.is_zero() || s4.is_zero()) throw_verification("component maps to a point");

    MultiPoly g = poly_gcd(s3, s4);
    if (g.is_constant()) throw_verification("component maps to a point");
    MultiPoly candidate =
        squarefree_part_all(strip_monomial_units(g.in_vars(ml_ring()))).primitive();
    if (candidate.is_constant()) throw_verification("component maps to a point");

    auto samples = eigen_samples(component, triple, 50);

    // Partial spurious-factor split: peel variable-free contents and test
    // each piece; a piece missed by every sample is a resultant artifact.
    std::vector<MultiPoly> pieces;
    MultiPoly core = candidate;
    for (std::size_t var = 0; var < 2; ++var) {
        MultiPoly c = content_in(core, var);
        if (!c.is_constant()) {
            pieces.push_back(c.primitive());
            core = exact_div(core, c).primitive();
        }
    }
    if (!core.is_constant()) pieces.push_back(core);

    MultiPoly result;
    bool have = false;
    for (const auto& piece : pieces) {
        bool hit = false;
        for (std::size_t i = 0; i < 20 && i < samples.size(); ++i)
            hit = hit || passes_point(piece, samples[i], 1e-7);
        if (!hit) continue;
        result = have ? result * piece : piece;
        have = true;
    }
    if (!have) throw_verification("eigenvalue variety lost every sampled point");

    result = strip_monomial_units(result).primitive();
    for (const auto& s : samples) {
        if (!passes_point(result, s, 1e-7))
            throw_verification("eigenvalue variety misses a sampled component point");
    }
    return PlaneCurve{result};
}

}  // namespace knotcv
