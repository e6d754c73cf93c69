#include "knotcv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "knotcv/error.hpp"
#include "knotcv/polyalg.hpp"

namespace knotcv {

namespace {

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

Complex horner_deriv(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 1;)
        acc = acc * z + coeffs[i] * static_cast<double>(i);
    return acc;
}

void normalize_by_max(std::vector<Complex>& coeffs) {
    double mx = 0.0;
    for (const Complex& c : coeffs) mx = std::max(mx, std::abs(c));
    if (mx > 0.0)
        for (Complex& c : coeffs) c /= mx;
}

std::vector<Complex> ascending_coeffs(const MultiPoly& p, std::size_t var) {
    std::vector<Complex> out;
    for (const MultiPoly& c : p.coeffs_in(var))
        out.emplace_back(to_double(c.constant_value()), 0.0);
    return out;
}

}  // namespace

std::vector<Complex> aberth(std::vector<Complex> coeffs, const RootOptions& opts) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    normalize_by_max(coeffs);
    std::size_t n = coeffs.size() - 1;

    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        bound = std::max(bound, std::abs(coeffs[i] / coeffs[n]));
    double radius = 1.0 + bound;

    std::vector<Complex> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Slightly irrational spacing keeps starting points off symmetry axes.
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) +
                       0.3999 + 0.01 * static_cast<double>(k);
        z[k] = 0.7 * radius * Complex(std::cos(theta), std::sin(theta));
    }

    std::vector<bool> done(n, false);
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            Complex p = horner(coeffs, z[k]);
            Complex dp = horner_deriv(coeffs, z[k]);
            if (std::abs(dp) < 1e-300) {
                z[k] += Complex(1e-6, 1e-6);
                worst = 1.0;
                continue;
            }
            Complex w = p / dp;
            Complex s(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == k) continue;
                Complex diff = z[k] - z[j];
                if (std::abs(diff) < 1e-300) diff = Complex(1e-12, 0.0);
                s += 1.0 / diff;
            }
            Complex denom = 1.0 - w * s;
            if (std::abs(denom) < 1e-300) denom = Complex(1.0, 0.0);
            Complex step = w / denom;
            z[k] -= step;
            double rel = std::abs(step) / std::max(1.0, std::abs(z[k]));
            if (rel < opts.polish_tol) done[k] = true;
            worst = std::max(worst, rel);
        }
        if (worst < opts.polish_tol) {
            for (std::size_t k = 0; k < n; ++k) {
                for (int it = 0; it < 4; ++it) {
                    Complex dp = horner_deriv(coeffs, z[k]);
                    if (std::abs(dp) < 1e-300) break;
                    z[k] -= horner(coeffs, z[k]) / dp;
                }
            }
            return z;
        }
    }
    throw_numeric("root finding did not converge within sweep limit");
}

std::vector<ComplexRoot> complex_roots(const MultiPoly& p, double tol,
                                       const RootOptions& opts) {
    if (p.is_zero()) throw_input("roots of the zero polynomial");
    if (tol <= 0) throw_input("roots: tolerance must be positive");
    std::size_t var = p.vars().size();
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        if (p.degree_in(i) > 0) {
            if (var != p.vars().size()) throw_input("roots: polynomial is not univariate");
            var = i;
        }
    }
    if (var == p.vars().size()) return {};

    std::vector<ComplexRoot> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p, var)) {
        for (Complex r : aberth(ascending_coeffs(factor, var), opts))
            out.push_back({r, mult, 0.0});
    }

    // Separate approximations closer than the cluster tolerance are treated
    // as one root; the Yun factors are coprime so this is normally a no-op.
    std::vector<ComplexRoot> merged;
    for (const ComplexRoot& r : out) {
        bool absorbed = false;
        for (ComplexRoot& m : merged) {
            if (std::abs(m.value - r.value) <
                opts.cluster_tol * std::max(1.0, std::abs(m.value))) {
                m.multiplicity += r.multiplicity;
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(r);
    }

    std::vector<Complex> norm = ascending_coeffs(p, var);
    normalize_by_max(norm);
    unsigned long total = 0;
    for (ComplexRoot& r : merged) {
        r.residual = std::abs(horner(norm, r.value));
        total += r.multiplicity;
        if (!(r.residual < tol))
            throw_numeric("roots: residual " + std::to_string(r.residual) +
                          " above tolerance");
    }
    if (total != static_cast<unsigned long>(p.degree_in(var)))
        throw_numeric("roots: multiplicities do not sum to the degree");

    std::sort(merged.begin(), merged.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return merged;
}

}  // namespace knotcv
