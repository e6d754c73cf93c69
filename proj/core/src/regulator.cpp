#include "knotcv/regulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "knotcv/error.hpp"

namespace knotcv {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct TrapSums {
    double eta = 0.0;
    double xi_raw = 0.0;  // integral of log|m| d log|l| + arg l d arg m
};

TrapSums trap_sums(const std::vector<PathSample>& s, std::size_t stride) {
    TrapSums out;
    std::size_t i = 0;
    while (i + 1 < s.size()) {
        std::size_t j = std::min(i + stride, s.size() - 1);
        const PathSample& a = s[i];
        const PathSample& b = s[j];
        double d_arg_m = b.arg_m - a.arg_m;
        double d_arg_l = b.arg_l - a.arg_l;
        double d_log_l = b.log_abs_l - a.log_abs_l;
        out.eta += 0.5 * (a.log_abs_l + b.log_abs_l) * d_arg_m -
                   0.5 * (a.log_abs_m + b.log_abs_m) * d_arg_l;
        out.xi_raw += 0.5 * (a.log_abs_m + b.log_abs_m) * d_log_l +
                      0.5 * (a.arg_l + b.arg_l) * d_arg_m;
        i = j;
    }
    return out;
}

// Evaluation together with the largest term magnitude, so zero tests can be
// made relative to the size of the cancellation that produced the value.
std::pair<Complex, double> eval_scaled(const MultiPoly& p, Complex m, Complex l) {
    Complex acc(0.0, 0.0);
    double scale = 0.0;
    for (const auto& [mono, c] : p.terms()) {
        Complex t = to_double(c) * std::pow(m, static_cast<int>(mono[0])) *
                    std::pow(l, static_cast<int>(mono[1]));
        acc += t;
        scale = std::max(scale, std::abs(t));
    }
    return {acc, scale};
}

// log f along the loop, unwrapped from the 0 <= arg < 2pi base branch.
std::vector<Complex> log_channel(const RatFunc& f, const CurvePath& loop) {
    std::vector<Complex> out;
    out.reserve(loop.samples.size());
    double prev_arg = 0.0;
    for (std::size_t i = 0; i < loop.samples.size(); ++i) {
        const PathSample& s = loop.samples[i];
        auto [nv, ns] = eval_scaled(f.num, s.m, s.l);
        auto [dv, ds] = eval_scaled(f.den, s.m, s.l);
        if (std::abs(nv) <= 1e-12 * std::max(1.0, ns) ||
            std::abs(dv) <= 1e-12 * std::max(1.0, ds))
            throw_input("loop meets a zero or pole of the pair");
        Complex v = nv / dv;
        double arg = std::arg(v);
        if (i == 0) {
            if (arg < 0.0) arg += 2.0 * kPi;
        } else {
            double jump = std::remainder(arg - prev_arg, 2.0 * kPi);
            if (std::abs(jump) >= kPi / 2.0)
                throw_numeric("loop sampling too coarse to unwrap the pair");
            arg = prev_arg + jump;
        }
        prev_arg = arg;
        out.emplace_back(std::log(std::abs(v)), arg);
    }
    return out;
}

Complex couple(const std::vector<Complex>& log_f, const std::vector<Complex>& log_g) {
    Complex a(0.0, 0.0);
    for (std::size_t i = 0; i + 1 < log_f.size(); ++i)
        a += 0.5 * (log_f[i] + log_f[i + 1]) * (log_g[i + 1] - log_g[i]);
    Complex b = log_g.front() * (log_f.back() - log_f.front());
    return std::exp((a - b) / Complex(0.0, 2.0 * kPi));
}

}  // namespace

FormIntegrals integrate_forms(const CurvePath& path) {
    FormIntegrals out;
    const std::vector<PathSample>& s = path.samples;
    if (s.size() < 2) return out;
    TrapSums full = trap_sums(s, 1);
    TrapSums half = trap_sums(s, 2);
    out.eta = full.eta;
    out.xi = -full.xi_raw;
    out.error = std::max(std::abs(full.eta - half.eta),
                         std::abs(full.xi_raw - half.xi_raw)) /
                3.0;
    std::vector<Complex> log_l, log_m;
    log_l.reserve(s.size());
    log_m.reserve(s.size());
    for (const PathSample& p : s) {
        log_l.emplace_back(p.log_abs_l, p.arg_l);
        log_m.emplace_back(p.log_abs_m, p.arg_m);
    }
    out.holonomy = couple(log_l, log_m);
    return out;
}

VolCsPair vol_cs(const CurvePath& path, double vol_k, double cs_k) {
    VolCsPair out{vol_k, cs_k};
    if (path.samples.empty()) return out;
    Complex m0 = path.samples.front().m;
    if (std::abs(m0 - Complex(1.0, 0.0)) > 1e-8)
        throw_input("path not anchored at the base point");
    FormIntegrals f = integrate_forms(path);
    out.vol = vol_k - 2.0 * f.eta;
    out.cs = cs_k + f.xi / (kPi * kPi);
    return out;
}

Complex holonomy(const RatFunc& f, const RatFunc& g, const CurvePath& loop) {
    if (loop.samples.size() < 2) throw_input("loop has too few samples");
    if (!loop.closed) throw_input("holonomy needs a closed loop");
    return couple(log_channel(f, loop), log_channel(g, loop));
}

std::optional<std::pair<long, long>> detect_rational(double value, long max_den, double tol) {
    if (max_den < 1) throw_input("max_den must be positive");
    for (long q = 1; q <= max_den; ++q) {
        double scaled = value * static_cast<double>(q);
        if (std::abs(scaled) > 1e15) return std::nullopt;
        long p = std::lround(scaled);
        if (std::abs(value - static_cast<double>(p) / static_cast<double>(q)) <= tol) {
            long g = std::gcd(std::abs(p), q);
            if (g == 0) g = 1;
            return std::make_pair(p / g, q / g);
        }
    }
    return std::nullopt;
}

}  // namespace knotcv
