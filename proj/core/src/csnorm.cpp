#include "knotcv/csnorm.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

#include "knotcv/error.hpp"

namespace knotcv {

namespace {

// True when some nonzero integer vector is killed by every nonzero
// functional, i.e. all nonzero rows are proportional.
bool degenerate_assignment(const std::vector<std::array<long, 2>>& rows) {
    std::vector<std::array<long, 2>> nz;
    for (const auto& r : rows)
        if (r[0] != 0 || r[1] != 0) nz.push_back(r);
    if (nz.empty()) return true;
    for (std::size_t i = 1; i < nz.size(); ++i)
        if (nz[0][0] * nz[i][1] - nz[0][1] * nz[i][0] != 0) return false;
    return true;
}

}  // namespace

NormForm cs_norm_form(const PlaneCurve& component, const BoundaryTriple& triple) {
    ProjectiveCurve pc = projective_closure(component);
    auto pts = ideal_points(pc);

    NormForm form;
    form.closure = pc;
    for (const auto& pt : pts) {
        long order = 12;
        for (;;) {
            try {
                auto branches = branch_expansions(pc, pt, order);
                for (const auto& br : branches) {
                    IdealBranchData d;
                    d.branch = br;
                    d.v_mu = valuation(rat(triple.I_mu), br);
                    d.v_lambda = valuation(rat(triple.I_lambda), br);
                    d.w_mu = std::max(0L, -2 * d.v_mu);
                    d.w_lambda = std::max(0L, -2 * d.v_lambda);
                    form.points.push_back(std::move(d));
                }
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::numeric || order >= 96) throw;
                order *= 2;
            }
        }
    }
    if (form.points.size() > 20) throw_numeric("too many ideal branches");

    // Resolve relative signs: reject assignments where a nonzero slope
    // vector is annihilated by every branch functional.
    std::size_t n = form.points.size();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<std::array<long, 2>> rows;
        for (std::size_t i = 0; i < n; ++i) {
            long s = (mask >> i) & 1 ? -1 : 1;
            rows.push_back({form.points[i].w_mu, s * form.points[i].w_lambda});
        }
        if (!degenerate_assignment(rows)) {
            for (std::size_t i = 0; i < n; ++i)
                form.points[i].sign = (mask >> i) & 1 ? -1 : 1;
            return form;
        }
    }

    std::ostringstream msg;
    msg << "no sign assignment yields a norm; branch weights:";
    for (const auto& d : form.points) msg << " (" << d.w_mu << "," << d.w_lambda << ")";
    throw_verification(msg.str());
}

long cs_norm(const NormForm& form, long p, long q) {
    if (p == 0 && q == 0) throw_input("norm of the zero slope");
    long total = 0;
    for (const auto& d : form.points)
        total += std::llabs(d.w_mu * p + d.sign * d.w_lambda * q);
    return total;
}

}  // namespace knotcv
