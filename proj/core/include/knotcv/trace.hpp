#pragma once

#include <map>
#include <string>

#include "knotcv/multipoly.hpp"
#include "knotcv/word.hpp"

namespace knotcv {

// Trace coordinates of the rank-2 free group: x = tr a, y = tr b, z = tr ab.
inline const std::vector<std::string>& trace_ring() {
    static const std::vector<std::string> vars{"x", "y", "z"};
    return vars;
}

// Exact polynomial p(x, y, z) with p(tr A, tr B, tr AB) = tr w(A, B) for all
// SL2 pairs (A, B). Memoized on the canonical cyclic representative, which
// is valid because traces are conjugation and inversion invariant.
MultiPoly trace_poly(const GroupWord& w);

// Substitution homomorphism. All binding images must live in one ring; that
// ring must also contain every unbound variable of p. With require_ground
// set, any remaining variable is an error.
MultiPoly specialize(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings,
                     bool require_ground = false);

// Convenience for the knot pipeline: y bound to x, result in the (x, z) ring.
MultiPoly specialize_to_xz(const MultiPoly& p);

// tr(mu^p lambda^q) for commuting mu, lambda as a polynomial in
// u = tr mu, v = tr lambda, w = tr(mu lambda).
MultiPoly peripheral_trace(long p, long q);

inline const std::vector<std::string>& peripheral_ring() {
    static const std::vector<std::string> vars{"u", "v", "w"};
    return vars;
}

}  // namespace knotcv
