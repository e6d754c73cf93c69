#pragma once

#include <utility>
#include <vector>

#include "knotcv/multipoly.hpp"

namespace knotcv {

struct DivRemResult {
    MultiPoly quotient;
    MultiPoly remainder;
    // When true the identity is lc(g)^lc_power * f = quotient*g + remainder;
    // callers correct by content division.
    bool pseudo = false;
    unsigned int lc_power = 0;
};

// Division of f by g with respect to var. Plain division requires the
// leading coefficient of g in var to be a nonzero rational constant;
// otherwise pseudo-division runs only when allow_pseudo is set.
DivRemResult divrem(const MultiPoly& f, const MultiPoly& g, std::size_t var,
                    bool allow_pseudo = false);

// Pseudo-remainder normalized by lc(g)^(deg f - deg g + 1).
MultiPoly prem(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// Quotient f/g when g divides f exactly; throws a numeric error otherwise.
MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g);

// Primitive-PRS gcd over all variables, returned integer-primitive with
// positive leading coefficient; constants map to 1.
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

// gcd of the coefficients of f viewed as a polynomial in var.
MultiPoly content_in(const MultiPoly& f, std::size_t var);

// Resultant with respect to var via the subresultant PRS.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// Same value from the Sylvester matrix with fraction-free elimination.
// Slower; kept as an independent cross-check.
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var);

// f / gcd(f, df/dvar), integer-primitive.
MultiPoly squarefree_part(const MultiPoly& f, std::size_t var);

// Squarefree part with repeated factors removed in every variable.
MultiPoly squarefree_part_all(const MultiPoly& f);

// Yun decomposition in var: f = content * prod factor^multiplicity with each
// factor squarefree and pairwise coprime.
std::vector<std::pair<MultiPoly, unsigned int>> squarefree_decomposition(
    const MultiPoly& f, std::size_t var);

}  // namespace knotcv
