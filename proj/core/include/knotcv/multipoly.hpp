#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "knotcv/rational.hpp"

namespace knotcv {

using Complex = std::complex<double>;

// Exponent tuple, one entry per variable of the owning polynomial.
using Monomial = std::vector<unsigned int>;

// Orders monomials so that map iteration starts at the graded-lex leading
// term: higher total degree first, ties broken lexicographically.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        unsigned long da = 0, db = 0;
        for (unsigned int e : a) da += e;
        for (unsigned int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Multivariate polynomial with exact rational coefficients over a fixed,
// ordered variable list. Immutable in spirit: all operations return new
// values. Invariant: no explicit zero coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, Rational c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
    // Parses "+ - * ^ ( )" expressions over the given variables with integer
    // or fraction literals; juxtaposition like "3t" multiplies.
    static MultiPoly parse(const std::string& text, std::vector<std::string> vars);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t var_index(const std::string& name) const;

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational constant_value() const;

    long total_degree() const noexcept;           // -1 for the zero polynomial
    long degree_in(std::size_t var) const noexcept;
    Rational coeff(const Monomial& m) const;
    const Rational& leading_coeff() const;        // graded-lex leading term
    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(unsigned int e) const;
    bool operator==(const MultiPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Univariate view: coefficients of var^k for k = 0..deg, each a
    // polynomial in the same ring with var-exponent zero.
    std::vector<MultiPoly> coeffs_in(std::size_t var) const;
    static MultiPoly from_coeffs_in(std::size_t var, const std::vector<MultiPoly>& coeffs);
    MultiPoly leading_coeff_in(std::size_t var) const;

    MultiPoly derivative(std::size_t var) const;

    // Simultaneous substitution: images[i] replaces variable i; all images
    // share one target ring.
    MultiPoly substituted(const std::vector<MultiPoly>& images) const;
    MultiPoly substituted(std::size_t var, const MultiPoly& image) const;
    // Re-embeds by variable name into a new ring; every variable actually
    // present must appear in new_vars.
    MultiPoly in_vars(std::vector<std::string> new_vars) const;

    Complex eval(const std::vector<Complex>& point) const;
    Rational eval_exact(const std::vector<Rational>& point) const;

    // Positive rational c with f/c integer-coprime; sign chosen so the
    // graded-lex leading coefficient of primitive() is positive.
    Rational content() const;
    MultiPoly primitive() const;

    std::string str() const;

private:
    void check_same_ring(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace knotcv
