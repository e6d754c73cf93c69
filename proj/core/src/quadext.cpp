#include "knotcv/quadext.hpp"

#include <cmath>
#include <sstream>

#include "knotcv/error.hpp"

namespace knotcv {

Integer squarefree_split(const Integer& n, Integer& square) {
    if (n == 0) { square = 1; return Integer(0); }
    Integer rest = n < 0 ? Integer(-n) : n;
    Integer sign = n < 0 ? -1 : 1;
    square = 1;
    for (Integer p = 2; p * p <= rest && p < 100000; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_p(rest.get_mpz_t(), Integer(p * p).get_mpz_t())) {
            rest /= p * p;
            square *= p;
        }
    }
    // Large leftover may itself be a perfect square.
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
        square *= r;
        rest = 1;
    }
    return sign * rest;
}

bool is_rational_square(const Rational& r) {
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(r.get_den().get_mpz_t());
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (!is_rational_square(r)) return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
    return make_rational(n, d);
}

QuadExt::QuadExt(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)) {
    if (b_ == 0) { d_ = 0; return; }
    if (d == 0 || d == 1) throw_input("quadratic extension: radicand must not be 0 or 1");
    Integer square;
    Integer sf = squarefree_split(d, square);
    d_ = sf;
    b_ *= Rational(square);
    if (d_ == 1) { a_ += b_; b_ = 0; d_ = 0; }
}

QuadExt QuadExt::sqrt_integer(const Integer& n) {
    if (n == 0) return QuadExt(Rational(0));
    Integer square;
    Integer sf = squarefree_split(n, square);
    if (sf == 1) return QuadExt(Rational(square));
    return QuadExt(Rational(0), Rational(square), sf);
}

QuadExt QuadExt::conjugate() const {
    QuadExt r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

namespace {

Integer common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand())
        throw_input("quadratic extension: mixed radicands " + x.radicand().get_str() +
                    " and " + y.radicand().get_str());
    return x.radicand();
}

QuadExt from_parts(Rational a, Rational b, const Integer& d) {
    if (b == 0 || d == 0) return QuadExt(std::move(a));
    return QuadExt(std::move(a), std::move(b), d);
}

}  // namespace

QuadExt QuadExt::operator+(const QuadExt& o) const {
    Integer d = common_radicand(*this, o);
    return from_parts(a_ + o.a_, b_ + o.b_, d);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    Integer d = common_radicand(*this, o);
    return from_parts(a_ - o.a_, b_ - o.b_, d);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    Integer d = common_radicand(*this, o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    return from_parts(std::move(a), std::move(b), d);
}

QuadExt QuadExt::operator/(const QuadExt& o) const {
    if (o.is_zero()) throw_input("quadratic extension: division by zero");
    Integer d = common_radicand(*this, o);
    Rational n = o.norm();
    QuadExt scaled = *this * o.conjugate();
    return from_parts(scaled.a_ / n, scaled.b_ / n, d);
}

bool QuadExt::operator==(const QuadExt& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    if (b_ == 0) return true;
    return d_ == o.d_;
}

std::optional<QuadExt> QuadExt::sqrt() const {
    if (is_zero()) return QuadExt(Rational(0));
    if (is_rational()) {
        if (auto r = rational_sqrt(a_)) return QuadExt(*r);
        // Rational non-square p/q: sqrt(p/q) = sqrt(p q)/q, adjoining the
        // squarefree part of p q as a fresh radicand.
        Integer n = a_.get_num() * a_.get_den();
        Integer square;
        Integer sf = squarefree_split(n, square);
        return QuadExt(Rational(0), make_rational(square, a_.get_den()), sf);
    }
    // sqrt(a + b sqrt(d)) = u + w sqrt(d) needs the field norm to be a
    // rational square s^2, then u^2 = (a +- s)/2.
    auto s = rational_sqrt(norm());
    if (!s) return std::nullopt;
    for (int sign = 0; sign < 2; ++sign) {
        Rational u2 = (a_ + (sign ? -*s : *s)) / 2;
        auto u = rational_sqrt(u2);
        if (!u || *u == 0) continue;
        Rational w = b_ / (2 * *u);
        QuadExt cand(*u, w, d_);
        if (cand * cand == *this) return cand;
    }
    return std::nullopt;
}

Complex QuadExt::to_complex() const {
    if (b_ == 0) return Complex(to_double(a_), 0.0);
    double root = std::sqrt(std::abs(d_.get_d()));
    if (d_ > 0) return Complex(to_double(a_) + to_double(b_) * root, 0.0);
    return Complex(to_double(a_), to_double(b_) * root);
}

std::string QuadExt::str() const {
    if (b_ == 0) return rational_to_string(a_);
    std::ostringstream os;
    bool have_a = a_ != 0;
    if (have_a) os << rational_to_string(a_);
    if (b_ == 1) {
        os << (have_a ? "+" : "");
    } else if (b_ == -1) {
        os << "-";
    } else {
        if (have_a && b_ > 0) os << "+";
        os << rational_to_string(b_) << "*";
    }
    os << "sqrt(" << d_.get_str() << ")";
    return os.str();
}

std::optional<QuadRoots> solve_quadratic(const QuadExt& A, const QuadExt& B, const QuadExt& C) {
    if (A.is_zero()) throw_input("quadratic solve: zero leading coefficient");
    QuadExt four(Rational(4));
    QuadExt two(Rational(2));
    QuadExt disc = B * B - four * A * C;
    if (disc.is_zero()) {
        QuadExt root = -B / (two * A);
        return QuadRoots{root, root, true};
    }
    auto s = disc.sqrt();
    if (!s) return std::nullopt;
    // The root may need a radicand different from the coefficients'; such
    // biquadratic values do not fit a single QuadExt.
    try {
        QuadExt r1 = (-B + *s) / (two * A);
        QuadExt r2 = (-B - *s) / (two * A);
        return QuadRoots{r1, r2, false};
    } catch (const Error&) {
        return std::nullopt;
    }
}

QuadExt eval_quad(const MultiPoly& p, const QuadExt& x, const QuadExt& z) {
    if (p.vars().size() != 2) throw_input("exact evaluation expects a bivariate polynomial");
    QuadExt acc{Rational(0)};
    for (const auto& [m, c] : p.terms()) {
        QuadExt term{c};
        for (unsigned i = 0; i < m[0]; ++i) term = term * x;
        for (unsigned i = 0; i < m[1]; ++i) term = term * z;
        acc = acc + term;
    }
    return acc;
}

}  // namespace knotcv
