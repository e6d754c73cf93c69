#include "knotcv/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "knotcv/error.hpp"

namespace knotcv {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Rational c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Monomial(p.vars_.size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Monomial m(p.vars_.size(), 0);
    m[p.var_index(name)] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw_input("polynomial: unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const noexcept {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](unsigned int e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw_input("polynomial: not a constant");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const noexcept {
    if (terms_.empty()) return -1;
    unsigned long d = 0;
    for (unsigned int e : terms_.begin()->first) d += e;
    return static_cast<long>(d);
}

long MultiPoly::degree_in(std::size_t var) const noexcept {
    long d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[var]));
    return d;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw_input("polynomial: leading coefficient of zero");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != vars_.size()) throw_input("polynomial: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw_input("polynomial: mixed variable rings");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(o);
    MultiPoly r(vars_);
    Monomial prod(vars_.size(), 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned int e) const {
    MultiPoly acc = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(std::size_t var) const {
    long d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(d, 0L)) + 1,
                               MultiPoly(vars_));
    for (const auto& [m, c] : terms_) {
        Monomial stripped = m;
        unsigned int k = stripped[var];
        stripped[var] = 0;
        out[k].add_term(stripped, c);
    }
    return out;
}

MultiPoly MultiPoly::from_coeffs_in(std::size_t var, const std::vector<MultiPoly>& coeffs) {
    if (coeffs.empty()) throw_input("polynomial: empty coefficient list");
    MultiPoly r(coeffs.front().vars());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [m, c] : coeffs[k].terms_) {
            Monomial lifted = m;
            lifted[var] += static_cast<unsigned int>(k);
            r.add_term(lifted, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::leading_coeff_in(std::size_t var) const {
    long d = degree_in(var);
    if (d < 0) throw_input("polynomial: leading coefficient of zero");
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (static_cast<long>(m[var]) != d) continue;
        Monomial stripped = m;
        stripped[var] = 0;
        r.add_term(stripped, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        unsigned int e = d[var]--;
        r.add_term(d, c * Rational(static_cast<long>(e)));
    }
    return r;
}

MultiPoly MultiPoly::substituted(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size()) throw_input("polynomial: substitution arity mismatch");
    const std::vector<std::string>& target =
        images.empty() ? vars_ : images.front().vars();
    for (const MultiPoly& im : images) {
        if (im.vars() != target) throw_input("polynomial: substitution images in mixed rings");
    }
    // Power cache per variable, filled lazily up to the largest exponent used.
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        powers[i].push_back(MultiPoly::constant(target, Rational(1)));
    MultiPoly acc(target);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * images[i]);
            if (m[i] > 0) term = term * powers[i][m[i]];
        }
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::substituted(std::size_t var, const MultiPoly& image) const {
    std::vector<MultiPoly> images;
    images.reserve(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        images.push_back(i == var ? image : MultiPoly::variable(image.vars(), vars_[i]));
    }
    return substituted(images);
}

MultiPoly MultiPoly::in_vars(std::vector<std::string> new_vars) const {
    MultiPoly r(std::move(new_vars));
    std::vector<long> where(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(r.vars_.begin(), r.vars_.end(), vars_[i]);
        if (it != r.vars_.end()) where[i] = it - r.vars_.begin();
    }
    for (const auto& [m, c] : terms_) {
        Monomial t(r.vars_.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (where[i] < 0)
                throw_input("polynomial: variable '" + vars_[i] + "' lost in re-embedding");
            t[static_cast<std::size_t>(where[i])] = m[i];
        }
        r.add_term(t, c);
    }
    return r;
}

Complex MultiPoly::eval(const std::vector<Complex>& point) const {
    if (point.size() != vars_.size()) throw_input("polynomial: evaluation arity mismatch");
    std::vector<std::vector<Complex>> powers(vars_.size(), {Complex(1.0, 0.0)});
    Complex acc(0.0, 0.0);
    for (const auto& [m, c] : terms_) {
        Complex term(to_double(c), 0.0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * point[i]);
            term *= powers[i][m[i]];
        }
        acc += term;
    }
    return acc;
}

Rational MultiPoly::eval_exact(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw_input("polynomial: evaluation arity mismatch");
    std::vector<std::vector<Rational>> powers(vars_.size(), {Rational(1)});
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * point[i]);
            term *= powers[i][m[i]];
        }
        acc += term;
    }
    return acc;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    Rational c = content();
    if (leading_coeff() < 0) c = -c;
    Rational inv = 1 / c;
    MultiPoly r(vars_);
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * inv);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = false;
        std::ostringstream vs;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (has_var) vs << "*";
            vs << vars_[i];
            if (m[i] > 1) vs << "^" << m[i];
            has_var = true;
        }
        if (!has_var) {
            os << rational_to_string(a);
        } else if (a == 1) {
            os << vs.str();
        } else {
            os << rational_to_string(a) << "*" << vs.str();
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser over + - * ^ ( ), integer and p/q literals, and
// declared variable names; juxtaposition multiplies.
class Parser {
public:
    Parser(const std::string& text, const MultiPoly& one)
        : text_(text), one_(one) {}

    MultiPoly run() {
        MultiPoly r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw_input("polynomial parse: trailing input at '" + rest() + "'");
        return r;
    }

private:
    std::string rest() const { return text_.substr(pos_, 12); }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly expr() {
        bool neg = false;
        for (;;) {
            if (eat('+')) continue;
            if (eat('-')) { neg = !neg; continue; }
            break;
        }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            if (eat('*')) { acc = acc * factor(); continue; }
            char c = peek();
            if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();
                continue;
            }
            return acc;
        }
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer_literal();
            if (neg) throw_input("polynomial parse: negative exponent");
            base = base.pow(static_cast<unsigned int>(e));
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        if (eat('(')) {
            MultiPoly r = expr();
            if (!eat(')')) throw_input("polynomial parse: missing ')'");
            return r;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit = digits();
            std::size_t save = pos_;
            if (eat('/')) {
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    std::string den = digits();
                    return MultiPoly::constant(one_.vars(), rational_from_string(lit + "/" + den));
                }
                pos_ = save;
            }
            return MultiPoly::constant(one_.vars(), rational_from_string(lit));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            return MultiPoly::variable(one_.vars(), name);
        }
        throw_input("polynomial parse: unexpected input at '" + rest() + "'");
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long integer_literal() {
        std::string d = digits();
        if (d.empty()) throw_input("polynomial parse: expected integer");
        return std::stol(d);
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    const std::string& text_;
    const MultiPoly& one_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, std::vector<std::string> vars) {
    MultiPoly one = MultiPoly::constant(std::move(vars), Rational(1));
    return Parser(text, one).run();
}

}  // namespace knotcv
