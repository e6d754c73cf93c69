#include "knotcv/polyalg.hpp"

#include <algorithm>

#include "knotcv/error.hpp"

namespace knotcv {

namespace {

MultiPoly one_like(const MultiPoly& p) {
    return MultiPoly::constant(p.vars(), Rational(1));
}

struct PseudoResult {
    MultiPoly quotient;
    MultiPoly remainder;
    unsigned int lc_power;
};

// Classical pseudo-division: lc(g)^(deg f - deg g + 1) * f = q*g + r.
PseudoResult pseudo_divrem(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
    long m = f.degree_in(var);
    long n = g.degree_in(var);
    MultiPoly glc = g.leading_coeff_in(var);
    unsigned int e = static_cast<unsigned int>(m - n + 1);
    MultiPoly q(f.vars());
    MultiPoly r = f;
    unsigned int steps = 0;
    while (!r.is_zero() && r.degree_in(var) >= n) {
        long dr = r.degree_in(var);
        Monomial shift(f.vars().size(), 0);
        shift[var] = static_cast<unsigned int>(dr - n);
        MultiPoly xs(f.vars());
        xs.add_term(shift, Rational(1));
        MultiPoly t = r.leading_coeff_in(var) * xs;
        q = glc * q + t;
        r = glc * r - t * g;
        ++steps;
    }
    MultiPoly scale = glc.pow(e - steps);
    return {q * scale, r * scale, e};
}

}  // namespace

DivRemResult divrem(const MultiPoly& f, const MultiPoly& g, std::size_t var,
                    bool allow_pseudo) {
    if (g.is_zero()) throw_input("division by zero polynomial");
    long m = f.degree_in(var);
    long n = g.degree_in(var);
    if (m < n) return {MultiPoly(f.vars()), f, false, 0};

    MultiPoly glc = g.leading_coeff_in(var);
    if (glc.is_constant()) {
        Rational inv = 1 / glc.constant_value();
        std::vector<MultiPoly> r = f.coeffs_in(var);
        std::vector<MultiPoly> gc = g.coeffs_in(var);
        std::vector<MultiPoly> q(static_cast<std::size_t>(m - n) + 1, MultiPoly(f.vars()));
        for (long k = m; k >= n; --k) {
            MultiPoly t = r[static_cast<std::size_t>(k)] * inv;
            if (t.is_zero()) continue;
            q[static_cast<std::size_t>(k - n)] = t;
            for (long j = 0; j <= n; ++j)
                r[static_cast<std::size_t>(k - n + j)] =
                    r[static_cast<std::size_t>(k - n + j)] - t * gc[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(std::max(n, 1L)));
        return {MultiPoly::from_coeffs_in(var, q), MultiPoly::from_coeffs_in(var, r), false, 0};
    }

    if (!allow_pseudo)
        throw_input("division: non-unit leading coefficient requires pseudo-division");

    PseudoResult pr = pseudo_divrem(f, g, var);
    return {pr.quotient, pr.remainder, true, pr.lc_power};
}

MultiPoly prem(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
    if (g.is_zero()) throw_input("division by zero polynomial");
    if (f.degree_in(var) < g.degree_in(var)) return f;
    return pseudo_divrem(f, g, var).remainder;
}

MultiPoly exact_div(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw_input("division by zero polynomial");
    if (f.is_zero()) return f;
    MultiPoly q(f.vars());
    MultiPoly r = f;
    const Monomial& gm = g.terms().begin()->first;
    const Rational& gc = g.terms().begin()->second;
    while (!r.is_zero()) {
        const Monomial& rm = r.terms().begin()->first;
        Monomial t(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < gm[i]) throw_numeric("exact division failed: " + g.str() + " does not divide");
            t[i] = rm[i] - gm[i];
        }
        MultiPoly term(f.vars());
        term.add_term(t, r.terms().begin()->second / gc);
        q = q + term;
        r = r - term * g;
    }
    return q;
}

MultiPoly content_in(const MultiPoly& f, std::size_t var) {
    MultiPoly acc(f.vars());
    for (const MultiPoly& c : f.coeffs_in(var)) {
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c.primitive() : poly_gcd(acc, c);
        if (acc.is_constant()) break;
    }
    return acc.is_zero() ? acc : acc.primitive();
}

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return g.is_zero() ? g : g.primitive();
    if (g.is_zero()) return f.primitive();
    if (f.vars() != g.vars()) throw_input("gcd: mixed variable rings");

    std::size_t var = f.vars().size();
    for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (f.degree_in(i) > 0 || g.degree_in(i) > 0) { var = i; break; }
    }
    if (var == f.vars().size()) return one_like(f);

    if (f.degree_in(var) <= 0) return poly_gcd(f, content_in(g, var));
    if (g.degree_in(var) <= 0) return poly_gcd(content_in(f, var), g);

    MultiPoly cf = content_in(f, var);
    MultiPoly cg = content_in(g, var);
    MultiPoly c = poly_gcd(cf, cg);
    MultiPoly a = exact_div(f, cf);
    MultiPoly b = exact_div(g, cg);
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    for (;;) {
        MultiPoly r = prem(a, b, var);
        if (r.is_zero()) return (c * b).primitive();
        if (r.degree_in(var) == 0) return c.primitive();
        a = b;
        b = exact_div(r, content_in(r, var));
    }
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
    long a = f.degree_in(var);
    long b = g.degree_in(var);
    if (a <= 0 && b <= 0) throw_input("resultant: variable absent from both inputs");
    if (f.is_zero() || g.is_zero()) return MultiPoly(f.vars());
    if (a == 0) return f.pow(static_cast<unsigned int>(b));
    if (b == 0) return g.pow(static_cast<unsigned int>(a));

    MultiPoly A = f, B = g;
    int sign = 1;
    if (a < b) {
        std::swap(A, B);
        if ((a & 1) && (b & 1)) sign = -sign;
    }
    MultiPoly gc = one_like(f);
    MultiPoly h = one_like(f);
    for (;;) {
        long da = A.degree_in(var);
        long db = B.degree_in(var);
        long d = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        MultiPoly r = prem(A, B, var);
        A = B;
        B = exact_div(r, gc * h.pow(static_cast<unsigned int>(d)));
        gc = A.leading_coeff_in(var);
        if (d > 0) h = exact_div(gc.pow(static_cast<unsigned int>(d)),
                                 h.pow(static_cast<unsigned int>(d - 1)));
        if (B.is_zero()) return MultiPoly(f.vars());
        if (B.degree_in(var) == 0) {
            unsigned int dA = static_cast<unsigned int>(A.degree_in(var));
            MultiPoly res = exact_div(B.pow(dA), h.pow(dA - 1));
            return sign < 0 ? -res : res;
        }
    }
}

MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
    long a = f.degree_in(var);
    long b = g.degree_in(var);
    if (a <= 0 && b <= 0) throw_input("resultant: variable absent from both inputs");
    if (f.is_zero() || g.is_zero()) return MultiPoly(f.vars());
    if (a == 0) return f.pow(static_cast<unsigned int>(b));
    if (b == 0) return g.pow(static_cast<unsigned int>(a));

    std::size_t n = static_cast<std::size_t>(a + b);
    std::vector<MultiPoly> fc = f.coeffs_in(var);
    std::vector<MultiPoly> gc = g.coeffs_in(var);
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(f.vars())));
    for (std::size_t i = 0; i < static_cast<std::size_t>(b); ++i)
        for (long j = 0; j <= a; ++j)
            m[i][i + static_cast<std::size_t>(j)] = fc[static_cast<std::size_t>(a - j)];
    for (std::size_t i = 0; i < static_cast<std::size_t>(a); ++i)
        for (long j = 0; j <= b; ++j)
            m[static_cast<std::size_t>(b) + i][i + static_cast<std::size_t>(j)] =
                gc[static_cast<std::size_t>(b - j)];

    // Bareiss fraction-free elimination; every division is exact.
    int sign = 1;
    MultiPoly prev = one_like(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly(f.vars());
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly(f.vars());
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly squarefree_part(const MultiPoly& f, std::size_t var) {
    if (f.is_zero()) throw_input("squarefree part of zero polynomial");
    if (f.degree_in(var) <= 0) return f.primitive();
    MultiPoly g = poly_gcd(f, f.derivative(var));
    return exact_div(f, g).primitive();
}

MultiPoly squarefree_part_all(const MultiPoly& f) {
    if (f.is_zero()) throw_input("squarefree part of zero polynomial");
    MultiPoly fp = f.primitive();
    if (fp.is_constant()) return fp;
    // f / gcd(f, all partials): repeated prime factors drop one exponent in
    // every partial they depend on, so the fold strips exactly one copy.
    MultiPoly acc = fp;
    for (std::size_t v = 0; v < fp.vars().size(); ++v) acc = poly_gcd(acc, fp.derivative(v));
    if (acc.is_constant()) return fp;
    return exact_div(fp, acc).primitive();
}

std::vector<std::pair<MultiPoly, unsigned int>> squarefree_decomposition(
    const MultiPoly& f, std::size_t var) {
    if (f.is_zero()) throw_input("squarefree decomposition of zero polynomial");
    std::vector<std::pair<MultiPoly, unsigned int>> out;
    if (f.degree_in(var) <= 0) return out;
    MultiPoly fs = f.primitive();
    MultiPoly fp = fs.derivative(var);
    MultiPoly a0 = poly_gcd(fs, fp);
    MultiPoly b = exact_div(fs, a0);
    MultiPoly c = exact_div(fp, a0) - b.derivative(var);
    unsigned int guard = static_cast<unsigned int>(f.degree_in(var)) + 2;
    unsigned int i = 1;
    while (b.degree_in(var) > 0) {
        if (i > guard) throw_numeric("squarefree decomposition did not terminate");
        MultiPoly g = poly_gcd(b, c);
        if (g.degree_in(var) > 0) out.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(c, g) - b.derivative(var);
        ++i;
    }
    return out;
}

}  // namespace knotcv
