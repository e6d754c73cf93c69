#include "knotcv/trace.hpp"

#include <mutex>
#include <set>

#include "knotcv/error.hpp"

namespace knotcv {

namespace {

using Letters = std::vector<int>;

constexpr int kDepthCap = 10000;

struct TraceContext {
    std::map<Letters, MultiPoly> memo;
    std::set<Letters> open;
    int depth = 0;
};

MultiPoly var_x() { return MultiPoly::variable(trace_ring(), "x"); }
MultiPoly var_y() { return MultiPoly::variable(trace_ring(), "y"); }
MultiPoly var_z() { return MultiPoly::variable(trace_ring(), "z"); }
MultiPoly constant2() { return MultiPoly::constant(trace_ring(), Rational(2)); }

Letters invert(const Letters& w) {
    Letters out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

Letters rotate(const Letters& w, std::size_t i) {
    Letters out(w.begin() + static_cast<long>(i), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(i));
    return out;
}

Letters concat(int head, const Letters& tail) {
    Letters out{head};
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

MultiPoly trace_impl(const Letters& raw, TraceContext& ctx) {
    Letters w = canonical_cyclic(raw);
    if (auto it = ctx.memo.find(w); it != ctx.memo.end()) return it->second;
    if (++ctx.depth > kDepthCap) throw_numeric("trace reduction exceeded depth cap");
    if (!ctx.open.insert(w).second) throw_numeric("trace reduction cycle detected");

    MultiPoly result(trace_ring());
    std::size_t n = w.size();
    if (n == 0) {
        result = constant2();
    } else if (n == 1) {
        result = std::abs(w[0]) == 1 ? var_x() : var_y();
    } else {
        std::size_t neg = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] < 0) { neg = i; break; }
        }
        if (neg < n) {
            // w ~ g^-1 s, so tr = tr(g) tr(s) - tr(g s).
            Letters r = rotate(w, neg);
            int g = -r[0];
            Letters s(r.begin() + 1, r.end());
            result = trace_impl({g}, ctx) * trace_impl(s, ctx) - trace_impl(concat(g, s), ctx);
        } else if (n == 2) {
            if (w[0] == w[1]) {
                MultiPoly t = std::abs(w[0]) == 1 ? var_x() : var_y();
                result = t * t - constant2();
            } else {
                result = var_z();
            }
        } else {
            // Positive word, length >= 3: split at the leftmost repeated
            // generator, w ~ g u g v, tr = tr(gu) tr(gv) - tr(u v^-1).
            std::size_t first[3] = {n, n, n};
            std::size_t i = n, j = n;
            for (std::size_t k = 0; k < n; ++k) {
                int g = w[k];
                if (first[g] < n) { i = first[g]; j = k; break; }
                first[g] = k;
            }
            Letters r = rotate(w, i);
            std::size_t jj = j - i;
            int g = r[0];
            Letters u(r.begin() + 1, r.begin() + static_cast<long>(jj));
            Letters v(r.begin() + static_cast<long>(jj) + 1, r.end());
            Letters uv = u;
            Letters vi = invert(v);
            uv.insert(uv.end(), vi.begin(), vi.end());
            result = trace_impl(concat(g, u), ctx) * trace_impl(concat(g, v), ctx) -
                     trace_impl(uv, ctx);
        }
    }

    ctx.open.erase(w);
    --ctx.depth;
    ctx.memo.emplace(std::move(w), result);
    return result;
}

std::mutex g_trace_mutex;
TraceContext g_trace_ctx;

}  // namespace

MultiPoly trace_poly(const GroupWord& w) {
    std::lock_guard<std::mutex> lock(g_trace_mutex);
    g_trace_ctx.depth = 0;
    g_trace_ctx.open.clear();
    return trace_impl(w.letters(), g_trace_ctx);
}

MultiPoly specialize(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings,
                     bool require_ground) {
    if (bindings.empty()) {
        if (require_ground && !p.is_constant())
            throw_input("specialize: unbound variables remain");
        return p;
    }
    const std::vector<std::string>& target = bindings.begin()->second.vars();
    for (const auto& [name, value] : bindings) {
        if (value.vars() != target) throw_input("specialize: binding images in mixed rings");
    }
    std::vector<MultiPoly> images;
    images.reserve(p.vars().size());
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        const std::string& name = p.vars()[i];
        if (auto it = bindings.find(name); it != bindings.end()) {
            images.push_back(it->second);
        } else if (p.degree_in(i) <= 0) {
            images.push_back(MultiPoly(target));
        } else if (require_ground) {
            throw_input("specialize: variable '" + name + "' unbound");
        } else {
            images.push_back(MultiPoly::variable(target, name));
        }
    }
    return p.substituted(images);
}

MultiPoly specialize_to_xz(const MultiPoly& p) {
    MultiPoly image = MultiPoly::variable(trace_ring(), "x");
    return specialize(p, {{"y", image}}).in_vars({"x", "z"});
}

namespace {

MultiPoly chebyshev_like(long q) {
    // tr(lambda^q) in v: C_0 = 2, C_1 = v, C_{k+1} = v C_k - C_{k-1}.
    long k = std::abs(q);
    MultiPoly prev = MultiPoly::constant(peripheral_ring(), Rational(2));
    if (k == 0) return prev;
    MultiPoly cur = MultiPoly::variable(peripheral_ring(), "v");
    MultiPoly v = cur;
    for (long i = 1; i < k; ++i) {
        MultiPoly next = v * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

MultiPoly row_one(long q) {
    // tr(mu lambda^q), extended to negative q by the same three-term rule.
    MultiPoly u = MultiPoly::variable(peripheral_ring(), "u");
    MultiPoly v = MultiPoly::variable(peripheral_ring(), "v");
    MultiPoly w = MultiPoly::variable(peripheral_ring(), "w");
    if (q == 0) return u;
    if (q > 0) {
        MultiPoly prev = u, cur = w;
        for (long i = 1; i < q; ++i) {
            MultiPoly next = v * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    MultiPoly prev = u, cur = u * v - w;
    for (long i = -1; i > q; --i) {
        MultiPoly next = v * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

MultiPoly peripheral_trace(long p, long q) {
    if (p == 0 && q == 0) throw_input("trivial peripheral class");
    if (p < 0) { p = -p; q = -q; }
    if (p == 0) return chebyshev_like(q);
    if (p == 1) return row_one(q);
    MultiPoly u = MultiPoly::variable(peripheral_ring(), "u");
    MultiPoly below = chebyshev_like(q);
    MultiPoly cur = row_one(q);
    for (long i = 2; i <= p; ++i) {
        MultiPoly next = u * cur - below;
        below = cur;
        cur = next;
    }
    return cur;
}

}  // namespace knotcv
