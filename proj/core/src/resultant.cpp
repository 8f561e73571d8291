#include "eqlab/resultant.hpp"

#include <algorithm>
#include <map>

#include "eqlab/error.hpp"

namespace eqlab::algebra {

namespace {

struct GrlexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

// A polynomial viewed as univariate in one variable: entry i is the
// coefficient of var^i (free of var, same arity).
using Rec = std::vector<Polynomial>;

Rec to_rec(const Polynomial& f, std::size_t var) { return f.coefficients_in(var); }

Polynomial from_rec(const Rec& r, std::size_t var, const Field& k, std::size_t nvars) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (const auto& t : r[i].terms()) {
            Term n = t;
            n.exps[var] += static_cast<std::uint32_t>(i);
            terms.push_back(std::move(n));
        }
    return Polynomial::from_terms(k, nvars, std::move(terms));
}

void trim(Rec& r) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
}

int rdeg(const Rec& r) { return static_cast<int>(r.size()) - 1; }

Rec rscale(const Rec& r, const Polynomial& c) {
    Rec out;
    out.reserve(r.size());
    for (const auto& x : r) out.push_back(x * c);
    trim(out);
    return out;
}

Rec rdiv(const Rec& r, const Polynomial& c) {
    Rec out;
    out.reserve(r.size());
    for (const auto& x : r) out.push_back(divide_exact(x, c));
    return out;
}

Rec rprem(Rec a, const Rec& b) {
    const int db = rdeg(b);
    const Polynomial& lcb = b.back();
    int delta = rdeg(a) - db + 1;
    while (!a.empty() && rdeg(a) >= db) {
        const std::size_t shift = static_cast<std::size_t>(rdeg(a) - db);
        const Polynomial lr = a.back();
        for (auto& x : a) x = x * lcb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lr * b[i];
        trim(a);
        --delta;
    }
    if (delta > 0 && !a.empty()) a = rscale(a, lcb.pow(static_cast<unsigned>(delta)));
    return a;
}

Polynomial one_like(const Polynomial& f) { return Polynomial::constant(f.field(), f.nvars(), f.field().one()); }

std::size_t first_occurring_var(const Polynomial& a, const Polynomial& b) {
    for (std::size_t v = 0; v < a.nvars(); ++v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return a.nvars();
}

Polynomial content_in(const Rec& r);

Polynomial primitive_part(const Rec& r, std::size_t var, const Field& k, std::size_t nvars, Polynomial* content) {
    Polynomial c = content_in(r);
    if (content) *content = c;
    return from_rec(rdiv(r, c), var, k, nvars);
}

} // namespace

std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) fail(ErrorCode::ArityMismatch, "division arity mismatch");
    if (b.is_zero()) fail(ErrorCode::DomainError, "polynomial division by zero");
    const Field& k = a.field();
    if (a.is_zero()) return Polynomial(k, a.nvars());
    std::map<Exponents, Scalar, GrlexDesc> r;
    for (const auto& t : a.terms()) r.emplace(t.exps, t.coef);
    const Term& lb = b.leading_term();
    const Scalar lbinv = k.inv(lb.coef);
    std::vector<Term> q;
    while (!r.empty()) {
        auto it = r.begin();
        Exponents e = it->first;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < lb.exps[i]) return std::nullopt;
            e[i] -= lb.exps[i];
        }
        const Scalar c = k.mul(it->second, lbinv);
        for (const auto& t : b.terms()) {
            Exponents m = t.exps;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += e[i];
            auto [pos, inserted] = r.try_emplace(std::move(m));
            pos->second = k.sub(pos->second, k.mul(c, t.coef));
            if (pos->second.is_zero()) r.erase(pos);
        }
        q.push_back({std::move(e), c});
    }
    return Polynomial::from_terms(k, a.nvars(), std::move(q));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto q = try_divide(a, b);
    if (!q) fail(ErrorCode::DomainError, "polynomial division is not exact");
    return std::move(*q);
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
    if (b.is_zero()) fail(ErrorCode::DomainError, "pseudo-remainder by zero");
    Rec ra = to_rec(a, var), rb = to_rec(b, var);
    if (rdeg(ra) < rdeg(rb)) return a;
    return from_rec(rprem(std::move(ra), rb), var, a.field(), a.nvars());
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
    if (f.nvars() != g.nvars()) fail(ErrorCode::ArityMismatch, "resultant arity mismatch");
    if (f.field() != g.field()) fail(ErrorCode::FieldMismatch, "resultant field mismatch");
    if (var >= f.nvars()) fail(ErrorCode::ArityMismatch, "resultant variable out of range");
    if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidArgument, "resultant of two zero polynomials");
    const Field& k = f.field();
    if (f.is_zero() || g.is_zero()) return Polynomial(k, f.nvars());
    Rec a = to_rec(f, var), b = to_rec(g, var);
    int s = 1;
    if (rdeg(a) < rdeg(b)) {
        std::swap(a, b);
        if ((rdeg(a) & 1) && (rdeg(b) & 1)) s = -1;
    }
    if (rdeg(b) == 0) {
        Polynomial r = b[0].pow(static_cast<unsigned>(rdeg(a)));
        return s < 0 ? -r : r;
    }
    Polynomial gg = one_like(f), h = one_like(f);
    while (true) {
        const int delta = rdeg(a) - rdeg(b);
        if ((rdeg(a) & 1) && (rdeg(b) & 1)) s = -s;
        Rec r = rprem(a, b);
        a = std::move(b);
        if (r.empty()) return Polynomial(k, f.nvars());
        b = rdiv(r, gg * h.pow(static_cast<unsigned>(delta)));
        gg = a.back();
        if (delta == 0) {
            // h unchanged
        } else {
            h = divide_exact(gg.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (rdeg(b) > 0) continue;
        const unsigned da = static_cast<unsigned>(rdeg(a));
        Polynomial res = divide_exact(b[0].pow(da), h.pow(da - 1));
        return s < 0 ? -res : res;
    }
}

namespace {

Polynomial content_in(const Rec& r) {
    Polynomial c(r.front().field(), r.front().nvars());
    for (const auto& x : r) {
        if (x.is_zero()) continue;
        c = c.is_zero() ? x.monic() : gcd(c, x);
        if (c.is_constant()) return one_like(x);
    }
    return c;
}

} // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) fail(ErrorCode::ArityMismatch, "gcd arity mismatch");
    if (a.field() != b.field()) fail(ErrorCode::FieldMismatch, "gcd field mismatch");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const std::size_t var = first_occurring_var(a, b);
    if (var == a.nvars()) return one_like(a);
    const Field& k = a.field();
    const std::size_t n = a.nvars();
    if (a.degree_in(var) == 0) return gcd(a, content_in(to_rec(b, var)));
    if (b.degree_in(var) == 0) return gcd(content_in(to_rec(a, var)), b);

    Polynomial ca(k, n), cb(k, n);
    Polynomial pa = primitive_part(to_rec(a, var), var, k, n, &ca);
    Polynomial pb = primitive_part(to_rec(b, var), var, k, n, &cb);
    const Polynomial d = gcd(ca, cb);

    Rec A = to_rec(pa, var), B = to_rec(pb, var);
    if (rdeg(A) < rdeg(B)) std::swap(A, B);
    Polynomial g = one_like(a), h = one_like(a);
    while (true) {
        const int delta = rdeg(A) - rdeg(B);
        Rec r = rprem(A, B);
        if (r.empty()) break;
        if (rdeg(r) == 0) {
            B = Rec{one_like(a)};
            break;
        }
        A = std::move(B);
        B = rdiv(r, g * h.pow(static_cast<unsigned>(delta)));
        g = A.back();
        if (delta != 0)
            h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
    Polynomial pg = primitive_part(B, var, k, n, nullptr);
    return (d * pg).monic();
}

Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero()) fail(ErrorCode::DomainError, "square-free part of the zero polynomial");
    const Field& k = f.field();
    if (!k.characteristic_zero() && static_cast<std::uint64_t>(f.degree()) >= k.characteristic())
        fail(ErrorCode::Unsupported, "square-free part needs characteristic above the degree");
    if (f.is_constant()) return one_like(f);
    Polynomial g = f;
    for (std::size_t v = 0; v < f.nvars() && !g.is_constant(); ++v)
        if (f.degree_in(v) > 0) g = gcd(g, differentiate(f, v));
    return divide_exact(f, g).monic();
}

Polynomial strip_variable_power(const Polynomial& f, std::size_t var) {
    if (f.is_zero()) return f;
    std::uint32_t m = UINT32_MAX;
    for (const auto& t : f.terms()) m = std::min(m, t.exps[var]);
    if (m == 0) return f;
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.exps[var] -= m;
    return Polynomial::from_terms(f.field(), f.nvars(), std::move(out));
}

} // namespace eqlab::algebra
