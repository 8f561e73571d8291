#include "eqlab/series.hpp"

#include <algorithm>

#include "eqlab/error.hpp"

namespace eqlab::algebra {

TruncatedSeries::TruncatedSeries(Polynomial poly, unsigned order) : p_(poly.truncated(order)), order_(order) {}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
    return {p_, std::min(order, order_)};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned n = std::min(a.order_, b.order_);
    return {a.p_.truncated(n) + b.p_.truncated(n), n};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const unsigned n = std::min(a.order_, b.order_);
    return {a.p_.truncated(n) - b.p_.truncated(n), n};
}

namespace {

// Product truncated at n without forming the discarded terms.
Polynomial mul_trunc(const Polynomial& a, const Polynomial& b, unsigned n) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field(), a.nvars());
    const Field& k = a.field();
    std::vector<Term> out;
    for (const auto& s : a.terms()) {
        const unsigned ds = total_degree(s.exps);
        if (ds >= n) continue;
        for (const auto& t : b.terms()) {
            if (ds + total_degree(t.exps) >= n) continue;
            Exponents e = s.exps;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exps[i];
            out.push_back({std::move(e), k.mul(s.coef, t.coef)});
        }
    }
    return Polynomial::from_terms(k, a.nvars(), std::move(out));
}

} // namespace

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    // A factor with a zero low-degree part would allow a higher order, but
    // the contract is the plain minimum.
    const unsigned n = std::min(a.order_, b.order_);
    return {mul_trunc(a.p_, b.p_, n), n};
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Field& k = field();
    const Scalar c0 = p_.constant_term();
    if (c0.is_zero()) fail(ErrorCode::DomainError, "series inverse needs a nonzero constant term");
    const std::size_t n = nvars();
    Polynomial inv = Polynomial::constant(k, n, k.inv(c0));
    const Polynomial two = Polynomial::constant(k, n, k.from_int(2));
    for (unsigned prec = 1; prec < order_;) {
        prec = std::min(2 * prec, order_);
        // inv <- inv * (2 - a * inv)
        inv = mul_trunc(inv, two - mul_trunc(p_, inv, prec), prec);
    }
    return {inv, order_};
}

TruncatedSeries compose_truncated(const Polynomial& f, std::span<const TruncatedSeries> images, unsigned order) {
    if (images.size() != f.nvars()) fail(ErrorCode::ArityMismatch, "series composition needs one image per variable");
    if (images.empty()) fail(ErrorCode::ArityMismatch, "series composition with no images");
    const Field& k = f.field();
    const std::size_t m = images.front().nvars();
    for (const auto& s : images) {
        if (s.nvars() != m) fail(ErrorCode::ArityMismatch, "series images differ in arity");
        if (s.field() != k) fail(ErrorCode::FieldMismatch, "series image field mismatch");
        order = std::min(order, s.order());
    }
    // Powers of each image, cached on demand.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(k, m, k.one()));
        while (cache.size() <= e) cache.push_back(mul_trunc(cache.back(), images[v].poly(), order));
        return cache[e];
    };
    Polynomial acc(k, m);
    for (const auto& t : f.terms()) {
        Polynomial term = Polynomial::constant(k, m, t.coef);
        for (std::size_t v = 0; v < t.exps.size() && !term.is_zero(); ++v)
            if (t.exps[v] > 0) term = mul_trunc(term, power(v, t.exps[v]), order);
        acc += term;
    }
    return {acc, order};
}

TruncatedSeries implicit_series_solve(const Polynomial& g, std::span<const Scalar> point, std::size_t solve_var,
                                      unsigned order) {
    const std::size_t n = g.nvars();
    const Field& k = g.field();
    if (point.size() != n) fail(ErrorCode::ArityMismatch, "point has the wrong number of coordinates");
    if (solve_var >= n) fail(ErrorCode::ArityMismatch, "solve variable out of range");
    if (n < 2) fail(ErrorCode::InvalidArgument, "implicit solve needs at least two variables");
    if (order == 0) fail(ErrorCode::InvalidArgument, "series order must be positive");
    if (!g.evaluate(point).is_zero()) fail(ErrorCode::DomainError, "point does not lie on the hypersurface");
    if (differentiate(g, solve_var).evaluate(point).is_zero())
        fail(ErrorCode::NotSmooth, "not a smooth chart direction");

    // Local coordinates: the other variables are shifted to the origin and
    // become variables 0..n-2; the unknown value is a series in them.
    const std::size_t m = n - 1;
    std::vector<TruncatedSeries> images;
    images.reserve(n);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (v == solve_var) {
            images.push_back({Polynomial::constant(k, m, point[v]), order}); // placeholder
            continue;
        }
        images.push_back({Polynomial::constant(k, m, point[v]) + Polynomial::variable(k, m, next++), order});
    }
    const Polynomial dg = differentiate(g, solve_var);
    Polynomial s = Polynomial::constant(k, m, point[solve_var]);
    for (unsigned prec = 1; prec < order;) {
        prec = std::min(2 * prec, order);
        images[solve_var] = TruncatedSeries(s, prec);
        std::vector<TruncatedSeries> at_prec;
        for (const auto& im : images) at_prec.push_back(im.truncated(prec));
        const TruncatedSeries value = compose_truncated(g, at_prec, prec);
        const TruncatedSeries slope = compose_truncated(dg, at_prec, prec);
        s = (TruncatedSeries(s, prec) - value * slope.inverse()).poly();
    }
    TruncatedSeries result(s, order);
#ifndef NDEBUG
    images[solve_var] = result;
    if (!compose_truncated(g, images, order).poly().is_zero())
        fail(ErrorCode::Internal, "implicit series solve failed to converge");
#endif
    return result;
}

} // namespace eqlab::algebra
