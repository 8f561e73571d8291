#ifndef EQLAB_SERIES_HPP
#define EQLAB_SERIES_HPP

#include <span>

#include "eqlab/polynomial.hpp"

namespace eqlab::algebra {

/// A power series known modulo terms of total degree >= order. Results of
/// arithmetic carry the smaller order of the two operands.
class TruncatedSeries {
public:
    TruncatedSeries(Polynomial poly, unsigned order);

    const Polynomial& poly() const noexcept { return p_; }
    unsigned order() const noexcept { return order_; }
    const Field& field() const noexcept { return p_.field(); }
    std::size_t nvars() const noexcept { return p_.nvars(); }

    /// Same series known to a lower order.
    TruncatedSeries truncated(unsigned order) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const { return {-p_, order_}; }

    /// Multiplicative inverse; needs a nonzero constant term.
    TruncatedSeries inverse() const;

    /// Equality as series: same order and same terms.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.p_ == b.p_;
    }

private:
    Polynomial p_;
    unsigned order_;
};

/// f(images) with every intermediate product truncated at `order`.
/// The images must have zero constant term or f must be a polynomial; the
/// result is exact modulo degree >= order either way.
TruncatedSeries compose_truncated(const Polynomial& f, std::span<const TruncatedSeries> images, unsigned order);

/// Solves G = 0 for variable `solve_var` near `point` by Newton iteration
/// on series with doubling precision. The result is a series in the local
/// coordinates u_i = x_i - point_i of the remaining variables (arity
/// nvars - 1, same variable order with solve_var removed), whose constant
/// term is point[solve_var], such that G vanishes modulo degree >= order
/// after substitution.
TruncatedSeries implicit_series_solve(const Polynomial& g, std::span<const Scalar> point, std::size_t solve_var,
                                      unsigned order);

} // namespace eqlab::algebra

#endif
