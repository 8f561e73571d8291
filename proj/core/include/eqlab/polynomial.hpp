#ifndef EQLAB_POLYNOMIAL_HPP
#define EQLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "eqlab/field.hpp"

namespace eqlab::algebra {

using Exponents = std::vector<std::uint32_t>;

struct Term {
    Exponents exps;
    Scalar coef;
};

/// Graded lexicographic comparison: true when a precedes b in the
/// descending term order (higher total degree first, then lex with x0 > x1 > ...).
bool grlex_greater(const Exponents& a, const Exponents& b) noexcept;

unsigned total_degree(const Exponents& e) noexcept;

/// Sparse multivariate polynomial over a runtime field. Terms are kept
/// sorted in descending graded-lex order with no zero coefficients and no
/// duplicate exponent vectors; the zero polynomial has no terms.
class Polynomial {
public:
    Polynomial(Field field, std::size_t nvars);
    /// Canonicalises an arbitrary term list (sorts, merges, drops zeros).
    static Polynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);
    static Polynomial constant(Field field, std::size_t nvars, Scalar c);
    static Polynomial variable(Field field, std::size_t nvars, std::size_t var);
    static Polynomial monomial(Field field, std::size_t nvars, Exponents exps, Scalar c);

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    /// Degree in one variable; -1 for the zero polynomial.
    int degree_in(std::size_t var) const;
    /// Lowest total degree of a term (the order at the origin); -1 for zero.
    int order() const noexcept;
    bool is_homogeneous() const noexcept;

    const Term& leading_term() const;
    Scalar coefficient(const Exponents& e) const;
    Scalar constant_term() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(unsigned e) const;
    /// Multiplies by a monomial given by its exponent vector.
    Polynomial shifted(const Exponents& e) const;
    /// Divides by the leading coefficient (zero stays zero).
    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Scalar evaluate(std::span<const Scalar> point) const;
    /// Replaces variable `var` by a field value, keeping the arity.
    Polynomial evaluate_var(std::size_t var, const Scalar& value) const;
    /// Simultaneous substitution x_i -> images[i]; images share a common
    /// arity which becomes the arity of the result.
    Polynomial compose(std::span<const Polynomial> images) const;
    /// Same polynomial viewed over a larger field (Q into an extension or
    /// into GF(p)).
    Polynomial coerce(const Field& target) const;
    /// Coefficients with respect to `var`: entry i multiplies var^i and is
    /// free of `var` (arity unchanged).
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    /// Terms of total degree < order.
    Polynomial truncated(unsigned order) const;
    /// Homogeneous component of the given total degree.
    Polynomial homogeneous_part(unsigned deg) const;
    /// Reorders or embeds variables: variable i of this becomes variable
    /// map[i] of a polynomial with `new_nvars` variables.
    Polynomial remap(std::span<const std::size_t> map, std::size_t new_nvars) const;

private:
    Polynomial(Field field, std::size_t nvars, std::vector<Term> sorted_terms);
    void check_compatible(const Polynomial& other) const;

    Field field_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

Polynomial differentiate(const Polynomial& f, std::size_t var);

/// Square matrix of field scalars stored row-major.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(Field field, std::size_t n);
    /// Builds from integer entries given row by row.
    static Matrix from_ints(Field field, std::size_t rows, std::size_t cols, std::span<const long> entries);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    std::vector<Scalar> apply(std::span<const Scalar> v) const;

    std::size_t rank() const;
    Scalar determinant() const;
    /// Throws DomainError when singular.
    Matrix inverse() const;
    /// Solves A x = b for square invertible A.
    std::vector<Scalar> solve(std::span<const Scalar> b) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// f(M x): the composition of f with the linear substitution x -> M x.
Polynomial linear_change(const Polynomial& f, const Matrix& m);

/// Adds variable `new_var` (arity grows by one) and makes every term
/// homogeneous of `target_degree`.
Polynomial homogenize(const Polynomial& f, std::size_t new_var, unsigned target_degree);
/// Substitutes `value` for `var` and removes that variable (arity shrinks by one).
Polynomial dehomogenize(const Polynomial& f, std::size_t var, const Scalar& value);
/// Removes a variable that does not occur.
Polynomial drop_variable(const Polynomial& f, std::size_t var);

} // namespace eqlab::algebra

#endif
