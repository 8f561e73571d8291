#ifndef EQLAB_UPOLY_HPP
#define EQLAB_UPOLY_HPP

#include <utility>
#include <vector>

#include "eqlab/polynomial.hpp"

namespace eqlab::algebra {

/// Dense univariate polynomial over a runtime field, coefficients stored
/// from the constant term upward and trimmed.
class UPoly {
public:
    explicit UPoly(Field field) : field_(std::move(field)) {}
    UPoly(Field field, std::vector<Scalar> coeffs);
    static UPoly from_ints(Field field, std::initializer_list<long> low_to_high);
    static UPoly x(Field field);
    /// Reads a polynomial in which only `var` occurs.
    static UPoly from_polynomial(const Polynomial& f, std::size_t var);

    Polynomial to_polynomial(std::size_t nvars, std::size_t var) const;

    const Field& field() const noexcept { return field_; }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar{}; }
    const Scalar& lead() const;

    UPoly monic() const;
    UPoly derivative() const;
    UPoly scaled(const Scalar& s) const;
    Scalar evaluate(const Scalar& x) const;
    /// p(x + shift).
    UPoly taylor_shift(const Scalar& shift) const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Quotient and remainder; throws on division by zero.
    std::pair<UPoly, UPoly> divmod(const UPoly& b) const;
    UPoly rem(const UPoly& b) const { return divmod(b).second; }
    UPoly quo(const UPoly& b) const { return divmod(b).first; }

private:
    void check(const UPoly& o) const;
    Field field_;
    std::vector<Scalar> c_;
};

/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

/// Square-free decomposition a = lc * prod f_i^i (Yun); characteristic
/// zero or p > degree. Entries are monic, nonconstant, paired with i.
std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& a);

bool is_squarefree(const UPoly& a);

} // namespace eqlab::algebra

#endif
