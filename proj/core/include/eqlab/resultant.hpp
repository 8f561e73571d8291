#ifndef EQLAB_RESULTANT_HPP
#define EQLAB_RESULTANT_HPP

#include <optional>

#include "eqlab/polynomial.hpp"

namespace eqlab::algebra {

/// Exact quotient a / b; nullopt when b does not divide a.
std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws DomainError when the division is not exact.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Pseudo-remainder of a by b with respect to `var`:
/// lc(b)^(deg a - deg b + 1) * a = q*b + r with deg_var r < deg_var b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var);

/// Resultant with respect to `var`, computed by the subresultant
/// polynomial remainder sequence. The result does not involve `var`
/// (arity is kept). A constant argument c yields c^deg(other).
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var);

/// Greatest common divisor, normalised to leading coefficient one
/// in graded-lex order. gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors (monic), computed as
/// f / gcd(f, df/dx_1, ..., df/dx_n). Characteristic zero or p > deg f.
Polynomial squarefree_part(const Polynomial& f);

/// Largest power of `var` dividing f, removed.
Polynomial strip_variable_power(const Polynomial& f, std::size_t var);

} // namespace eqlab::algebra

#endif
