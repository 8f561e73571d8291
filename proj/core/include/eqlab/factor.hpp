#ifndef EQLAB_FACTOR_HPP
#define EQLAB_FACTOR_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "eqlab/polynomial.hpp"
#include "eqlab/upoly.hpp"

namespace eqlab::algebra {

struct UFactor {
    UPoly poly; // monic, irreducible over the polynomial's field
    unsigned multiplicity;
};

/// a = unit * prod factor^multiplicity. Factors are sorted by degree,
/// then by coefficients, so the output is deterministic.
struct UFactorization {
    Scalar unit;
    std::vector<UFactor> factors;
};

/// Complete factorisation of a nonzero univariate polynomial over its field:
/// Zassenhaus (modular factorisation + Hensel lifting) over the rationals,
/// the norm method over a simple extension, Cantor-Zassenhaus over GF(p)
/// with p < 2^32.
UFactorization factor(const UPoly& a);

/// Roots in the coefficient field with multiplicities.
std::vector<std::pair<Scalar, unsigned>> roots(const UPoly& a);

/// True when the polynomial (integral after clearing denominators) stays of
/// the same degree and is irreducible modulo p.
bool irreducible_mod_p(const UPoly& a, std::uint32_t p);

enum class Irreducibility { Irreducible, Reducible, Unknown };
std::string_view to_string(Irreducibility v) noexcept;

struct IrreducibilityOptions {
    std::uint64_t seed = 1;
    unsigned specializations = 6;
    unsigned primes_per_specialization = 24;
};

/// Irreducibility over the rationals of a polynomial in at most three
/// variables. "Irreducible" and "Reducible" are certificates; "Unknown"
/// means every attempted specialisation was inconclusive.
///
/// The irreducible certificate: after an invertible linear change making
/// the coefficient of x0^deg a nonzero constant, a specialisation of the
/// remaining variables that is irreducible of full degree (checked modulo
/// a prime, then by exact univariate factorisation) proves irreducibility.
/// Reducible answers come from a monomial factor or a nontrivial gcd with a
/// derivative (not square-free).
Irreducibility irreducibility_test(const Polynomial& f, const IrreducibilityOptions& opts = {});

} // namespace eqlab::algebra

#endif
