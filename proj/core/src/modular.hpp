// Dense polynomial arithmetic over GF(p) for word-size odd-or-two p < 2^32.
// Internal to the factorization code.
#ifndef EQLAB_SRC_MODULAR_HPP
#define EQLAB_SRC_MODULAR_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqlab::algebra::modp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>; // low to high, trimmed

struct Zp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
    u64 from_mpz(const mpz_class& z) const {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
        if (r < 0) r += static_cast<unsigned long>(p);
        return r.get_ui();
    }
};

void trim(Poly& a);
int deg(const Poly& a);
Poly add(const Zp& k, const Poly& a, const Poly& b);
Poly sub(const Zp& k, const Poly& a, const Poly& b);
Poly mul(const Zp& k, const Poly& a, const Poly& b);
Poly scale(const Zp& k, const Poly& a, u64 s);
void divmod(const Zp& k, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const Zp& k, const Poly& a, const Poly& b);
Poly monic(const Zp& k, const Poly& a);
Poly gcd(const Zp& k, Poly a, Poly b);
/// s*a + t*b = g (monic).
Poly xgcd(const Zp& k, const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly derivative(const Zp& k, const Poly& a);
Poly powmod(const Zp& k, Poly base, mpz_class e, const Poly& m);

/// Distinct-degree factorisation of a monic square-free polynomial:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Zp& k, const Poly& f);
/// Splits a monic square-free product of irreducibles of equal degree d.
std::vector<Poly> equal_degree(const Zp& k, const Poly& f, unsigned d, std::mt19937_64& rng);
/// Full factorisation of a monic square-free polynomial into monic irreducibles.
std::vector<Poly> factor_squarefree(const Zp& k, const Poly& f, std::mt19937_64& rng);

} // namespace eqlab::algebra::modp

#endif
