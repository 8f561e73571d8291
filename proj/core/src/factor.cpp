#include "eqlab/factor.hpp"

#include <algorithm>
#include <random>

#include "eqlab/error.hpp"
#include "eqlab/resultant.hpp"
#include "modular.hpp"

namespace eqlab::algebra {

std::string_view to_string(Irreducibility v) noexcept {
    switch (v) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

using ZPoly = std::vector<mpz_class>; // low to high, trimmed

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

// Clears denominators and removes the integer content; lc made positive.
ZPoly primitive_integer(const UPoly& a) {
    mpz_class den = 1;
    for (const auto& c : a.coeffs()) den = lcm(den, c.base_value().get_den());
    ZPoly z;
    for (const auto& c : a.coeffs()) z.push_back(mpz_class(c.base_value() * den));
    mpz_class g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (g != 0)
        for (auto& c : z) c /= g;
    if (!z.empty() && z.back() < 0)
        for (auto& c : z) c = -c;
    ztrim(z);
    return z;
}

UPoly monic_rational(const ZPoly& z) {
    const Field q = Field::rationals();
    std::vector<Scalar> c;
    for (const auto& x : z) c.push_back(q.from_rational(mpq_class(x, z.back())));
    return UPoly(q, std::move(c));
}

modp::Poly reduce(const ZPoly& z, const modp::Zp& k) {
    modp::Poly r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = k.from_mpz(z[i]);
    modp::trim(r);
    return r;
}

// ---- arithmetic in (Z/m)[x], representatives in [0, m)

void zmod(ZPoly& a, const mpz_class& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(a);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zmod(r, m);
    return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : mpz_class(0)) + (i < b.size() ? b[i] : mpz_class(0));
    zmod(r, m);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = (i < a.size() ? a[i] : mpz_class(0)) - (i < b.size() ? b[i] : mpz_class(0));
    zmod(r, m);
    return r;
}

// Division by a monic polynomial modulo m.
void zdivmod_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m, ZPoly& q, ZPoly& r) {
    r = a;
    zmod(r, m);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, mpz_class(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        const mpz_class c = r[i + b.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] %= m;
            if (r[i + j] < 0) r[i + j] += m;
        }
    }
    ztrim(q);
    ztrim(r);
}

ZPoly from_modp(const modp::Poly& a) {
    ZPoly z;
    for (auto c : a) z.push_back(mpz_class(static_cast<unsigned long>(c)));
    ztrim(z);
    return z;
}

// One quadratic Hensel step (f = g*h mod m, s*g + t*h = 1 mod m, h monic)
// to the same relations modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m) {
    const mpz_class m2 = m * m;
    const ZPoly e = zsub(f, zmul(g, h, m2), m2);
    ZPoly q, r;
    zdivmod_monic(zmul(s, e, m2), h, m2, q, r);
    ZPoly gs = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
    ZPoly hs = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, gs, m2), zmul(t, hs, m2), m2), ZPoly{1}, m2);
    ZPoly c, d;
    zdivmod_monic(zmul(s, b, m2), hs, m2, c, d);
    ZPoly ss = zsub(s, d, m2);
    ZPoly ts = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, gs, m2), m2);
    g = std::move(gs);
    h = std::move(hs);
    s = std::move(ss);
    t = std::move(ts);
}

void symmetric(ZPoly& a, const mpz_class& m) {
    const mpz_class half = m / 2;
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    ztrim(a);
}

mpz_class zcontent(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

// Exact division over Z; false when not exact.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    ZPoly r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        const mpz_class& top = r[i + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
        const mpz_class c = top / b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
    }
    ztrim(r);
    ztrim(q);
    return r.empty();
}

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<std::uint32_t> out;
        for (std::uint32_t n = 3; out.size() < 400; n += 2) {
            bool prime = true;
            for (std::uint32_t d = 3; d * d <= n; d += 2)
                if (n % d == 0) {
                    prime = false;
                    break;
                }
            if (prime) out.push_back(n);
        }
        return out;
    }();
    return primes;
}

// Irreducible factors of a primitive square-free integer polynomial with
// positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
    const int n = zdeg(f);
    if (n <= 1) return {f};
    std::mt19937_64 rng(0x5eed);

    std::uint32_t best_p = 0;
    std::vector<modp::Poly> best;
    unsigned good = 0;
    for (std::uint32_t p : small_primes()) {
        const modp::Zp k{p};
        if (k.from_mpz(f.back()) == 0) continue;
        modp::Poly fp = reduce(f, k);
        if (modp::deg(modp::gcd(k, fp, modp::derivative(k, fp))) > 0) continue;
        auto facs = modp::factor_squarefree(k, modp::monic(k, fp), rng);
        if (facs.size() == 1) return {f};
        if (best.empty() || facs.size() < best.size()) {
            best = std::move(facs);
            best_p = p;
        }
        if (++good >= 5) break;
    }
    if (best.empty()) fail(ErrorCode::Internal, "no usable prime for modular factorisation");

    // Coefficient bound for any factor times the leading coefficient.
    mpz_class maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
    mpz_class bound = (mpz_class(1) << n) * (n + 1) * maxc * abs(f.back());
    const mpz_class p(best_p);
    mpz_class M = p;
    while (M <= 2 * bound) M *= M;

    // Sequential two-factor lifting: split off one monic factor at a time.
    std::vector<ZPoly> lifted;
    ZPoly rest = f;
    zmod(rest, M);
    const modp::Zp k{best_p};
    for (std::size_t i = 0; i + 1 < best.size(); ++i) {
        modp::Poly gm = {k.from_mpz(rest.back())};
        for (std::size_t j = i + 1; j < best.size(); ++j) gm = modp::mul(k, gm, best[j]);
        modp::Poly sm, tm;
        modp::xgcd(k, gm, best[i], sm, tm);
        ZPoly g = from_modp(gm), h = from_modp(best[i]), s = from_modp(sm), t = from_modp(tm);
        for (mpz_class m = p; m < M; m *= m) hensel_step(rest, g, h, s, t, m);
        lifted.push_back(h);
        rest = g;
    }
    {
        // Last factor: rest = lc * monic.
        mpz_class inv;
        mpz_class lc = rest.back();
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
        ZPoly last = rest;
        for (auto& c : last) c *= inv;
        zmod(last, M);
        lifted.push_back(last);
    }

    // Recombination by subsets of increasing size.
    std::vector<ZPoly> out;
    ZPoly cur = f;
    std::vector<ZPoly> pool = lifted;
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            ZPoly g = {cur.back()};
            for (auto i : idx) g = zmul(g, pool[i], M);
            symmetric(g, M);
            const mpz_class c = zcontent(g);
            for (auto& x : g) x /= c;
            ZPoly q;
            if (zdivides(cur, g, q)) {
                if (g.back() < 0)
                    for (auto& x : g) x = -x;
                out.push_back(g);
                cur = q;
                if (cur.back() < 0)
                    for (auto& x : cur) x = -x;
                for (std::size_t j = size; j-- > 0;) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[j]));
                found = true;
                break;
            }
            // next combination
            std::size_t j = size;
            while (j > 0 && idx[j - 1] == pool.size() - size + j - 1) --j;
            if (j == 0) break;
            ++idx[j - 1];
            for (std::size_t l = j; l < size; ++l) idx[l] = idx[l - 1] + 1;
        }
        if (!found) ++size;
    }
    if (zdeg(cur) > 0) out.push_back(cur);
    return out;
}

void sort_factors(std::vector<UFactor>& fs) {
    std::sort(fs.begin(), fs.end(), [](const UFactor& a, const UFactor& b) {
        if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
        for (std::size_t i = static_cast<std::size_t>(a.poly.degree()) + 1; i-- > 0;)
            if (a.poly.coeff(i) != b.poly.coeff(i)) return a.poly.coeff(i) < b.poly.coeff(i);
        return a.multiplicity < b.multiplicity;
    });
}

std::vector<UPoly> factor_squarefree_rational(const UPoly& a) {
    std::vector<UPoly> out;
    for (const auto& z : zassenhaus(primitive_integer(a))) out.push_back(monic_rational(z));
    return out;
}

std::vector<UPoly> factor_squarefree_prime(const UPoly& a) {
    const Field& k = a.field();
    if (k.characteristic() >= (1ULL << 32)) fail(ErrorCode::Unsupported, "factorisation needs p < 2^32");
    const modp::Zp zp{k.characteristic()};
    modp::Poly f;
    for (const auto& c : a.coeffs()) f.push_back(zp.from_mpz(c.base_value().get_num()));
    std::mt19937_64 rng(0x5eed);
    std::vector<UPoly> out;
    for (const auto& g : modp::factor_squarefree(zp, modp::monic(zp, f), rng)) {
        std::vector<Scalar> c;
        for (auto v : g) c.push_back(k.from_int(static_cast<long>(v)));
        out.emplace_back(k, std::move(c));
    }
    return out;
}

// Norm method for a square-free polynomial over Q(alpha).
std::vector<UPoly> factor_squarefree_extension(const UPoly& h) {
    const Field& k = h.field();
    if (h.degree() <= 1) return {h.monic()};
    const Field q = Field::rationals();
    // Variables: 0 = x, 1 = t.
    std::vector<Term> mt;
    for (std::size_t i = 0; i < k.modulus().size(); ++i)
        if (k.modulus()[i] != 0) mt.push_back({Exponents{0, static_cast<std::uint32_t>(i)}, q.from_rational(k.modulus()[i])});
    const Polynomial m = Polynomial::from_terms(q, 2, std::move(mt));
    const Polynomial x = Polynomial::variable(q, 2, 0), t = Polynomial::variable(q, 2, 1);
    for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, 5L, 7L, 11L, 13L}) {
        const Polynomial shifted = x - t.scaled(q.from_int(s));
        Polynomial H(q, 2);
        Polynomial power = Polynomial::constant(q, 2, q.one());
        for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
            std::vector<Term> ct;
            const auto& cc = h.coeffs()[i].coeffs();
            for (std::size_t j = 0; j < cc.size(); ++j)
                if (cc[j] != 0) ct.push_back({Exponents{0, static_cast<std::uint32_t>(j)}, q.from_rational(cc[j])});
            H += Polynomial::from_terms(q, 2, std::move(ct)) * power;
            power = power * shifted;
        }
        const Polynomial norm = resultant(m, H, 1);
        const UPoly nx = UPoly::from_polynomial(norm, 0);
        if (!is_squarefree(nx)) continue;
        std::vector<UPoly> out;
        const Scalar shift = k.mul(k.from_int(s), k.generator());
        for (const auto& ni : factor_squarefree_rational(nx)) {
            std::vector<Scalar> c;
            for (const auto& v : ni.coeffs()) c.push_back(k.from_rational(v.base_value()));
            const UPoly lifted = UPoly(k, std::move(c)).taylor_shift(shift);
            UPoly g = gcd(h, lifted);
            if (g.degree() > 0) out.push_back(g);
        }
        return out;
    }
    fail(ErrorCode::Internal, "no square-free norm found for extension factorisation");
}

} // namespace

UFactorization factor(const UPoly& a) {
    if (a.is_zero()) fail(ErrorCode::DomainError, "factorisation of the zero polynomial");
    const Field& k = a.field();
    UFactorization out{a.lead(), {}};
    if (a.degree() == 0) return out;
    for (const auto& [part, mult] : squarefree_decomposition(a)) {
        std::vector<UPoly> pieces;
        switch (k.kind()) {
        case FieldKind::Rational: pieces = factor_squarefree_rational(part); break;
        case FieldKind::Prime: pieces = factor_squarefree_prime(part); break;
        case FieldKind::Extension: pieces = factor_squarefree_extension(part); break;
        }
        for (auto& p : pieces) out.factors.push_back({p.monic(), mult});
    }
    sort_factors(out.factors);
    return out;
}

std::vector<std::pair<Scalar, unsigned>> roots(const UPoly& a) {
    std::vector<std::pair<Scalar, unsigned>> out;
    const Field& k = a.field();
    for (const auto& f : factor(a).factors)
        if (f.poly.degree() == 1) out.emplace_back(k.neg(f.poly.coeff(0)), f.multiplicity);
    return out;
}

bool irreducible_mod_p(const UPoly& a, std::uint32_t p) {
    if (!a.field().is_rational()) fail(ErrorCode::Unsupported, "modular irreducibility needs a rational polynomial");
    const ZPoly z = primitive_integer(a);
    const modp::Zp k{p};
    if (z.empty() || k.from_mpz(z.back()) == 0) return false;
    const modp::Poly f = modp::monic(k, reduce(z, k));
    if (modp::deg(f) <= 1) return modp::deg(f) == 1;
    if (modp::deg(modp::gcd(k, f, modp::derivative(k, f))) > 0) return false;
    const auto ddf = modp::distinct_degree(k, f);
    return ddf.size() == 1 && static_cast<int>(ddf[0].second) == modp::deg(f);
}

Irreducibility irreducibility_test(const Polynomial& f, const IrreducibilityOptions& opts) {
    if (f.nvars() > 3) fail(ErrorCode::Unsupported, "irreducibility test supports at most three variables");
    if (!f.field().is_rational()) fail(ErrorCode::Unsupported, "irreducibility test works over the rationals");
    if (f.is_constant()) fail(ErrorCode::InvalidArgument, "irreducibility of a constant");
    const Field& q = f.field();
    const std::size_t n = f.nvars();
    const int d = f.degree();
    if (d == 1) return Irreducibility::Irreducible;

    for (std::size_t v = 0; v < n; ++v) {
        std::uint32_t m = UINT32_MAX;
        for (const auto& t : f.terms()) m = std::min(m, t.exps[v]);
        if (m > 0) return Irreducibility::Reducible; // x_v divides f and deg f > 1
    }

    if (n == 1) {
        const auto fac = factor(UPoly::from_polynomial(f, 0));
        return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 ? Irreducibility::Irreducible
                                                                             : Irreducibility::Reducible;
    }

    // Linear change making the x0^d coefficient a nonzero constant.
    const Polynomial top = f.homogeneous_part(static_cast<unsigned>(d));
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> small(-3, 3);
    std::vector<Scalar> column;
    for (std::size_t attempt = 0; column.empty(); ++attempt) {
        std::vector<Scalar> v(n);
        if (attempt < n) {
            v[attempt] = q.one();
        } else {
            for (auto& c : v) c = q.from_int(small(rng));
        }
        if (!top.evaluate(v).is_zero()) column = v;
        if (attempt > 200) fail(ErrorCode::Internal, "could not normalise the leading coefficient");
    }
    std::size_t pivot = 0;
    while (column[pivot].is_zero()) ++pivot;
    Matrix m = Matrix::identity(q, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, 0) = column[i];
    if (pivot != 0) {
        // Columns: v, then the standard vectors except e_pivot.
        std::size_t col = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == pivot) continue;
            for (std::size_t r = 0; r < n; ++r) m.at(r, col) = r == i ? q.one() : Scalar{};
            ++col;
        }
    }
    const Polynomial g = linear_change(f, m);

    bool squarefree = false;
    std::uniform_int_distribution<long> spec(-50, 50);
    const auto& primes = small_primes();
    for (unsigned trial = 0; trial < opts.specializations; ++trial) {
        Polynomial h = g;
        for (std::size_t v = 1; v < n; ++v) h = h.evaluate_var(v, q.from_int(trial == 0 ? static_cast<long>(v) : spec(rng)));
        const UPoly u = UPoly::from_polynomial(h, 0);
        if (u.degree() != d) continue;
        if (!is_squarefree(u)) continue;
        squarefree = true;
        for (unsigned i = 0; i < opts.primes_per_specialization && i < primes.size(); ++i)
            if (irreducible_mod_p(u, primes[i])) return Irreducibility::Irreducible;
        if (factor(u).factors.size() == 1) return Irreducibility::Irreducible;
    }
    if (!squarefree) {
        const Polynomial c = gcd(g, differentiate(g, 0));
        if (!c.is_constant()) return Irreducibility::Reducible;
    }
    return Irreducibility::Unknown;
}

} // namespace eqlab::algebra
