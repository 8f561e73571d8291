#include "modular.hpp"

#include <algorithm>

namespace eqlab::algebra::modp {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Zp& k, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = k.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Poly sub(const Zp& k, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = k.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Poly mul(const Zp& k, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % k.p;
    }
    trim(r);
    return r;
}

Poly scale(const Zp& k, const Poly& a, u64 s) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], s);
    trim(r);
    return r;
}

void divmod(const Zp& k, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    r = a;
    trim(r);
    q.clear();
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    const u64 binv = k.inv(b.back());
    for (std::size_t i = q.size(); i-- > 0;) {
        const u64 c = k.mul(r[i + b.size() - 1], binv);
        q[i] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.sub(r[i + j], k.mul(c, b[j]));
    }
    trim(q);
    trim(r);
}

Poly rem(const Zp& k, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(k, a, b, q, r);
    return r;
}

Poly monic(const Zp& k, const Poly& a) {
    if (a.empty()) return a;
    return scale(k, a, k.inv(a.back()));
}

Poly gcd(const Zp& k, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(k, a);
}

Poly xgcd(const Zp& k, const Poly& a, const Poly& b, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        Poly q, r;
        divmod(k, r0, r1, q, r);
        Poly s2 = sub(k, s0, mul(k, q, s1));
        Poly t2 = sub(k, t0, mul(k, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const u64 li = r0.empty() ? 1 : k.inv(r0.back());
    s = scale(k, s0, li);
    t = scale(k, t0, li);
    return scale(k, r0, li);
}

Poly derivative(const Zp& k, const Poly& a) {
    Poly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(k.mul(a[i], i % k.p));
    trim(d);
    return d;
}

Poly powmod(const Zp& k, Poly base, mpz_class e, const Poly& m) {
    Poly r = {1};
    base = rem(k, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = rem(k, mul(k, r, base), m);
        e >>= 1;
        if (e > 0) base = rem(k, mul(k, base, base), m);
    }
    return r;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Zp& k, const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    Poly rest = f;
    const Poly x = {0, 1};
    Poly h = x;
    unsigned d = 0;
    const mpz_class p(static_cast<unsigned long>(k.p));
    while (deg(rest) >= 2 * static_cast<int>(d + 1)) {
        ++d;
        h = powmod(k, h, p, rest);
        Poly g = gcd(k, rest, sub(k, h, x));
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            Poly q, r;
            divmod(k, rest, g, q, r);
            rest = q;
            h = rem(k, h, rest);
        }
    }
    if (deg(rest) > 0) out.emplace_back(monic(k, rest), static_cast<unsigned>(deg(rest)));
    return out;
}

std::vector<Poly> equal_degree(const Zp& k, const Poly& f, unsigned d, std::mt19937_64& rng) {
    if (deg(f) <= static_cast<int>(d)) return {f};
    std::uniform_int_distribution<u64> coef(0, k.p - 1);
    const mpz_class q = mpz_class(static_cast<unsigned long>(k.p));
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    while (true) {
        Poly a(static_cast<std::size_t>(deg(f)));
        for (auto& c : a) c = coef(rng);
        trim(a);
        if (deg(a) < 1) continue;
        Poly g = gcd(k, f, a);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            Poly q2, r;
            divmod(k, f, g, q2, r);
            auto left = equal_degree(k, g, d, rng);
            auto right = equal_degree(k, monic(k, q2), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
        Poly b;
        if (k.p == 2) {
            // Trace map a + a^2 + ... + a^(2^(d-1)).
            Poly t = rem(k, a, f);
            b = t;
            for (unsigned i = 1; i < d; ++i) {
                t = rem(k, mul(k, t, t), f);
                b = add(k, b, t);
            }
        } else {
            b = sub(k, powmod(k, a, (qd - 1) / 2, f), Poly{1});
        }
        g = gcd(k, f, b);
        if (deg(g) > 0 && deg(g) < deg(f)) {
            Poly q2, r;
            divmod(k, f, g, q2, r);
            auto left = equal_degree(k, g, d, rng);
            auto right = equal_degree(k, monic(k, q2), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<Poly> factor_squarefree(const Zp& k, const Poly& f, std::mt19937_64& rng) {
    std::vector<Poly> out;
    for (auto& [g, d] : distinct_degree(k, f)) {
        auto parts = equal_degree(k, g, d, rng);
        out.insert(out.end(), parts.begin(), parts.end());
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

} // namespace eqlab::algebra::modp
