#include "eqlab/field.hpp"

#include <algorithm>
#include <sstream>

#include "eqlab/error.hpp"

namespace eqlab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::ArityMismatch: return "arity mismatch";
    case ErrorCode::FieldMismatch: return "field mismatch";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::DomainError: return "domain error";
    case ErrorCode::NotSmooth: return "not smooth";
    case ErrorCode::NonIsolated: return "non-isolated";
    case ErrorCode::Undetermined: return "undetermined";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Internal: return "internal error";
    }
    return "unknown";
}

} // namespace eqlab

namespace eqlab::algebra {

namespace {

void trim(std::vector<mpq_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<mpq_class> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Remainder modulo a monic polynomial.
void reduce_monic(std::vector<mpq_class>& a, const std::vector<mpq_class>& m) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const mpq_class lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        if (lead != 0)
            for (std::size_t i = 0; i < dm; ++i) a[shift + i] -= lead * m[i];
        a.pop_back();
    }
    trim(a);
}

// a = q*b + r over Q, b nonzero.
void poly_divmod(std::vector<mpq_class> a, const std::vector<mpq_class>& b,
                 std::vector<mpq_class>& q, std::vector<mpq_class>& r) {
    q.clear();
    trim(a);
    if (a.size() < b.size()) {
        r = std::move(a);
        return;
    }
    q.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const mpq_class c = a.back() / lb;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    trim(q);
    r = std::move(a);
}

std::vector<mpz_class> small_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0 || n > mpz_class("1000000000000")) return out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

bool has_rational_root(const std::vector<mpq_class>& m) {
    mpz_class den = 1;
    for (const auto& c : m) den = lcm(den, c.get_den());
    std::vector<mpz_class> zc;
    for (const auto& c : m) zc.push_back(mpz_class(c * den));
    if (zc.front() == 0) return true;
    const auto ps = small_divisors(zc.front());
    const auto qs = small_divisors(zc.back());
    if (ps.empty() || qs.empty()) return false;
    for (const auto& p : ps)
        for (const auto& q : qs)
            for (int sgn : {1, -1}) {
                mpq_class x(sgn * p, q);
                x.canonicalize();
                mpq_class v = 0;
                for (auto it = m.rbegin(); it != m.rend(); ++it) v = v * x + *it;
                if (v == 0) return true;
            }
    return false;
}

mpq_class mod_canonical(const mpq_class& q, const mpz_class& p) {
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = q.get_den() % p;
    if (den == 0) fail(ErrorCode::DomainError, "denominator divisible by the field characteristic");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    return mpq_class(r);
}

} // namespace

Scalar::Scalar(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(c_); }

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

struct Field::Impl {
    FieldKind kind = FieldKind::Rational;
    mpz_class p = 0;
    std::uint64_t p64 = 0;
    std::vector<mpq_class> modulus; // monic, low to high
    std::string gen = "t";
};

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

Field Field::rationals() {
    static const auto impl = std::make_shared<const Impl>();
    return Field(impl);
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "field size " + std::to_string(p) + " is not prime");
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::Prime;
    impl->p64 = p;
    mpz_import(impl->p.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    return Field(std::move(impl));
}

Field Field::extension(std::vector<mpq_class> modulus, std::string generator) {
    trim(modulus);
    if (modulus.size() < 2) fail(ErrorCode::InvalidArgument, "extension modulus must have degree >= 1");
    const mpq_class lc = modulus.back();
    for (auto& c : modulus) c /= lc;
    if (modulus.size() - 1 <= 3 && modulus.size() > 2 && has_rational_root(modulus))
        fail(ErrorCode::InvalidArgument, "extension modulus is reducible over the rationals");
    auto impl = std::make_shared<Impl>();
    impl->kind = FieldKind::Extension;
    impl->modulus = std::move(modulus);
    impl->gen = std::move(generator);
    return Field(std::move(impl));
}

FieldKind Field::kind() const noexcept { return impl_->kind; }
std::uint64_t Field::characteristic() const noexcept { return impl_->p64; }

std::size_t Field::degree() const noexcept {
    return impl_->kind == FieldKind::Extension ? impl_->modulus.size() - 1 : 1;
}

const std::vector<mpq_class>& Field::modulus() const noexcept { return impl_->modulus; }
const std::string& Field::generator_name() const noexcept { return impl_->gen; }

std::string Field::descriptor() const {
    switch (impl_->kind) {
    case FieldKind::Rational: return "q";
    case FieldKind::Prime: return "gf(" + std::to_string(impl_->p64) + ")";
    case FieldKind::Extension: break;
    }
    return "q[" + impl_->gen + "]/(" + format(Scalar(std::vector<mpq_class>(impl_->modulus))) + ")";
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Scalar Field::from_rational(const mpq_class& q) const {
    if (q == 0) return {};
    if (impl_->kind == FieldKind::Prime) return Scalar({mod_canonical(q, impl_->p)});
    return Scalar({q});
}

Scalar Field::generator() const {
    if (impl_->kind != FieldKind::Extension) fail(ErrorCode::InvalidArgument, "field has no generator");
    return from_coeffs({mpq_class(0), mpq_class(1)});
}

Scalar Field::from_coeffs(std::vector<mpq_class> coeffs) const {
    if (impl_->kind == FieldKind::Extension) {
        trim(coeffs);
        reduce_monic(coeffs, impl_->modulus);
        return Scalar(std::move(coeffs));
    }
    trim(coeffs);
    if (coeffs.size() > 1) fail(ErrorCode::FieldMismatch, "field element has a generator part");
    return coeffs.empty() ? Scalar{} : from_rational(coeffs[0]);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<mpq_class> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) r[i] = a.coeffs()[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) r[i] += b.coeffs()[i];
    if (impl_->kind == FieldKind::Prime) return from_rational(r[0]);
    return Scalar(std::move(r));
}

Scalar Field::neg(const Scalar& a) const {
    if (a.is_zero()) return a;
    std::vector<mpq_class> r = a.coeffs();
    for (auto& c : r) c = -c;
    if (impl_->kind == FieldKind::Prime) return from_rational(r[0]);
    return Scalar(std::move(r));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    switch (impl_->kind) {
    case FieldKind::Rational: return Scalar({a.coeffs()[0] * b.coeffs()[0]});
    case FieldKind::Prime: return from_rational(a.coeffs()[0] * b.coeffs()[0]);
    case FieldKind::Extension: break;
    }
    auto r = poly_mul(a.coeffs(), b.coeffs());
    reduce_monic(r, impl_->modulus);
    return Scalar(std::move(r));
}

Scalar Field::inv(const Scalar& a) const {
    if (a.is_zero()) fail(ErrorCode::DomainError, "division by zero");
    switch (impl_->kind) {
    case FieldKind::Rational: return Scalar({1 / a.coeffs()[0]});
    case FieldKind::Prime: {
        mpz_class v = a.coeffs()[0].get_num(), r;
        mpz_invert(r.get_mpz_t(), v.get_mpz_t(), impl_->p.get_mpz_t());
        return Scalar({mpq_class(r)});
    }
    case FieldKind::Extension: break;
    }
    // Extended Euclid: s*a + u*m = g, g a nonzero constant when m is irreducible.
    std::vector<mpq_class> r0 = impl_->modulus, r1 = a.coeffs();
    std::vector<mpq_class> s0, s1 = {mpq_class(1)};
    while (r1.size() > 1) {
        std::vector<mpq_class> q, r;
        poly_divmod(r0, r1, q, r);
        auto qs = poly_mul(q, s1);
        std::vector<mpq_class> s2(std::max(s0.size(), qs.size()));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) fail(ErrorCode::DomainError, "element is a zero divisor; extension modulus is reducible");
    const mpq_class g = r1[0];
    for (auto& c : s1) c /= g;
    reduce_monic(s1, impl_->modulus);
    return Scalar(std::move(s1));
}

Scalar Field::pow(Scalar a, unsigned long e) const {
    Scalar r = one();
    while (e > 0) {
        if (e & 1UL) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

bool Field::is_one(const Scalar& a) const { return a.coeffs().size() == 1 && a.coeffs()[0] == 1; }

std::string Field::format(const Scalar& a) const {
    if (a.is_zero()) return "0";
    if (a.coeffs().size() == 1) return a.coeffs()[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        mpq_class c = a.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const mpq_class ac = abs(c);
        if (i == 0) {
            os << ac.get_str();
            continue;
        }
        if (ac != 1) os << ac.get_str() << "*";
        os << impl_->gen;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

bool operator==(const Field& a, const Field& b) {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->kind == b.impl_->kind && a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus;
}

} // namespace eqlab::algebra
