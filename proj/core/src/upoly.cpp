#include "eqlab/upoly.hpp"

#include "eqlab/error.hpp"

namespace eqlab::algebra {

namespace {
void trim(std::vector<Scalar>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}
} // namespace

UPoly::UPoly(Field field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(c_); }

UPoly UPoly::from_ints(Field field, std::initializer_list<long> low_to_high) {
    std::vector<Scalar> c;
    for (long v : low_to_high) c.push_back(field.from_int(v));
    return UPoly(std::move(field), std::move(c));
}

UPoly UPoly::x(Field field) {
    std::vector<Scalar> c{Scalar{}, field.one()};
    return UPoly(std::move(field), std::move(c));
}

UPoly UPoly::from_polynomial(const Polynomial& f, std::size_t var) {
    std::vector<Scalar> c;
    for (const auto& t : f.terms()) {
        for (std::size_t k = 0; k < f.nvars(); ++k)
            if (k != var && t.exps[k] != 0)
                fail(ErrorCode::InvalidArgument, "polynomial is not univariate in the requested variable");
        const std::size_t e = t.exps[var];
        if (c.size() <= e) c.resize(e + 1);
        c[e] = t.coef;
    }
    return UPoly(f.field(), std::move(c));
}

Polynomial UPoly::to_polynomial(std::size_t nvars, std::size_t var) const {
    std::vector<Term> t;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Exponents e(nvars, 0);
        e[var] = static_cast<std::uint32_t>(i);
        t.push_back({std::move(e), c_[i]});
    }
    return Polynomial::from_terms(field_, nvars, std::move(t));
}

const Scalar& UPoly::lead() const {
    if (c_.empty()) fail(ErrorCode::DomainError, "zero polynomial has no leading coefficient");
    return c_.back();
}

void UPoly::check(const UPoly& o) const {
    if (field_ != o.field_) fail(ErrorCode::FieldMismatch, "univariate polynomials over different fields");
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(field_.inv(c_.back()));
}

UPoly UPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_.mul(c_[i], field_.from_int(static_cast<long>(i))));
    return UPoly(field_, std::move(d));
}

UPoly UPoly::scaled(const Scalar& s) const {
    std::vector<Scalar> c = c_;
    for (auto& x : c) x = field_.mul(x, s);
    return UPoly(field_, std::move(c));
}

Scalar UPoly::evaluate(const Scalar& x) const {
    Scalar acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

UPoly UPoly::taylor_shift(const Scalar& shift) const {
    // Horner in the ring: acc = acc*(x + shift) + c_i.
    UPoly acc(field_);
    const UPoly lin(field_, {shift, field_.one()});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + UPoly(field_, {c_[i]});
    return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    a.check(b);
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return UPoly(a.field_, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    a.check(b);
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return UPoly(a.field_, std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = a.field_.add(c[i + j], a.field_.mul(a.c_[i], b.c_[j]));
    }
    return UPoly(a.field_, std::move(c));
}

bool operator==(const UPoly& a, const UPoly& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.field_ == b.field_);
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& b) const {
    check(b);
    if (b.is_zero()) fail(ErrorCode::DomainError, "polynomial division by zero");
    if (degree() < b.degree()) return {UPoly(field_), *this};
    std::vector<Scalar> r = c_;
    std::vector<Scalar> q(c_.size() - b.c_.size() + 1);
    const Scalar binv = field_.inv(b.lead());
    for (std::size_t i = q.size(); i-- > 0;) {
        const Scalar coef = field_.mul(r[i + b.c_.size() - 1], binv);
        q[i] = coef;
        if (coef.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = field_.sub(r[i + j], field_.mul(coef, b.c_[j]));
    }
    return {UPoly(field_, std::move(q)), UPoly(field_, std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UPoly r = r0.rem(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.monic();
}

std::vector<std::pair<UPoly, unsigned>> squarefree_decomposition(const UPoly& a) {
    if (a.is_zero()) fail(ErrorCode::DomainError, "square-free decomposition of zero");
    const Field& k = a.field();
    if (!k.characteristic_zero() && static_cast<std::uint64_t>(a.degree()) >= k.characteristic())
        fail(ErrorCode::Unsupported, "square-free decomposition needs characteristic above the degree");
    std::vector<std::pair<UPoly, unsigned>> out;
    const UPoly f = a.monic();
    const UPoly fp = f.derivative();
    UPoly g = gcd(f, fp);
    UPoly b = f.quo(g);
    UPoly c = fp.quo(g);
    UPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        UPoly h = gcd(b, d);
        if (h.degree() > 0) out.emplace_back(h, i);
        b = b.quo(h);
        c = d.quo(h);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

bool is_squarefree(const UPoly& a) {
    if (a.is_zero()) return false;
    return gcd(a, a.derivative()).degree() == 0;
}

} // namespace eqlab::algebra
