#ifndef EQLAB_FIELD_HPP
#define EQLAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace eqlab::algebra {

/// Element of a coefficient field. The representation is a coefficient
/// vector in powers of the field generator (length <= 1 for the rationals
/// and prime fields), trimmed so the zero element is empty. Arithmetic goes
/// through the owning Field.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(std::vector<mpq_class> coeffs);

    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

    /// True when the element lies in the prime subfield.
    bool is_base() const noexcept { return c_.size() <= 1; }
    /// Prime-subfield value; only meaningful when is_base().
    mpq_class base_value() const { return c_.empty() ? mpq_class(0) : c_[0]; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);

private:
    std::vector<mpq_class> c_;
};

enum class FieldKind { Rational, Prime, Extension };

/// Runtime descriptor of a coefficient field: the rationals, a prime field
/// GF(p), or a simple extension Q[t]/(m(t)) with m monic irreducible.
/// Cheap to copy; equality is structural.
class Field {
public:
    static Field rationals();
    static Field prime(std::uint64_t p);
    /// `modulus` lists coefficients from the constant term upward. A
    /// non-monic modulus is scaled to be monic. Irreducibility is checked
    /// for degree <= 3 and trusted above that.
    static Field extension(std::vector<mpq_class> modulus, std::string generator = "t");
    /// Accepts "q", "gf(p)" and "q[t]/(m(t))".
    static Field parse(std::string_view descriptor);

    FieldKind kind() const noexcept;
    bool is_rational() const noexcept { return kind() == FieldKind::Rational; }
    bool characteristic_zero() const noexcept { return kind() != FieldKind::Prime; }
    std::uint64_t characteristic() const noexcept;
    /// Degree over the prime subfield.
    std::size_t degree() const noexcept;
    const std::vector<mpq_class>& modulus() const noexcept;
    const std::string& generator_name() const noexcept;
    std::string descriptor() const;

    Scalar zero() const { return {}; }
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_rational(const mpq_class& q) const;
    /// Generator t of an extension field.
    Scalar generator() const;
    /// Reinterprets a low-to-high coefficient list in t as a field element.
    Scalar from_coeffs(std::vector<mpq_class> coeffs) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    Scalar pow(Scalar a, unsigned long e) const;

    bool is_one(const Scalar& a) const;
    std::string format(const Scalar& a) const;

    friend bool operator==(const Field& a, const Field& b);
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Deterministic primality check for 64-bit values.
bool is_prime_u64(std::uint64_t n);

} // namespace eqlab::algebra

#endif
