#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace relcycles {

/// Base field: either F_p for a prime p < 2^31, or the rationals (characteristic 0).
class Field {
public:
    static Field rationals() noexcept { return Field(0); }
    /// Throws InvalidArgument unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);

    bool is_rationals() const noexcept { return p_ == 0; }
    bool is_prime() const noexcept { return p_ != 0; }
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(Field a, Field b) noexcept { return a.p_ == b.p_; }

private:
    explicit Field(std::uint32_t p) noexcept : p_(p) {}
    std::uint32_t p_;
};

bool is_prime_number(std::uint64_t n) noexcept;

/// Exact field element. F_p values keep the canonical representative in [0, p);
/// rationals are kept in lowest terms with positive denominator.
class Scalar {
public:
    Scalar(Field field, long value);
    Scalar(Field field, const mpq_class& value);

    static Scalar zero(Field field) { return Scalar(field, 0L); }
    static Scalar one(Field field) { return Scalar(field, 1L); }

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Canonical residue; only meaningful over F_p.
    std::uint32_t residue() const;
    /// Exact rational value; only meaningful over Q.
    const mpq_class& rational() const;

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    /// Total order used for canonical term ordering (residue order over F_p,
    /// numeric order over Q). Not compatible with field operations.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void require_same_field(const Scalar& other) const;

    Field field_;
    std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace relcycles
