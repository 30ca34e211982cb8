#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "relcycles/scalar.hpp"

namespace relcycles {

/// Dense univariate polynomial over a Scalar field. Trailing zero
/// coefficients are never stored, so the zero polynomial has no coefficients.
class UPoly {
public:
    explicit UPoly(Field field) : field_(field) {}
    UPoly(Field field, std::vector<Scalar> coeffs);
    UPoly(Field field, std::initializer_list<long> coeffs);

    static UPoly constant(const Scalar& c);
    static UPoly monomial(const Scalar& c, std::size_t degree);
    /// The polynomial x.
    static UPoly x(Field field) { return monomial(Scalar::one(field), 1); }

    Field field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of x^i (zero past the degree).
    Scalar coeff(std::size_t i) const;
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    Scalar leading() const;
    /// x-adic valuation: index of the lowest nonzero coefficient; -1 for zero.
    long valuation() const noexcept;
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    Scalar eval(const Scalar& at) const;
    UPoly derivative() const;
    UPoly monic() const;
    /// Coefficient reversal u^deg f(1/u).
    UPoly reversed() const;
    /// f mod x^n.
    UPoly truncated(std::size_t n) const;
    UPoly shifted(std::size_t n) const;
    UPoly pow(unsigned long e) const;

    UPoly& operator+=(const UPoly& other);
    UPoly& operator-=(const UPoly& other);
    UPoly& operator*=(const UPoly& other);
    UPoly& operator*=(const Scalar& c);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Scalar& c) { return a *= c; }
    UPoly operator-() const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }
    /// Canonical order: by degree, then coefficients from the top.
    friend std::strong_ordering operator<=>(const UPoly& a, const UPoly& b);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    Field field_;
    std::vector<Scalar> coeffs_;
};

/// Euclidean division; throws UnitRequired when the divisor is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

struct ExtendedGcd {
    UPoly g, s, t; // s*a + t*b == g, g monic
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// Inverse of a modulo m; throws UnitRequired if gcd(a, m) != 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);
/// a^e mod m for any integer e (negative exponents use inverse_mod).
UPoly pow_mod(const UPoly& a, long e, const UPoly& m);

/// Multiplicity of the irreducible p in a (a != 0).
long valuation_at(const UPoly& a, const UPoly& p);

} // namespace relcycles
