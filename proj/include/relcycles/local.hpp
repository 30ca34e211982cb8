#pragma once

#include <limits>
#include <string>

#include "relcycles/upoly.hpp"

namespace relcycles {

/// x-adic valuation; kInfiniteValuation stands for +infinity (the zero element).
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// Element of A = k[x] localized at (x): numerator/denominator with the
/// denominator not divisible by x. Stored reduced with denominator(0) == 1,
/// so equality is syntactic.
class LocalElem {
public:
    explicit LocalElem(Field field) : num_(field), den_(UPoly::constant(Scalar::one(field))) {}
    explicit LocalElem(UPoly numerator);
    explicit LocalElem(const Scalar& c) : LocalElem(UPoly::constant(c)) {}
    /// Throws UnitRequired if the reduced denominator vanishes at x = 0.
    LocalElem(UPoly numerator, UPoly denominator);

    static LocalElem zero(Field f) { return LocalElem(f); }
    static LocalElem one(Field f) { return LocalElem(Scalar::one(f)); }
    static LocalElem x_power(Field f, unsigned long k) { return LocalElem(UPoly::monomial(Scalar::one(f), k)); }

    Field field() const noexcept { return num_.field(); }
    const UPoly& numerator() const noexcept { return num_; }
    const UPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept;
    bool is_unit() const noexcept { return !num_.is_zero() && !num_.coeff(0).is_zero(); }
    /// Value at x = 0 (the residue in A/(x) = k).
    Scalar at_zero() const;

    LocalElem inverse() const;

    LocalElem& operator+=(const LocalElem& o);
    LocalElem& operator-=(const LocalElem& o);
    LocalElem& operator*=(const LocalElem& o);
    LocalElem& operator/=(const LocalElem& o);
    friend LocalElem operator+(LocalElem a, const LocalElem& b) { return a += b; }
    friend LocalElem operator-(LocalElem a, const LocalElem& b) { return a -= b; }
    friend LocalElem operator*(LocalElem a, const LocalElem& b) { return a *= b; }
    friend LocalElem operator/(LocalElem a, const LocalElem& b) { return a /= b; }
    LocalElem operator-() const;
    LocalElem pow(long e) const;

    friend bool operator==(const LocalElem& a, const LocalElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const;

private:
    void reduce();
    UPoly num_;
    UPoly den_;
};

/// +infinity (kInfiniteValuation) for zero.
long x_valuation(const LocalElem& a) noexcept;

/// The ideal I = (x^e) of A, e >= 1.
class ModulusIdeal {
public:
    explicit ModulusIdeal(long exponent);
    long exponent() const noexcept { return e_; }
    friend bool operator==(ModulusIdeal a, ModulusIdeal b) noexcept { return a.e_ == b.e_; }

private:
    long e_;
};

/// a in I^nu, i.e. x_valuation(a) >= e * nu.
bool in_ideal_power(const LocalElem& a, ModulusIdeal ideal, long nu) noexcept;

} // namespace relcycles
