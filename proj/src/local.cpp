#include "relcycles/local.hpp"

#include "relcycles/error.hpp"

namespace relcycles {

LocalElem::LocalElem(UPoly numerator) : num_(std::move(numerator)), den_(UPoly::constant(Scalar::one(num_.field()))) {}

LocalElem::LocalElem(UPoly numerator, UPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (!(num_.field() == den_.field())) throw Error(ErrorKind::FieldMismatch, "local element numerator/denominator");
    if (den_.is_zero()) throw Error(ErrorKind::UnitRequired, "zero denominator");
    reduce();
}

void LocalElem::reduce() {
    if (num_.is_zero()) {
        den_ = UPoly::constant(Scalar::one(num_.field()));
        return;
    }
    if (!den_.is_constant()) {
        UPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    const Scalar d0 = den_.coeff(0);
    if (d0.is_zero())
        throw Error(ErrorKind::UnitRequired, "denominator " + den_.to_string() + " is not a unit of the local ring");
    if (!d0.is_one()) {
        const Scalar inv = d0.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

bool LocalElem::is_one() const noexcept { return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0).is_one(); }

Scalar LocalElem::at_zero() const { return num_.coeff(0); }

LocalElem LocalElem::inverse() const {
    if (!is_unit()) throw Error(ErrorKind::UnitRequired, to_string() + " has positive x-adic valuation");
    return LocalElem(den_, num_);
}

LocalElem& LocalElem::operator+=(const LocalElem& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) reduce();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

LocalElem& LocalElem::operator-=(const LocalElem& o) { return *this += -o; }

LocalElem& LocalElem::operator*=(const LocalElem& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    num_ *= o.num_;
    if (o.den_.is_constant() && den_.is_constant()) return *this;
    den_ *= o.den_;
    reduce();
    return *this;
}

LocalElem& LocalElem::operator/=(const LocalElem& o) { return *this *= o.inverse(); }

LocalElem LocalElem::operator-() const {
    LocalElem out = *this;
    out.num_ = -out.num_;
    return out;
}

LocalElem LocalElem::pow(long e) const {
    LocalElem base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    LocalElem result = one(field());
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

std::string LocalElem::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

long x_valuation(const LocalElem& a) noexcept {
    if (a.is_zero()) return kInfiniteValuation;
    return a.numerator().valuation();
}

ModulusIdeal::ModulusIdeal(long exponent) : e_(exponent) {
    if (exponent < 1) throw Error(ErrorKind::InvalidArgument, "modulus exponent must be >= 1");
}

bool in_ideal_power(const LocalElem& a, ModulusIdeal ideal, long nu) noexcept {
    const long v = x_valuation(a);
    return v == kInfiniteValuation || v >= ideal.exponent() * nu;
}

} // namespace relcycles
