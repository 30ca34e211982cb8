#include "relcycles/upoly.hpp"

#include <sstream>

#include "relcycles/error.hpp"

namespace relcycles {

UPoly::UPoly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, "coefficient over " + c.field().to_string());
    trim();
}

UPoly::UPoly(Field field, std::initializer_list<long> coeffs) : field_(field) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(field, c);
    trim();
}

UPoly UPoly::constant(const Scalar& c) { return UPoly(c.field(), std::vector<Scalar>{c}); }

UPoly UPoly::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar::zero(c.field()));
    v[degree] = c;
    return UPoly(c.field(), std::move(v));
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_); }

Scalar UPoly::leading() const { return is_zero() ? Scalar::zero(field_) : coeffs_.back(); }

long UPoly::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<long>(i);
    return -1;
}

Scalar UPoly::eval(const Scalar& at) const {
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Scalar(field_, static_cast<long>(i)));
    return UPoly(field_, std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UPoly UPoly::reversed() const { return UPoly(field_, std::vector<Scalar>(coeffs_.rbegin(), coeffs_.rend())); }

UPoly UPoly::truncated(std::size_t n) const {
    if (coeffs_.size() <= n) return *this;
    return UPoly(field_, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n)));
}

UPoly UPoly::shifted(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<Scalar> v(n, Scalar::zero(field_));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return UPoly(field_, std::move(v));
}

UPoly UPoly::pow(unsigned long e) const {
    UPoly result = constant(Scalar::one(field_));
    UPoly base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

UPoly& UPoly::operator+=(const UPoly& other) {
    if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "polynomial sum");
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& other) {
    if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "polynomial difference");
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar::zero(field_));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "polynomial product");
    if (a.is_zero() || b.is_zero()) return UPoly(a.field_);
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(a.field_, std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& other) { return *this = *this * other; }

UPoly& UPoly::operator*=(const Scalar& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly out = *this;
    for (auto& v : out.coeffs_) v = -v;
    return out;
}

std::strong_ordering operator<=>(const UPoly& a, const UPoly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;)
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        if (i == 0) {
            os << cs;
            continue;
        }
        if (cs != "1") os << cs << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::UnitRequired, "polynomial division by zero");
    const Field f = a.field();
    if (a.degree() < b.degree()) return {UPoly(f), a};
    std::vector<Scalar> rem = a.coeffs();
    std::vector<Scalar> quot(a.coeffs().size() - b.coeffs().size() + 1, Scalar::zero(f));
    const Scalar lead_inv = b.leading().inverse();
    const std::size_t db = b.coeffs().size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Scalar q = rem[k + db] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.coeffs()[j];
    }
    rem.erase(rem.begin() + static_cast<long>(db), rem.end());
    return {UPoly(f, std::move(quot)), UPoly(f, std::move(rem))};
}

UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UPoly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b) {
    const Field f = a.field();
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(Scalar::one(f)), s1(f);
    UPoly t0(f), t1 = UPoly::constant(Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UPoly s2 = s0 - q * s1;
        UPoly t2 = t0 - q * t1;
        r0 = std::move(r1), r1 = std::move(r2);
        s0 = std::move(s1), s1 = std::move(s2);
        t0 = std::move(t1), t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Scalar inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    auto eg = extended_gcd(a % m, m);
    if (eg.g.degree() != 0) throw Error(ErrorKind::UnitRequired, a.to_string() + " is not invertible modulo " + m.to_string());
    return eg.s % m;
}

UPoly pow_mod(const UPoly& a, long e, const UPoly& m) {
    UPoly base = e < 0 ? inverse_mod(a, m) : a % m;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    UPoly result = UPoly::constant(Scalar::one(a.field())) % m;
    while (k) {
        if (k & 1) result = (result * base) % m;
        k >>= 1;
        if (k) base = (base * base) % m;
    }
    return result;
}

long valuation_at(const UPoly& a, const UPoly& p) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroFunction, "valuation of zero");
    long v = 0;
    UPoly cur = a;
    for (;;) {
        auto [q, r] = divmod(cur, p);
        if (!r.is_zero()) return v;
        cur = std::move(q);
        ++v;
    }
}

} // namespace relcycles
