#include "relcycles/scalar.hpp"

#include "relcycles/error.hpp"

namespace relcycles {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::UnitRequired: return "UnitRequired";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotInG: return "NotInG";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::NoBasePoint: return "NoBasePoint";
    case ErrorKind::ResourceBound: return "ResourceBound";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Unsupported: return "Unsupported";
    }
    return "Unknown";
}

bool is_prime_number(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_number(p))
        throw Error(ErrorKind::InvalidArgument, "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field(p);
}

std::string Field::to_string() const {
    return is_rationals() ? std::string("Q") : "F_" + std::to_string(p_);
}

namespace {

std::uint32_t reduce_long(long value, std::uint32_t p) {
    long r = value % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

} // namespace

Scalar::Scalar(Field field, long value) : field_(field) {
    if (field.is_prime())
        value_ = reduce_long(value, field.characteristic());
    else
        value_ = mpq_class(value);
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
    if (field.is_rationals()) {
        mpq_class q = value;
        q.canonicalize();
        value_ = std::move(q);
        return;
    }
    const std::uint32_t p = field.characteristic();
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    if (den == 0) throw Error(ErrorKind::UnitRequired, "denominator vanishes modulo " + std::to_string(p));
    const auto n = static_cast<std::uint32_t>(num.get_ui());
    const auto d = static_cast<std::uint32_t>(den.get_ui());
    value_ = static_cast<std::uint32_t>(std::uint64_t(n) * mod_pow(d, p - 2, p) % p);
}

bool Scalar::is_zero() const noexcept {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r;
    throw Error(ErrorKind::FieldMismatch, "residue() requested for a rational scalar");
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw Error(ErrorKind::FieldMismatch, "rational() requested for a prime-field scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
    if (!(field_ == other.field_))
        throw Error(ErrorKind::FieldMismatch, field_.to_string() + " vs " + other.field_.to_string());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::UnitRequired, "inverse of zero");
    Scalar out = *this;
    if (auto* r = std::get_if<std::uint32_t>(&out.value_)) {
        const std::uint32_t p = field_.characteristic();
        *r = mod_pow(*r, p - 2, p);
    } else {
        auto& q = std::get<mpq_class>(out.value_);
        q = 1 / q;
        q.canonicalize();
    }
    return out;
}

Scalar Scalar::pow(long exponent) const {
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Scalar result = one(field_);
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    require_same_field(other);
    if (auto* r = std::get_if<std::uint32_t>(&value_)) {
        const std::uint64_t s = std::uint64_t(*r) + std::get<std::uint32_t>(other.value_);
        *r = static_cast<std::uint32_t>(s % field_.characteristic());
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    require_same_field(other);
    if (auto* r = std::get_if<std::uint32_t>(&value_)) {
        const std::uint32_t p = field_.characteristic();
        const std::uint64_t s = std::uint64_t(*r) + p - std::get<std::uint32_t>(other.value_);
        *r = static_cast<std::uint32_t>(s % p);
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    require_same_field(other);
    if (auto* r = std::get_if<std::uint32_t>(&value_)) {
        const std::uint64_t s = std::uint64_t(*r) * std::get<std::uint32_t>(other.value_);
        *r = static_cast<std::uint32_t>(s % field_.characteristic());
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    require_same_field(other);
    return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    if (auto* r = std::get_if<std::uint32_t>(&out.value_)) {
        if (*r) *r = field_.characteristic() - *r;
    } else {
        auto& q = std::get<mpq_class>(out.value_);
        q = -q;
    }
    return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    a.require_same_field(b);
    if (const auto* r = std::get_if<std::uint32_t>(&a.value_))
        return *r <=> std::get<std::uint32_t>(b.value_);
    const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

} // namespace relcycles
