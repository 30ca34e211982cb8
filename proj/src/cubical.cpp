#include "relcycles/cubical.hpp"

#include <sstream>

namespace relcycles::cubical {

int weight(const Monomial& lambda, std::size_t arity, WeightNorm norm) {
    return norm == WeightNorm::Max ? lambda.max_entry(arity) : lambda.sum(arity);
}

namespace {

long binomial(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Substitutes v -> 1 - v for every variable v listed in `vars`.
LocalPoly one_minus(const LocalPoly& f, const std::vector<std::size_t>& vars) {
    const Field field = f.field();
    LocalPoly out(field, f.nvars());
    for (const auto& [m, c] : f.terms()) {
        // Expand prod_{v in vars} (1 - s_v)^{m_v} term by term.
        std::vector<std::pair<Monomial, long>> partial{{m, 1}};
        for (std::size_t v : vars) {
            std::vector<std::pair<Monomial, long>> next;
            for (const auto& [pm, pc] : partial) {
                const long a = pm[v];
                for (long k = 0; k <= a; ++k) {
                    Monomial nm = pm;
                    nm[v] = static_cast<std::int16_t>(k);
                    next.emplace_back(nm, pc * binomial(a, k) * ((k % 2) ? -1 : 1));
                }
            }
            partial = std::move(next);
        }
        for (const auto& [pm, pc] : partial) out.add_term(pm, c * LocalElem(Scalar(field, pc)));
    }
    return out;
}

std::vector<std::size_t> all_vars(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

void check_index(std::size_t i, std::size_t n, const char* what) {
    if (i < 1 || i > n)
        throw Error(ErrorKind::BadIndex, std::string(what) + " index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

std::string lambda_string(const Monomial& m, std::size_t arity) {
    std::string s = "(";
    for (std::size_t i = 0; i < arity; ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

} // namespace

LocalPoly expand_basis(const LocalPoly& f_in_t) { return one_minus(f_in_t, all_vars(f_in_t.nvars())); }
LocalPoly collapse_basis(const LocalPoly& f_in_basis) { return one_minus(f_in_basis, all_vars(f_in_basis.nvars())); }

std::optional<AdmissibilityViolation> find_violation(const LocalPoly& coeffs, ModulusIdeal ideal, WeightNorm norm) {
    const LocalElem a0 = coeffs.constant_term();
    if (!a0.is_unit()) return AdmissibilityViolation{Monomial{}, a0, 0};
    for (const auto& [lambda, c] : coeffs.terms()) {
        const int w = weight(lambda, coeffs.nvars(), norm);
        if (w == 0) continue;
        if (!in_ideal_power(c, ideal, w)) return AdmissibilityViolation{lambda, c, ideal.exponent() * w};
    }
    return std::nullopt;
}

bool is_admissible(const LocalPoly& coeffs, ModulusIdeal ideal, WeightNorm norm) {
    return !find_violation(coeffs, ideal, norm).has_value();
}

AdmissiblePoly AdmissiblePoly::from_basis(const Context& ctx, LocalPoly coeffs) {
    if (!(coeffs.field() == ctx.field)) throw Error(ErrorKind::FieldMismatch, "coefficients over " + coeffs.field().to_string());
    if (auto v = find_violation(coeffs, ctx.ideal, ctx.norm)) {
        std::string msg = v->required_valuation == 0
                              ? "a_0 = " + v->coeff.to_string() + " is not a unit"
                              : "a_" + lambda_string(v->lambda, coeffs.nvars()) + " = " + v->coeff.to_string() +
                                    " needs x-adic valuation >= " + std::to_string(v->required_valuation);
        throw Error(ErrorKind::NotAdmissible, msg);
    }
    return AdmissiblePoly(ctx, std::move(coeffs));
}

AdmissiblePoly AdmissiblePoly::from_t_poly(const Context& ctx, const LocalPoly& f_in_t) {
    return from_basis(ctx, expand_basis(f_in_t));
}

AdmissiblePoly AdmissiblePoly::one(const Context& ctx, std::size_t arity) {
    return AdmissiblePoly(ctx, LocalPoly::one(ctx.field, arity));
}

AdmissiblePoly AdmissiblePoly::checked(const Context& ctx, LocalPoly coeffs, const char* origin) {
    if (auto v = find_violation(coeffs, ctx.ideal, ctx.norm))
        throw Error(ErrorKind::InternalInvariantViolation,
                    std::string(origin) + " produced a non-admissible coefficient a_" +
                        lambda_string(v->lambda, coeffs.nvars()) + " = " + v->coeff.to_string());
    return AdmissiblePoly(ctx, std::move(coeffs));
}

AdmissiblePoly AdmissiblePoly::normalized() const {
    const LocalElem a0 = constant();
    if (a0.is_one()) return *this;
    return AdmissiblePoly(ctx_, coeffs_.scaled(a0.inverse()));
}

std::string AdmissiblePoly::to_string() const {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= arity(); ++i) names.push_back("(1-t" + std::to_string(i) + ")");
    return coeffs_.to_string(names);
}

std::string AdmissiblePoly::coefficient_lines() const {
    std::ostringstream os;
    for (const auto& [m, c] : coeffs_.terms()) os << "lambda=" << lambda_string(m, arity()) << ": " << c.to_string() << "\n";
    return os.str();
}

AdmissiblePoly monoid_mul(const AdmissiblePoly& f, const AdmissiblePoly& g) {
    if (!(f.context() == g.context())) throw Error(ErrorKind::PreconditionFailed, "monoid_mul over different moduli");
    if (f.arity() != g.arity()) throw Error(ErrorKind::PreconditionFailed, "monoid_mul of different arities");
    return AdmissiblePoly::checked(f.context(), f.coeffs() * g.coeffs(), "monoid_mul");
}

AdmissiblePoly face(const AdmissiblePoly& f, std::size_t i, FaceValue eps) {
    check_index(i, f.arity(), "face");
    // t_i = 0 <=> (1 - t_i) = 1; t_i = 1 <=> (1 - t_i) = 0.
    const LocalElem value = eps == FaceValue::Zero ? LocalElem::one(f.field()) : LocalElem::zero(f.field());
    return AdmissiblePoly::checked(f.context(), f.coeffs().substitute_and_drop(i - 1, value), "face");
}

AdmissiblePoly degeneracy(const AdmissiblePoly& f, std::size_t i) {
    check_index(i, f.arity() + 1, "degeneracy");
    return AdmissiblePoly::checked(f.context(), f.coeffs().insert_variable(i - 1), "degeneracy");
}

AdmissiblePoly involution(const AdmissiblePoly& f, std::size_t i) {
    check_index(i, f.arity(), "involution");
    return AdmissiblePoly::checked(f.context(), one_minus(f.coeffs(), {i - 1}), "involution");
}

AdmissiblePoly mu_star(const AdmissiblePoly& f) {
    if (f.arity() != 1) throw Error(ErrorKind::PreconditionFailed, "mu_star expects arity 1");
    LocalPoly out(f.field(), 2);
    for (const auto& [m, c] : f.coeffs().terms()) {
        Monomial n;
        n[0] = n[1] = m[0];
        out.add_term(n, c);
    }
    return AdmissiblePoly::checked(f.context(), std::move(out), "mu_star");
}

// ---------------------------------------------------------------------------

CubicalFraction CubicalFraction::unit(const Context& ctx, std::size_t arity) { return CubicalFraction(ctx, arity); }

CubicalFraction CubicalFraction::of(const AdmissiblePoly& f) {
    CubicalFraction c(f.context(), f.arity());
    c.absorb(f, 1);
    return c;
}

CubicalFraction CubicalFraction::quotient(const AdmissiblePoly& num, const AdmissiblePoly& den) {
    if (num.arity() != den.arity()) throw Error(ErrorKind::PreconditionFailed, "quotient of different arities");
    CubicalFraction c(num.context(), num.arity());
    c.absorb(num, 1);
    c.absorb(den, -1);
    return c;
}

void CubicalFraction::absorb(const AdmissiblePoly& f, int exponent) {
    if (!(f.context() == ctx_) || f.arity() != arity_)
        throw Error(ErrorKind::PreconditionFailed, "factor does not belong to P^gr of this arity and modulus");
    if (exponent == 0) return;
    AdmissiblePoly g = f.normalized();
    if (g.is_one()) return;
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
        if (it->first == g) {
            it->second += exponent;
            if (it->second == 0) factors_.erase(it);
            return;
        }
    }
    factors_.emplace_back(std::move(g), exponent);
}

AdmissiblePoly CubicalFraction::numerator() const {
    AdmissiblePoly acc = AdmissiblePoly::one(ctx_, arity_);
    for (const auto& [f, e] : factors_)
        for (int k = 0; k < e; ++k) acc = acc * f;
    return acc;
}

AdmissiblePoly CubicalFraction::denominator() const {
    AdmissiblePoly acc = AdmissiblePoly::one(ctx_, arity_);
    for (const auto& [f, e] : factors_)
        for (int k = 0; k < -e; ++k) acc = acc * f;
    return acc;
}

bool CubicalFraction::is_unit() const {
    if (factors_.empty()) return true;
    bool has_num = false, has_den = false;
    for (const auto& [f, e] : factors_) (e > 0 ? has_num : has_den) = true;
    // A nontrivial normalized polynomial is never a unit, so a one-sided
    // product cannot be the unit class.
    if (!has_num || !has_den) return false;
    return numerator() == denominator();
}

CubicalFraction CubicalFraction::inverse() const {
    CubicalFraction out = *this;
    for (auto& f : out.factors_) f.second = -f.second;
    return out;
}

CubicalFraction CubicalFraction::pow(int e) const {
    CubicalFraction out(ctx_, arity_);
    if (e == 0) return out;
    out.factors_ = factors_;
    for (auto& f : out.factors_) f.second *= e;
    return out;
}

CubicalFraction& CubicalFraction::operator*=(const CubicalFraction& o) {
    if (!(o.ctx_ == ctx_) || o.arity_ != arity_) throw Error(ErrorKind::PreconditionFailed, "product of incompatible fractions");
    for (const auto& [f, e] : o.factors_) absorb(f, e);
    return *this;
}

std::string CubicalFraction::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [f, e] : factors_) {
        if (!s.empty()) s += " * ";
        s += "[" + f.to_string() + "]";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

template <class Map>
CubicalFraction map_factors(const CubicalFraction& c, std::size_t new_arity, Map&& map) {
    CubicalFraction out = CubicalFraction::unit(c.context(), new_arity);
    for (const auto& [f, e] : c.factors()) out.absorb(map(f), e);
    return out;
}

} // namespace

CubicalFraction face(const CubicalFraction& c, std::size_t i, FaceValue eps) {
    check_index(i, c.arity(), "face");
    return map_factors(c, c.arity() - 1, [&](const AdmissiblePoly& f) { return face(f, i, eps); });
}

CubicalFraction degeneracy(const CubicalFraction& c, std::size_t i) {
    check_index(i, c.arity() + 1, "degeneracy");
    return map_factors(c, c.arity() + 1, [&](const AdmissiblePoly& f) { return degeneracy(f, i); });
}

CubicalFraction involution(const CubicalFraction& c, std::size_t i) {
    check_index(i, c.arity(), "involution");
    return map_factors(c, c.arity(), [&](const AdmissiblePoly& f) { return involution(f, i); });
}

CubicalFraction mu_star(const CubicalFraction& c) {
    if (c.arity() != 1) throw Error(ErrorKind::PreconditionFailed, "mu_star expects arity 1");
    return map_factors(c, 2, [](const AdmissiblePoly& f) { return mu_star(f); });
}

CubicalFraction boundary(const CubicalFraction& c) {
    if (c.arity() < 1) throw Error(ErrorKind::PreconditionFailed, "boundary of an arity-0 element");
    CubicalFraction out = CubicalFraction::unit(c.context(), c.arity() - 1);
    for (std::size_t i = 1; i <= c.arity(); ++i) {
        const CubicalFraction term = face(c, i, FaceValue::Infinity) / face(c, i, FaceValue::Zero);
        out *= (i % 2 == 0) ? term : term.inverse();
    }
    return out;
}

bool in_normalized(const CubicalFraction& c) {
    for (std::size_t i = 1; i <= c.arity(); ++i) {
        if (!face(c, i, FaceValue::Infinity).is_unit()) return false;
        if (i >= 2 && !face(c, i, FaceValue::Zero).is_unit()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

AdmissiblePoly AdmissibleGenerator::operator()(std::size_t arity, int max_total_degree, int max_terms) {
    const Field f = ctx_.field;
    LocalPoly coeffs(f, arity);
    coeffs.add_term(Monomial{}, rng_.local_unit(f));
    if (arity > 0) {
        const long terms = rng_.between(0, max_terms);
        for (long k = 0; k < terms; ++k) {
            Monomial lambda;
            const long total = rng_.between(1, max_total_degree);
            for (long d = 0; d < total; ++d) ++lambda[rng_.below(arity)];
            const int w = weight(lambda, arity, ctx_.norm);
            const long j = rng_.between(0, 2);
            const LocalElem c = LocalElem::x_power(f, static_cast<unsigned long>(ctx_.ideal.exponent() * w + j)) * rng_.local_unit(f);
            coeffs.add_term(lambda, c);
        }
    }
    return AdmissiblePoly::checked(ctx_, std::move(coeffs), "AdmissibleGenerator");
}

LocalElem AdmissibleGenerator::one_unit() {
    const Field f = ctx_.field;
    if (rng_.chance(1, 8)) return LocalElem::one(f);
    const long j = rng_.between(0, 2);
    return LocalElem::one(f) + LocalElem::x_power(f, static_cast<unsigned long>(ctx_.ideal.exponent() + j)) * rng_.local_unit(f);
}

} // namespace relcycles::cubical
