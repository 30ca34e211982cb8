#include "relcycles/weight1.hpp"

namespace relcycles::weight1 {

bool in_one_plus_ideal(const LocalElem& u, ModulusIdeal ideal) {
    return u.is_unit() && in_ideal_power(u - LocalElem::one(u.field()), ideal, 1);
}

UnitOneClass::UnitOneClass(LocalElem u, ModulusIdeal ideal) : u_(std::move(u)), ideal_(ideal) {
    if (!in_one_plus_ideal(u_, ideal_))
        throw Error(ErrorKind::PreconditionFailed, u_.to_string() + " is not in (1 + I)^x for e = " + std::to_string(ideal.exponent()));
}

namespace {

LocalPoly times_first_basis_var(const LocalPoly& p) { return p.shifted(Monomial::unit(0)); }

} // namespace

AdmissiblePoly homotopy(const AdmissiblePoly& f) {
    const AdmissiblePoly fn = f.normalized();
    const LocalPoly shifted = fn.coeffs().insert_variable(0);
    LocalPoly h = LocalPoly::one(f.field(), f.arity() + 1);
    h += times_first_basis_var(shifted - LocalPoly::one(f.field(), f.arity() + 1));
    return AdmissiblePoly::checked(f.context(), std::move(h), "homotopy");
}

CubicalFraction homotopy(const CubicalFraction& c) { return homotopy(c, LocalElem::one(c.context().field)); }

CubicalFraction homotopy(const CubicalFraction& c, const LocalElem& scale) {
    const Context& ctx = c.context();
    const std::size_t n = c.arity();
    CubicalFraction out = CubicalFraction::unit(ctx, n + 1);
    bool has_denominator = false;
    for (const auto& [f, e] : c.factors()) has_denominator |= e < 0;
    const LocalPoly fs = c.numerator().coeffs().insert_variable(0).scaled(scale);
    if (!has_denominator) {
        const LocalPoly g = LocalPoly::one(ctx.field, n + 1);
        out.absorb(AdmissiblePoly::checked(ctx, g + times_first_basis_var(fs - g), "homotopy"), 1);
        return out;
    }
    const LocalPoly gs = c.denominator().coeffs().insert_variable(0);
    out.absorb(AdmissiblePoly::checked(ctx, gs + times_first_basis_var(fs - gs), "homotopy"), 1);
    for (const auto& [f, e] : c.factors())
        if (e < 0) out.absorb(cubical::degeneracy(f, 1), e);
    return out;
}

LocalElem face_scale(const CubicalFraction& c, std::size_t i, FaceValue eps) {
    LocalElem scale = LocalElem::one(c.context().field);
    for (const auto& [f, e] : c.factors()) scale *= cubical::face(f, i, eps).constant().pow(e);
    return scale;
}

bool Eq11Report::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string Eq11Report::to_string() const {
    std::string s;
    for (const auto& c : checks) {
        s += "face(" + std::to_string(c.face) + "," + (c.eps == FaceValue::Zero ? "0" : "inf") + "): ";
        s += c.passed ? "pass\n" : "FAIL\n";
    }
    return s;
}

Eq11Report verify_eq11(const CubicalFraction& c) {
    Eq11Report report;
    const CubicalFraction h = homotopy(c);
    for (std::size_t i = 1; i <= c.arity() + 1; ++i) {
        for (FaceValue eps : {FaceValue::Zero, FaceValue::Infinity}) {
            const CubicalFraction lhs = cubical::face(h, i, eps);
            bool ok;
            if (i >= 2) ok = lhs == homotopy(cubical::face(c, i - 1, eps), face_scale(c, i - 1, eps));
            else if (eps == FaceValue::Infinity) ok = lhs.is_unit();
            else ok = lhs == c;
            report.checks.push_back({i, eps, ok});
        }
    }
    return report;
}

UnitOneClass delta(const CubicalFraction& c) {
    if (c.arity() != 1) throw Error(ErrorKind::PreconditionFailed, "delta expects an arity-one class");
    const Field field = c.context().field;
    LocalElem value = LocalElem::one(field);
    for (const auto& [f, e] : c.factors()) {
        // f(1) = a_0 and f(0) = sum of all coefficients in the (1 - t) basis.
        const LocalElem at_zero = cubical::face(f, 1, FaceValue::Zero).constant();
        const LocalElem at_one = cubical::face(f, 1, FaceValue::Infinity).constant();
        value *= (at_zero / at_one).pow(e);
    }
    if (!in_one_plus_ideal(value, c.context().ideal))
        throw Error(ErrorKind::InternalInvariantViolation, "delta = " + value.to_string() + " left (1 + I)^x");
    return UnitOneClass(std::move(value), c.context().ideal);
}

CubicalFraction unit_section(const UnitOneClass& u, const Context& ctx) {
    if (!(u.ideal() == ctx.ideal)) throw Error(ErrorKind::PreconditionFailed, "unit_section: modulus mismatch");
    LocalPoly coeffs = LocalPoly::one(ctx.field, 1);
    coeffs.add_term(Monomial::unit(0), u.value() - LocalElem::one(ctx.field));
    return CubicalFraction::of(AdmissiblePoly::from_basis(ctx, std::move(coeffs)));
}

CubicalFraction exactness_witness(const CubicalFraction& f, const CubicalFraction& g) {
    if (!(delta(f) == delta(g))) throw Error(ErrorKind::PreconditionFailed, "exactness_witness needs delta(f) = delta(g)");
    CubicalFraction w = homotopy(f) / homotopy(g);
    if (!in_normalized(w)) throw Error(ErrorKind::InternalInvariantViolation, "H(f)/H(g) is not in NP_2");
    if (!(cubical::face(w, 1, FaceValue::Zero) == f / g))
        throw Error(ErrorKind::InternalInvariantViolation, "face(H(f)/H(g), 1, 0) differs from f/g");
    return w;
}

CubicalFraction contraction_witness(const CubicalFraction& c) {
    if (c.arity() < 2) throw Error(ErrorKind::PreconditionFailed, "contraction_witness needs arity > 1");
    if (!in_normalized(c)) throw Error(ErrorKind::PreconditionFailed, "input is not in NP");
    if (!cubical::face(c, 1, FaceValue::Zero).is_unit())
        throw Error(ErrorKind::PreconditionFailed, "input is not a cycle: face(c, 1, 0) is not the unit class");
    CubicalFraction w = homotopy(c);
    if (!in_normalized(w)) throw Error(ErrorKind::InternalInvariantViolation, "H(c) is not in NP");
    if (!(cubical::face(w, 1, FaceValue::Zero) == c))
        throw Error(ErrorKind::InternalInvariantViolation, "face(H(c), 1, 0) differs from c");
    return w;
}

AdmissiblePoly balanced_factor(cubical::AdmissibleGenerator& gen) {
    const Context& ctx = gen.context();
    const Field field = ctx.field;
    Rng& rng = gen.rng();
    LocalPoly coeffs = LocalPoly::one(field, 1);
    LocalElem sum = LocalElem::zero(field);
    const long top = rng.between(2, 3);
    for (long nu = 2; nu <= top; ++nu) {
        const LocalElem a = LocalElem::x_power(field, static_cast<unsigned long>(ctx.ideal.exponent() * nu + rng.between(0, 1))) *
                            rng.local_unit(field);
        coeffs.add_term(Monomial::unit(0, static_cast<int>(nu)), a);
        sum += a;
    }
    // a_1 = -(a_2 + ...) lies in I^2 subset I, and h(0) = 1 + sum a_nu = 1.
    coeffs.add_term(Monomial::unit(0, 1), -sum);
    return AdmissiblePoly::checked(ctx, std::move(coeffs), "balanced_factor");
}

std::pair<AdmissiblePoly, AdmissiblePoly> delta_matched_pair(cubical::AdmissibleGenerator& gen) {
    AdmissiblePoly f = gen.normalized(1);
    AdmissiblePoly g = f * balanced_factor(gen);
    return {std::move(f), std::move(g)};
}

CubicalFraction random_np2_cycle(cubical::AdmissibleGenerator& gen) {
    auto [f, g] = delta_matched_pair(gen);
    const AdmissiblePoly k = gen.normalized(1);
    const CubicalFraction w1 = homotopy(CubicalFraction::of(f)) / homotopy(CubicalFraction::of(g));
    const CubicalFraction w2 = homotopy(CubicalFraction::of(f * k)) / homotopy(CubicalFraction::of(g * k));
    return w1 / w2;
}

CubicalFraction random_np3_cycle(cubical::AdmissibleGenerator& gen) {
    const CubicalFraction a = random_np2_cycle(gen);
    const CubicalFraction b = random_np2_cycle(gen);
    return homotopy(a) * homotopy(b) / homotopy(a * b);
}

} // namespace relcycles::weight1
