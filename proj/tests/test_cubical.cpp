#include <doctest.h>

#include "relcycles/cubical.hpp"
#include "relcycles/expr.hpp"

using namespace relcycles;
using namespace relcycles::cubical;

namespace {

const Field Q = Field::rationals();

Context ctx_for(Field f, long e) { return Context{f, ModulusIdeal(e), WeightNorm::Max}; }

LocalPoly tpoly(const char* text, std::size_t arity, Field f = Q) { return to_t_poly(parse_expression(text, f), arity); }
LocalElem local(const char* text, Field f = Q) { return to_local_elem(parse_expression(text, f)); }

AdmissiblePoly adm(const char* text, std::size_t arity, long e = 2, Field f = Q) {
    return AdmissiblePoly::from_t_poly(ctx_for(f, e), tpoly(text, arity, f));
}

} // namespace

TEST_CASE("expand_basis examples") {
    const LocalPoly t = expand_basis(tpoly("t1", 1));
    CHECK(t.coeff(Monomial{}) == LocalElem::one(Q));
    CHECK(t.coeff(Monomial::unit(0)) == -LocalElem::one(Q));

    const LocalPoly one = expand_basis(tpoly("1", 2));
    CHECK(one.size() == 1);
    CHECK(one.constant_term().is_one());

    const LocalPoly tt = expand_basis(tpoly("t1*t2", 2));
    Monomial m11;
    m11[0] = m11[1] = 1;
    CHECK(tt.size() == 4);
    CHECK(tt.coeff(Monomial{}) == LocalElem::one(Q));
    CHECK(tt.coeff(Monomial::unit(0)) == -LocalElem::one(Q));
    CHECK(tt.coeff(Monomial::unit(1)) == -LocalElem::one(Q));
    CHECK(tt.coeff(m11) == LocalElem::one(Q));
}

TEST_CASE("expand_basis round trip") {
    Rng rng(5);
    const Field f = Field::prime(7);
    for (int trial = 0; trial < 50; ++trial) {
        LocalPoly p(f, 3);
        for (int k = 0; k < 5; ++k) {
            Monomial m;
            for (std::size_t i = 0; i < 3; ++i) m[i] = static_cast<std::int16_t>(rng.below(3));
            p.add_term(m, rng.local_unit(f));
        }
        CHECK(collapse_basis(expand_basis(p)) == p);
    }
}

TEST_CASE("is_admissible examples") {
    const ModulusIdeal I2(2);
    CHECK(is_admissible(expand_basis(tpoly("1 + x^2*(1-t1)", 1)), I2));
    CHECK_FALSE(is_admissible(expand_basis(tpoly("1 + x*(1-t1)", 1)), I2));
    CHECK(is_admissible(expand_basis(tpoly("1 + x^2*(1-t1)*(1-t2)", 2)), I2));
    // The sum convention demands I^2 for lambda = (1,1).
    CHECK_FALSE(is_admissible(expand_basis(tpoly("1 + x^2*(1-t1)*(1-t2)", 2)), I2, WeightNorm::Sum));
    CHECK_FALSE(is_admissible(expand_basis(tpoly("x + (1-t1)", 1)), I2));

    auto v = find_violation(expand_basis(tpoly("1 + x*(1-t1)", 1)), I2);
    REQUIRE(v.has_value());
    CHECK(v->lambda == Monomial::unit(0));
    CHECK(v->required_valuation == 2);
    CHECK_THROWS_AS(adm("1 + x*(1-t1)", 1), Error);
}

TEST_CASE("monoid_mul examples") {
    const AdmissiblePoly f = adm("1 + x^2*(1-t1)", 1);
    CHECK(f * AdmissiblePoly::one(f.context(), 1) == f);
    CHECK(f * f == adm("1 + 2*x^2*(1-t1) + x^4*(1-t1)^2", 1));

    // Frobenius over F_3: (1 + x^2 s)^3 = 1 + x^6 s^3.
    const Field F3 = Field::prime(3);
    const AdmissiblePoly g = adm("1 + x^2*(1-t1)", 1, 2, F3);
    CHECK(g * g * g == adm("1 + x^6*(1-t1)^3", 1, 2, F3));

    CHECK_THROWS_AS(f * adm("1", 2), Error);
    CHECK_THROWS_AS(f * adm("1 + x^3*(1-t1)", 1, 3), Error);
}

TEST_CASE("face examples") {
    const AdmissiblePoly f = adm("1 + x^2*(1-t1)*(1-t2)", 2);
    CHECK(face(f, 1, FaceValue::Infinity) == adm("1", 1));
    CHECK(face(f, 1, FaceValue::Zero) == adm("1 + x^2*(1-t1)", 1));
    const AdmissiblePoly g = adm("1 + x^2*(1-t1)", 1);
    const AdmissiblePoly g0 = face(g, 1, FaceValue::Zero);
    CHECK(g0.arity() == 0);
    CHECK(g0.constant() == local("1 + x^2"));
    try {
        (void)face(f, 3, FaceValue::Zero);
        FAIL("expected BadIndex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadIndex);
    }
    CHECK_THROWS_AS(face(f, 0, FaceValue::Zero), Error);
}

TEST_CASE("degeneracy examples") {
    const AdmissiblePoly f = adm("1 + x^2*(1-t1)", 1);
    CHECK(degeneracy(f, 1) == adm("1 + x^2*(1-t2)", 2));
    CHECK(degeneracy(f, 2) == adm("1 + x^2*(1-t1)", 2));
    CHECK(degeneracy(adm("1", 0), 1) == adm("1", 1));
    for (FaceValue eps : {FaceValue::Zero, FaceValue::Infinity})
        for (std::size_t i = 1; i <= 2; ++i) CHECK(face(degeneracy(f, i), i, eps) == f);
    CHECK_THROWS_AS(degeneracy(f, 3), Error);
}

TEST_CASE("involution examples") {
    const AdmissiblePoly f = adm("1 + x^2*(1-t1)", 1);
    const AdmissiblePoly inv = involution(f, 1);
    CHECK(inv.coeffs() == expand_basis(tpoly("1 + x^2 - x^2*(1-t1)", 1)));
    CHECK(involution(inv, 1) == f);
    CHECK(involution(adm("1", 1), 1) == adm("1", 1));
    // Normalized form divides by the unit 1 + x^2.
    CHECK(inv.normalized().constant().is_one());
}

TEST_CASE("mu_star examples") {
    CHECK(mu_star(adm("1 + x^2*(1-t1)", 1)) == adm("1 + x^2*(1-t1)*(1-t2)", 2));
    CHECK(mu_star(adm("1", 1)) == adm("1", 2));
    // (1-t)^2 + x^4 has a_0 = x^4, not a unit: it never becomes an AdmissiblePoly.
    try {
        (void)adm("(1-t1)^2 + x^4", 1);
        FAIL("expected NotAdmissible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAdmissible);
    }
    CHECK_THROWS_AS(mu_star(adm("1", 2)), Error);
}

TEST_CASE("boundary examples") {
    const Context ctx = ctx_for(Q, 2);
    const CubicalFraction c = CubicalFraction::of(adm("1 + x^2*(1-t1)", 1));
    const CubicalFraction b = boundary(c);
    CHECK(b.arity() == 0);
    // face(.,1,0) = 1 + x^2 is a unit of A, hence trivial modulo A^x.
    CHECK(b.is_unit());
    CHECK(boundary(CubicalFraction::unit(ctx, 3)).is_unit());
    CHECK_THROWS_AS(boundary(CubicalFraction::unit(ctx, 0)), Error);

    const CubicalFraction d = CubicalFraction::quotient(adm("1 + x^2*(1-t1)*(1-t2) + x^4*(1-t2)^2", 2),
                                                        adm("1 + x^2*(1-t2)", 2));
    CHECK_FALSE(boundary(d).is_unit());
    CHECK(boundary(boundary(d)).is_unit());
}

TEST_CASE("fraction equality is cross-multiplication modulo units") {
    const AdmissiblePoly f = adm("1 + x^2*(1-t1)", 1);
    const AdmissiblePoly g = adm("1 + x^4*(1-t1)^2", 1);
    const AdmissiblePoly h = adm("3 + x^2*(1-t1)", 1); // a_0 = 3, normalized away
    const CubicalFraction a = CubicalFraction::quotient(f * g, g);
    // f*g is expanded into a single factor; equality must still see a = f.
    CHECK(a == CubicalFraction::of(f));
    CHECK(a.factors().size() == 2);
    CHECK(CubicalFraction::quotient(h, h).is_unit());
    CHECK_FALSE(CubicalFraction::of(f) == CubicalFraction::of(g));
    CHECK((CubicalFraction::of(f) * CubicalFraction::of(g)).numerator() == f * g);
    CHECK(CubicalFraction::of(h).numerator().constant().is_one());
}

TEST_CASE("in_normalized examples") {
    const Context ctx = ctx_for(Q, 2);
    CHECK(in_normalized(CubicalFraction::unit(ctx, 2)));
    const AdmissiblePoly f = adm("1 + x^2*(1-t1)", 1);
    CHECK_FALSE(in_normalized(degeneracy(CubicalFraction::of(f), 1)));
    // Arity one: only the infinity face matters, and every normalized f has f(1) = 1.
    CHECK(in_normalized(CubicalFraction::of(f)));
    // 1 + x^2 (1-t1)(1-t2) vanishes on every infinity face but not on face(2,0).
    CHECK_FALSE(in_normalized(CubicalFraction::of(adm("1 + x^2*(1-t1)*(1-t2)", 2))));
}

TEST_CASE("generator produces admissible polynomials of the documented shape") {
    for (long e : {1L, 2L, 3L}) {
        AdmissibleGenerator gen(ctx_for(Field::prime(5), e), 77 + static_cast<std::uint64_t>(e));
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t arity = gen.rng().below(5);
            const AdmissiblePoly f = gen(arity);
            CHECK(f.arity() == arity);
            CHECK(is_admissible(f.coeffs(), ModulusIdeal(e)));
            for (const auto& [m, c] : f.coeffs().terms()) CHECK(m.sum(arity) <= 4 * 3);
        }
    }
}

TEST_CASE("structure-map properties on random elements") {
    const Field f = Field::prime(5);
    const Context ctx = ctx_for(f, 2);
    AdmissibleGenerator gen(ctx, 2024);
    for (int trial = 0; trial < 40; ++trial) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const AdmissiblePoly p = gen(n), q = gen(n);
            for (std::size_t i = 1; i <= n; ++i) {
                CHECK(involution(involution(p, i), i) == p);
                CHECK(face(involution(p, i), i, FaceValue::Zero) == face(p, i, FaceValue::Infinity));
                for (FaceValue eps : {FaceValue::Zero, FaceValue::Infinity}) {
                    CHECK(face(p * q, i, eps) == face(p, i, eps) * face(q, i, eps));
                    for (std::size_t j = i + 1; j <= n; ++j)
                        for (FaceValue del : {FaceValue::Zero, FaceValue::Infinity})
                            CHECK(face(face(p, j, del), i, eps) == face(face(p, i, eps), j - 1, del));
                }
            }
            const CubicalFraction c = CubicalFraction::quotient(p, q);
            if (n >= 2) CHECK(boundary(boundary(c)).is_unit());
        }
    }
}
