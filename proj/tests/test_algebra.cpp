#include <doctest.h>

#include "relcycles/expr.hpp"
#include "relcycles/random.hpp"

using namespace relcycles;

namespace {

const Field Q = Field::rationals();

LocalElem local(const char* text, Field f = Q) { return to_local_elem(parse_expression(text, f)); }

} // namespace

TEST_CASE("scalar arithmetic is exact in both fields") {
    const Field F3 = Field::prime(3);
    CHECK(Scalar(F3, 2) + Scalar(F3, 2) == Scalar(F3, 1));
    CHECK(Scalar(F3, -1).residue() == 2);
    CHECK((Scalar(F3, 2) * Scalar(F3, 2)).is_one());
    CHECK(Scalar(Q, mpq_class(2, 4)) == Scalar(Q, mpq_class(1, 2)));
    CHECK((Scalar(Q, 3).inverse() * Scalar(Q, 3)).is_one());
    CHECK_THROWS_AS(Field::prime(9), Error);
    CHECK_THROWS_AS(Scalar(F3, 0).inverse(), Error);
}

TEST_CASE("mixed-field operands are rejected") {
    const Field F3 = Field::prime(3), F5 = Field::prime(5);
    try {
        (void)(Scalar(F3, 1) + Scalar(F5, 1));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
    CHECK_THROWS_AS((void)(LocalElem::one(F3) * LocalElem::one(Q)), Error);
}

TEST_CASE("ring_ops examples") {
    CHECK(local("1/(1+x)") * local("1+x") == LocalElem::one(Q));
    // Cross-multiplication: ((1+x)^2 + (1-x)^2) / (1-x^2).
    CHECK(local("(1+x)/(1-x)") + local("(1-x)/(1+x)") == local("(2+2*x^2)/(1-x^2)"));
    const Field F3 = Field::prime(3);
    CHECK(local("2", F3) + local("2", F3) == local("1", F3));
}

TEST_CASE("division by a non-unit raises UnitRequired") {
    try {
        (void)(LocalElem::one(Q) / local("x"));
        FAIL("expected UnitRequired");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnitRequired);
    }
    CHECK_THROWS_AS(local("1/x"), Error);
    CHECK_NOTHROW(local("x/(2-x)"));
}

TEST_CASE("local elements are stored in canonical form") {
    const LocalElem a = local("(x^2-1)/(2*x+2)");
    CHECK(a.denominator() == UPoly(Q, {1}));
    CHECK(a == local("x/2 - 1/2"));
    const LocalElem b = local("(3+3*x)/(6-6*x)");
    CHECK(b.denominator().coeff(0).is_one());
    CHECK(b == local("(1+x)/(2-2*x)"));
}

TEST_CASE("x_valuation examples") {
    CHECK(x_valuation(local("x^2*(1+x)/(2-x)")) == 2);
    CHECK(x_valuation(LocalElem::zero(Q)) == kInfiniteValuation);
    CHECK(x_valuation(local("(x^3+x^5)/(1+x)")) == 3);
}

TEST_CASE("in_ideal_power examples") {
    CHECK(in_ideal_power(local("x^2"), ModulusIdeal(2), 1));
    CHECK_FALSE(in_ideal_power(local("x"), ModulusIdeal(2), 1));
    CHECK(in_ideal_power(local("x^6/(1+x)"), ModulusIdeal(2), 3));
    CHECK(in_ideal_power(local("5"), ModulusIdeal(3), 0));
    CHECK_THROWS_AS(ModulusIdeal(0), Error);
}

TEST_CASE("evaluate substitutes 0/1 and keeps the rest symbolic") {
    auto tpoly = [](const char* text, std::size_t arity) { return to_t_poly(parse_expression(text, Q), arity); };
    CHECK(evaluate(tpoly("1 + x*(1-t1)*t2", 2), {{0, 1}}) == tpoly("1", 1));
    CHECK(evaluate(tpoly("1 + x*(1-t1)", 1), {{0, 0}}) == tpoly("1+x", 0));
    CHECK(evaluate(tpoly("(1-t1)*(1-t2)", 2), {{1, 0}}) == tpoly("1-t1", 1));
    CHECK_THROWS_AS(evaluate(tpoly("t1", 1), {{3, 0}}), Error);
}

TEST_CASE("parser reports line and column") {
    try {
        parse_expression("1 + x*\n (1 - t1) )", Q);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 11);
    }
    CHECK_THROWS_AS(parse_expression("1 + z", Q), ParseError);
    CHECK_THROWS_AS(parse_expression("t0", Q), ParseError);
    CHECK_THROWS_AS(parse_expression("1/(x-x)", Q), ParseError);
    CHECK_THROWS_AS(to_t_poly(parse_expression("t3", Q), 2), Error);
    const RationalExpr e = parse_expression(" 1 + x^2 * ( 1 - t1 ) * ( 1 - t2 ) ", Q);
    CHECK(e.num.size() == 5);
}

TEST_CASE("univariate gcd and modular inverse") {
    const Field F5 = Field::prime(5);
    const UPoly a(F5, {1, 2, 1}); // (1+x)^2
    const UPoly b(F5, {1, 1});
    CHECK(gcd(a, b) == b);
    const UPoly m(F5, {0, 0, 1}); // x^2
    const UPoly inv = inverse_mod(UPoly(F5, {3, 1}), m);
    CHECK((inv * UPoly(F5, {3, 1})) % m == UPoly(F5, {1}));
    CHECK_THROWS_AS(inverse_mod(UPoly(F5, {0, 1}), m), Error);
    CHECK(valuation_at(UPoly(F5, {1, 2, 1}), b) == 2);
}

TEST_CASE("valuation and ideal-power properties on random elements") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const Field f = Field::prime(p);
        Rng rng(1234 + p);
        for (int trial = 0; trial < 300; ++trial) {
            auto draw = [&] {
                if (rng.chance(1, 10)) return LocalElem::zero(f);
                return LocalElem::x_power(f, rng.below(4)) * rng.local_unit(f);
            };
            const LocalElem a = draw(), b = draw();
            const long va = x_valuation(a), vb = x_valuation(b);
            const long vab = x_valuation(a * b);
            if (va == kInfiniteValuation || vb == kInfiniteValuation) CHECK(vab == kInfiniteValuation);
            else CHECK(vab == va + vb);
            const long vs = x_valuation(a + b);
            CHECK(vs >= std::min(va, vb));
            if (va != vb) CHECK(vs == std::min(va, vb));
            const ModulusIdeal ideal(static_cast<long>(rng.between(1, 3)));
            const long nu = rng.between(0, 2), mu = rng.between(0, 2);
            if (in_ideal_power(a, ideal, nu) && in_ideal_power(b, ideal, mu)) CHECK(in_ideal_power(a * b, ideal, nu + mu));
        }
    }
}

TEST_CASE("evaluation commutes with products") {
    const Field f = Field::prime(5);
    Rng rng(99);
    auto random_poly = [&](std::size_t arity) {
        LocalPoly p(f, arity);
        for (int k = 0; k < 4; ++k) {
            Monomial m;
            for (std::size_t i = 0; i < arity; ++i) m[i] = static_cast<std::int16_t>(rng.below(3));
            p.add_term(m, rng.local_unit(f) * LocalElem::x_power(f, rng.below(3)));
        }
        return p;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const LocalPoly a = random_poly(3), b = random_poly(3);
        std::map<std::size_t, int> sigma;
        for (std::size_t i = 0; i < 3; ++i)
            if (rng.chance(1, 2)) sigma[i] = static_cast<int>(rng.below(2));
        CHECK(evaluate(a * b, sigma) == evaluate(a, sigma) * evaluate(b, sigma));
    }
}
