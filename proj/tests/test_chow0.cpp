#include <doctest.h>

#include "relcycles/chow0.hpp"
#include "relcycles/error.hpp"
#include "relcycles/factor.hpp"

using namespace relcycles;
using namespace relcycles::chow0;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

ClosedPoint pt(long c, Field f) { return ClosedPoint::rational(Scalar(f, c)); }
ClosedPoint inf(Field f) { return ClosedPoint::infinity(f); }

RationalFunction rf(UPoly num, UPoly den) { return RationalFunction(std::move(num), std::move(den)); }
RationalFunction poly(Field f, std::initializer_list<long> c) { return RationalFunction::polynomial(UPoly(f, c)); }

// Reference order of (F_q[x]/x^n)^x / F_q^x by counting units.
long count_units_mod_power_of_x(std::uint32_t q, long n) {
    long units = 0;
    for (const UPoly& p : polynomials_up_to(Field::prime(q), n - 1))
        if (!p.coeff(0).is_zero()) ++units;
    return units / static_cast<long>(q - 1);
}

} // namespace

TEST_CASE("factorization over F_p") {
    const Field F5 = Field::prime(5);
    const UPoly f = UPoly(F5, {1, 0, 1}) * UPoly(F5, {1, 0, 1}) * UPoly(F5, {2, 1}).pow(5) * UPoly(F5, {3});
    const Factorization fac = factor(f);
    CHECK(fac.unit == Scalar(F5, 3));
    UPoly back = UPoly::constant(fac.unit);
    for (const auto& [p, e] : fac.factors) {
        CHECK(is_irreducible(p));
        back *= p.pow(static_cast<unsigned long>(e));
    }
    CHECK(back == f);
    // x^2 + 1 = (x - 2)(x - 3) over F_5.
    CHECK(factor(UPoly(F5, {1, 0, 1})).factors.size() == 2);
    CHECK(is_irreducible(UPoly(F3, {1, 0, 1})));
    CHECK(monic_irreducibles(F2, 3).size() == 2);
    CHECK(monic_irreducibles(F3, 2).size() == 3);
    CHECK(monic_irreducibles(Field::prime(7), 3).size() == 112);
    // Characteristic-p powers: (x^2 + x + 1)^4 over F_2.
    const Factorization f2 = factor(UPoly(F2, {1, 1, 1}).pow(4) * UPoly(F2, {0, 1}).pow(2));
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0] == std::make_pair(UPoly(F2, {0, 1}), 2L));
    CHECK(f2.factors[1] == std::make_pair(UPoly(F2, {1, 1, 1}), 4L));
}

TEST_CASE("factorization over Q handles rational roots only") {
    const Factorization fac = factor(UPoly(Q, {-2, 1}) * UPoly(Q, {1, 3}).pow(2) * UPoly(Q, {0, 1}));
    CHECK(fac.factors.size() == 3);
    CHECK(fac.unit == Scalar(Q, 9));
    try {
        (void)factor(UPoly(Q, {1, 0, 1}));
        FAIL("expected Unsupported");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unsupported);
    }
}

TEST_CASE("smith normal form") {
    const SmithForm s({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
    CHECK(s.rank() == 3);
    CHECK(s.invariants() == IntVector{2, 6, 12});
    const SmithForm free({{1, -1, 0}}, 3);
    CHECK(free.rank() == 1);
    CHECK(free.reduce({1, 0, 0}) == free.reduce({0, 1, 0}));
    CHECK_FALSE(free.reduce({1, 0, 0}) == free.reduce({0, 0, 1}));
    // V and V^-1 are mutually inverse.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            mpz_class acc = 0;
            for (std::size_t k = 0; k < 3; ++k) acc += s.v()[i][k] * s.v_inverse()[k][j];
            CHECK(acc == (i == j ? 1 : 0));
        }
}

TEST_CASE("principal_divisor examples") {
    const Divisor d1 = principal_divisor(poly(Q, {0, 1}));
    CHECK(d1 == Divisor::point(pt(0, Q)) - Divisor::point(inf(Q)));
    const Divisor d2 = principal_divisor(rf(UPoly(Q, {-1, 1}), UPoly(Q, {-2, 1})));
    CHECK(d2 == Divisor::point(pt(1, Q)) - Divisor::point(pt(2, Q)));
    const Divisor d3 = principal_divisor(poly(F3, {1, 0, 1}));
    CHECK(d3 == Divisor::point(ClosedPoint::finite(UPoly(F3, {1, 0, 1}))) - Divisor::point(inf(F3), 2));
    CHECK(d3.to_string() == "1*[x^2 + 1] - 2*[inf]");
    CHECK(d3.degree() == 0);
    try {
        (void)principal_divisor(poly(F3, {0}));
        FAIL("expected ZeroFunction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroFunction);
    }
}

TEST_CASE("in_G examples") {
    const Divisor d = Divisor::point(pt(0, Q), 2);
    CHECK(in_G(poly(Q, {1, 0, 1}), d));
    CHECK_FALSE(in_G(poly(Q, {1, 1}), d));
    CHECK_FALSE(in_G(rf(UPoly(Q, {-1, 1}), UPoly(Q, {-2, 1})), d));
    // At infinity: (x^2 + 1)/x^2 = 1 + u^2.
    const Divisor dinf = Divisor::point(inf(Q), 2);
    CHECK(in_G(rf(UPoly(Q, {1, 0, 1}), UPoly(Q, {0, 0, 1})), dinf));
    CHECK_FALSE(in_G(rf(UPoly(Q, {0, 1, 1}), UPoly(Q, {0, 0, 1})), dinf));
    CHECK_FALSE(in_G(poly(Q, {1, 0, 1}), dinf));
    CHECK_THROWS_AS(in_G(poly(Q, {0}), d), Error);
}

TEST_CASE("parse_divisor") {
    const Divisor d = parse_divisor("2*[0] + 1*[inf] + [x^2+1]", F3);
    CHECK(d.coefficient(pt(0, F3)) == 2);
    CHECK(d.coefficient(inf(F3)) == 1);
    CHECK(d.coefficient(ClosedPoint::finite(UPoly(F3, {1, 0, 1}))) == 1);
    CHECK(d.degree() == 5);
    CHECK(parse_divisor("3*[2]", F3) == Divisor::point(pt(2, F3), 3));
    CHECK_THROWS_AS(parse_divisor("2*[x^2-1]", F3), Error);
    CHECK_THROWS_AS(parse_divisor("2[0]", F3), ParseError);
    CHECK_THROWS_AS(parse_divisor("", F3), ParseError);
    const Divisor signed_d = parse_divisor("-[1] + 2*[inf] - 3*[x^2+1]", F3);
    CHECK(signed_d.coefficient(pt(1, F3)) == -1);
    CHECK(signed_d.degree() == -5);
    CHECK(parse_divisor(signed_d.to_string(), F3) == signed_d);
    CHECK_THROWS_AS(parse_divisor("[0] -", F3), ParseError);
}

TEST_CASE("chow_class examples") {
    const Divisor d = Divisor::point(pt(0, F3), 2);
    const ChowClass zero = chow_class(Divisor(F3), d);
    CHECK(zero.degree == 0);
    CHECK(zero.residue.is_trivial());

    // (x - 1)/(x - 2) mod x^2 = 2 + 2x, which is 1 + x up to F_3^x.
    const Divisor alpha = Divisor::point(pt(1, F3)) - Divisor::point(pt(2, F3));
    const ChowClass c = chow_class(alpha, d, inf(F3));
    CHECK(c.degree == 0);
    CHECK_FALSE(c.residue.is_trivial());
    REQUIRE(c.residue.components().size() == 1);
    CHECK(c.residue.components()[0].value == UPoly(F3, {1, 1}));

    CHECK_FALSE(equal_in_chow(Divisor::point(pt(1, F3)), Divisor::point(pt(2, F3)), d));
    CHECK(equal_in_chow(alpha, alpha, d));
    CHECK_THROWS_AS(chow_class(Divisor::point(pt(0, F3)), d), Error);

    // Every degree-1 point of P^1(F_2) on the modulus.
    const Divisor full = Divisor::point(pt(0, F2)) + Divisor::point(pt(1, F2)) + Divisor::point(inf(F2));
    try {
        (void)chow_class(Divisor(F2), full);
        FAIL("expected NoBasePoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoBasePoint);
    }
}

TEST_CASE("group_order examples") {
    CHECK(group_order(Divisor::point(pt(0, F3), 2), 3) == 3);
    CHECK(group_order(Divisor::point(pt(0, F2), 3), 2) == 4);
    CHECK(group_order(Divisor::point(pt(0, F3)) + Divisor::point(inf(F3)), 3) == 2);
    CHECK(group_order(Divisor::point(ClosedPoint::finite(UPoly(F3, {1, 0, 1}))), 3) == 4);
    for (std::uint32_t q : {2u, 3u, 5u})
        for (long n = 1; n <= 3; ++n) CHECK(group_order(Divisor::point(pt(0, Field::prime(q)), n), q) == count_units_mod_power_of_x(q, n));
}

TEST_CASE("brute_force_chow examples") {
    const ChowOracle o1 = brute_force_chow(Divisor::point(pt(0, F3), 2), 3, 3);
    CHECK(o1.free_rank() == 1);
    CHECK(o1.order() == 3);

    const Divisor d2 = Divisor::point(pt(0, F2), 3);
    const ChowOracle o2 = brute_force_chow(d2, 2, 3);
    CHECK(o2.order() == 4);
    REQUIRE(o2.invariant_factors().size() == 1);
    CHECK(o2.invariant_factors()[0] == 4);
    // [1] - [inf] generates: its square is nontrivial.
    const Divisor w = Divisor::point(pt(1, F2)) - Divisor::point(inf(F2));
    CHECK_FALSE(chow_class(w.scaled(2), d2).residue.is_trivial());
    CHECK(chow_class(w.scaled(4), d2).residue.is_trivial());
    CHECK_FALSE(o2.classify(w.scaled(2)) == o2.classify(Divisor(F2)));

    const ChowOracle o3 = brute_force_chow(Divisor::point(pt(0, F3)) + Divisor::point(inf(F3)), 3, 3);
    CHECK(o3.order() == 2);

    CHECK_THROWS_AS(brute_force_chow(d2, 2, 5), Error);
    CHECK_THROWS_AS(brute_force_chow(d2, 4, 3), Error);
    CHECK_THROWS_AS(brute_force_chow(d2, 11, 3), Error);
}

TEST_CASE("oracle agreement on the configured moduli") {
    const std::vector<std::pair<std::uint32_t, std::string>> configs = {
        {2, "2*[0]"}, {2, "3*[0]"}, {3, "2*[0]"}, {3, "[0]+[inf]"}, {3, "2*[0]+[inf]"}, {3, "[x^2+1]"}};
    for (const auto& [q, text] : configs) {
        CAPTURE(text);
        const Divisor d = parse_divisor(text, Field::prime(q));
        const ChowOracle o = brute_force_chow(d, q, 3);
        CHECK(o.free_rank() == 1);
        CHECK(o.order() == group_order(d, q));
        const SeparationReport rep = check_separation(o, d, 3);
        CHECK(rep.consistent);
        CHECK(rep.oracle_classes == rep.invariant_classes);
        CHECK(mpz_class(static_cast<unsigned long>(rep.oracle_classes)) == o.order());
        for (const Divisor& g : o.generators()) CHECK(g.degree() == 0);
    }
}

TEST_CASE("chow_class is a homomorphism and base-point independent in degree 0") {
    const Divisor d = parse_divisor("2*[0]+[inf]", F3);
    const std::vector<ClosedPoint> pts = points_off(d, 2);
    Rng rng(17);
    auto random_cycle = [&] {
        Divisor a(F3);
        for (int k = 0; k < 4; ++k) a.add(pts[rng.below(pts.size())], rng.between(-2, 2));
        return a;
    };
    for (int trial = 0; trial < 100; ++trial) {
        const Divisor a = random_cycle(), b = random_cycle();
        const ChowClass ca = chow_class(a, d), cb = chow_class(b, d), cab = chow_class(a + b, d);
        CHECK(cab.degree == ca.degree + cb.degree);
        CHECK(cab.residue == ca.residue * cb.residue);
        Divisor z = a;
        z.add(pt(1, F3), -a.degree());
        CHECK(chow_class(z, d, pt(1, F3)).residue == chow_class(z, d, pt(2, F3)).residue);
    }
}

TEST_CASE("relation soundness for random elements of G") {
    for (const char* text : {"2*[0]", "3*[0]", "[0]+[inf]", "2*[0]+[inf]", "[x^2+1]"}) {
        for (std::uint32_t q : {2u, 3u, 5u}) {
            const Field f = Field::prime(q);
            if (q == 2 && std::string(text) == "[x^2+1]") continue;
            if (q == 5 && std::string(text) == "[x^2+1]") continue; // reducible over F_5
            const Divisor d = parse_divisor(text, f);
            Rng rng(1000 + q);
            for (int trial = 0; trial < 40; ++trial) {
                const RationalFunction g = random_G_element(d, rng);
                REQUIRE(in_G(g, d));
                const ChowClass c = chow_class(principal_divisor(g), d);
                CHECK(c.degree == 0);
                CHECK(c.residue.is_trivial());
            }
        }
    }
}

TEST_CASE("norm and graph constructions") {
    const Divisor d = Divisor::point(pt(0, Q), 2);
    // (1-y)^2 + x^2 (1-y) + x^4: norm 1 + x^2 + x^4.
    const CurveCycle f({RationalFunction::one(Q), poly(Q, {0, 0, 1}), poly(Q, {0, 0, 0, 0, 1})}, d);
    CHECK(norm_of_coordinate(f) == poly(Q, {1, 0, 1, 0, 1}));
    CHECK_THROWS_AS(CurveCycle({RationalFunction::one(Q), poly(Q, {0, 1})}, d), Error);
    CHECK_THROWS_AS(CurveCycle({RationalFunction::one(Q), poly(Q, {0, 0, 1}), poly(Q, {0, 0, 0, 1})}, d), Error);

    const CurveCycle g1 = graph_cycle(RationalFunction::one(Q), d);
    CHECK(g1.coeffs()[1].is_zero());
    CHECK(cycle_boundary(g1).is_zero());
    const CurveCycle g2 = graph_cycle(poly(Q, {1, 0, 1}), d);
    CHECK(g2.coeffs()[1] == poly(Q, {0, 0, 1}));
    try {
        (void)graph_cycle(poly(Q, {1, 1}), d);
        FAIL("expected NotInG");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInG);
    }

    Rng rng(55);
    const Divisor d3 = parse_divisor("3*[0]", F3);
    for (int trial = 0; trial < 50; ++trial) {
        const RationalFunction g = random_G_element(d3, rng);
        CHECK(norm_of_coordinate(graph_cycle(g, d3)) == g);
    }
}

TEST_CASE("boundary of div f equals the divisor of its norm") {
    for (const char* text : {"2*[0]", "3*[0]", "[0]+[inf]"}) {
        for (std::uint32_t q : {3u, 5u, 7u}) {
            const Divisor d = parse_divisor(text, Field::prime(q));
            Rng rng(q * 7 + 3);
            for (int trial = 0; trial < 20; ++trial) {
                const CurveCycle f = random_curve_cycle(d, rng);
                const RationalFunction n = norm_of_coordinate(f);
                CHECK(in_G(n, d));
                const Divisor boundary = cycle_boundary(f);
                CHECK_MESSAGE(principal_divisor(n) == boundary, f.to_string());
                CHECK_FALSE(boundary.meets(d));
            }
        }
    }
}
