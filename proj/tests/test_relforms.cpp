#include <doctest.h>

#include "relcycles/error.hpp"
#include "relcycles/relforms.hpp"

using namespace relcycles;
using namespace relcycles::relforms;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

SparsePoly mono(const Ambient& amb, std::vector<int> e, long c = 1) { return LogForm::monomial(amb, e, Scalar(amb.field, c)); }
LogForm fn(const Ambient& amb, const SparsePoly& c) { return LogForm::function(amb, c); }

// x (log, D = 2{x=0}), y (plain), s (log, F).
Ambient xys(Field f = Q) { return Ambient::make(f, 3, {2, 0, 0}, {false, false, true}, {"x", "y", "s"}); }

} // namespace

TEST_CASE("wedge: nilpotence, anticommutativity, products") {
    const Ambient amb = xys();
    const LogForm dlx = LogForm::dlog(amb, 0), dy = LogForm::dx(amb, 1);
    CHECK(wedge(dlx, dlx).is_zero());
    CHECK(wedge(dlx, dy) == -wedge(dy, dlx));
    LogForm expect(amb);
    expect.add_term(0b011, mono(amb, {1, 0, 0}));
    CHECK(wedge(dlx.times(mono(amb, {1, 0, 0})), dy) == expect);
    CHECK(LogForm::dx(amb, 0) == dlx.times(mono(amb, {1, 0, 0})));
}

TEST_CASE("ext_d examples and d∘d = 0") {
    const Ambient amb = xys();
    CHECK(ext_d(fn(amb, mono(amb, {2, 0, 0}))) == LogForm::dlog(amb, 0).times(mono(amb, {2, 0, 0}, 2)));
    CHECK(ext_d(fn(amb, mono(amb, {2, 0, 0}))) == LogForm::dx(amb, 0).times(mono(amb, {1, 0, 0}, 2)));
    CHECK(ext_d(LogForm::dlog(amb, 0)).is_zero());
    CHECK(ext_d(LogForm::dlog(amb, 0).times(mono(amb, {2, 0, 0}))).is_zero());
    CHECK(ext_d(fn(amb, mono(amb, {0, 3, 0}))) == LogForm::dx(amb, 1).times(mono(amb, {0, 2, 0}, 3)));

    for (Field f : {Q, F5}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            Rng rng(11 + n);
            std::vector<int> mult(n, 0);
            mult[0] = 2;
            std::vector<bool> F(n, false);
            if (n > 1) F[n - 1] = true;
            const Ambient a = Ambient::make(f, n, mult, F);
            for (int trial = 0; trial < 20; ++trial)
                for (int r = 0; r <= static_cast<int>(std::min<std::size_t>(n, 3)); ++r)
                    CHECK(ext_d(ext_d(random_form(a, rng, r, 3))).is_zero());
        }
    }
}

TEST_CASE("in_relative_module") {
    const Ambient x2 = Ambient::make(Q, 1, {2}, {}, {"x"});
    CHECK(in_relative_module(LogForm::dlog(x2, 0).times(mono(x2, {2}))));
    CHECK_FALSE(in_relative_module(LogForm::dlog(x2, 0).times(mono(x2, {1}))));
    const Ambient amb = Ambient::make(Q, 2, {2, 0}, {false, true}, {"x", "s"});
    CHECK(in_relative_module(wedge(LogForm::dlog(amb, 0), LogForm::dlog(amb, 1)).times(mono(amb, {2, 0}))));
    CHECK_FALSE(in_relative_module(LogForm::dlog(amb, 0).times(mono(amb, {3, -1}))));
}

TEST_CASE("fundamental cocycle") {
    const Ambient amb = Ambient::make(Q, 2, {1, 1}, {}, {"x", "y"});
    const SparsePoly x = mono(amb, {1, 0}), y = mono(amb, {0, 1});
    CHECK(equivalent(fundamental_cocycle(amb, {x}), LocalizedForm::of(LogForm::dlog(amb, 0))));
    CHECK(equivalent(fundamental_cocycle(amb, {x, y}), LocalizedForm::of(wedge(LogForm::dlog(amb, 0), LogForm::dlog(amb, 1)))));
    CHECK(equivalent(fundamental_cocycle(amb, {x * y}), LocalizedForm::of(LogForm::dlog(amb, 0) + LogForm::dlog(amb, 1))));
    CHECK_FALSE(equivalent(fundamental_cocycle(amb, {x * y}), LocalizedForm::of(LogForm::dlog(amb, 0))));
    CHECK_THROWS_AS(fundamental_cocycle(amb, {SparsePoly(Q, 2)}), Error);

    const Ambient plain = Ambient::make(F5, 3);
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const SparsePoly f = random_poly(plain, rng, 3) + SparsePoly::one(F5, 3);
        const SparsePoly g = random_poly(plain, rng, 3) + mono(plain, {0, 1, 0});
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(equivalent(fundamental_cocycle(plain, {f * g}), fundamental_cocycle(plain, {f}) + fundamental_cocycle(plain, {g})));
    }
}

TEST_CASE("dlog modulus identity") {
    // s = coordinate 0 (F), pi = coordinate 1 (D).
    const Ambient amb = Ambient::make(Q, 3, {0, 1, 0}, {true, false, false}, {"s", "p", "z"});
    const SparsePoly one = SparsePoly::one(Q, 3), s = mono(amb, {1, 0, 0}), p = mono(amb, {0, 1, 0});

    const DlogCertificate c1 = dlog_modulus_check(amb, 0, 1, one);
    // Brute route: d(s + p)/(s + p) - ds/s.
    const LocalizedForm brute = LocalizedForm{LogForm::dx(amb, 0) + LogForm::dx(amb, 1), s + p} - LocalizedForm{LogForm::dx(amb, 0), s};
    CHECK(equivalent(c1.lhs, brute));
    CHECK(equivalent(c1.rhs, LocalizedForm{(LogForm::dlog(amb, 1) - LogForm::dlog(amb, 0)).times(p), s + p}));
    CHECK(c1.in_module);

    const DlogCertificate c2 = dlog_modulus_check(amb, 0, 1, s);
    CHECK(equivalent(c2.lhs, LocalizedForm{LogForm::dx(amb, 1), one + p}));

    const DlogCertificate c0 = dlog_modulus_check(amb, 0, 1, SparsePoly(Q, 3));
    CHECK(c0.lhs.is_zero());
    CHECK(c0.numerator.is_zero());

    const DlogCertificate ce = dlog_modulus_check(amb, 0, 1, s + mono(amb, {0, 0, 2}), {mono(amb, {0, 0, 1}) + one});
    CHECK(ce.in_module);
    CHECK(ce.numerator.terms().begin()->first != 0);

    CHECK_THROWS_AS(dlog_modulus_check(amb, 0, 0, one), Error);
    const Ambient a2 = Ambient::make(Q, 2, {0, 1}, {true, false});
    try {
        dlog_modulus_check(a2, 0, 1, -mono(a2, {1, -1}));
        FAIL("expected ZeroFunction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroFunction);
    }

    for (Field f : {Q, F5}) {
        for (std::size_t n : {2u, 3u}) {
            const Ambient a = Ambient::make(f, n, n == 2 ? std::vector<int>{0, 1} : std::vector<int>{0, 1, 0},
                                            n == 2 ? std::vector<bool>{true, false} : std::vector<bool>{true, false, false});
            Rng rng(100 + n);
            for (int trial = 0; trial < 25; ++trial) {
                const SparsePoly a_poly = random_poly(a, rng, 3);
                const DlogCertificate c = dlog_modulus_check(a, 0, 1, a_poly);
                CHECK(c.in_module);
            }
        }
    }
}

TEST_CASE("twisted differential and residue examples") {
    const Ambient amb = Ambient::make(Q, 2, {2, 1}, {}, {"x", "y"});
    const std::vector<int> m{2, 1};
    const TwistedPiece unit(m, 0, fn(amb, SparsePoly::one(Q, 2)));
    CHECK(twisted_d(unit).form() == LogForm::dlog(amb, 0).times(Scalar(Q, 2)) + LogForm::dlog(amb, 1));

    const Ambient x1 = Ambient::make(Q, 1, {2}, {}, {"x"});
    const TwistedPiece w(std::vector<int>{2}, 0, LogForm::dlog(x1, 0));
    CHECK(twisted_d(w).form().is_zero());
    CHECK(residue(w).form() == fn(x1, SparsePoly::one(Q, 1)));

    CHECK(residue(TwistedPiece(m, 0, LogForm::dlog(amb, 1))).form().is_zero());
    CHECK(residue(TwistedPiece(m, 0, wedge(LogForm::dlog(amb, 0), LogForm::dlog(amb, 1)))).form() == LogForm::dlog(amb, 1));
    CHECK(residue(TwistedPiece(m, 1, wedge(LogForm::dlog(amb, 0), LogForm::dlog(amb, 1)))).form() == -LogForm::dlog(amb, 0));

    CHECK(TwistedPiece(m, 0, fn(amb, mono(amb, {1, 0}))).form().is_zero());
    CHECK_THROWS_AS(TwistedPiece(m, 0, fn(Ambient::make(Q, 2, {2, 0}), SparsePoly::one(Q, 2))), Error);

    for (Field f : {Q, F5}) {
        const Ambient a = Ambient::make(f, 3, {2, 1, 0}, {false, false, true});
        Rng rng(77);
        for (int trial = 0; trial < 20; ++trial) {
            for (int r = 0; r <= 2; ++r) {
                const TwistedPiece t(std::vector<int>{2, 1, 3}, 0, random_form(a, rng, r, 3));
                CHECK(twisted_d(twisted_d(t)).form().is_zero());
            }
        }
    }
}

TEST_CASE("homotopy identity on monomial bases") {
    for (Field f : {Q, F5}) {
        const Ambient amb = Ambient::make(f, 3, {3, 1, 0}, {false, false, true});
        for (int mnu : {1, 2, 3, 5}) {
            const std::vector<int> m{mnu, 1, 0};
            for (const TwistedPiece& w : twisted_monomial_basis(amb, m, 0, 3)) {
                const HomotopyCheck h = homotopy_identity_check(w);
                CHECK_MESSAGE(h.passed, w.to_string());
            }
        }
    }
    const Ambient x1 = Ambient::make(Q, 1, {2}, {}, {"x"});
    const TwistedPiece w(std::vector<int>{2}, 0, LogForm::dlog(x1, 0));
    CHECK(homotopy_identity_check(w).lhs == LogForm::dlog(x1, 0).times(Scalar(Q, 2)));

    // p | m_nu: both sides vanish.
    const Ambient a5 = Ambient::make(F5, 2, {5, 0}, {false, true});
    const TwistedPiece z(std::vector<int>{5, 0}, 0, wedge(LogForm::dlog(a5, 0), LogForm::dlog(a5, 1)).times(mono(a5, {0, 2})));
    const HomotopyCheck hz = homotopy_identity_check(z);
    CHECK(hz.passed);
    CHECK(hz.rhs.is_zero());
}

TEST_CASE("explicit primitives of twisted-closed forms") {
    for (Field f : {Q, F5}) {
        const Ambient amb = Ambient::make(f, 3, {3, 1, 0}, {false, false, true});
        Rng rng(404);
        for (int mnu : {1, 2, 3}) {
            const std::vector<int> m{mnu, 2, 0};
            for (int trial = 0; trial < 15; ++trial) {
                for (int r = 0; r <= 2; ++r) {
                    const TwistedPiece closed = twisted_d(TwistedPiece(m, 0, random_form(amb, rng, r, 3)));
                    const Scalar inv = Scalar::one(f) / Scalar(f, mnu);
                    const TwistedPiece primitive = residue(closed).with_form(residue(closed).form().times(inv));
                    CHECK(twisted_d(primitive) == closed);
                }
            }
        }
    }
}

TEST_CASE("closed form containment") {
    for (int n : {1, 2, 3, 4}) {
        const Ambient amb = Ambient::make(Q, 1, {n}, {}, {"x"});
        const LogForm exact = ext_d(fn(amb, mono(amb, {-(n - 1)})));
        const ContainmentCertificate c = closed_form_containment(exact);
        CHECK(c.member);
        CHECK(in_relative_module(c.rewritten));
        CHECK(closed_form_containment(LogForm::dlog(amb, 0).times(mono(amb, {-(n - 1)}, 7))).member);
        CHECK(closed_form_containment(LogForm::dx(amb, 0).times(mono(amb, {-n}))).member);
    }
    const Ambient amb = Ambient::make(Q, 2, {2, 0}, {}, {"x", "y"});
    try {
        closed_form_containment(LogForm::dx(amb, 1).times(mono(amb, {1, 0})));
        FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionFailed);
    }
    CHECK_THROWS_AS(closed_form_containment(LogForm::dlog(amb, 0).times(mono(amb, {-2, 0}))), Error);
    CHECK_THROWS_AS(closed_form_containment(wedge(LogForm::dlog(amb, 0), LogForm::dx(amb, 1))), Error);

    for (Field f : {Q, F5}) {
        const Ambient a = Ambient::make(f, 3, {3, 2, 0}, {false, false, true});
        const std::vector<LogForm> gens = containment_generators(a, 2);
        CHECK(gens.size() > 20);
        for (const LogForm& g : gens) {
            const ContainmentCertificate c = closed_form_containment(g);
            CHECK(c.member);
            CHECK(in_relative_module(c.rewritten));
        }
        Rng rng(9);
        for (int trial = 0; trial < 30; ++trial) {
            LogForm sum(a);
            for (int k = 0; k < 4; ++k) sum += gens[rng.below(gens.size())].times(Scalar(f, rng.between(-3, 3)));
            if (sum.is_zero()) continue;
            CHECK(closed_form_containment(sum).member);
        }
    }
}

TEST_CASE("form printing") {
    const Ambient amb = Ambient::make(Q, 3, {2, 0, 0}, {false, false, true});
    const LogForm w = wedge(LogForm::dlog(amb, 0), LogForm::dx(amb, 1)).times(mono(amb, {2, 0, 0}));
    CHECK(w.to_string() == "x1^2 * dlog(x1) ^ d(x2)");
    CHECK(LogForm(amb).to_string() == "0");
    CHECK(LogForm::dlog(amb, 2).to_string() == "dlog(x3)");
}
