#include "relcycles/factor.hpp"

#include <algorithm>
#include <random>

#include "relcycles/error.hpp"

namespace relcycles {

namespace {

UPoly one_poly(Field f) { return UPoly::constant(Scalar::one(f)); }

UPoly pow_mod_big(UPoly base, mpz_class e, const UPoly& m) {
    UPoly result = one_poly(base.field()) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = (result * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return result;
}

// Coefficientwise p-th root of a polynomial in x^p over F_p.
UPoly pth_root(const UPoly& f) {
    const std::size_t p = f.field().characteristic();
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
    return UPoly(f.field(), std::move(v));
}

void squarefree(const UPoly& f, long mult, std::vector<std::pair<UPoly, long>>& out) {
    if (f.degree() < 1) return;
    UPoly c = gcd(f, f.derivative());
    UPoly w = f / c;
    long i = 1;
    while (w.degree() > 0) {
        UPoly y = gcd(w, c);
        UPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * static_cast<long>(f.field().characteristic()), out);
}

// Squarefree monic f -> (product of all irreducible factors of degree d, d).
std::vector<std::pair<UPoly, long>> distinct_degree(UPoly f) {
    std::vector<std::pair<UPoly, long>> out;
    const Field field = f.field();
    const mpz_class q = field.characteristic();
    const UPoly x = UPoly::x(field);
    UPoly h = x % f;
    for (long d = 1; 2 * d <= f.degree(); ++d) {
        h = pow_mod_big(h, q, f);
        UPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

void equal_degree(const UPoly& f, long d, std::mt19937_64& rng, std::vector<UPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Field field = f.field();
    const std::uint32_t p = field.characteristic();
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), p, static_cast<unsigned long>(d));
    for (;;) {
        std::vector<Scalar> v;
        for (long i = 0; i < f.degree(); ++i) v.emplace_back(field, static_cast<long>(rng() % p));
        const UPoly a(field, std::move(v));
        if (a.degree() < 1) continue;
        UPoly b(field);
        if (p == 2) {
            UPoly t = a;
            b = a;
            for (long j = 1; j < d; ++j) {
                t = (t * t) % f;
                b += t;
            }
        } else {
            b = pow_mod_big(a, (qd - 1) / 2, f) - one_poly(field);
        }
        const UPoly g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

// Integer divisors of |n| for n != 0.
std::vector<mpz_class> divisors(const mpz_class& n) {
    const mpz_class m = abs(n);
    if (m > mpz_class("1000000000000")) throw Error(ErrorKind::Unsupported, "rational root search: coefficient too large");
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d * d != m) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Factorization factor_rational(const UPoly& f) {
    const Field field = f.field();
    Factorization out{f.leading(), {}};
    UPoly g = f.monic();
    const UPoly x = UPoly::x(field);
    if (long v = g.valuation(); v > 0) {
        out.factors.emplace_back(x, v);
        std::vector<Scalar> rest(g.coeffs().begin() + v, g.coeffs().end());
        g = UPoly(field, std::move(rest));
    }
    while (g.degree() > 0) {
        mpz_class lcm_den = 1;
        for (const auto& c : g.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
        const mpz_class a0 = mpq_class(g.coeff(0).rational() * lcm_den).get_num();
        const mpz_class an = lcm_den;
        bool found = false;
        for (const mpz_class& num : divisors(a0)) {
            for (const mpz_class& den : divisors(an)) {
                for (int sign : {1, -1}) {
                    const Scalar r(field, mpq_class(num * sign, den));
                    if (!g.eval(r).is_zero()) continue;
                    const UPoly lin = x - UPoly::constant(r);
                    long mult = 0;
                    while (g.degree() > 0 && g.eval(r).is_zero()) {
                        g = g / lin;
                        ++mult;
                    }
                    out.factors.emplace_back(lin, mult);
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw Error(ErrorKind::Unsupported, "irreducible factor of degree > 1 over Q: " + g.to_string());
    }
    std::sort(out.factors.begin(), out.factors.end());
    return out;
}

} // namespace

Factorization factor(const UPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "factor of zero");
    if (f.field().is_rationals()) return factor_rational(f);
    Factorization out{f.leading(), {}};
    std::vector<std::pair<UPoly, long>> sqf;
    squarefree(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x5eed);
    for (const auto& [g, mult] : sqf) {
        for (const auto& [h, d] : distinct_degree(g)) {
            std::vector<UPoly> parts;
            equal_degree(h, d, rng, parts);
            for (auto& p : parts) out.factors.emplace_back(std::move(p), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end());
    // Squarefree parts are coprime, so equal factors never repeat.
    return out;
}

bool is_irreducible(const UPoly& f) {
    if (f.degree() < 1) return false;
    if (f.field().is_rationals()) return f.degree() == 1;
    const Factorization fac = factor(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<UPoly> polynomials_up_to(Field field, long degree) {
    const std::uint32_t p = field.characteristic();
    if (p == 0) throw Error(ErrorKind::Unsupported, "enumeration needs a finite field");
    std::vector<UPoly> out;
    std::vector<long> digits(static_cast<std::size_t>(degree + 1), 0);
    for (;;) {
        std::vector<Scalar> v;
        for (long d : digits) v.emplace_back(field, d);
        out.emplace_back(field, std::move(v));
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == static_cast<long>(p)) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

std::vector<UPoly> monic_polynomials(Field field, long degree) {
    std::vector<UPoly> out;
    const UPoly lead = UPoly::monomial(Scalar::one(field), static_cast<std::size_t>(degree));
    if (degree == 0) return {lead};
    for (const UPoly& low : polynomials_up_to(field, degree - 1)) out.push_back(lead + low);
    return out;
}

std::vector<UPoly> monic_irreducibles(Field field, long degree) {
    std::vector<UPoly> out;
    for (UPoly& f : monic_polynomials(field, degree))
        if (is_irreducible(f)) out.push_back(std::move(f));
    return out;
}

} // namespace relcycles
