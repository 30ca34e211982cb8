#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relcycles/multipoly.hpp"
#include "relcycles/random.hpp"

// The extended cubical object n -> P_n(A|I) for A = k[x]_(x), I = (x^e).
//
// Polynomials in t_1..t_n are stored in the basis (1 - t)^lambda: variable i
// of the stored LocalPoly is s_i = 1 - t_i. In that basis the face t_i = 1
// (epsilon = infinity) keeps the lambda_i = 0 terms, the face t_i = 0 sums
// over lambda_i, and admissibility is a condition on individual coefficients.

namespace relcycles::cubical {

/// How |lambda| is measured in the admissibility condition a_lambda in I^|lambda|.
enum class WeightNorm { Max, Sum };

enum class FaceValue { Zero, Infinity };

struct Context {
    Field field;
    ModulusIdeal ideal;
    WeightNorm norm = WeightNorm::Max;

    friend bool operator==(const Context&, const Context&) = default;
};

int weight(const Monomial& lambda, std::size_t arity, WeightNorm norm);

/// Change of basis t -> (1 - t): returns the coefficient map a_lambda.
LocalPoly expand_basis(const LocalPoly& f_in_t);
/// Inverse of expand_basis (the substitution is an involution).
LocalPoly collapse_basis(const LocalPoly& f_in_basis);

struct AdmissibilityViolation {
    Monomial lambda;
    LocalElem coeff;
    long required_valuation; // 0 means "must be a unit"
};

std::optional<AdmissibilityViolation> find_violation(const LocalPoly& coeffs, ModulusIdeal ideal,
                                                     WeightNorm norm = WeightNorm::Max);
bool is_admissible(const LocalPoly& coeffs, ModulusIdeal ideal, WeightNorm norm = WeightNorm::Max);

/// Element of P~_n(A|I): a polynomial with unit constant coefficient and
/// a_lambda in I^|lambda|.
class AdmissiblePoly {
public:
    /// Throws NotAdmissible if the coefficient map violates admissibility.
    static AdmissiblePoly from_basis(const Context& ctx, LocalPoly coeffs);
    static AdmissiblePoly from_t_poly(const Context& ctx, const LocalPoly& f_in_t);
    static AdmissiblePoly one(const Context& ctx, std::size_t arity);

    const Context& context() const noexcept { return ctx_; }
    Field field() const noexcept { return ctx_.field; }
    std::size_t arity() const noexcept { return coeffs_.nvars(); }
    const LocalPoly& coeffs() const noexcept { return coeffs_; }
    LocalPoly as_t_poly() const { return collapse_basis(coeffs_); }

    /// a_(0,...,0), which equals f(1,...,1).
    LocalElem constant() const { return coeffs_.constant_term(); }
    bool is_normalized() const { return constant().is_one(); }
    bool is_one() const { return coeffs_.size() == 1 && is_normalized(); }
    /// Representative of the class in P_n = P~_n / A^x with a_0 = 1.
    AdmissiblePoly normalized() const;

    friend bool operator==(const AdmissiblePoly& a, const AdmissiblePoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;
    /// One line per coefficient: "lambda=(1,0): x^2".
    std::string coefficient_lines() const;

    /// Wraps a coefficient map produced by a structure map; the result is
    /// re-checked and InternalInvariantViolation is thrown on failure.
    static AdmissiblePoly checked(const Context& ctx, LocalPoly coeffs, const char* origin);

private:
    AdmissiblePoly(Context ctx, LocalPoly coeffs) : ctx_(ctx), coeffs_(std::move(coeffs)) {}

    Context ctx_;
    LocalPoly coeffs_;
};

AdmissiblePoly monoid_mul(const AdmissiblePoly& f, const AdmissiblePoly& g);
inline AdmissiblePoly operator*(const AdmissiblePoly& f, const AdmissiblePoly& g) { return monoid_mul(f, g); }

/// eta*_{n,i,eps}; i is 1-based. Throws BadIndex unless 1 <= i <= n.
AdmissiblePoly face(const AdmissiblePoly& f, std::size_t i, FaceValue eps);
/// pr*_{n,i}: f of arity n-1 becomes arity n, independent of t_i (1 <= i <= n).
AdmissiblePoly degeneracy(const AdmissiblePoly& f, std::size_t i);
/// tau*_{n,i}: t_i -> 1 - t_i.
AdmissiblePoly involution(const AdmissiblePoly& f, std::size_t i);
/// mu*: 1 - t -> (1 - t_1)(1 - t_2); arity 1 only.
AdmissiblePoly mu_star(const AdmissiblePoly& f);

/// Element of P_n(A|I)^gr, kept as a formal product of normalized admissible
/// polynomials with integer exponents. Equal factors are merged, so
/// cancellations produced by structure maps are detected syntactically;
/// equality falls back to cross-multiplying the expanded numerator and
/// denominator.
class CubicalFraction {
public:
    using Factor = std::pair<AdmissiblePoly, int>;

    static CubicalFraction unit(const Context& ctx, std::size_t arity);
    static CubicalFraction of(const AdmissiblePoly& f);
    static CubicalFraction quotient(const AdmissiblePoly& num, const AdmissiblePoly& den);

    const Context& context() const noexcept { return ctx_; }
    std::size_t arity() const noexcept { return arity_; }
    const std::vector<Factor>& factors() const noexcept { return factors_; }

    /// Expanded, normalized numerator and denominator.
    AdmissiblePoly numerator() const;
    AdmissiblePoly denominator() const;

    bool is_unit() const;
    CubicalFraction inverse() const;
    CubicalFraction pow(int e) const;

    CubicalFraction& operator*=(const CubicalFraction& o);
    CubicalFraction& operator/=(const CubicalFraction& o) { return *this *= o.inverse(); }
    friend CubicalFraction operator*(CubicalFraction a, const CubicalFraction& b) { return a *= b; }
    friend CubicalFraction operator/(CubicalFraction a, const CubicalFraction& b) { return a /= b; }
    /// Equality in P^gr (modulo A^x).
    friend bool operator==(const CubicalFraction& a, const CubicalFraction& b) { return (a / b).is_unit(); }

    /// Multiplies in f^exponent (normalizing f first).
    void absorb(const AdmissiblePoly& f, int exponent);

    std::string to_string() const;

private:
    CubicalFraction(Context ctx, std::size_t arity) : ctx_(ctx), arity_(arity) {}

    Context ctx_;
    std::size_t arity_;
    std::vector<Factor> factors_;
};

CubicalFraction face(const CubicalFraction& c, std::size_t i, FaceValue eps);
CubicalFraction degeneracy(const CubicalFraction& c, std::size_t i);
CubicalFraction involution(const CubicalFraction& c, std::size_t i);
CubicalFraction mu_star(const CubicalFraction& c);

/// prod_i (face(c,i,inf) / face(c,i,0))^((-1)^i); requires arity >= 1.
CubicalFraction boundary(const CubicalFraction& c);

/// Membership in NP_n: face(c,i,0) = 1 for 2 <= i <= n and face(c,i,inf) = 1 for all i.
bool in_normalized(const CubicalFraction& c);

/// Random admissible polynomials: total degree <= max_total_degree in the
/// (1 - t) basis, up to max_terms non-constant terms, coefficients
/// x^(e*|lambda| + j) * u with j in {0,1,2} and u a random unit.
class AdmissibleGenerator {
public:
    AdmissibleGenerator(Context ctx, std::uint64_t seed) : ctx_(ctx), rng_(seed) {}

    AdmissiblePoly operator()(std::size_t arity, int max_total_degree = 4, int max_terms = 3);
    /// Normalized (a_0 = 1) variant.
    AdmissiblePoly normalized(std::size_t arity) { return (*this)(arity).normalized(); }
    /// Random element of (1 + I)^x.
    LocalElem one_unit();

    Rng& rng() noexcept { return rng_; }
    const Context& context() const noexcept { return ctx_; }

private:
    Context ctx_;
    Rng rng_;
};

} // namespace relcycles::cubical
