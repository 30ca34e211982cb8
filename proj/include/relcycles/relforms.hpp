#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relcycles/multipoly.hpp"
#include "relcycles/random.hpp"

// Relative logarithmic differential forms on affine space with D and F
// supported on coordinate hyperplanes. A form is stored in the mixed basis:
// dlog x_i for coordinates dividing D_red + F, dx_i for the others.
// Coefficients are Laurent polynomials (poles along coordinate hyperplanes).

namespace relcycles::relforms {

inline constexpr std::size_t kMaxFormVars = 4;

/// Bit i set: the basis symbol of coordinate i occurs in the wedge.
using WedgeMask = std::uint8_t;

struct Ambient {
    Field field;
    std::size_t nvars;
    std::vector<int> mult;      // multiplicity of {x_i = 0} in D
    std::vector<bool> in_F;     // {x_i = 0} is a component of F
    std::vector<std::string> names;

    /// Throws InvalidArgument on nvars outside [1, 4], negative multiplicities
    /// or length mismatches. Default names are x1..xn.
    static Ambient make(Field field, std::size_t nvars, std::vector<int> mult = {}, std::vector<bool> in_F = {},
                        std::vector<std::string> names = {});

    bool is_log(std::size_t i) const { return mult[i] > 0 || in_F[i]; }
    friend bool operator==(const Ambient&, const Ambient&) = default;
};

class LogForm {
public:
    explicit LogForm(Ambient ambient) : amb_(std::move(ambient)) {}

    static LogForm function(const Ambient& amb, const SparsePoly& c);
    /// dlog x_i on log coordinates, dx_i otherwise.
    static LogForm basis(const Ambient& amb, std::size_t i);
    /// dx_i; equals x_i dlog x_i on log coordinates.
    static LogForm dx(const Ambient& amb, std::size_t i);
    /// dlog x_i; equals x_i^-1 dx_i off the log coordinates.
    static LogForm dlog(const Ambient& amb, std::size_t i);
    /// The monomial x^e as a Laurent coefficient.
    static SparsePoly monomial(const Ambient& amb, const std::vector<int>& e, const Scalar& c);

    const Ambient& ambient() const noexcept { return amb_; }
    const std::map<WedgeMask, SparsePoly>& terms() const noexcept { return terms_; }
    SparsePoly coefficient(WedgeMask mask) const;
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(WedgeMask mask, const SparsePoly& c);
    LogForm& operator+=(const LogForm& o);
    LogForm& operator-=(const LogForm& o);
    friend LogForm operator+(LogForm a, const LogForm& b) { return a += b; }
    friend LogForm operator-(LogForm a, const LogForm& b) { return a -= b; }
    LogForm operator-() const;
    LogForm times(const SparsePoly& c) const;
    LogForm times(const Scalar& c) const;

    /// Drops every coefficient term divisible by x_var (restriction to {x_var = 0}).
    LogForm restricted(std::size_t var) const;

    friend bool operator==(const LogForm& a, const LogForm& b) { return a.amb_ == b.amb_ && a.terms_ == b.terms_; }

    /// "x1^2 * dlog(x1) ^ d(x3) + ..."; "0" for the zero form.
    std::string to_string() const;

private:
    void require_same(const LogForm& o) const;
    Ambient amb_;
    std::map<WedgeMask, SparsePoly> terms_;
};

/// Number of symbols in a wedge mask.
int wedge_degree(WedgeMask mask) noexcept;

LogForm wedge(const LogForm& a, const LogForm& b);

/// d(c e_I) = sum_j D_j(c) e_j ^ e_I with D_j = x_j d/dx_j on log
/// coordinates and d/dx_j otherwise.
LogForm ext_d(const LogForm& w);

/// Every coefficient is a polynomial divisible by prod x_i^{m_i}.
bool in_relative_module(const LogForm& w);

/// numer / denom with denom a nonzero polynomial; equality by cross-multiplication.
struct LocalizedForm {
    LogForm numer;
    SparsePoly denom;

    static LocalizedForm of(const LogForm& w);
    LocalizedForm& operator+=(const LocalizedForm& o);
    LocalizedForm& operator-=(const LocalizedForm& o);
    friend LocalizedForm operator+(LocalizedForm a, const LocalizedForm& b) { return a += b; }
    friend LocalizedForm operator-(LocalizedForm a, const LocalizedForm& b) { return a -= b; }
    bool is_zero() const { return numer.is_zero(); }
    std::string to_string() const;
};

LocalizedForm wedge(const LocalizedForm& a, const LocalizedForm& b);
bool equivalent(const LocalizedForm& a, const LocalizedForm& b);

/// df / f. Throws ZeroFunction for f = 0.
LocalizedForm dlog_of(const Ambient& amb, const SparsePoly& f);

/// dlog f_1 ^ ... ^ dlog f_r.
LocalizedForm fundamental_cocycle(const Ambient& amb, const std::vector<SparsePoly>& fs);

struct DlogCertificate {
    LocalizedForm lhs;          // dlog(f/s), computed from df and ds
    LocalizedForm rhs;          // (pi/f)(-a dlog s + da + a dlog pi)
    LogForm numerator;          // pi (-a dlog s + da + a dlog pi) ^ d e_1 ^ ... ^ d e_k
    SparsePoly denominator;     // f e_1 ... e_k
    bool in_module = false;     // numerator lies in Omega_{Y|D}(log F)
    std::string to_string() const;
};

/// f = s + pi a for coordinates s, pi. Verifies dlog(f/s) = (pi/f)(-a dlog s +
/// da + a dlog pi), wedges with dlog(extras) and tests the numerator for
/// membership. InternalInvariantViolation if the identity fails; ZeroFunction if f = 0.
DlogCertificate dlog_modulus_check(const Ambient& amb, std::size_t s, std::size_t pi, const SparsePoly& a,
                                   const std::vector<SparsePoly>& extras = {});

/// Section x^m (x) form of I_m (x) Omega^q(log F + D) restricted to {x_nu = 0}.
class TwistedPiece {
public:
    /// m_i must vanish off the log coordinates and nu must be a log coordinate
    /// (InvalidArgument otherwise). The form is restricted modulo x_nu.
    TwistedPiece(std::vector<int> m, std::size_t nu, const LogForm& form);

    const std::vector<int>& m() const noexcept { return m_; }
    std::size_t nu() const noexcept { return nu_; }
    const LogForm& form() const noexcept { return form_; }
    TwistedPiece with_form(const LogForm& form) const { return TwistedPiece(m_, nu_, form); }

    friend bool operator==(const TwistedPiece& a, const TwistedPiece& b) = default;
    std::string to_string() const;

private:
    std::vector<int> m_;
    std::size_t nu_;
    LogForm form_;
};

/// x^m (x) (d w + sum m_i dlog x_i ^ w).
TwistedPiece twisted_d(const TwistedPiece& w);

/// dlog x_nu ^ alpha + beta -> alpha, beta free of dlog x_nu.
TwistedPiece residue(const TwistedPiece& w);

struct HomotopyCheck {
    bool passed;
    LogForm lhs; // twisted_d(residue(w)) + residue(twisted_d(w))
    LogForm rhs; // m_nu w
};

HomotopyCheck homotopy_identity_check(const TwistedPiece& w);

/// Every monomial basis element x^e e_I with e free of x_nu, |e| <= max_degree.
std::vector<TwistedPiece> twisted_monomial_basis(const Ambient& amb, const std::vector<int>& m, std::size_t nu, int max_degree);

struct ContainmentCertificate {
    bool member;
    std::vector<int> pole_orders; // n_i - 1 on D coordinates, 0 elsewhere
    LogForm rewritten;            // prod x_i^{n_i - 1} w on the ambient with D turned into log poles
    std::string to_string() const;
};

/// For a closed 1-form w with w in Omega^1(D), decides w in Omega^1(log D)(D - D_red).
/// PreconditionFailed if dw != 0, w has degree != 1, or w is not in Omega^1(D).
ContainmentCertificate closed_form_containment(const LogForm& w);

/// d(u x_i^-j) for D coordinates i, 1 <= j <= n_i - 1, monomials u of degree
/// <= max_u_degree, and x_i^-(n_i - 1) dlog x_i.
std::vector<LogForm> containment_generators(const Ambient& amb, int max_u_degree);

/// Random polynomial with up to `terms` monomials of total degree <= max_degree.
SparsePoly random_poly(const Ambient& amb, Rng& rng, int max_degree, int terms = 3);

/// Random homogeneous form of degree r with random polynomial coefficients.
LogForm random_form(const Ambient& amb, Rng& rng, int r, int max_degree);

} // namespace relcycles::relforms
