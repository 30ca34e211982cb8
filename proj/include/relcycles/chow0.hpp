#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relcycles/lattice.hpp"
#include "relcycles/random.hpp"
#include "relcycles/upoly.hpp"

// Zero-cycles with modulus on P^1 over k = F_p or Q. The degree-zero part of
// CH_0(P^1|D) is (O_D)^x / k^x; a cycle is classified by its degree and the
// residues of a function with divisor alpha - deg(alpha) [base].

namespace relcycles::chow0 {

/// Closed point of P^1: a monic irreducible pi(x), or infinity.
class ClosedPoint {
public:
    /// Throws InvalidArgument unless pi is monic irreducible; over Q pi must be linear.
    static ClosedPoint finite(UPoly pi);
    /// The point x = c.
    static ClosedPoint rational(const Scalar& c);
    static ClosedPoint infinity(Field field) { return ClosedPoint(field, std::nullopt); }

    Field field() const noexcept { return field_; }
    bool is_infinity() const noexcept { return !pi_.has_value(); }
    /// Requires a finite point.
    const UPoly& polynomial() const;
    long degree() const noexcept { return pi_ ? pi_->degree() : 1; }

    /// Finite points in UPoly order, then infinity.
    friend std::strong_ordering operator<=>(const ClosedPoint& a, const ClosedPoint& b);
    friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) { return (a <=> b) == 0; }

    /// "[inf]", "[c]" for x - c, "[x^2 + 1]" otherwise.
    std::string to_string() const;

private:
    ClosedPoint(Field field, std::optional<UPoly> pi) : field_(field), pi_(std::move(pi)) {}
    Field field_;
    std::optional<UPoly> pi_;
};

/// Finite formal sum of closed points; zero coefficients are never stored.
class Divisor {
public:
    explicit Divisor(Field field) : field_(field) {}

    static Divisor point(const ClosedPoint& p, long mult = 1);

    Field field() const noexcept { return field_; }
    const std::map<ClosedPoint, long>& terms() const noexcept { return terms_; }
    long coefficient(const ClosedPoint& p) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_effective() const;
    /// Sum of mult * deg(P).
    long degree() const;
    bool meets(const Divisor& other) const;

    Divisor& add(const ClosedPoint& p, long mult);
    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    Divisor operator-() const;
    Divisor scaled(long k) const;

    friend bool operator==(const Divisor& a, const Divisor& b) = default;

    /// "2*[0] + 1*[inf] - 3*[x^2 + 1]"; "0" for the zero divisor.
    std::string to_string() const;

private:
    Field field_;
    std::map<ClosedPoint, long> terms_;
};

/// Throws InvalidArgument unless d is effective and nonzero.
void require_modulus(const Divisor& d);

/// Parses "2*[0] + 1*[inf] - [x^2+1]": signed terms n*[c], n*[poly] or [inf].
Divisor parse_divisor(const std::string& text, Field field);

/// g = num / den with gcd 1 and den monic.
class RationalFunction {
public:
    /// Throws InvalidArgument for den = 0.
    RationalFunction(UPoly num, UPoly den);
    static RationalFunction polynomial(UPoly p) { return RationalFunction(std::move(p), UPoly::constant(Scalar::one(p.field()))); }
    static RationalFunction one(Field f) { return polynomial(UPoly::constant(Scalar::one(f))); }

    Field field() const noexcept { return num_.field(); }
    const UPoly& num() const noexcept { return num_; }
    const UPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    RationalFunction pow(unsigned long e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;
    std::string to_string() const;

private:
    UPoly num_, den_;
};

/// Order of g at P; v_inf(g) = deg den - deg num. Throws ZeroFunction for g = 0.
long valuation(const RationalFunction& g, const ClosedPoint& p);

/// Sum over all closed points of v_P(g) [P]. Throws ZeroFunction for g = 0.
Divisor principal_divisor(const RationalFunction& g);

/// g is a unit at every point of |D| and v_P(g - 1) >= mult_P(D) there.
bool in_G(const RationalFunction& g, const Divisor& modulus);

/// Tuple of units of k[x]/pi_i^{n_i} (k[u]/u^n at infinity, u = 1/x) modulo
/// the diagonal k^x. Normalized so the lowest nonzero coefficient of the
/// first component is 1.
class ResidueClass {
public:
    struct Component {
        ClosedPoint point;
        UPoly modulus; // pi^n, or u^n at infinity
        UPoly value;   // reduced mod modulus
    };

    /// Components must be units of their quotient rings.
    explicit ResidueClass(std::vector<Component> components);
    static ResidueClass trivial(const Divisor& modulus);

    const std::vector<Component>& components() const noexcept { return comps_; }
    bool is_trivial() const;

    friend ResidueClass operator*(const ResidueClass& a, const ResidueClass& b);
    ResidueClass inverse() const;
    friend bool operator==(const ResidueClass& a, const ResidueClass& b);

    /// "([0]: 1 + x, [inf]: 1)"; infinity components are written in u.
    std::string to_string() const;

private:
    void normalize();
    std::vector<Component> comps_;
};

struct ChowClass {
    long degree;
    ResidueClass residue;
    friend bool operator==(const ChowClass& a, const ChowClass& b) = default;
    std::string to_string() const;
};

/// First degree-1 point off |D| in the order inf, 0, 1, 2, ...; NoBasePoint if none.
ClosedPoint default_base_point(const Divisor& modulus);

/// Class of a zero-cycle alpha off |D|: (deg alpha, residues of h) where
/// div(h) = alpha - deg(alpha) [base]. PreconditionFailed if alpha or base meets |D|.
ChowClass chow_class(const Divisor& alpha, const Divisor& modulus, const std::optional<ClosedPoint>& base = std::nullopt);

bool equal_in_chow(const Divisor& alpha, const Divisor& beta, const Divisor& modulus);

/// prod_i q^{d_i (n_i - 1)} (q^{d_i} - 1) / (q - 1) for D = sum n_i P_i, deg P_i = d_i.
mpz_class group_order(const Divisor& modulus, std::uint64_t q);

/// Closed points of degree <= bound off |D| (finite field only), in ClosedPoint order.
std::vector<ClosedPoint> points_off(const Divisor& modulus, long bound);

/// Brute-force presentation of CH_0(P^1|D) over F_q restricted to cycles
/// supported on points of degree <= degree_bound: the quotient of Z^S by
/// divisors of g in G(P^1, D) with numerator and denominator of degree
/// <= relation_height that are supported on S.
class ChowOracle {
public:
    ChowOracle(const Divisor& modulus, long degree_bound, long relation_height);

    const std::vector<ClosedPoint>& support() const noexcept { return support_; }
    std::size_t relation_count() const noexcept { return relations_; }
    /// Order of the degree-0 subgroup; valid when free_rank() == 1.
    mpz_class order() const { return smith_.torsion_order(); }
    std::size_t free_rank() const noexcept { return smith_.cols() - smith_.rank(); }
    /// Nontrivial invariant factors of the degree-0 subgroup.
    std::vector<mpz_class> invariant_factors() const;
    /// One cycle per nontrivial invariant factor generating that cyclic summand.
    std::vector<Divisor> generators() const;
    /// Canonical coordinates of alpha in Z^S / relations. Throws PreconditionFailed
    /// if alpha is not supported on S.
    IntVector classify(const Divisor& alpha) const;

private:
    Divisor modulus_;
    std::vector<ClosedPoint> support_;
    std::map<ClosedPoint, std::size_t> index_;
    std::size_t relations_ = 0;
    SmithForm smith_;
};

/// Oracle over F_q, q prime <= 9, degree_bound <= 4 (ResourceBound beyond).
/// relation_height < 0 selects degree_bound.
ChowOracle brute_force_chow(const Divisor& modulus, std::uint64_t q, long degree_bound, long relation_height = -1);

struct SeparationReport {
    std::size_t cycles = 0;
    std::size_t oracle_classes = 0;
    std::size_t invariant_classes = 0;
    bool consistent = true;
    std::optional<std::pair<Divisor, Divisor>> counterexample;
};

/// Compares the oracle's equivalence with chow_class on every degree-0 cycle
/// E1 - E2, E1 and E2 effective of equal degree <= max_degree on the oracle support.
SeparationReport check_separation(const ChowOracle& oracle, const Divisor& modulus, long max_degree);

/// f = sum_{nu=0}^m a_nu (1 - y)^{m - nu} with a_0 = 1 and v_P(a_nu) >= nu n_P
/// at every P in |D|: a relative 1-cycle on P^1 x box with modulus D.
class CurveCycle {
public:
    /// Throws NotAdmissible when the modulus condition fails.
    CurveCycle(std::vector<RationalFunction> coeffs, const Divisor& modulus);

    const std::vector<RationalFunction>& coeffs() const noexcept { return a_; }
    std::size_t degree_in_y() const noexcept { return a_.size() - 1; }
    std::string to_string() const;

private:
    std::vector<RationalFunction> a_;
};

/// f(0) = 1 + sum a_nu; lies in G(P^1, D).
RationalFunction norm_of_coordinate(const CurveCycle& f);

/// f = (1 - y) - (1 - g); NotInG unless g in G(P^1, D).
CurveCycle graph_cycle(const RationalFunction& g, const Divisor& modulus);

/// Boundary V|_{y=0} - V|_{y=inf} of V = div(f), computed by clearing
/// denominators into F(x, y) and intersecting with the two faces.
Divisor cycle_boundary(const CurveCycle& f);

/// Random g = 1 + M r in G(P^1, D), M the finite part of D.
RationalFunction random_G_element(const Divisor& modulus, Rng& rng);

/// Random admissible cycle with 1 <= m <= max_m.
CurveCycle random_curve_cycle(const Divisor& modulus, Rng& rng, std::size_t max_m = 2);

} // namespace relcycles::chow0
