#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relcycles/cubical.hpp"

// Weight-one computation on the normalized complex NP(A|I)^gr: the homotopy
// H, the map delta to (1 + I)^x, and explicit witnesses for exactness at
// n = 1 and for the vanishing of the higher homology.

namespace relcycles::weight1 {

using cubical::AdmissiblePoly;
using cubical::Context;
using cubical::CubicalFraction;
using cubical::FaceValue;

/// u is a unit and x_valuation(u - 1) >= e.
bool in_one_plus_ideal(const LocalElem& u, ModulusIdeal ideal);

/// Element of (1 + I)^x = (1 + I) cap A^x.
class UnitOneClass {
public:
    /// Throws PreconditionFailed when u is not in (1 + I)^x.
    UnitOneClass(LocalElem u, ModulusIdeal ideal);

    const LocalElem& value() const noexcept { return u_; }
    ModulusIdeal ideal() const noexcept { return ideal_; }

    friend bool operator==(const UnitOneClass& a, const UnitOneClass& b) { return a.u_ == b.u_; }

private:
    LocalElem u_;
    ModulusIdeal ideal_;
};

/// H(f) = 1 + (f(1,...,1)^-1 f(t_2,...,t_{n+1}) - 1)(1 - t_1).
AdmissiblePoly homotopy(const AdmissiblePoly& f);
/// H on P^gr through the same formula applied to the rational function
/// phi = F/G: H(phi) = (G' + (F' - G')(1 - t_1)) / G', where ' shifts
/// t_i to t_{i+1}. On a polynomial this agrees with homotopy(f).
CubicalFraction homotopy(const CubicalFraction& c);
/// Scaled variant (G' + (scale F' - G')(1 - t_1)) / G'. Faces of H(c) at
/// epsilon = 0 and i >= 2 are scaled by face_scale(c, i - 1, 0); the scale
/// is 1 on NP, where the unscaled identity holds.
CubicalFraction homotopy(const CubicalFraction& c, const LocalElem& scale);

/// Value at (1,...,1) of face(c, i, eps) for the a_0 = 1 representative of c.
LocalElem face_scale(const CubicalFraction& c, std::size_t i, FaceValue eps);

struct Eq11Check {
    std::size_t face;   // 1-based face index of H(c)
    FaceValue eps;
    bool passed;
};

struct Eq11Report {
    std::vector<Eq11Check> checks;
    bool passed() const;
    std::string to_string() const;
};

/// Checks face(H(c), i, eps) = H_s(face(c, i-1, eps)) with s = face_scale(c, i-1, eps) for i >= 2,
/// face(H(c), 1, inf) = 1 and face(H(c), 1, 0) = c.
Eq11Report verify_eq11(const CubicalFraction& c);

/// delta(f/g) = f(0) g(1) / (g(0) f(1)) for arity-one classes.
UnitOneClass delta(const CubicalFraction& c);

/// Class of 1 + (u - 1)(1 - t); delta(unit_section(u)) = u.
CubicalFraction unit_section(const UnitOneClass& u, const Context& ctx);

/// w = H(f)/H(g) for delta(f) = delta(g); checks w in NP_2 and face(w,1,0) = f/g.
CubicalFraction exactness_witness(const CubicalFraction& f, const CubicalFraction& g);

/// H(c) for a cycle c of NP_n (n > 1) with face(c,1,0) = 1; checks face(H(c),1,0) = c.
CubicalFraction contraction_witness(const CubicalFraction& c);

/// Normalized h of arity 1 with h(0) = h(1) = 1.
AdmissiblePoly balanced_factor(cubical::AdmissibleGenerator& gen);

/// (f, g) with g = f * h, h = balanced_factor(gen); hence delta(f) = delta(g).
std::pair<AdmissiblePoly, AdmissiblePoly> delta_matched_pair(cubical::AdmissibleGenerator& gen);

/// Random nontrivial 2-cycle of NP: w1 / w2 with w1 = H(f)/H(g) and
/// w2 = H(f k)/H(g k) for a delta-matched pair (f, g) and random k.
CubicalFraction random_np2_cycle(cubical::AdmissibleGenerator& gen);

/// Random 3-cycle of NP: H(a) H(b) / H(a b) for 2-cycles a, b.
CubicalFraction random_np3_cycle(cubical::AdmissibleGenerator& gen);

} // namespace relcycles::weight1
