#pragma once

#include <utility>
#include <vector>

#include "relcycles/upoly.hpp"

namespace relcycles {

/// f = unit * prod p_i^{e_i} with p_i monic irreducible, sorted by UPoly order.
struct Factorization {
    Scalar unit;
    std::vector<std::pair<UPoly, long>> factors;
};

/// Complete factorization over F_p. Over Q only products of linear factors
/// are handled; any irreducible factor of degree > 1 raises Unsupported.
/// Throws ZeroFunction for f = 0.
Factorization factor(const UPoly& f);

/// Over Q only degree-1 polynomials are accepted as irreducible.
bool is_irreducible(const UPoly& f);

/// All monic irreducible polynomials of the given degree over F_p.
std::vector<UPoly> monic_irreducibles(Field field, long degree);

/// All monic polynomials of degree exactly d over F_p, in lexicographic order.
std::vector<UPoly> monic_polynomials(Field field, long degree);

/// All polynomials of degree <= d over F_p (including zero).
std::vector<UPoly> polynomials_up_to(Field field, long degree);

} // namespace relcycles
