#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace relcycles {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;

/// Smith normal form of the row lattice L spanned by the rows of an integer
/// matrix with `cols` columns: U R V = diag(d_0, ..., d_{r-1}, 0, ...), V
/// unimodular. Z^cols / L = (+)_t Z/d_t with d_t = 0 meaning a free summand.
class SmithForm {
public:
    SmithForm(const IntMatrix& rows, std::size_t cols);

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return rank_; }
    /// Length cols; d_t | d_{t+1} for t + 1 < rank, zeros after the rank.
    const IntVector& invariants() const noexcept { return diag_; }
    const IntMatrix& v() const noexcept { return v_; }
    const IntMatrix& v_inverse() const noexcept { return v_inv_; }

    /// Coordinates of v + L: (v V)_t reduced mod d_t (unreduced where d_t = 0).
    IntVector reduce(const IntVector& vec) const;

    /// Order of the torsion subgroup, the product of the nonzero invariants.
    mpz_class torsion_order() const;

private:
    std::size_t cols_;
    std::size_t rank_ = 0;
    IntVector diag_;
    IntMatrix v_, v_inv_;
};

} // namespace relcycles
