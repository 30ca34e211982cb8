#pragma once

#include <cstdint>
#include <random>

#include "relcycles/local.hpp"

namespace relcycles {

/// Seedable source for all randomized suites. Draws are reduced with plain
/// modulo so a seed reproduces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    /// Integer in [lo, hi].
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
    bool chance(unsigned num, unsigned den) { return below(den) < num; }

    /// Random element of the field: F_p uniformly, Q from small integers and halves.
    Scalar scalar(Field f);
    Scalar nonzero_scalar(Field f);
    /// Random polynomial of degree <= max_degree.
    UPoly upoly(Field f, long max_degree);
    /// Random unit of A = k[x]_(x): (c0 + c1 x + c2 x^2) / (1 + d x) with c0 != 0;
    /// the denominator is present one time in four.
    LocalElem local_unit(Field f);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
};

} // namespace relcycles
