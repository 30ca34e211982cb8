#include "relcycles/random.hpp"

namespace relcycles {

Scalar Rng::scalar(Field f) {
    if (f.is_prime()) return Scalar(f, static_cast<long>(below(f.characteristic())));
    const long n = between(-4, 4);
    if (chance(1, 5)) return Scalar(f, mpq_class(n, 2));
    return Scalar(f, n);
}

Scalar Rng::nonzero_scalar(Field f) {
    for (;;) {
        Scalar s = scalar(f);
        if (!s.is_zero()) return s;
    }
}

UPoly Rng::upoly(Field f, long max_degree) {
    std::vector<Scalar> c;
    for (long i = 0; i <= max_degree; ++i) c.push_back(scalar(f));
    return UPoly(f, std::move(c));
}

LocalElem Rng::local_unit(Field f) {
    std::vector<Scalar> num{nonzero_scalar(f), scalar(f)};
    if (chance(1, 3)) num.push_back(scalar(f));
    UPoly numerator(f, std::move(num));
    if (!chance(1, 4)) return LocalElem(numerator);
    UPoly denominator(f, std::vector<Scalar>{Scalar::one(f), nonzero_scalar(f)});
    return LocalElem(numerator, denominator);
}

} // namespace relcycles
