#pragma once

#include <cstdint>
#include <random>

#include "syzcurve/cyclo.hpp"

namespace syz {

using Rng = std::mt19937_64;

// Nonzero rational with numerator in [-bound, bound] and denominator in
// [1, bound].
inline Rat random_rational(Rng& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    long n = 0;
    while (n == 0) n = num(rng);
    Rat r(n, den(rng));
    r.canonicalize();
    return r;
}

}  // namespace syz
