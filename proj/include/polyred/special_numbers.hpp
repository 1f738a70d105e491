#pragma once

#include "polyred/rational.hpp"

namespace polyred {

/// Bernoulli number B_n with B_1 = -1/2. Memoized; safe to call concurrently.
Rational bernoulli(int n);

/// zeta(2n) / pi^{2n} as an exact rational, n >= 1.
Rational even_zeta_pi_ratio(int n);

/// Generalized harmonic number H_n^{(r)} = sum_{k=1}^{n} k^{-r}.
Rational harmonic(int n, int r);

}  // namespace polyred
