#pragma once

#include <gmpxx.h>

#include "qvlab/bigcomplex.hpp"

namespace qvl {

/// Bernoulli number B_n as an exact rational (B_1 = -1/2). Cached.
mpq_class bernoulli(int n);

/// Principal-branch dilogarithm Li_2(z) with a bound on the truncation and
/// rounding error, computed at `digits` decimal digits plus guard digits.
///
/// Regions:
///   |z| <= 1/2   Maclaurin series sum z^n/n^2; tail <= |z|^{n+1}/((n+1)^2 (1-|z|)).
///   |z| >= 2     inversion Li_2(z) = -pi^2/6 - log^2(-z)/2 - Li_2(1/z).
///   otherwise    expansion in mu = log z about z = 1 (valid for |mu| < 2 pi);
///                the Bernoulli tail shrinks by (|mu|/2pi)^2 per term.
/// For real z > 1 the imaginary part is -pi log z (the limit from below the cut).
Certified dilog(const BigComplex& z, unsigned digits);

/// Li_2 at the precision of the current scope.
BigComplex li2(const BigComplex& z);

}  // namespace qvl
