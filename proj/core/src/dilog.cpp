#include "qvlab/dilog.hpp"

#include <mutex>
#include <vector>

#include "qvlab/errors.hpp"

namespace qvl {

namespace bmp = boost::multiprecision;

mpq_class bernoulli(int n) {
  static std::mutex mu;
  static std::vector<mpq_class> cache{mpq_class(1)};
  if (n < 0) throw InputError("Bernoulli index must be nonnegative");
  std::lock_guard<std::mutex> lock(mu);
  // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      acc += mpq_class(binom) * cache[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    mpq_class b = -acc / (m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[static_cast<std::size_t>(n)];
}

namespace {

Real to_real(const mpq_class& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

Certified maclaurin(const BigComplex& z, const Real& eps) {
  const Real r = z.abs();
  BigComplex sum;
  BigComplex zn = z;
  for (long n = 1;; ++n) {
    sum += zn / BigComplex(Real(n * n));
    const Real next = bmp::pow(r, n + 1) / Real((n + 1) * (n + 1));
    if (next / (1 - r) < eps) return {sum, next / (1 - r)};
    zn *= z;
  }
}

Certified about_one(const BigComplex& z, const Real& eps) {
  const BigComplex mu = log(z);
  const Real pi = pi_real();
  const Real ratio = mu.norm() / (4 * pi * pi);
  if (ratio >= Real(0.7)) throw PrecisionExhausted("dilog expansion about 1 outside its safe radius");
  BigComplex sum = BigComplex(pi * pi / 6) + mu * (BigComplex(1) - log(-mu)) - mu * mu / BigComplex(4);
  const BigComplex mu2 = mu * mu;
  BigComplex mupow = mu * mu2;  // mu^{2j+1}
  Real fact = 6;                // (2j+1)!
  for (int j = 1;; ++j) {
    const Real c = to_real(bernoulli(2 * j)) / (2 * j) / fact;
    const BigComplex term = mupow * BigComplex(c);
    sum -= term;
    const Real mag = term.abs();
    // |B_{2j}|/(2j)! ~ 2/(2 pi)^{2j}: successive terms shrink by about `ratio`.
    if (j > 2 && mag * ratio / (1 - ratio) * 2 < eps) return {sum, mag * ratio / (1 - ratio) * 2};
    mupow *= mu2;
    fact *= Real((2 * j + 2) * (2 * j + 3));
  }
}

Certified dilog_raw(const BigComplex& z, const Real& eps) {
  if (z.is_zero()) return {BigComplex(), Real(0)};
  const Real r = z.abs();
  const Real pi = pi_real();
  if (z.im() == 0 && z.re() == 1) return {BigComplex(pi * pi / 6), Real(0)};
  if (r <= Real(0.5)) return maclaurin(z, eps);
  if (r >= 2) {
    Certified inner = maclaurin(BigComplex(1) / z, eps);
    BigComplex l = log(-z);
    // For real z > 1, log(-z) = log z + i pi reproduces the -i pi log z side of the cut.
    return {BigComplex(-pi * pi / 6) - l * l / BigComplex(2) - inner.value, inner.error};
  }
  return about_one(z, eps);
}

}  // namespace

Certified dilog(const BigComplex& z, unsigned digits) {
  Certified out;
  {
    PrecisionScope scope(digits + 15);
    out = dilog_raw(z, ten_to_minus(digits + 5));
    // Rounding: a few dozen operations at digits+15 digits, scaled by the result size.
    out.error += (out.value.abs() + 1) * ten_to_minus(digits + 10);
  }
  return {out.value.rounded(), Real(out.error)};
}

BigComplex li2(const BigComplex& z) { return dilog(z, current_digits()).value; }

}  // namespace qvl
