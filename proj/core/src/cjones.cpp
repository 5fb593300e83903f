#include "qvlab/cjones.hpp"

#include <algorithm>
#include <string>

#include "qvlab/bracket.hpp"
#include "qvlab/errors.hpp"

namespace qvl {

namespace bmp = boost::multiprecision;

BigComplex q_pochhammer(const BigComplex& x, int m) {
  BigComplex acc(1);
  BigComplex xp(1);
  for (int j = 1; j <= m; ++j) {
    xp *= x;
    acc *= BigComplex(1) - xp;
  }
  return acc;
}

EvalPoint EvalPoint::from_u(const BigComplex& u, int N) {
  if (N < 1) throw InputError("N must be positive");
  if (u.is_zero()) throw InputError("u must be nonzero");
  EvalPoint p;
  p.u = u;
  p.N = N;
  p.hbar = u / BigComplex(N);
  p.k = BigComplex::i_pi() * BigComplex(N) / u;
  return p;
}

LaurentHalf colored_jones_unknot(int N) {
  if (N < 1) throw InputError("N must be positive");
  return LaurentHalf::quantum_integer(N);
}

LaurentHalf colored_jones_by_cabling(const PlanarDiagram& knot, int N) {
  if (knot.is_link()) throw InputError("colored Jones by cabling needs a knot");
  switch (N) {
    case 1:
      return LaurentHalf(1);
    case 2:
      return jones(knot);
    case 3:
      return jones(cable(knot, 2)) - LaurentHalf(1);
    default:
      throw CrossingBudgetExceeded("cabling reaches only N <= 3 within the crossing budget");
  }
}

LaurentHalf habiro_41(int N) {
  if (N < 1) throw InputError("N must be positive");
  LaurentHalf sum(1);
  LaurentHalf term(1);
  for (int k = 1; k < N; ++k) {
    LaurentHalf a = LaurentHalf::monomial(1, N + k) - LaurentHalf::monomial(1, -N - k);
    LaurentHalf b = LaurentHalf::monomial(1, N - k) - LaurentHalf::monomial(1, k - N);
    term *= a * b;
    sum += term;
  }
  return LaurentHalf::quantum_integer(N) * sum;
}

namespace {

// Sum of |(q)_m|^2 at q = e^{2 pi i/N}; every term is nonnegative so there is
// no cancellation and the rounding error is a small multiple of N ulps.
Real kashaev_sum(int N) {
  BigComplex q = BigComplex::polar(Real(1), 2 * pi_real() / N);
  Real sum = 0;
  BigComplex poch(1);
  BigComplex qm(1);
  for (int m = 0; m < N; ++m) {
    sum += poch.norm();
    qm *= q;
    poch *= BigComplex(1) - qm;
  }
  return sum;
}

}  // namespace

Certified kashaev_41(int N, unsigned digits) {
  if (N < 1) throw InputError("N must be positive");
  Real coarse;
  Real fine;
  {
    PrecisionScope scope(2 * digits);
    coarse = kashaev_sum(N);
  }
  {
    PrecisionScope scope(2 * digits + 20);
    fine = kashaev_sum(N);
  }
  Certified out;
  out.value = BigComplex(Real(fine));
  // The coarse run carries the larger error; its distance to the fine run bounds it.
  out.error = Real(bmp::abs(fine - coarse)) + bmp::abs(Real(fine)) * ten_to_minus(2 * digits - 2);
  if (out.relative_error() > ten_to_minus(digits / 2)) {
    throw PrecisionExhausted("Kashaev sum at N=" + std::to_string(N) + " not certified at " +
                             std::to_string(digits) + " digits");
  }
  return out;
}

BigComplex kashaev_from_symbolic(const LaurentHalf& jn, int N) {
  LaurentHalf reduced = jn.divide_exact(LaurentHalf::quantum_integer(N));
  return reduced.evaluate(BigComplex::polar(Real(1), pi_real() / N));
}

namespace {

struct RawJn {
  BigComplex value;
  BigComplex reduced;
  Real largest_term;
};

// With q^{1/2} = e^{hbar}: (s^{N+k}-s^{-N-k})(s^{N-k}-s^{k-N}) = 2cosh(2u) - q^k - q^{-k}.
RawJn habiro_sum_numeric(const BigComplex& u, int N) {
  BigComplex hbar = u / BigComplex(N);
  BigComplex q = exp(hbar * BigComplex(2));
  BigComplex qinv = BigComplex(1) / q;
  BigComplex two_cosh = exp(u * BigComplex(2)) + exp(u * BigComplex(-2));
  BigComplex sum(1);
  BigComplex term(1);
  BigComplex qk(1);
  BigComplex qmk(1);
  Real largest = 1;
  for (int k = 1; k < N; ++k) {
    qk *= q;
    qmk *= qinv;
    term *= two_cosh - qk - qmk;
    sum += term;
    largest = bmp::max(largest, term.abs());
  }
  RawJn out;
  out.reduced = sum;
  out.value = sum * sinh(u) / sinh(hbar);
  out.largest_term = largest;
  return out;
}

}  // namespace

JnValue jn_numeric(const BigComplex& u, int N, unsigned digits) {
  if (N < 1) throw InputError("N must be positive");
  if (u.is_zero()) throw InputError("u must be nonzero");
  // Cancellation between terms costs log10(largest/|sum|) digits; start with
  // twice the target and add whatever the previous attempt says was lost.
  unsigned work = 2 * digits;
  for (int attempt = 0; attempt < 6; ++attempt) {
    RawJn a;
    RawJn b;
    {
      PrecisionScope scope(work);
      a = habiro_sum_numeric(u, N);
    }
    {
      PrecisionScope scope(work + 20);
      b = habiro_sum_numeric(u, N);
    }
    Real err_reduced = (a.reduced - b.reduced).abs();
    Real err_value = (a.value - b.value).abs();
    Real mag = b.reduced.abs();
    Real target = ten_to_minus(digits / 2);
    if (mag > 0 && err_reduced / mag <= target) {
      JnValue out;
      out.reduced = {b.reduced, err_reduced};
      // At a zero of [N] the value itself vanishes; the bound stays absolute.
      out.value = {b.value, err_value};
      return out;
    }
    Real lost = mag > 0 ? Real(bmp::log10(b.largest_term / mag)) : Real(digits);
    work += static_cast<unsigned>(std::max(20.0, lost.convert_to<double>() + 10.0));
  }
  throw PrecisionExhausted("figure-eight J_" + std::to_string(N) + " not certified at " + std::to_string(digits) +
                           " digits; raise --digits");
}

}  // namespace qvl
