#pragma once

#include "qvlab/bigcomplex.hpp"
#include "qvlab/laurent.hpp"
#include "qvlab/planar_diagram.hpp"

namespace qvl {

/// q-Pochhammer (x)_m = (1-x)(1-x^2)...(1-x^m), with (x)_0 = 1.
BigComplex q_pochhammer(const BigComplex& x, int m);

/// A point q = e^{2 hbar}. When built from (u, N), hbar = u/N and k = i pi N / u.
struct EvalPoint {
  BigComplex hbar;
  BigComplex u;
  BigComplex k;
  int N = 0;

  static EvalPoint from_u(const BigComplex& u, int N);
};

/// [N], the colored Jones polynomial of the unknot.
LaurentHalf colored_jones_unknot(int N);

/// J_1 = 1, J_2 = J(K), J_3 = J(K^2) - 1 from the 2-parallel cable.
LaurentHalf colored_jones_by_cabling(const PlanarDiagram& knot, int N);

/// Unnormalized colored Jones polynomial of the figure-eight knot from its
/// cyclotomic sum, J_N = [N] * sum_j prod_{k<=j} (s^{N+k}-s^{-N-k})(s^{N-k}-s^{k-N}).
LaurentHalf habiro_41(int N);

/// V_N(4_1) = sum_{m<N} (q)_m (q^{-1})_m at q = e^{2 pi i/N}, with a relative
/// error bound below 10^{-digits/2}. Throws PrecisionExhausted otherwise.
Certified kashaev_41(int N, unsigned digits);

/// V_N from a symbolic J_N: divides by [N] exactly, then evaluates at
/// s = e^{i pi/N}, so the zero of [N] never appears in a numeric division.
BigComplex kashaev_from_symbolic(const LaurentHalf& jn, int N);

struct JnValue {
  Certified value;    // J_N(4_1; q)
  Certified reduced;  // J_N / [N], the cyclotomic sum alone
};

/// Figure-eight J_N evaluated numerically at q = e^{2u/N}. Working precision
/// is raised until two evaluations agree to the target; the sum is taken
/// literally, term by term.
JnValue jn_numeric(const BigComplex& u, int N, unsigned digits);

}  // namespace qvl
