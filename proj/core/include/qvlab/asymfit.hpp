#pragma once

#include <string>
#include <vector>

#include "qvlab/bigcomplex.hpp"

namespace qvl {

struct SequenceSample {
  int N = 0;
  BigComplex value;
  Real error;            // absolute error bound on value
  BigComplex log_value;  // phase continued along the sample list
};

/// Figure-eight samples at the given N (increasing). At u = i pi the values
/// are Kashaev invariants V_N; elsewhere they are J_N at q = e^{2u/N}.
/// Each log is placed on the branch nearest the linear extrapolation of the
/// previous two, so the phase is continuous along the list.
std::vector<SequenceSample> build_sequence(const BigComplex& u, const std::vector<int>& Ns, unsigned digits);

/// True when u equals i pi to the working precision.
bool is_complete_point(const BigComplex& u);

/// log V_N ~ a N + b log N + c + sum_{i=1..order} d_i N^{-i}, b real.
struct FitReport {
  BigComplex a;
  Real b;
  BigComplex c;
  std::vector<BigComplex> d;
  Real residual;   // max |model - log value| over held-out samples
  Real condition;  // 1-norm condition estimate of the scaled normal matrix
  std::vector<int> fit_N;
  std::vector<int> holdout_N;
  bool log_constrained = false;
};

struct FitOptions {
  int model_order = 3;
  bool constrain_log = false;
  Real fixed_b = Real(3) / 2;
  /// Every `holdout_stride`-th sample (starting from the second) is held out.
  int holdout_stride = 5;
  /// Throw IllConditioned when the condition estimate exceeds 10^{digits - margin}.
  unsigned condition_margin = 16;
};

/// Least-squares fit in log space with equal weights. Real and imaginary
/// parts are fitted separately; b enters only the real part. Columns are
/// scaled to unit norm before forming the normal equations.
FitReport fit_expansion(const std::vector<SequenceSample>& samples, const FitOptions& options);

struct Discrepancy {
  std::string quantity;
  BigComplex fitted;
  BigComplex predicted;
  Real relative_error;
  bool on_real_part = true;  // false: |fitted - predicted| / |predicted|
};

/// Fitted (a, b, c, d_1) against -I_CS(u)/(4u), 3/2, the torsion constant
/// and the S_2 term. At u = i pi the V_N forms are used (constant
/// (1/2)log(-i pi T/4) - (3/2) log(i pi), d_1 = i pi S~_2); elsewhere the J_N
/// forms ((1/2)log(i T(u)/4 pi) - (3/2) log u, d_1 = u S_2(u)).
std::vector<Discrepancy> compare_quantum_vc(const FitReport& report, const BigComplex& u);

}  // namespace qvl
