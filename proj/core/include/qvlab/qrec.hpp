#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvlab/bivar_poly.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/laurent.hpp"
#include "qvlab/qweyl.hpp"

namespace qvl {

/// Symbolic values J_1..J_maxN of a colored Jones sequence.
struct JSequence {
  std::string knot;
  std::vector<LaurentHalf> values;  // values[N-1] = J_N

  int max_N() const { return static_cast<int>(values.size()); }
  const LaurentHalf& at(int N) const;

  static JSequence figure_eight(int max_N);
  static JSequence unknot(int max_N);
  static JSequence zero(int max_N);
};

/// (op J)_N as an exact Laurent polynomial. Needs every coefficient of op to
/// be a Laurent polynomial and N + op.order() <= seq.max_N().
LaurentHalf apply(const QWeylOp& op, const JSequence& seq, int N);

/// op J = rhs, where rhs has no l powers and acts on the constant sequence 1.
/// For a homogeneous recursion rhs is zero.
struct Recursion {
  QWeylOp op;
  QWeylOp rhs;
  bool inhomogeneous = false;
  int s_degree = 0;  // ansatz degree in s the solution was found at
  std::vector<int> fit_N;
  std::vector<int> holdout_N;
};

/// (op J)_N - (rhs 1)_N.
LaurentHalf residual(const Recursion& rec, const JSequence& seq, int N);

struct DiscoveryOptions {
  int order = 3;
  int m_degree = 14;
  bool inhomogeneous = false;
  /// Coefficients are searched as polynomials in s of degree <= D for
  /// D = 0, 4, 8, ... up to this bound.
  int max_s_degree = 32;
  int holdout = 4;
};

/// The discovered recursion failed on a held-out index.
class RecursionCounterexample : public NumericError {
 public:
  RecursionCounterexample(const std::string& what, int index) : NumericError(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Searches for sum_{a<=order, b<=m_degree} c_{a,b}(s) m^b l^a annihilating
/// the sequence on a fit window, holding out the last `holdout` usable
/// indices. Coefficients are found modulo word-size primes, lifted by CRT and
/// rational reconstruction, and the result is re-verified in exact integer
/// arithmetic on every fit and held-out index. Returns nullopt when no
/// nonzero solution exists within the s-degree bound. A sequence that is
/// identically zero yields the identity operator.
std::optional<Recursion> discover_recursion(const JSequence& seq, const DiscoveryOptions& options);

/// s -> 1, l^ -> l, m^ -> m after clearing denominators and dividing out
/// common factors of (s - 1); primitive up to sign. Throws InputError when a
/// coefficient has a pole at s = 1.
BivarPoly classical_limit(const QWeylOp& op);

}  // namespace qvl
