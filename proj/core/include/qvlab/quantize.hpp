#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qvlab/poly_obs.hpp"

namespace qvl {

/// Antisymmetric matrix alpha^{ij} of polynomial entries, {f,g} = alpha^{ij} d_i f d_j g.
class PoissonBivector {
 public:
  /// Checks antisymmetry exactly; throws InputError otherwise.
  explicit PoissonBivector(std::vector<std::vector<PolyObs>> entries);

  /// alpha^{2k,2k+1} = 1 on R^{2n}; for d = 2 this is {x, p} = 1.
  static PoissonBivector canonical(int dim = 2);
  /// d = 2 with alpha^{12} = a, alpha^{21} = -a.
  static PoissonBivector planar(const PolyObs& a);

  int dim() const { return static_cast<int>(entries_.size()); }
  const PolyObs& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  bool is_constant() const;
  /// sum over cyclic (i,j,k) of alpha^{il} d_l alpha^{jk} vanishes for all i,j,k.
  bool satisfies_jacobi() const;

 private:
  std::vector<std::vector<PolyObs>> entries_;
};

/// {f, g} = alpha^{ij} d_i f d_j g.
PolyObs poisson_bracket(const PolyObs& f, const PolyObs& g, const PoissonBivector& alpha);

/// f * g = sum_n hbar^n / n! (alpha^{ij} d_i^x d_j^y)^n f(x) g(y) at y = x, keeping
/// powers hbar^n with n <= order (order < 0 keeps the whole finite series).
/// Needs a constant alpha and plain (non-Gaussian) f, g.
PolyObs moyal(const PolyObs& f, const PolyObs& g, const PoissonBivector& alpha, int order = -1);

/// Ordered pair of maps i, j : {1..n} -> {1..n, L, R}, stored 0-based so that
/// vertex k of the paper's numbering is index k-1. Targets are vertex
/// numbers 1..n or kLeft / kRight.
struct AdmissibleGraph {
  static constexpr int kLeft = -1;
  static constexpr int kRight = -2;

  int n = 0;
  std::vector<int> i;
  std::vector<int> j;

  /// No fixed points and i_k != j_k; targets in range.
  bool valid() const;
  std::string to_string() const;  // "i=(L,3,1,3) j=(2,R,L,2)"
  friend bool operator==(const AdmissibleGraph&, const AdmissibleGraph&) = default;
};

constexpr int kMaxGraphOrder = 4;

/// Every admissible graph of order n, in lexicographic order of
/// (i_1, j_1, ..., i_n, j_n). Throws InputError for n > kMaxGraphOrder.
std::vector<AdmissibleGraph> enumerate_graphs(int n);

/// n^n (n+1)^n.
long long admissible_graph_count(int n);

/// B_Gamma(f, g): vertex k contributes alpha^{I_k J_k}, the two edges out of
/// k carry the indices I_k and J_k, and an edge landing on a vertex, on L or
/// on R differentiates that vertex's alpha factor, f or g along its index.
/// Summed over all index assignments. Throws InputError for invalid graphs.
PolyObs graph_operator(const AdmissibleGraph& gamma, const PoissonBivector& alpha, const PolyObs& f,
                       const PolyObs& g);

struct BohrSommerfeld {
  bool quantizable = false;
  std::optional<mpz_class> n;
  double action = 0.0;  // loop integral of p dx over the energy-E circle, 2 pi E
};

/// The loop integral 2 pi E must lie in 2 pi hbar Z, i.e. E / hbar is an integer.
BohrSommerfeld bohr_sommerfeld(const mpq_class& energy, const mpq_class& hbar);

/// Polynomial part f_n of the n-th oscillator state psi_n = f_n exp(-x^2/2 hbar),
/// from f_0 = 1 and f_{n+1} = 2x f_n - hbar f_n'. Lives on d = 1.
PolyObs oscillator_state(int n);

/// (O_H - E) psi_n with O_H = (x^2 + p^2)/2 and p = -i hbar d/dx, as a
/// Gaussian-flagged observable on d = 1. E = energy_over_hbar * hbar and
/// defaults to n + 1/2. Requires 0 <= n <= 6.
PolyObs oscillator_check(int n, std::optional<mpq_class> energy_over_hbar = std::nullopt);

}  // namespace qvl
