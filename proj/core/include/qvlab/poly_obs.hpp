#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace qvl {

/// Polynomial observable on a d-dimensional phase space with exact rational
/// coefficients. Each monomial also carries an integer power of hbar, which
/// may be negative. When `gaussian()` is set the value is the polynomial times
/// exp(-x_1^2 / 2 hbar).
class PolyObs {
 public:
  /// Exponents of x_1..x_d followed by the hbar power.
  using Monomial = std::vector<int>;

  explicit PolyObs(int dim = 2);

  static PolyObs constant(const mpq_class& c, int dim = 2);
  static PolyObs variable(int index, int dim = 2);  // x_{index+1}, index from 0
  static PolyObs hbar(int dim = 2, int power = 1);
  static PolyObs monomial(const mpq_class& c, const std::vector<int>& x_exponents, int hbar_power = 0);

  /// Dense random polynomial of total degree <= max_degree with integer
  /// coefficients in [-bound, bound].
  static PolyObs random(int dim, int max_degree, std::mt19937_64& rng, int bound = 5);

  int dim() const { return dim_; }
  bool gaussian() const { return gaussian_; }
  PolyObs with_gaussian(bool on) const;

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// No dependence on x (hbar powers allowed).
  bool is_constant() const;
  int degree() const;  // total degree in x, -1 for zero
  /// Coefficient of hbar^k, as a polynomial without hbar.
  PolyObs hbar_part(int k) const;
  int max_hbar_power() const;

  /// d/dx_{index+1}. The Gaussian factor is differentiated as well.
  PolyObs derivative(int index) const;

  PolyObs& operator+=(const PolyObs& o);
  PolyObs& operator-=(const PolyObs& o);
  PolyObs& operator*=(const mpq_class& c);
  friend PolyObs operator+(PolyObs a, const PolyObs& b) { return a += b; }
  friend PolyObs operator-(PolyObs a, const PolyObs& b) { return a -= b; }
  friend PolyObs operator*(PolyObs a, const mpq_class& c) { return a *= c; }
  friend PolyObs operator*(const mpq_class& c, PolyObs a) { return a *= c; }
  /// At most one factor may carry the Gaussian.
  friend PolyObs operator*(const PolyObs& a, const PolyObs& b);
  PolyObs operator-() const;
  friend bool operator==(const PolyObs& a, const PolyObs& b) {
    return a.dim_ == b.dim_ && a.gaussian_ == b.gaussian_ && a.terms_ == b.terms_;
  }

  /// Variables print as x (d = 1), x, p (d = 2) or x1..xd; hbar as "h".
  std::string to_string() const;

  void add_term(const Monomial& m, const mpq_class& c);

 private:
  int dim_;
  bool gaussian_ = false;
  std::map<Monomial, mpq_class> terms_;
};

}  // namespace qvl
