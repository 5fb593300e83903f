#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qvlab/bigcomplex.hpp"

namespace qvl {

/// Integer polynomial in (l, m) with nonnegative exponents.
/// Terms are keyed by (deg_l, deg_m); zero coefficients are never stored.
class BivarPoly {
 public:
  struct Term {
    mpz_class coeff;
    int deg_l;
    int deg_m;
  };
  using Key = std::pair<int, int>;

  BivarPoly() = default;
  explicit BivarPoly(const std::vector<Term>& terms);

  static BivarPoly l_power(int a) { return BivarPoly({{1, a, 0}}); }
  static BivarPoly m_power(int b) { return BivarPoly({{1, 0, b}}); }
  static BivarPoly constant(long c) { return BivarPoly({{c, 0, 0}}); }

  /// (l - 1)(m^4 l^2 - (1 - m^2 - 2m^4 - m^6 + m^8) l + m^4) for the figure-eight knot.
  static BivarPoly figure_eight();

  const std::map<Key, mpz_class>& terms() const { return terms_; }
  std::vector<Term> term_list() const;
  bool is_zero() const { return terms_.empty(); }
  int degree_l() const;
  int degree_m() const;

  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

  BivarPoly d_dl() const;
  BivarPoly d_dm() const;

  /// gcd of all coefficients (positive), 0 for the zero polynomial.
  mpz_class content() const;
  /// Divides by the content and makes the leading term (largest key) positive.
  BivarPoly primitive_part() const;

  BigComplex evaluate(const BigComplex& l, const BigComplex& m) const;
  /// Coefficients of l^0..l^deg at a fixed numeric m.
  std::vector<BigComplex> coefficients_in_l(const BigComplex& m) const;
  /// Exact coefficients of l^0..l^deg at an integer m.
  std::vector<mpz_class> coefficients_in_l(const mpz_class& m) const;

  std::string to_string() const;

 private:
  void add_term(int a, int b, const mpz_class& c);
  std::map<Key, mpz_class> terms_;
};

/// Discriminant of sum c_k x^k (exact, from the Sylvester determinant of p and p').
mpz_class discriminant(const std::vector<mpz_class>& coeffs);

}  // namespace qvl
