#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "qvlab/bigcomplex.hpp"

namespace qvl {

/// Exact Laurent polynomial in s = q^{1/2} with big-integer coefficients.
///
/// Exponents are stored as integer powers of s, so q^{5/2} is exponent 5.
/// Zero coefficients are never stored, which makes the representation
/// canonical: two polynomials are equal iff their term maps are equal.
class LaurentHalf {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentHalf() = default;
  LaurentHalf(long constant);  // NOLINT(implicit)

  static LaurentHalf monomial(const mpz_class& coeff, int s_exponent);
  /// Quantum integer [n] = (s^n - s^-n)/(s - s^-1).
  static LaurentHalf quantum_integer(int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(int s_exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentHalf& operator+=(const LaurentHalf& o);
  LaurentHalf& operator-=(const LaurentHalf& o);
  LaurentHalf& operator*=(const LaurentHalf& o);
  LaurentHalf operator-() const;

  friend LaurentHalf operator+(LaurentHalf a, const LaurentHalf& b) { return a += b; }
  friend LaurentHalf operator-(LaurentHalf a, const LaurentHalf& b) { return a -= b; }
  friend LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b);
  friend bool operator==(const LaurentHalf& a, const LaurentHalf& b) { return a.terms_ == b.terms_; }

  /// Multiplies by s^k.
  LaurentHalf shifted(int k) const;
  LaurentHalf pow(unsigned n) const;
  /// s -> s^{-1}.
  LaurentHalf mirrored() const;
  /// Substitutes s -> s^k (k may be negative).
  LaurentHalf substitute_power(int k) const;
  bool is_palindromic() const { return mirrored() == *this; }

  /// Exact quotient; throws std::domain_error when the division leaves a remainder.
  LaurentHalf divide_exact(const LaurentHalf& divisor) const;

  mpz_class evaluate_at_one() const;
  BigComplex evaluate(const BigComplex& s) const;

  /// Human-readable form in q, e.g. "q^(5/2) + q^(-5/2)".
  std::string to_q_string() const;
  /// q-exponent label for an s-exponent: 5 -> "5/2", 4 -> "2", -1 -> "-1/2".
  static std::string q_exponent_label(int s_exponent);

 private:
  void add_term(int e, const mpz_class& c);
  Terms terms_;
};

}  // namespace qvl
