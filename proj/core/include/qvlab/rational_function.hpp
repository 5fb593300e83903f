#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qvlab/laurent.hpp"

namespace qvl {

/// Dense integer polynomial in s, c[k] multiplies s^k, no trailing zeros.
using PolyZ = std::vector<mpz_class>;

/// Primitive gcd of two integer polynomials (positive leading coefficient).
PolyZ poly_gcd(PolyZ a, PolyZ b);

/// Exact rational function num/den of s with integer coefficients.
///
/// Canonical form: gcd(num, den) = 1 as polynomials after removing powers
/// of s, den has positive leading coefficient and content folded into num
/// where possible, and any monomial factor lives in num as a Laurent shift.
/// Equal functions therefore compare equal.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                    // NOLINT(implicit)
  RationalFunction(const LaurentHalf& p) : num_(p), den_(1) {}      // NOLINT(implicit)
  RationalFunction(const LaurentHalf& num, const LaurentHalf& den);

  static RationalFunction s_power(int k) { return RationalFunction(LaurentHalf::monomial(1, k)); }

  const LaurentHalf& num() const { return num_; }
  const LaurentHalf& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_ == LaurentHalf(1); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void canonicalize();
  LaurentHalf num_;
  LaurentHalf den_;
};

}  // namespace qvl
