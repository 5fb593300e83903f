#pragma once

// Arbitrary-precision real and complex numbers on top of MPFR.
//
// Every Real created while a PrecisionScope is alive carries that scope's
// mantissa. Numeric routines open their own scope at (typically) twice the
// caller's target digits and hand back values rounded to the caller's scope.

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace qvl {

using Real = boost::multiprecision::mpfr_float;

/// Sets the decimal precision used for newly created Reals until destroyed.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

unsigned current_digits();

/// 10^{-digits} as a Real at the current precision.
Real ten_to_minus(unsigned digits);

Real pi_real();

class BigComplex {
 public:
  BigComplex() : re_(0), im_(0) {}
  BigComplex(Real re) : re_(std::move(re)), im_(0) {}  // NOLINT(implicit)
  BigComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(int re) : re_(re), im_(0) {}  // NOLINT(implicit)
  BigComplex(double re, double im) : re_(re), im_(im) {}

  static BigComplex i() { return {Real(0), Real(1)}; }
  static BigComplex i_pi() { return {Real(0), pi_real()}; }
  static BigComplex polar(const Real& r, const Real& theta);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }

  Real abs() const;
  Real norm() const { return re_ * re_ + im_ * im_; }
  Real arg() const;
  BigComplex conj() const { return {re_, -im_}; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }

  /// Re-rounds both parts to the current scope's precision.
  BigComplex rounded() const;

 private:
  Real re_;
  Real im_;
};

BigComplex exp(const BigComplex& z);
/// Principal branch, Im in (-pi, pi].
BigComplex log(const BigComplex& z);
/// Principal branch, Re >= 0.
BigComplex sqrt(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
BigComplex sinh(const BigComplex& z);

Real abs(const BigComplex& z);

/// Fixed-format decimal with `digits` significant digits; deterministic.
std::string to_decimal(const Real& x, unsigned digits);
/// "re" or "re+imi" / "re-imi" with fixed formatting.
std::string to_decimal(const BigComplex& z, unsigned digits);

/// Parses a complex literal: "ipi" (i*pi), "ipi+0.3" / "0.3+ipi", "re", "re+imi",
/// "re-imi", "imi". Throws InputError on anything else.
BigComplex parse_complex(std::string_view text);

}  // namespace qvl

namespace qvl {

/// A numeric value together with an absolute error bound.
struct Certified {
  BigComplex value;
  Real error;

  /// error / |value|, or error itself when the value is zero.
  Real relative_error() const;
};

}  // namespace qvl
