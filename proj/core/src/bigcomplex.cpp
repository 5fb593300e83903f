#include "qvlab/bigcomplex.hpp"

#include <cctype>
#include <ios>
#include <string>

#include "qvlab/errors.hpp"

namespace qvl {

namespace bmp = boost::multiprecision;

PrecisionScope::PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

unsigned current_digits() { return Real::default_precision(); }

Real ten_to_minus(unsigned digits) { return bmp::pow(Real(10), -static_cast<int>(digits)); }

Real pi_real() { return bmp::atan(Real(1)) * 4; }

BigComplex BigComplex::polar(const Real& r, const Real& theta) {
  return {r * bmp::cos(theta), r * bmp::sin(theta)};
}

Real BigComplex::abs() const { return bmp::hypot(re_, im_); }

Real BigComplex::arg() const {
  // A negative zero imaginary part must not flip the negative real axis to -pi.
  if (im_ == 0) return re_ < 0 ? pi_real() : Real(0);
  return bmp::atan2(im_, re_);
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  Real i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  // Smith's algorithm keeps intermediate magnitudes in range.
  if (bmp::abs(o.re_) >= bmp::abs(o.im_)) {
    Real ratio = o.im_ / o.re_;
    Real den = o.re_ + o.im_ * ratio;
    Real r = (re_ + im_ * ratio) / den;
    Real i = (im_ - re_ * ratio) / den;
    re_ = std::move(r);
    im_ = std::move(i);
  } else {
    Real ratio = o.re_ / o.im_;
    Real den = o.re_ * ratio + o.im_;
    Real r = (re_ * ratio + im_) / den;
    Real i = (im_ * ratio - re_) / den;
    re_ = std::move(r);
    im_ = std::move(i);
  }
  return *this;
}

BigComplex BigComplex::rounded() const {
  Real r(re_, current_digits());
  Real i(im_, current_digits());
  return {r, i};
}

BigComplex exp(const BigComplex& z) { return BigComplex::polar(bmp::exp(z.re()), z.im()); }

BigComplex log(const BigComplex& z) { return {bmp::log(z.abs()), z.arg()}; }

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return {};
  Real r = z.abs();
  Real a = bmp::sqrt((r + bmp::abs(z.re())) / 2);
  if (z.re() >= 0) {
    return {a, z.im() / (2 * a)};
  }
  Real b = z.im() >= 0 ? a : Real(-a);
  return {bmp::abs(z.im()) / (2 * a), b};
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1) / pow(z, -n);
  BigComplex result(1);
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

BigComplex sinh(const BigComplex& z) {
  BigComplex e = exp(z);
  return (e - BigComplex(1) / e) / BigComplex(2);
}

Real abs(const BigComplex& z) { return z.abs(); }

std::string to_decimal(const Real& x, unsigned digits) {
  if (x == 0) {
    std::string s = "0.";
    s.append(digits > 1 ? digits - 1 : 0, '0');
    return s + "e+00";
  }
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

std::string to_decimal(const BigComplex& z, unsigned digits) {
  std::string out = to_decimal(z.re(), digits);
  if (z.im() == 0) return out;
  std::string im = to_decimal(z.im(), digits);
  if (im.front() != '-') out += '+';
  return out + im + "i";
}

namespace {

bool is_number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.'; }

// Parses one signed term starting at pos; accumulates into re/im.
void parse_term(std::string_view s, std::size_t& pos, Real& re, Real& im) {
  int sign = 1;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    sign = s[pos] == '-' ? -1 : 1;
    ++pos;
  }
  std::size_t start = pos;
  while (pos < s.size() && is_number_char(s[pos])) ++pos;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E') && pos > start) {
    std::size_t save = pos++;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    } else {
      pos = save;
    }
  }
  Real magnitude(1);
  bool have_number = pos > start;
  if (have_number) {
    try {
      magnitude = Real(std::string(s.substr(start, pos - start)));
    } catch (const std::exception&) {
      throw InputError("bad number in complex literal: " + std::string(s));
    }
  }
  std::string_view rest = s.substr(pos);
  bool imaginary = false;
  bool times_pi = false;
  if (rest.starts_with("ipi")) {
    imaginary = times_pi = true;
    pos += 3;
  } else if (rest.starts_with("pi")) {
    times_pi = true;
    pos += 2;
  } else if (rest.starts_with("i")) {
    imaginary = true;
    pos += 1;
  } else if (!have_number) {
    throw InputError("bad complex literal: " + std::string(s));
  }
  if (times_pi) magnitude *= pi_real();
  if (sign < 0) magnitude = -magnitude;
  if (imaginary) {
    im += magnitude;
  } else {
    re += magnitude;
  }
}

}  // namespace

BigComplex parse_complex(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') compact.push_back(c);
  }
  if (compact.empty()) throw InputError("empty complex literal");
  Real re(0), im(0);
  std::size_t pos = 0;
  while (pos < compact.size()) {
    parse_term(compact, pos, re, im);
    if (pos < compact.size() && compact[pos] != '+' && compact[pos] != '-') {
      throw InputError("bad complex literal: " + std::string(text));
    }
  }
  return {re, im};
}

}  // namespace qvl

namespace qvl {

Real Certified::relative_error() const {
  Real mag = value.abs();
  return mag == 0 ? error : Real(error / mag);
}

}  // namespace qvl
