#include "qvlab/rational_function.hpp"

#include <stdexcept>

namespace qvl {

namespace {

void trim(PolyZ& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class content(const PolyZ& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

PolyZ primitive(PolyZ p) {
  trim(p);
  if (p.empty()) return p;
  mpz_class g = content(p);
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

// Pseudo-remainder of a by b (deg a >= deg b).
PolyZ pseudo_rem(PolyZ a, const PolyZ& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

struct Split {
  PolyZ poly;
  int shift;  // value = s^shift * poly(s)
};

Split to_poly(const LaurentHalf& p) {
  Split out{{}, p.min_exponent()};
  if (p.is_zero()) return out;
  out.poly.assign(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1), 0);
  for (const auto& [e, c] : p.terms()) out.poly[static_cast<std::size_t>(e - out.shift)] = c;
  return out;
}

LaurentHalf from_poly(const PolyZ& p, int shift) {
  LaurentHalf out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0) out += LaurentHalf::monomial(p[k], static_cast<int>(k) + shift);
  }
  return out;
}

}  // namespace

PolyZ poly_gcd(PolyZ a, PolyZ b) {
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  mpz_class cont = gcd(content(a), content(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    PolyZ r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  a = primitive(std::move(a));
  for (auto& c : a) c *= cont;
  return a;
}

RationalFunction::RationalFunction(const LaurentHalf& num, const LaurentHalf& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentHalf(1);
    return;
  }
  Split n = to_poly(num_);
  Split d = to_poly(den_);
  PolyZ g = poly_gcd(n.poly, d.poly);
  if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
    LaurentHalf gl = from_poly(g, 0);
    n.poly = to_poly(from_poly(n.poly, 0).divide_exact(gl)).poly;
    d.poly = to_poly(from_poly(d.poly, 0).divide_exact(gl)).poly;
  }
  // Scalar content: gcd of both contents, sign carried by num.
  mpz_class cn = content(n.poly);
  mpz_class cd = content(d.poly);
  mpz_class c = gcd(cn, cd);
  if (d.poly.back() < 0) c = -c;
  for (auto& x : n.poly) x /= c;
  for (auto& x : d.poly) x /= c;
  num_ = from_poly(n.poly, n.shift - d.shift);
  den_ = from_poly(d.poly, 0);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  if (is_laurent() || num_.is_zero()) {
    if (num_.is_zero()) den_ = LaurentHalf(1);
    return *this;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::to_string() const {
  if (is_laurent()) return num_.to_q_string();
  return "(" + num_.to_q_string() + ")/(" + den_.to_q_string() + ")";
}

}  // namespace qvl
