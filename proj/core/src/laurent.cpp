#include "qvlab/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qvl {

LaurentHalf::LaurentHalf(long constant) {
  if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentHalf LaurentHalf::monomial(const mpz_class& coeff, int s_exponent) {
  LaurentHalf p;
  p.add_term(s_exponent, coeff);
  return p;
}

LaurentHalf LaurentHalf::quantum_integer(int n) {
  // [n] = s^{n-1} + s^{n-3} + ... + s^{1-n}; [-n] = -[n], [0] = 0.
  LaurentHalf p;
  int sign = n < 0 ? -1 : 1;
  int m = n < 0 ? -n : n;
  for (int e = m - 1; e >= 1 - m; e -= 2) p.add_term(e, mpz_class(sign));
  return p;
}

void LaurentHalf::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class LaurentHalf::coeff(int s_exponent) const {
  auto it = terms_.find(s_exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentHalf::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int LaurentHalf::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentHalf& LaurentHalf::operator+=(const LaurentHalf& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentHalf& LaurentHalf::operator-=(const LaurentHalf& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Dense accumulation keeps the product quadratic without map churn.
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<mpz_class> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpz_addmul(acc[static_cast<std::size_t>(ea + eb - lo)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  LaurentHalf out;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] != 0) out.terms_.emplace_hint(out.terms_.end(), static_cast<int>(k) + lo, std::move(acc[k]));
  }
  return out;
}

LaurentHalf& LaurentHalf::operator*=(const LaurentHalf& o) {
  *this = *this * o;
  return *this;
}

LaurentHalf LaurentHalf::operator-() const {
  LaurentHalf out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentHalf LaurentHalf::shifted(int k) const {
  LaurentHalf out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentHalf LaurentHalf::pow(unsigned n) const {
  LaurentHalf result(1);
  LaurentHalf base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

LaurentHalf LaurentHalf::mirrored() const { return substitute_power(-1); }

LaurentHalf LaurentHalf::substitute_power(int k) const {
  LaurentHalf out;
  if (k == 0) {
    mpz_class sum = evaluate_at_one();
    if (sum != 0) out.terms_.emplace(0, sum);
    return out;
  }
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * k, c);
  return out;
}

LaurentHalf LaurentHalf::divide_exact(const LaurentHalf& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  LaurentHalf rem = *this;
  LaurentHalf quot;
  const int dlead = divisor.max_exponent();
  const mpz_class& lc = divisor.terms_.rbegin()->second;
  const int dspan = dlead - divisor.min_exponent();
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < dspan) {
      throw std::domain_error("Laurent division is not exact");
    }
    const auto& [re, rc] = *rem.terms_.rbegin();
    if (!mpz_divisible_p(rc.get_mpz_t(), lc.get_mpz_t())) {
      throw std::domain_error("Laurent division is not exact over Z");
    }
    mpz_class q = rc / lc;
    int shift = re - dlead;
    quot.add_term(shift, q);
    rem -= monomial(q, shift) * divisor;
  }
  return quot;
}

mpz_class LaurentHalf::evaluate_at_one() const {
  mpz_class sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

BigComplex LaurentHalf::evaluate(const BigComplex& s) const {
  if (terms_.empty()) return {};
  // Horner in s from the top exponent down, then rescale by s^{min}.
  BigComplex acc;
  int prev = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= qvl::pow(s, prev - it->first);
    acc += BigComplex(Real(it->second.get_str()));
    prev = it->first;
  }
  acc *= qvl::pow(s, prev);
  return acc;
}

std::string LaurentHalf::q_exponent_label(int s_exponent) {
  if (s_exponent % 2 == 0) return std::to_string(s_exponent / 2);
  return std::to_string(s_exponent) + "/2";
}

std::string LaurentHalf::to_q_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << "q";
    if (e != 2) os << "^(" << q_exponent_label(e) << ")";
  }
  return os.str();
}

}  // namespace qvl
