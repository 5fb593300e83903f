#include "qvlab/qweyl.hpp"

#include <algorithm>

#include "qvlab/errors.hpp"

namespace qvl {

QWeylOp QWeylOp::monomial(const RationalFunction& c, int a, int b) {
  if (a < 0 || b < 0) throw InputError("operator powers must be nonnegative");
  QWeylOp op;
  op.add({a, b}, c);
  return op;
}

QWeylOp QWeylOp::word(const std::string& letters) {
  QWeylOp out = scalar(1);
  for (char ch : letters) {
    if (ch == 'l') {
      out = out * l_hat();
    } else if (ch == 'm') {
      out = out * m_hat();
    } else {
      throw InputError(std::string("unknown generator '") + ch + "'");
    }
  }
  return out;
}

void QWeylOp::add(const Key& k, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int QWeylOp::order() const {
  int a = 0;
  for (const auto& [k, c] : terms_) a = std::max(a, k.first);
  return a;
}

int QWeylOp::m_degree() const {
  int b = 0;
  for (const auto& [k, c] : terms_) b = std::max(b, k.second);
  return b;
}

RationalFunction QWeylOp::coeff(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? RationalFunction() : it->second;
}

QWeylOp& QWeylOp::operator+=(const QWeylOp& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

QWeylOp& QWeylOp::operator-=(const QWeylOp& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

QWeylOp operator*(const QWeylOp& x, const QWeylOp& y) {
  QWeylOp out;
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      // (cx m^b1 l^a1)(cy m^b2 l^a2) = cx cy s^{a1 b2} m^{b1+b2} l^{a1+a2}
      RationalFunction c = cx * cy * RationalFunction::s_power(kx.first * ky.second);
      out.add({kx.first + ky.first, kx.second + ky.second}, c);
    }
  }
  return out;
}

std::string QWeylOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")";
    if (k.second > 0) out += "*m^" + std::to_string(k.second);
    if (k.first > 0) out += "*l^" + std::to_string(k.first);
  }
  return out;
}

}  // namespace qvl
