#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qvlab/laurent.hpp"
#include "qvlab/rational_function.hpp"

namespace qvl {

/// Operator sum c_{a,b}(s) m^b l^a in the q-Weyl algebra l m = s m l,
/// stored normal-ordered (m powers to the left). On sequences,
/// (l J)_N = J_{N+1} and (m J)_N = s^N J_N.
class QWeylOp {
 public:
  using Key = std::pair<int, int>;  // (a = power of l, b = power of m)

  QWeylOp() = default;
  static QWeylOp l_hat() { return monomial(1, 1, 0); }
  static QWeylOp m_hat() { return monomial(1, 0, 1); }
  static QWeylOp scalar(const RationalFunction& c) { return monomial(c, 0, 0); }
  static QWeylOp monomial(const RationalFunction& c, int a, int b);

  /// Product of generators read left to right, e.g. "lml" = l m l. Each
  /// letter is 'l' or 'm'; the result is normal-ordered.
  static QWeylOp word(const std::string& letters);

  const std::map<Key, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;     // largest power of l
  int m_degree() const;  // largest power of m
  RationalFunction coeff(int a, int b) const;

  QWeylOp& operator+=(const QWeylOp& o);
  QWeylOp& operator-=(const QWeylOp& o);
  friend QWeylOp operator+(QWeylOp a, const QWeylOp& b) { return a += b; }
  friend QWeylOp operator-(QWeylOp a, const QWeylOp& b) { return a -= b; }
  /// Uses l^a m^b = s^{ab} m^b l^a.
  friend QWeylOp operator*(const QWeylOp& x, const QWeylOp& y);
  friend bool operator==(const QWeylOp& x, const QWeylOp& y) { return x.terms_ == y.terms_; }

  std::string to_string() const;

 private:
  void add(const Key& k, const RationalFunction& c);
  std::map<Key, RationalFunction> terms_;
};

}  // namespace qvl
