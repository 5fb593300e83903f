#include "qvlab/bivar_poly.hpp"

#include <algorithm>
#include <sstream>

#include "qvlab/errors.hpp"

namespace qvl {

BivarPoly::BivarPoly(const std::vector<Term>& terms) {
  for (const auto& t : terms) {
    if (t.deg_l < 0 || t.deg_m < 0) throw InputError("BivarPoly exponents must be nonnegative");
    add_term(t.deg_l, t.deg_m, t.coeff);
  }
}

BivarPoly BivarPoly::figure_eight() {
  BivarPoly middle({{1, 0, 0}, {-1, 0, 2}, {-2, 0, 4}, {-1, 0, 6}, {1, 0, 8}});
  BivarPoly geometric = BivarPoly({{1, 2, 4}, {1, 0, 4}}) - middle * l_power(1);
  return (l_power(1) - constant(1)) * geometric;
}

void BivarPoly::add_term(int a, int b, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<BivarPoly::Term> BivarPoly::term_list() const {
  std::vector<Term> out;
  for (const auto& [k, c] : terms_) out.push_back({c, k.first, k.second});
  return out;
}

int BivarPoly::degree_l() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BivarPoly::degree_m() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

BivarPoly BivarPoly::d_dl() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_) {
    if (k.first > 0) out.add_term(k.first - 1, k.second, c * k.first);
  }
  return out;
}

BivarPoly BivarPoly::d_dm() const {
  BivarPoly out;
  for (const auto& [k, c] : terms_) {
    if (k.second > 0) out.add_term(k.first, k.second - 1, c * k.second);
  }
  return out;
}

mpz_class BivarPoly::content() const {
  mpz_class g = 0;
  for (const auto& [k, c] : terms_) g = gcd(g, c);
  return g;
}

BivarPoly BivarPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (terms_.rbegin()->second < 0) g = -g;
  BivarPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c / g);
  return out;
}

BigComplex BivarPoly::evaluate(const BigComplex& l, const BigComplex& m) const {
  auto coeffs = coefficients_in_l(m);
  BigComplex acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * l + *it;
  return acc;
}

std::vector<BigComplex> BivarPoly::coefficients_in_l(const BigComplex& m) const {
  std::vector<BigComplex> out(static_cast<std::size_t>(degree_l() + 1));
  const int dm = degree_m();
  std::vector<BigComplex> mpow(static_cast<std::size_t>(dm + 1));
  mpow[0] = BigComplex(1);
  for (int b = 1; b <= dm; ++b) mpow[static_cast<std::size_t>(b)] = mpow[static_cast<std::size_t>(b - 1)] * m;
  for (const auto& [k, c] : terms_) {
    out[static_cast<std::size_t>(k.first)] += BigComplex(Real(c.get_str())) * mpow[static_cast<std::size_t>(k.second)];
  }
  return out;
}

std::vector<mpz_class> BivarPoly::coefficients_in_l(const mpz_class& m) const {
  std::vector<mpz_class> out(static_cast<std::size_t>(degree_l() + 1));
  for (const auto& [k, c] : terms_) {
    mpz_class mp;
    mpz_pow_ui(mp.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k.second));
    out[static_cast<std::size_t>(k.first)] += c * mp;
  }
  return out;
}

std::string BivarPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    mpz_class mag = abs(c);
    bool bare = k.first == 0 && k.second == 0;
    if (mag != 1 || bare) os << mag.get_str();
    if (mag != 1 && !bare) os << "*";
    if (k.first > 0) os << "l" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.first > 0 && k.second > 0) os << "*";
    if (k.second > 0) os << "m" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
  }
  return os.str();
}

namespace {

// Bareiss fraction-free determinant.
mpz_class determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

mpz_class discriminant(const std::vector<mpz_class>& coeffs) {
  std::vector<mpz_class> p = coeffs;
  while (!p.empty() && p.back() == 0) p.pop_back();
  const int n = static_cast<int>(p.size()) - 1;
  if (n < 1) throw InputError("discriminant needs degree >= 1");
  if (n == 1) return 1;
  std::vector<mpz_class> dp;
  for (int k = 1; k <= n; ++k) dp.push_back(p[static_cast<std::size_t>(k)] * k);
  // Sylvester matrix of p (degree n) and p' (degree n-1), size 2n-1.
  const std::size_t size = static_cast<std::size_t>(2 * n - 1);
  std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size));
  for (int r = 0; r < n - 1; ++r) {
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + n - k)] = p[static_cast<std::size_t>(k)];
  }
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= n - 1; ++k) {
      s[static_cast<std::size_t>(n - 1 + r)][static_cast<std::size_t>(r + n - 1 - k)] = dp[static_cast<std::size_t>(k)];
    }
  }
  mpz_class res = determinant(std::move(s));
  // disc = (-1)^{n(n-1)/2} res / lead
  if ((n * (n - 1) / 2) % 2 == 1) res = -res;
  return res / p.back();
}

}  // namespace qvl
