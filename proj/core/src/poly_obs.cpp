#include "qvlab/poly_obs.hpp"

#include <algorithm>
#include <numeric>

#include "qvlab/errors.hpp"

namespace qvl {

namespace {

void require_same_space(const PolyObs& a, const PolyObs& b) {
  if (a.dim() != b.dim()) throw InputError("observables live on different phase spaces");
}

// All exponent vectors of length dim with total degree <= deg.
void exponents_upto(int dim, int deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == dim) {
    out.push_back(cur);
    return;
  }
  const int used = std::accumulate(cur.begin(), cur.end(), 0);
  for (int e = 0; e + used <= deg; ++e) {
    cur.push_back(e);
    exponents_upto(dim, deg, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PolyObs::PolyObs(int dim) : dim_(dim) {
  if (dim < 1) throw InputError("phase space dimension must be positive");
}

PolyObs PolyObs::constant(const mpq_class& c, int dim) {
  PolyObs out(dim);
  out.add_term(Monomial(static_cast<std::size_t>(dim) + 1, 0), c);
  return out;
}

PolyObs PolyObs::variable(int index, int dim) {
  if (index < 0 || index >= dim) throw InputError("variable index out of range");
  PolyObs out(dim);
  Monomial m(static_cast<std::size_t>(dim) + 1, 0);
  m[static_cast<std::size_t>(index)] = 1;
  out.add_term(m, 1);
  return out;
}

PolyObs PolyObs::hbar(int dim, int power) {
  PolyObs out(dim);
  Monomial m(static_cast<std::size_t>(dim) + 1, 0);
  m.back() = power;
  out.add_term(m, 1);
  return out;
}

PolyObs PolyObs::monomial(const mpq_class& c, const std::vector<int>& x_exponents, int hbar_power) {
  for (int e : x_exponents) {
    if (e < 0) throw InputError("negative exponent in polynomial observable");
  }
  PolyObs out(static_cast<int>(x_exponents.size()));
  Monomial m = x_exponents;
  m.push_back(hbar_power);
  out.add_term(m, c);
  return out;
}

PolyObs PolyObs::random(int dim, int max_degree, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  exponents_upto(dim, max_degree, cur, exps);
  PolyObs out(dim);
  for (auto& e : exps) {
    e.push_back(0);
    out.add_term(e, coeff(rng));
  }
  return out;
}

PolyObs PolyObs::with_gaussian(bool on) const {
  PolyObs out = *this;
  out.gaussian_ = on;
  return out;
}

void PolyObs::add_term(const Monomial& m, const mpq_class& c) {
  if (static_cast<int>(m.size()) != dim_ + 1) throw InputError("monomial has the wrong number of exponents");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool PolyObs::is_constant() const {
  for (const auto& [m, c] : terms_) {
    for (int k = 0; k < dim_; ++k) {
      if (m[static_cast<std::size_t>(k)] != 0) return false;
    }
  }
  return true;
}

int PolyObs::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end() - 1, 0));
  return d;
}

PolyObs PolyObs::hbar_part(int k) const {
  PolyObs out(dim_);
  out.gaussian_ = gaussian_;
  for (const auto& [m, c] : terms_) {
    if (m.back() != k) continue;
    Monomial stripped = m;
    stripped.back() = 0;
    out.add_term(stripped, c);
  }
  return out;
}

int PolyObs::max_hbar_power() const {
  int k = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    k = first ? m.back() : std::max(k, m.back());
    first = false;
  }
  return k;
}

PolyObs PolyObs::derivative(int index) const {
  if (index < 0 || index >= dim_) throw InputError("variable index out of range");
  const auto i = static_cast<std::size_t>(index);
  PolyObs out(dim_);
  out.gaussian_ = gaussian_;
  for (const auto& [m, c] : terms_) {
    if (m[i] > 0) {
      Monomial d = m;
      d[i] -= 1;
      out.add_term(d, c * m[i]);
    }
    // d/dx_1 exp(-x_1^2 / 2h) = -(x_1 / h) exp(...)
    if (gaussian_ && index == 0) {
      Monomial d = m;
      d[0] += 1;
      d.back() -= 1;
      out.add_term(d, -c);
    }
  }
  return out;
}

PolyObs& PolyObs::operator+=(const PolyObs& o) {
  require_same_space(*this, o);
  if (is_zero()) gaussian_ = o.gaussian_;
  if (!o.is_zero() && gaussian_ != o.gaussian_) throw InputError("cannot add Gaussian and plain observables");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PolyObs& PolyObs::operator-=(const PolyObs& o) { return *this += -o; }

PolyObs& PolyObs::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PolyObs PolyObs::operator-() const {
  PolyObs out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

PolyObs operator*(const PolyObs& a, const PolyObs& b) {
  require_same_space(a, b);
  if (a.gaussian_ && b.gaussian_) throw InputError("product of two Gaussian observables is not representable");
  PolyObs out(a.dim_);
  out.gaussian_ = a.gaussian_ || b.gaussian_;
  PolyObs::Monomial m(static_cast<std::size_t>(a.dim_) + 1);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string PolyObs::to_string() const {
  auto name = [this](int k) {
    if (dim_ == 1) return std::string("x");
    if (dim_ == 2) return std::string(k == 0 ? "x" : "p");
    return "x" + std::to_string(k + 1);
  };
  std::string out;
  if (terms_.empty()) {
    out = "0";
  } else {
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string factors;
      for (int k = 0; k < dim_; ++k) {
        const int e = m[static_cast<std::size_t>(k)];
        if (e == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += name(k);
        if (e != 1) factors += "^" + std::to_string(e);
      }
      if (m.back() != 0) {
        if (!factors.empty()) factors += "*";
        factors += "h";
        if (m.back() != 1) factors += "^" + std::to_string(m.back());
      }
      mpq_class mag = abs(c);
      std::string term;
      if (factors.empty()) {
        term = mag.get_str();
      } else if (mag == 1) {
        term = factors;
      } else {
        term = mag.get_str() + "*" + factors;
      }
      if (first) {
        out += (c < 0 ? "-" : "") + term;
      } else {
        out += (c < 0 ? " - " : " + ") + term;
      }
      first = false;
    }
  }
  if (gaussian_) out = "(" + out + ")*exp(-" + name(0) + "^2/(2h))";
  return out;
}

}  // namespace qvl
