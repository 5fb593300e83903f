#include "qvlab/quantize.hpp"

#include <boost/math/constants/constants.hpp>
#include <map>
#include <utility>

#include "qvlab/errors.hpp"

namespace qvl {

PoissonBivector::PoissonBivector(std::vector<std::vector<PolyObs>> entries) : entries_(std::move(entries)) {
  const std::size_t d = entries_.size();
  if (d == 0) throw InputError("empty Poisson bivector");
  for (const auto& row : entries_) {
    if (row.size() != d) throw InputError("Poisson bivector must be square");
    for (const auto& e : row) {
      if (e.dim() != static_cast<int>(d)) throw InputError("bivector entry on the wrong phase space");
      if (e.gaussian()) throw InputError("bivector entries must be polynomial");
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      if (!(entries_[a][b] + entries_[b][a]).is_zero()) throw InputError("Poisson bivector is not antisymmetric");
    }
  }
}

PoissonBivector PoissonBivector::canonical(int dim) {
  if (dim < 2 || dim % 2 != 0) throw InputError("canonical bivector needs an even dimension");
  std::vector<std::vector<PolyObs>> e(static_cast<std::size_t>(dim), std::vector<PolyObs>(dim, PolyObs(dim)));
  for (int k = 0; k < dim; k += 2) {
    e[k][k + 1] = PolyObs::constant(1, dim);
    e[k + 1][k] = PolyObs::constant(-1, dim);
  }
  return PoissonBivector(std::move(e));
}

PoissonBivector PoissonBivector::planar(const PolyObs& a) {
  if (a.dim() != 2) throw InputError("planar bivector needs d = 2");
  return PoissonBivector({{PolyObs(2), a}, {-a, PolyObs(2)}});
}

bool PoissonBivector::is_constant() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e.is_constant()) return false;
    }
  }
  return true;
}

bool PoissonBivector::satisfies_jacobi() const {
  const int d = dim();
  auto cyc = [&](int i, int j, int k) {
    PolyObs s(d);
    for (int l = 0; l < d; ++l) s += (*this)(i, l) * (*this)(j, k).derivative(l);
    return s;
  };
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (!(cyc(i, j, k) + cyc(j, k, i) + cyc(k, i, j)).is_zero()) return false;
      }
    }
  }
  return true;
}

PolyObs poisson_bracket(const PolyObs& f, const PolyObs& g, const PoissonBivector& alpha) {
  PolyObs out(alpha.dim());
  for (int i = 0; i < alpha.dim(); ++i) {
    const PolyObs fi = f.derivative(i);
    if (fi.is_zero()) continue;
    for (int j = 0; j < alpha.dim(); ++j) {
      if (alpha(i, j).is_zero()) continue;
      out += alpha(i, j) * fi * g.derivative(j);
    }
  }
  return out;
}

PolyObs moyal(const PolyObs& f, const PolyObs& g, const PoissonBivector& alpha, int order) {
  const int d = alpha.dim();
  if (f.dim() != d || g.dim() != d) throw InputError("observables and bivector on different phase spaces");
  if (!alpha.is_constant()) throw InputError("Moyal product needs a constant bivector");
  if (f.gaussian() || g.gaussian()) throw InputError("Moyal product is defined on plain polynomials");

  // Nonzero entries; a constant entry may still carry hbar.
  std::vector<std::pair<std::pair<int, int>, PolyObs>> nonzero;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (!alpha(i, j).is_zero()) nonzero.push_back({{i, j}, alpha(i, j)});
    }
  }

  // f(x) g(y) as a sum of c * x-monomial * y-monomial; the bidifferential
  // operator acts on this tensor and the diagonal y = x is taken per order.
  using Mono = PolyObs::Monomial;
  using Tensor = std::map<std::pair<Mono, Mono>, PolyObs>;  // coefficient may carry hbar from alpha
  Tensor t;
  for (const auto& [mf, cf] : f.terms()) {
    for (const auto& [mg, cg] : g.terms()) t[{mf, mg}] = PolyObs::constant(cf * cg, d);
  }

  PolyObs out(d);
  mpq_class inv_factorial = 1;
  for (int n = 0; !t.empty() && (order < 0 || n <= order); ++n) {
    if (n > 0) inv_factorial /= n;
    for (const auto& [key, c] : t) {
      PolyObs mono(d);
      Mono m(key.first.size());
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = key.first[k] + key.second[k];
      m.back() += n;
      mono.add_term(m, inv_factorial);
      out += c * mono;
    }
    Tensor next;
    for (const auto& [key, c] : t) {
      for (const auto& [ij, a] : nonzero) {
        const auto i = static_cast<std::size_t>(ij.first);
        const auto j = static_cast<std::size_t>(ij.second);
        if (key.first[i] == 0 || key.second[j] == 0) continue;
        Mono mx = key.first;
        Mono my = key.second;
        mpq_class factor = mpq_class(mx[i]) * my[j];
        mx[i] -= 1;
        my[j] -= 1;
        PolyObs add = c * a * factor;
        auto [it, inserted] = next.try_emplace({mx, my}, add);
        if (!inserted) it->second += add;
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    }
    t = std::move(next);
  }
  return out;
}

bool AdmissibleGraph::valid() const {
  if (n < 0 || static_cast<int>(i.size()) != n || static_cast<int>(j.size()) != n) return false;
  auto ok = [this](int target, int k) {
    if (target == kLeft || target == kRight) return true;
    return target >= 1 && target <= n && target != k;
  };
  for (int k = 1; k <= n; ++k) {
    const int a = i[static_cast<std::size_t>(k - 1)];
    const int b = j[static_cast<std::size_t>(k - 1)];
    if (!ok(a, k) || !ok(b, k) || a == b) return false;
  }
  return true;
}

std::string AdmissibleGraph::to_string() const {
  auto name = [](int t) {
    if (t == kLeft) return std::string("L");
    if (t == kRight) return std::string("R");
    return std::to_string(t);
  };
  auto list = [&](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + name(v[k]);
    return s + ")";
  };
  return "i=" + list(i) + " j=" + list(j);
}

long long admissible_graph_count(int n) {
  long long c = 1;
  for (int k = 0; k < n; ++k) c *= static_cast<long long>(n) * (n + 1);
  return c;
}

std::vector<AdmissibleGraph> enumerate_graphs(int n) {
  if (n < 0) throw InputError("graph order must be nonnegative");
  if (n > kMaxGraphOrder) throw InputError("graph order above the enumeration budget");
  // Targets in increasing order: R, L, then vertices.
  std::vector<int> targets = {AdmissibleGraph::kRight, AdmissibleGraph::kLeft};
  for (int v = 1; v <= n; ++v) targets.push_back(v);

  std::vector<std::vector<std::pair<int, int>>> choices(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    for (int a : targets) {
      for (int b : targets) {
        if (a != k && b != k && a != b) choices[k - 1].push_back({a, b});
      }
    }
  }

  std::vector<AdmissibleGraph> out;
  out.reserve(static_cast<std::size_t>(admissible_graph_count(n)));
  AdmissibleGraph g;
  g.n = n;
  g.i.assign(n, 0);
  g.j.assign(n, 0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    for (int k = 0; k < n; ++k) {
      g.i[k] = choices[k][idx[k]].first;
      g.j[k] = choices[k][idx[k]].second;
    }
    out.push_back(g);
    int k = n - 1;
    while (k >= 0 && ++idx[k] == choices[k].size()) idx[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

PolyObs graph_operator(const AdmissibleGraph& gamma, const PoissonBivector& alpha, const PolyObs& f,
                       const PolyObs& g) {
  if (!gamma.valid()) throw InputError("malformed admissible graph " + gamma.to_string());
  const int d = alpha.dim();
  if (f.dim() != d || g.dim() != d) throw InputError("observables and bivector on different phase spaces");
  const int n = gamma.n;

  // Edge 2k leaves vertex k+1 with index I_{k+1}, edge 2k+1 with J_{k+1}.
  // incoming[v] lists the edges landing on vertex v (0..n-1), L (n), R (n+1).
  std::vector<std::vector<int>> incoming(static_cast<std::size_t>(n) + 2);
  auto slot = [n](int target) {
    if (target == AdmissibleGraph::kLeft) return n;
    if (target == AdmissibleGraph::kRight) return n + 1;
    return target - 1;
  };
  for (int k = 0; k < n; ++k) {
    incoming[slot(gamma.i[k])].push_back(2 * k);
    incoming[slot(gamma.j[k])].push_back(2 * k + 1);
  }

  auto differentiate = [&](PolyObs p, const std::vector<int>& edges, const std::vector<int>& label) {
    for (int e : edges) {
      if (p.is_zero()) break;
      p = p.derivative(label[e]);
    }
    return p;
  };

  PolyObs out(d);
  std::vector<int> label(static_cast<std::size_t>(2 * n), 0);
  while (true) {
    PolyObs term = differentiate(f, incoming[n], label);
    if (!term.is_zero()) term = term * differentiate(g, incoming[n + 1], label);
    for (int k = 0; k < n && !term.is_zero(); ++k) {
      term = term * differentiate(alpha(label[2 * k], label[2 * k + 1]), incoming[k], label);
    }
    out += term;
    int e = 2 * n - 1;
    while (e >= 0 && ++label[e] == d) label[e--] = 0;
    if (e < 0) break;
  }
  return out;
}

BohrSommerfeld bohr_sommerfeld(const mpq_class& energy, const mpq_class& hbar) {
  if (energy <= 0) throw InputError("energy must be positive");
  if (hbar <= 0) throw InputError("hbar must be positive");
  BohrSommerfeld out;
  out.action = 2.0 * boost::math::constants::pi<double>() * energy.get_d();
  mpq_class ratio = energy / hbar;
  if (ratio.get_den() == 1) {
    out.quantizable = true;
    out.n = ratio.get_num();
  }
  return out;
}

PolyObs oscillator_state(int n) {
  if (n < 0) throw InputError("oscillator level must be nonnegative");
  const PolyObs x = PolyObs::variable(0, 1);
  const PolyObs h = PolyObs::hbar(1);
  PolyObs f = PolyObs::constant(1, 1);
  for (int k = 0; k < n; ++k) f = mpq_class(2) * (x * f) - h * f.derivative(0);
  return f;
}

PolyObs oscillator_check(int n, std::optional<mpq_class> energy_over_hbar) {
  if (n < 0 || n > 6) throw InputError("oscillator check supports levels 0..6");
  const mpq_class e = energy_over_hbar.value_or(mpq_class(mpz_class(2 * n + 1), mpz_class(2)));
  const PolyObs x = PolyObs::variable(0, 1);
  const PolyObs psi = oscillator_state(n).with_gaussian(true);
  // p^2 = -hbar^2 d^2/dx^2
  const PolyObs p2 = -(PolyObs::hbar(1, 2) * psi.derivative(0).derivative(0));
  const PolyObs oh = mpq_class(mpz_class(1), mpz_class(2)) * (x * x * psi + p2);
  return oh - e * (PolyObs::hbar(1) * psi);
}

}  // namespace qvl
