#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "qvlab/errors.hpp"
#include "qvlab/quantize.hpp"

using namespace qvl;

namespace {

const PolyObs X = PolyObs::variable(0);
const PolyObs P = PolyObs::variable(1);
const PolyObs H = PolyObs::hbar();

PolyObs d(const PolyObs& f, int i, int times = 1) {
  PolyObs out = f;
  for (int k = 0; k < times; ++k) out = out.derivative(i);
  return out;
}

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Moyal product for alpha = a * (e_x ^ e_p) in d = 2, expanded by the binomial
// theorem: (a dx^x dp^y - a dp^x dx^y)^n.
PolyObs moyal_oracle(const PolyObs& f, const PolyObs& g, const mpq_class& a) {
  PolyObs out(2);
  mpq_class fact = 1;
  for (int n = 0; n <= f.degree() + g.degree(); ++n) {
    if (n > 0) fact *= n;
    for (int k = 0; k <= n; ++k) {
      // k factors of +a dx f dp g, n-k factors of -a dp f dx g
      mpq_class c = mpq_class(binom(n, k)) / fact;
      for (int t = 0; t < n; ++t) c *= t < k ? a : -a;
      out += c * (PolyObs::hbar(2, n) * d(d(f, 0, k), 1, n - k) * d(d(g, 1, k), 0, n - k));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Moyal product: first terms and the commutator") {
  const PoissonBivector alpha = PoissonBivector::canonical(2);
  CHECK(moyal(X, P, alpha) == X * P + H);
  CHECK(moyal(X, P, alpha) - moyal(P, X, alpha) == mpq_class(2) * H);
  CHECK(moyal(X * X, P * P, alpha, 0) == X * X * P * P);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const PolyObs f = PolyObs::random(2, 3, rng);
    const PolyObs g = PolyObs::random(2, 3, rng);
    const PolyObs prod = moyal(f, g, alpha);
    CHECK(prod.hbar_part(0) == f * g);
    CHECK(prod.hbar_part(1) == poisson_bracket(f, g, alpha));
    CHECK(prod == moyal_oracle(f, g, 1));
  }
}

TEST_CASE("Moyal product matches the oracle for a rescaled bivector") {
  const mpq_class a(3, 7);
  const PoissonBivector alpha = PoissonBivector::planar(PolyObs::constant(a));
  std::mt19937_64 rng(5);
  const PolyObs f = PolyObs::random(2, 4, rng);
  const PolyObs g = PolyObs::random(2, 4, rng);
  CHECK(moyal(f, g, alpha) == moyal_oracle(f, g, a));
}

TEST_CASE("Moyal associativity on random polynomials up to degree 4") {
  const PoissonBivector alpha = PoissonBivector::canonical(2);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 20; ++t) {
    const PolyObs f = PolyObs::random(2, 4, rng);
    const PolyObs g = PolyObs::random(2, 4, rng);
    const PolyObs h = PolyObs::random(2, 4, rng);
    CHECK(moyal(moyal(f, g, alpha), h, alpha) == moyal(f, moyal(g, h, alpha), alpha));
  }
  const PoissonBivector four = PoissonBivector::canonical(4);
  const PolyObs f = PolyObs::random(4, 2, rng);
  const PolyObs g = PolyObs::random(4, 2, rng);
  const PolyObs h = PolyObs::random(4, 2, rng);
  CHECK(moyal(moyal(f, g, four), h, four) == moyal(f, moyal(g, h, four), four));
}

TEST_CASE("Poisson bivector validation") {
  CHECK_THROWS_AS(PoissonBivector({{PolyObs(2), X}, {X, PolyObs(2)}}), InputError);
  CHECK_THROWS_AS(moyal(X, P, PoissonBivector::planar(X)), InputError);
  CHECK(PoissonBivector::planar(X * X + P).satisfies_jacobi());
  CHECK(PoissonBivector::canonical(4).satisfies_jacobi());
  // alpha^{12} = x3 alone is Poisson; alpha^{12} = 1, alpha^{23} = x2 is not.
  const PolyObs z(3);
  const PolyObs x1 = PolyObs::variable(0, 3);
  const PolyObs x2 = PolyObs::variable(1, 3);
  const PolyObs x3 = PolyObs::variable(2, 3);
  const PolyObs one = PolyObs::constant(1, 3);
  CHECK(PoissonBivector({{z, x3, z}, {-x3, z, z}, {z, z, z}}).satisfies_jacobi());
  CHECK(PoissonBivector({{z, x3, z}, {-x3, z, x1}, {z, -x1, z}}).satisfies_jacobi());
  CHECK(!PoissonBivector({{z, one, z}, {-one, z, x2}, {z, -x2, z}}).satisfies_jacobi());
}

TEST_CASE("admissible graph enumeration") {
  CHECK(enumerate_graphs(0).size() == 1);
  CHECK(enumerate_graphs(1).size() == 2);
  CHECK(enumerate_graphs(2).size() == 36);
  CHECK(enumerate_graphs(3).size() == 1728);
  for (int n = 1; n <= 3; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(static_cast<long long>(graphs.size()) == admissible_graph_count(n));
    std::set<std::string> distinct;
    for (const auto& g : graphs) {
      CHECK(g.valid());
      distinct.insert(g.to_string());
    }
    CHECK(distinct.size() == graphs.size());
  }
  CHECK(admissible_graph_count(4) == 160000);
  CHECK_THROWS_AS(enumerate_graphs(5), InputError);
  CHECK(!AdmissibleGraph{1, {1}, {AdmissibleGraph::kLeft}}.valid());
  CHECK(!AdmissibleGraph{1, {AdmissibleGraph::kLeft}, {AdmissibleGraph::kLeft}}.valid());
  CHECK_THROWS_AS(graph_operator(AdmissibleGraph{1, {1}, {AdmissibleGraph::kLeft}}, PoissonBivector::canonical(), X, P),
                  InputError);
}

TEST_CASE("graph operators with a constant bivector") {
  constexpr int L = AdmissibleGraph::kLeft;
  constexpr int R = AdmissibleGraph::kRight;
  const PoissonBivector alpha = PoissonBivector::canonical(2);
  std::mt19937_64 rng(9);
  const PolyObs f = PolyObs::random(2, 4, rng);
  const PolyObs g = PolyObs::random(2, 4, rng);
  // Order 1: the Poisson bracket and its reverse.
  CHECK(graph_operator({1, {L}, {R}}, alpha, f, g) == poisson_bracket(f, g, alpha));
  CHECK(graph_operator({1, {R}, {L}}, alpha, f, g) == -poisson_bracket(f, g, alpha));
  // Order 2 with both vertices pointing at L and R: the hbar^2 Moyal term,
  // sum alpha^{ij} alpha^{kl} d_i d_k f d_j d_l g.
  PolyObs second(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) second += alpha(i, j) * alpha(k, l) * d(d(f, i), k) * d(d(g, j), l);
  CHECK(graph_operator({2, {L, L}, {R, R}}, alpha, f, g) == second);
  CHECK(moyal(f, g, alpha).hbar_part(2) == mpq_class(1, 2) * second);
  // Any edge into an internal vertex differentiates a constant: zero.
  for (int n = 1; n <= 3; ++n) {
    for (const auto& gamma : enumerate_graphs(n)) {
      bool internal = false;
      for (int k = 0; k < n; ++k) internal = internal || gamma.i[k] > 0 || gamma.j[k] > 0;
      if (internal) CHECK(graph_operator(gamma, alpha, f, g).is_zero());
    }
  }
}

TEST_CASE("printed order-2 graph with a non-constant bivector") {
  constexpr int L = AdmissibleGraph::kLeft;
  constexpr int R = AdmissibleGraph::kRight;
  // i_1 = (1,2), j_1 = (1,L), i_2 = (2,L), j_2 = (2,R)
  const AdmissibleGraph gamma{2, {2, L}, {L, R}};
  const PoissonBivector alpha = PoissonBivector::planar(X * X + P);
  const PolyObs f = X * X * P + P * P * P;
  const PolyObs g = X * P * P + X;
  // B = sum alpha^{ab} (d_a alpha^{ce}) d_b d_c f d_e g, written out directly.
  PolyObs expected(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int e = 0; e < 2; ++e) expected += alpha(a, b) * d(alpha(c, e), a) * d(d(f, b), c) * d(g, e);
  CHECK(graph_operator(gamma, alpha, f, g) == expected);
  CHECK(!expected.is_zero());
  CHECK(graph_operator(gamma, PoissonBivector::canonical(), f, g).is_zero());
}

TEST_CASE("printed order-4 graph") {
  constexpr int L = AdmissibleGraph::kLeft;
  constexpr int R = AdmissibleGraph::kRight;
  const AdmissibleGraph gamma{4, {L, 3, 1, 3}, {2, R, L, 2}};
  REQUIRE(gamma.valid());
  const PolyObs f = X * X;
  const PolyObs g = P;
  // Vertices 2 and 3 each receive two edges, so a linear bivector gives zero.
  CHECK(graph_operator(gamma, PoissonBivector::planar(X + mpq_class(2) * P + PolyObs::constant(1)), f, g).is_zero());

  // Quadratic alpha^{12} = a(x, p): hand expansion of
  // alpha^{i4 j4} (d_{i3} alpha^{i1 j1}) (d_{j1} d_{j4} alpha^{i2 j2}) (d_{i2} d_{i4} alpha^{i3 j3})
  //   (d_{i1} d_{j3} f) (d_{j2} g).
  // f = x^2 forces i1 = j3 = x and g = p forces j2 = p, hence i2 = x and j1 = p, i3 = p.
  // The remaining sum over (i4, j4) in {(x,p), (p,x)}:
  //   alpha^{i4 j4} * d_p alpha^{xp} * d_p d_{j4} alpha^{xp} * d_x d_{i4} alpha^{px} * 2 * 1,
  // and alpha^{px} = -a.
  const PolyObs a = X * X + mpq_class(3) * X * P + P * P;
  const PoissonBivector alpha = PoissonBivector::planar(a);
  auto term = [&](int i4, int j4) {
    const PolyObs a44 = alpha(i4, j4);
    return mpq_class(2) * a44 * d(a, 1) * d(d(a, 1), j4) * d(d(-a, 0), i4);
  };
  const PolyObs expected = term(0, 1) + term(1, 0);
  CHECK(!expected.is_zero());
  CHECK(graph_operator(gamma, alpha, f, g) == expected);
}

TEST_CASE("Bohr-Sommerfeld condition") {
  const BohrSommerfeld three = bohr_sommerfeld(3, 1);
  CHECK(three.quantizable);
  CHECK(*three.n == 3);
  CHECK(!bohr_sommerfeld(mpq_class(1, 2), 1).quantizable);
  CHECK(bohr_sommerfeld(mpq_class(3, 4), mpq_class(1, 4)).quantizable);
  CHECK_THROWS_AS(bohr_sommerfeld(0, 1), InputError);
  // Loop integral of p dx over the circle of radius sqrt(2E), by quadrature
  // in the angle (p dx = 2E sin^2 t dt), against 2 pi E.
  for (double e : {0.5, 1.0, 3.0}) {
    const int n = 4096;
    const double pi = std::acos(-1.0);
    double sum = 0;
    for (int k = 0; k < n; ++k) {
      const double t = 2 * pi * (k + 0.5) / n;
      sum += 2 * e * std::sin(t) * std::sin(t);
    }
    sum *= 2 * pi / n;
    const BohrSommerfeld bs = bohr_sommerfeld(mpq_class(e), 1);
    CHECK(std::abs(bs.action - sum) < 1e-10);
  }
}

TEST_CASE("oscillator residuals") {
  const PolyObs x = PolyObs::variable(0, 1);
  const PolyObs h = PolyObs::hbar(1);
  CHECK(oscillator_state(0) == PolyObs::constant(1, 1));
  CHECK(oscillator_state(1) == mpq_class(2) * x);
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(oscillator_check(n).is_zero());
    CHECK(oscillator_check(n).gaussian());
    CHECK(!oscillator_check(n, mpq_class(n)).is_zero());
    CHECK(!oscillator_check(n, mpq_class(n + 1)).is_zero());
  }
  // Ground state at E = hbar: residual is -(hbar/2) exp(-x^2/2hbar).
  CHECK(oscillator_check(0, mpq_class(1)) == (mpq_class(-1, 2) * h).with_gaussian(true));
  // Independent check for n = 1: psi = 2x e^{-x^2/2h}, psi'' = (2x^3/h^2 - 6x/h) e^{...}.
  const PolyObs psi2 = (mpq_class(2) * x * x * x * PolyObs::hbar(1, -2) - mpq_class(6) * x * PolyObs::hbar(1, -1));
  const PolyObs oh = mpq_class(1, 2) * (x * x * mpq_class(2) * x - PolyObs::hbar(1, 2) * psi2);
  CHECK((oh - mpq_class(3, 2) * h * mpq_class(2) * x).is_zero());
  CHECK_THROWS_AS(oscillator_check(7), InputError);
}
