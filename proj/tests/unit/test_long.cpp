#include <doctest.h>

#include <cmath>

#include "qvlab/acurve.hpp"
#include "qvlab/asymfit.hpp"
#include "qvlab/cjones.hpp"
#include "qvlab/dilog.hpp"
#include "qvlab/qrec.hpp"

using namespace qvl;

// Slow checks, registered only with QVLAB_LONG_TESTS=ON.

TEST_CASE("wide-window fit at i pi pins the growth rate and S~2 tighter") {
  PrecisionScope scope(96);
  std::vector<int> ns;
  for (int n = 200; n <= 1600; n += 20) ns.push_back(n);
  const auto samples = build_sequence(BigComplex::i_pi(), ns, 96);
  FitOptions opt;
  opt.model_order = 5;
  const FitReport r = fit_expansion(samples, opt);
  const Real vol = 2 * dilog(BigComplex::polar(Real(1), pi_real() / 3), 96).value.im();
  CHECK(abs(r.a.re() - vol / (2 * pi_real())) < Real("1e-12"));
  CHECK(abs(r.b - Real("1.5")) < Real("1e-6"));
  CHECK(abs(r.c.re() + log(Real(3)) / 4) < Real("1e-6"));
  const BigComplex s2 = r.d.at(0) / BigComplex::i_pi();
  CHECK(abs(s2.im() + Real(11) / (36 * sqrt(Real(3)))) < Real("1e-5"));
}

TEST_CASE("Kashaev invariant at N = 1000 against a long double product") {
  PrecisionScope scope(64);
  const int n = 1000;
  long double sum = 0;
  long double prod = 1;
  for (int m = 0; m < n; ++m) {
    if (m > 0) prod *= 4 * std::pow(std::sin(3.14159265358979323846264338327950288L * m / n), 2);
    sum += prod;
  }
  const Certified v = kashaev_41(n, 64);
  const long double got = v.value.re().convert_to<long double>();
  CHECK(std::abs(got / sum - 1) < 1e-12L);
  CHECK(abs(v.value.im()) < Real("1e-20") * abs(v.value.re()));
}

TEST_CASE("recursion from 24 terms survives eight held-out indices") {
  const JSequence seq = JSequence::figure_eight(24);
  DiscoveryOptions opt;
  opt.order = 3;
  opt.m_degree = 14;
  opt.holdout = 8;
  const auto rec = discover_recursion(seq, opt);
  REQUIRE(rec.has_value());
  CHECK(rec->holdout_N.size() == 8);
  for (int n = 1; n + rec->op.order() <= 24; ++n) CHECK(residual(*rec, seq, n).is_zero());
}
