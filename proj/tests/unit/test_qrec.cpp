#include <doctest.h>

#include <random>

#include "qvlab/cjones.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/qrec.hpp"
#include "qvlab/qweyl.hpp"
#include "qvlab/rational_function.hpp"

using namespace qvl;

namespace {

RationalFunction s_pow(int k) { return RationalFunction::s_power(k); }
LaurentHalf sq(long c, int e) { return LaurentHalf::monomial(c, e); }

QWeylOp random_op(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> power(-2, 2);
  QWeylOp op;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      const int c = coeff(rng);
      if (c != 0) op += QWeylOp::monomial(RationalFunction(sq(c, power(rng))), a, b);
    }
  }
  return op;
}

}  // namespace

TEST_CASE("rational functions in s are kept in lowest terms") {
  const LaurentHalf a = sq(1, 2) - 1;  // s^2 - 1
  const LaurentHalf b = sq(1, 1) - 1;  // s - 1
  const RationalFunction r(a, b);
  CHECK(r.is_laurent());
  CHECK(r.num() == sq(1, 1) + 1);
  const RationalFunction inv = RationalFunction(1) / r;
  CHECK(!inv.is_laurent());
  CHECK(inv * r == RationalFunction(1));
  CHECK(poly_gcd({-1, 0, 1}, {-1, 1}) == PolyZ{-1, 1});
}

TEST_CASE("q-Weyl relation and normal ordering") {
  const QWeylOp l = QWeylOp::l_hat();
  const QWeylOp m = QWeylOp::m_hat();
  CHECK(l * m - QWeylOp::scalar(s_pow(1)) * (m * l) == QWeylOp());
  CHECK(QWeylOp::word("lm") == QWeylOp::monomial(s_pow(1), 1, 1));
  CHECK(QWeylOp::word("llm") == QWeylOp::monomial(s_pow(2), 2, 1));
  CHECK(QWeylOp::word("mml") == QWeylOp::monomial(1, 1, 2));
  CHECK_THROWS_AS(QWeylOp::word("lx"), InputError);
}

TEST_CASE("normal ordering is confluent: products associate") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const QWeylOp a = random_op(rng);
    const QWeylOp b = random_op(rng);
    const QWeylOp c = random_op(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  // Every ordering of the letters of "llmm" reduces to s^k m^2 l^2.
  for (const auto* w : {"llmm", "lmlm", "lmml", "mllm", "mlml", "mmll"}) {
    const QWeylOp op = QWeylOp::word(w);
    CHECK(op.terms().size() == 1);
    CHECK(op.order() == 2);
    CHECK(op.m_degree() == 2);
  }
}

TEST_CASE("operators act on sequences linearly") {
  const JSequence seq = JSequence::figure_eight(10);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    const QWeylOp a = random_op(rng);
    const QWeylOp b = random_op(rng);
    for (int n = 1; n <= 6; ++n) {
      CHECK(apply(a + b, seq, n) == apply(a, seq, n) + apply(b, seq, n));
      // (a b) J = a (b J): composition matches the product.
      JSequence bj{"bJ", {}};
      for (int k = 1; k <= 8; ++k) bj.values.push_back(apply(b, seq, k));
      CHECK(apply(a * b, seq, n) == apply(a, bj, n));
    }
  }
  CHECK(apply(QWeylOp::l_hat(), seq, 3) == seq.at(4));
  CHECK(apply(QWeylOp::m_hat(), seq, 3) == seq.at(3) * sq(1, 3));
  CHECK_THROWS_AS(apply(QWeylOp::l_hat(), seq, 10), IndexOutOfRange);
}

TEST_CASE("recursions of the unknot") {
  const JSequence unknot = JSequence::unknot(12);
  DiscoveryOptions opt;
  opt.order = 2;
  opt.m_degree = 0;
  auto rec = discover_recursion(unknot, opt);
  REQUIRE(rec.has_value());
  // [N+2] - (s + 1/s)[N+1] + [N] = 0, up to normalization.
  for (int n = 1; n <= 10; ++n) CHECK(apply(rec->op, unknot, n).is_zero());
  CHECK(rec->op.order() == 2);

  opt.order = 1;
  opt.m_degree = 1;
  CHECK(!discover_recursion(unknot, opt).has_value());
  opt.inhomogeneous = true;
  rec = discover_recursion(unknot, opt);
  REQUIRE(rec.has_value());
  CHECK(rec->inhomogeneous);
  for (int n = 1; n <= 11; ++n) CHECK(residual(*rec, unknot, n).is_zero());
}

TEST_CASE("degenerate inputs") {
  const auto zero = discover_recursion(JSequence::zero(8), DiscoveryOptions{1, 1, false, 8, 2});
  REQUIRE(zero.has_value());
  CHECK(zero->op == QWeylOp::scalar(1));
  DiscoveryOptions big;
  CHECK_THROWS_AS(discover_recursion(JSequence::figure_eight(5), big), InputError);
  // One fit index admits spurious operators; the held-out indices catch them.
  CHECK_THROWS_AS(discover_recursion(JSequence::figure_eight(8), big), RecursionCounterexample);
}

TEST_CASE("classical limit") {
  // (l - 1) at s = 1 from s*l - 1 ... after clearing.
  const QWeylOp op = QWeylOp::monomial(s_pow(1), 1, 0) - QWeylOp::scalar(1);
  CHECK(classical_limit(op) == BivarPoly::l_power(1) - BivarPoly::constant(1));
  // (s - 1) l is divided by (s - 1) before setting s = 1.
  const QWeylOp vanishing = QWeylOp::monomial(RationalFunction(sq(1, 1) - 1), 1, 0);
  CHECK(classical_limit(vanishing) == BivarPoly::l_power(1));
  const QWeylOp pole = QWeylOp::scalar(RationalFunction(1, sq(1, 1) - 1));
  CHECK_THROWS_AS(classical_limit(pole), InputError);
}
