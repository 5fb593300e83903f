#include <doctest.h>

#include "qvlab/bigcomplex.hpp"
#include "qvlab/bracket.hpp"
#include "qvlab/cjones.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/knot_table.hpp"

using namespace qvl;

namespace {

const KnotTable& table() {
  static const KnotTable t = KnotTable::load(QVLAB_TEST_TABLE);
  return t;
}

// Independent oracle: V_N = sum_{m<N} prod_{k<=m} |1 - w^k|^2 with w = e^{2 pi i/N},
// in long double.
long double kashaev_oracle(int N) {
  const long double pi = 3.141592653589793238462643383279502884L;
  long double total = 0;
  long double prod = 1;
  for (int m = 0; m < N; ++m) {
    if (m > 0) {
      const long double s = 2 * std::sin(pi * m / N);
      prod *= s * s;
    }
    total += prod;
  }
  return total;
}

}  // namespace

TEST_CASE("colored Jones of the unknot is the quantum integer") {
  CHECK(colored_jones_unknot(1) == LaurentHalf(1));
  CHECK(colored_jones_unknot(4) == LaurentHalf::quantum_integer(4));
}

TEST_CASE("cabling and the cyclotomic sum agree for the figure-eight knot") {
  const PlanarDiagram& k = table().get("4_1").diagram;
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(colored_jones_by_cabling(k, n) * colored_jones_unknot(n) == habiro_41(n) * colored_jones_unknot(n));
  }
  CHECK(jones(cable(k, 2)) - 1 == habiro_41(3));
  CHECK_THROWS_AS(colored_jones_by_cabling(k, 4), CrossingBudgetExceeded);
}

TEST_CASE("J_N of 4_1 is palindromic and divisible by [N]") {
  for (int n = 1; n <= 8; ++n) {
    const LaurentHalf j = habiro_41(n);
    CHECK(j.is_palindromic());
    CHECK_NOTHROW(j.divide_exact(colored_jones_unknot(n)));
    CHECK(j.divide_exact(colored_jones_unknot(n)).evaluate_at_one() == 1);
  }
}

TEST_CASE("Kashaev invariants of the figure-eight knot") {
  PrecisionScope scope(40);
  const long expected[] = {1, 5, 13};
  for (int n = 1; n <= 3; ++n) {
    const Certified v = kashaev_41(n, 40);
    CHECK(abs(v.value - BigComplex(Real(expected[n - 1]))) < ten_to_minus(30));
  }
  for (int n : {7, 20, 50}) {
    const Certified v = kashaev_41(n, 40);
    const long double oracle = kashaev_oracle(n);
    CHECK(std::abs(v.value.re().convert_to<long double>() / oracle - 1) < 1e-15L);
    CHECK(abs(v.value.im()) < ten_to_minus(30));
    CHECK(abs(kashaev_from_symbolic(habiro_41(n), n) - v.value) < ten_to_minus(25) * (1 + abs(v.value)));
  }
}

TEST_CASE("numeric J_N matches the symbolic polynomial at s = e^{u/N}") {
  PrecisionScope scope(40);
  const BigComplex u = parse_complex("ipi+0.3");
  for (int n : {2, 5, 9}) {
    const JnValue v = jn_numeric(u, n, 40);
    const BigComplex s = exp(u / BigComplex(Real(n)));
    const BigComplex symbolic = habiro_41(n).evaluate(s);
    CAPTURE(n);
    CHECK(abs(v.value.value - symbolic) < ten_to_minus(25) * (1 + abs(symbolic)));
  }
  CHECK_THROWS_AS(jn_numeric(BigComplex(Real(0)), 3, 40), InputError);
}
