#include <doctest.h>

#include "qvlab/errors.hpp"
#include "qvlab/knot_table.hpp"
#include "qvlab/report.hpp"

using namespace qvl;

TEST_CASE("shipped knot table") {
  const KnotTable t = KnotTable::load(QVLAB_TEST_TABLE);
  CHECK(t.contains("3_1"));
  CHECK(t.contains("4_1"));
  CHECK(t.get("4_1").a_poly == BivarPoly::figure_eight());
  CHECK(t.get("4_1").vol.value().substr(0, 12) == "2.0298832128");
  CHECK(t.get("hopf").diagram.component_count() == 2);
  CHECK(t.get("unknot").diagram.free_loops() == 1);
  CHECK_THROWS_AS(t.get("nosuch"), InputError);
}

TEST_CASE("knot table schema errors") {
  CHECK_THROWS_AS(KnotTable::parse("not json"), InputError);
  CHECK_THROWS_AS(KnotTable::parse(R"({"other": []})"), InputError);
  CHECK_THROWS_AS(KnotTable::parse(R"([{"pd": []}])"), InputError);
  CHECK_THROWS_AS(KnotTable::parse(R"([{"name": "a", "pd": [[1,2,3]]}])"), InputError);
  CHECK_THROWS_AS(KnotTable::parse(R"([{"name": "a", "pd": [[1,2,3,4]]}])"), InputError);
  CHECK_THROWS_AS(KnotTable::parse(R"([{"name": "a", "pd": []}, {"name": "a", "pd": []}])"), InputError);
  CHECK_THROWS_AS(KnotTable::parse(R"([{"name": "a", "pd": [], "a_poly": [[1.5, 0, 0]]}])"), InputError);
  CHECK_THROWS_AS(KnotTable::parse(R"([{"name": "a", "pd": [], "vol": 2.03}])"), InputError);
  const KnotTable ok = KnotTable::parse(R"([{"name": "a", "pd": [], "a_poly": [[1, 1, 0], [-1, 0, 0]]}])");
  CHECK(ok.get("a").a_poly == BivarPoly::l_power(1) - BivarPoly::constant(1));
  CHECK(!ok.get("a").vol.has_value());
}

TEST_CASE("Laurent, operator and polynomial serialization") {
  const LaurentHalf j = LaurentHalf::monomial(1, 5) + LaurentHalf::monomial(1, -5);
  CHECK(laurent_json(j) == R"({"5/2":1,"-5/2":1})");
  CHECK(laurent_json(LaurentHalf()) == "{}");
  CHECK(laurent_json(LaurentHalf::monomial(-3, 4)) == R"({"2":-3})");
  const QWeylOp op = QWeylOp::word("lm");
  CHECK(operator_json(op) == R"([{"l":1,"m":1,"num":{"1/2":1},"den":{"0":1}}])");
  CHECK(bivar_json(BivarPoly::l_power(1) - BivarPoly::constant(1)) == "[[-1,0,0],[1,1,0]]");
}

TEST_CASE("reports are deterministic and carry error fields") {
  auto make = [] {
    PrecisionScope scope(40);
    Report r("demo", 10);
    r.meta("u", "ipi");
    r.row().exact("N", 3).complex("V", BigComplex(Real(13), Real(0)), Real("1e-30"));
    r.row().exact("N", 4).real("x", Real(1) / 3, Real("2e-20")).text("note", "a,\"b\"");
    return r;
  };
  const Report a = make();
  const Report b = make();
  CHECK(a.json() == b.json());
  CHECK(a.csv() == b.csv());
  const std::string js = a.json();
  CHECK(js.find("\"V_re\": 1.3000000000e+01") != std::string::npos);
  CHECK(js.find("\"V_err\": 1.000e-30") != std::string::npos);
  CHECK(js.find("\"N_err\": 0") != std::string::npos);
  CHECK(js.find("\"x_err\": 2.000e-20") != std::string::npos);
  const std::string csv = a.csv();
  CHECK(csv.substr(0, csv.find("\r\n")) == "N,N_err,V_re,V_im,V_err,x,x_err,note");
  CHECK(csv.find("\"a,\"\"b\"\"\"") != std::string::npos);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS_AS(parse_format("xml"), InputError);
}
