#include <string>

#include "bloch/checks.hpp"
#include "bloch/errors.hpp"
#include "bloch/io.hpp"
#include "bloch/sampling.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bloch;
using namespace test;

namespace {
std::string data(const std::string& name) { return std::string(BLOCH_TEST_DATA) + "/" + name; }

std::size_t error_index(const std::string& text) {
  try {
    parse_triangulation_text(text);
  } catch (const GeometryError& e) {
    return e.index();
  }
  return 9999;
}
}  // namespace

TEST_CASE("schema examples parse") {
  const Triangulation h = parse_triangulation(data("worked_quadruple.json"));
  CHECK(h.geometry == Geometry::hyperbolic);
  REQUIRE(h.tetrahedra.size() == 1);
  const auto v = hyperbolic_vertices<double>(h.tetrahedra[0], 0);
  CHECK(v[0] == inf());
  CHECK(v[3] == at(2));
  const auto x = cross_ratio(v[0], v[1], v[2], v[3]);
  CHECK(close(x.value(), C(2), 1e-15));

  const Triangulation s = parse_triangulation(data("regular_shapes.json"));
  CHECK(s.geometry == Geometry::shapes);
  CHECK(s.tetrahedra.size() == 2);
  CHECK(s.tetrahedra[0].shape.im == "0.8660254038");

  const Triangulation r = parse_triangulation(data("regular_hyperbolic.json"));
  CHECK(r.tetrahedra[0].coeff == 2);
  CHECK(r.metadata["name"] == "two regular tetrahedra");

  const Triangulation f = parse_triangulation(data("flag_h_lift.json"));
  const auto flags = flag_vertices<double>(f.tetrahedra[0], 0);
  CHECK(close(z_coordinate(flags, 0, 1), C(2), 1e-14));

  const Triangulation c = parse_triangulation(data("fw_worked.json"));
  const auto p = cr_vertices<double>(c.tetrahedra[0], 0);
  CHECK(close(fw01(p[0], p[1], p[2], p[3]).value(), C(0, 1), 1e-14));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_triangulation(data("zero_vertex.json")), GeometryError);
  CHECK(error_index(R"({"geometry":"hyperbolic","tetrahedra":[
      {"coeff":1,"vertices":["inf",[0,0],[1,0],[2,0]]},
      {"coeff":1,"vertices":[[[0,0],[0,0]],[0,0],[1,0],[2,0]]}]})") == 1);
  CHECK(error_index(R"({"geometry":"cr","tetrahedra":[
      {"coeff":1,"vertices":[[[1,0],[1,0],[1,0]],[[0,0],[0,0],[1,0]],[[1,0],[0,0],[0,0]],[[0,0],[0,1],[0,0]]]}]})") == 0);
  CHECK_THROWS_AS(parse_triangulation(data("malformed.json")), ParseError);
  CHECK_THROWS_AS(parse_triangulation(data("missing_coeff.json")), SchemaError);
  CHECK_THROWS_AS(parse_triangulation(data("no_such_file.json")), ParseError);
  CHECK_THROWS_AS(parse_triangulation_text(R"({"geometry":"euclidean","tetrahedra":[]})"), SchemaError);
  CHECK_THROWS_AS(parse_triangulation_text(R"({"geometry":"shapes","tetrahedra":[]})"), EmptyTriangulation);
  CHECK_THROWS_AS(parse_triangulation_text(R"({"geometry":"shapes","tetrahedra":[{"coeff":"1/0","shape":[0.5,1]}]})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_triangulation_text(R"({"geometry":"shapes","tetrahedra":[{"coeff":1,"shape":["x",1]}]})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_triangulation_text(R"({"geometry":"hyperbolic","tetrahedra":[{"coeff":1,"vertices":["inf",[0,0],[1,0]]}]})"),
                  SchemaError);
}

TEST_CASE("coefficients") {
  const auto t = parse_triangulation_text(R"({"geometry":"shapes","tetrahedra":[
      {"coeff":"-3/4","shape":[0.5,1]},{"coeff":2,"shape":[0.5,1]},{"coeff":0.25,"shape":[0.5,1]},{"coeff":"1e-2","shape":[0.5,1]}]})");
  CHECK(t.tetrahedra[0].coeff == Rational(-3, 4));
  CHECK(t.tetrahedra[1].coeff == 2);
  CHECK(t.tetrahedra[2].coeff == Rational(1, 4));
  CHECK(t.tetrahedra[3].coeff == Rational(1, 100));
  CHECK(parse_rational("007/010") == Rational(7, 10));
  CHECK(parse_rational("-0.05") == Rational(-1, 20));
  CHECK(parse_rational("+08") == 8);
}

TEST_CASE("long decimals keep their digits") {
  const auto t = parse_triangulation_text(
      R"({"geometry":"shapes","tetrahedra":[{"coeff":1,"shape":["0.5","0.866025403784438646763723170752936183471402626905190314"]}]})");
  PrecisionScope scope(160);
  const Complex<Mp> z = shape_parameter<Mp>(t.tetrahedra[0], 0);
  CHECK(abs(z.im - sqrt(Mp(3)) / 2) < Mp("1e-45"));
}

TEST_CASE("triangulations round-trip") {
  Sampler s(30);
  for (Geometry g : {Geometry::hyperbolic, Geometry::cr, Geometry::flag}) {
    Triangulation t = random_boundary(g, s);
    t.metadata = {{"seed", 30}};
    const Triangulation back = triangulation_from_json(json::parse(dump(to_json(t))));
    CHECK(back == t);
  }
  Triangulation sh = parse_triangulation(data("regular_shapes.json"));
  CHECK(parse_triangulation_text(dump(to_json(sh))) == sh);
  Triangulation h = parse_triangulation(data("worked_quadruple.json"));
  h.tetrahedra[0].coeff = Rational(-5, 7);
  CHECK(parse_triangulation_text(dump(to_json(h))) == h);
}

TEST_CASE("reports round-trip") {
  Report r;
  r.command = "volume";
  r.config = {{"precision_bits", 53}};
  r.results = {{"volume", 2.0298832128193072}};
  r.warnings = {"one", "two"};
  r.wall_time = 0.125;
  const std::string text = dump(to_json(r));
  CHECK(text.back() == '\n');
  CHECK(report_from_json(json::parse(text)) == r);
  CHECK_THROWS_AS(report_from_json(json{{"command", 3}}), SchemaError);
}

TEST_CASE("element and verdict json") {
  PreBlochElt<double> e;
  e.add(C(2), Rational(3, 2));
  e.add_degenerate();
  const json j = to_json(e);
  CHECK(j["degenerate"] == 1);
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["coeff"] == "3/2");
  CHECK(j["terms"][0]["param"][0] == 0.5);
  WedgeVerdict v;
  v.status = WedgeStatus::inconclusive;
  CHECK(to_json(v)["status"] == "inconclusive");
}
