#include <algorithm>

#include "bloch/checks.hpp"
#include "bloch/invariants.hpp"
#include "bloch/sampling.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bloch;
using namespace test;

namespace {
const C kOmega{0.5, 0.86602540378443864676};

Triangulation random_hyperbolic(Sampler& s, std::size_t n) {
  Triangulation t;
  for (std::size_t i = 0; i < n; ++i) t.tetrahedra.push_back(hyperbolic_tetrahedron(s.cp1_points<4>(), Rational(s.integer(-3, 3) | 1, s.integer(1, 3))));
  return t;
}

Triangulation regular(double shift = 0) {
  Triangulation t;
  t.tetrahedra.push_back(hyperbolic_tetrahedron({inf(), at(0), at(1), P1({kOmega + C(shift), C(1)})}, 2));
  return t;
}

InvariantOptions no_delta() {
  InvariantOptions o;
  o.compute_delta = false;
  return o;
}
}  // namespace

TEST_CASE("regular tetrahedra") {
  const auto r = invariant<double>(regular());
  CHECK(std::fabs(r.volume.volume - 2.0298832128193072500) <= 1e-12);
  REQUIRE(r.delta);
  CHECK(r.delta->status == WedgeStatus::nonzero);

  Triangulation shapes;
  shapes.geometry = Geometry::shapes;
  shapes.tetrahedra = {shape_tetrahedron(kOmega), shape_tetrahedron(kOmega)};
  const auto c = compare<double>(regular(), shapes);
  CHECK(c.equal);
}

TEST_CASE("order of tetrahedra does not matter") {
  Sampler s(20);
  auto t = random_hyperbolic(s, 6);
  const auto a = hyperbolic_element<double>(t, default_tolerances<double>());
  std::reverse(t.tetrahedra.begin(), t.tetrahedra.end());
  std::rotate(t.tetrahedra.begin(), t.tetrahedra.begin() + 2, t.tetrahedra.end());
  CHECK(approx_equal(hyperbolic_element<double>(t, default_tolerances<double>()), a, 1e-12));
}

TEST_CASE("boundaries do not change the invariant") {
  Sampler s(21);
  for (Geometry g : {Geometry::hyperbolic, Geometry::cr, Geometry::flag}) {
    const Triangulation b = random_boundary(g, s);
    const auto r = invariant<double>(b);
    CHECK(std::fabs(r.volume.volume) <= 1e-9);
    REQUIRE(r.delta);
    CHECK(r.delta->status == WedgeStatus::zero);
  }
  const Triangulation a = regular();
  Triangulation glued = a;
  for (const auto& tet : random_boundary(Geometry::hyperbolic, s).tetrahedra) glued.tetrahedra.push_back(tet);
  const auto c = compare<double>(a, glued);
  CHECK(c.equal);
  CHECK(c.verdict == "equal (necessary conditions)");
}

TEST_CASE("single CR and flag tetrahedra are not boundaries") {
  Sampler s(22);
  for (int n = 0; n < 3; ++n) {
    Triangulation cr;
    cr.geometry = Geometry::cr;
    cr.tetrahedra.push_back(cr_tetrahedron({s.null_point().point(), s.null_point().point(), s.null_point().point(),
                                            s.null_point().point()}));
    const auto a = invariant<double>(cr);
    REQUIRE(a.delta);
    CHECK(a.delta->status == WedgeStatus::nonzero);

    Triangulation flag;
    flag.geometry = Geometry::flag;
    flag.tetrahedra.push_back(flag_tetrahedron({s.flag(), s.flag(), s.flag(), s.flag()}));
    const auto b = invariant<double>(flag);
    REQUIRE(b.delta);
    CHECK(b.delta->status == WedgeStatus::nonzero);
  }
}

TEST_CASE("lift by h is four times the hyperbolic element") {
  Sampler s(23);
  for (int n = 0; n < 5; ++n) {
    const auto t = random_hyperbolic(s, 4);
    const Triangulation lifted = lift_by_h(t);
    CHECK(lifted.geometry == Geometry::flag);
    const auto h = hyperbolic_element<double>(t, default_tolerances<double>());
    const auto f = flag_element<double>(lifted, default_tolerances<double>());
    CHECK(approx_equal(f, Rational(4) * h, 1e-9));
    const auto hv = hyperbolic_invariant<double>(t, no_delta());
    const auto fv = flag_invariant<double>(lifted, no_delta());
    CHECK(std::fabs(fv.volume.volume - hv.volume.volume) <= 1e-9);
  }
}

TEST_CASE("fw invariant of the worked quadruple") {
  Triangulation t;
  t.geometry = Geometry::cr;
  t.tetrahedra.push_back(cr_tetrahedron({p2(C(1), C(0), C(0)), p2(C(0), C(0), C(1)), p2(C(-0.5), C(1), C(1)),
                                         p2(C(-0.5), C(0, 1), C(1))}));
  const auto e = fw_element<double>(t, default_tolerances<double>());
  const auto pts = cr_vertices<double>(t.tetrahedra[0], 0);
  CHECK(approx_equal(e, fw_sum(pts), 1e-12));
}

TEST_CASE("errors") {
  Triangulation empty;
  CHECK_THROWS_AS(invariant<double>(empty), EmptyTriangulation);
  CHECK_THROWS_AS(lift_by_h(empty), EmptyTriangulation);
  Triangulation cr;
  cr.geometry = Geometry::cr;
  cr.tetrahedra.push_back(cr_tetrahedron({p2(C(1), C(0), C(0)), p2(C(0), C(0), C(1)), p2(C(-0.5), C(1), C(1)),
                                          p2(C(-0.5), C(0, 1), C(1))}));
  CHECK_THROWS_AS(hyperbolic_invariant<double>(cr), GeometryMismatch);
  CHECK_THROWS_AS(compare<double>(regular(), cr), GeometryMismatch);
  CHECK_THROWS_AS(lift_by_h(cr), GeometryMismatch);
}

TEST_CASE("compare detects a perturbation") {
  const auto c = compare<double>(regular(), regular(0.1));
  CHECK_FALSE(c.equal);
  CHECK(c.verdict == "different");
  CHECK(std::fabs(c.volume.volume) >= 1e-4);
}

TEST_CASE("invariants at higher precision") {
  PrecisionScope scope(128);
  const auto r = invariant<Mp>(regular(), no_delta());
  CHECK(r.volume.precision_bits == 128);
  CHECK(std::fabs(r.volume.volume - 2.0298832128193072500) <= 1e-15);
}
