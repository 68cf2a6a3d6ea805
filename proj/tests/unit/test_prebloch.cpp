#include "bloch/prebloch.hpp"
#include "bloch/regulator.hpp"
#include "bloch/sampling.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bloch;
using namespace test;

namespace {
const C kOmega{0.5, 0.86602540378443864676};
}

TEST_CASE("canonical representatives") {
  auto c = canonical_cross_ratio(C(2));
  CHECK(close(c.value, C(0.5), 1e-15));
  CHECK(c.sign == 1);
  c = canonical_cross_ratio(kOmega);
  CHECK(close(c.value, kOmega, 1e-15));
  CHECK(c.sign == 1);
  c = canonical_cross_ratio(C(1) / kOmega);
  CHECK(close(c.value, kOmega, 1e-15));
  CHECK(c.sign == -1);
  CHECK_THROWS_AS(canonical_cross_ratio(C(0)), DegenerateParameter);
  CHECK_THROWS_AS(canonical_cross_ratio(C(1 + 1e-14)), DegenerateParameter);
}

TEST_CASE("orbit members share a representative") {
  Sampler s(11);
  for (int n = 0; n < 200; ++n) {
    const C z = s.complex();
    const auto base = canonical_cross_ratio(z);
    const C one(1);
    const C even[] = {one / (one - z), (z - one) / z};
    const C odd[] = {one / z, one - z, z / (z - one)};
    for (const C& w : even) {
      const auto c = canonical_cross_ratio(w);
      CHECK(dist(c.value, base.value) <= 1e-11 * std::max(1.0, abs(base.value)));
      CHECK(c.sign == base.sign);
    }
    for (const C& w : odd) {
      const auto c = canonical_cross_ratio(w);
      CHECK(dist(c.value, base.value) <= 1e-11 * std::max(1.0, abs(base.value)));
      CHECK(c.sign == -base.sign);
    }
    CHECK(base.value.im >= 0);
  }
}

TEST_CASE("element arithmetic") {
  PreBlochElt<double> e;
  e.add(C(2), 1);
  e.add(C(0.5), 1);
  REQUIRE(e.size() == 1);
  CHECK(e.terms()[0].coeff == 2);
  e.add(kOmega, Rational(1, 3));
  e.add(C(1) / kOmega, Rational(1, 3));
  CHECK(e.size() == 1);
  PreBlochElt<double> f = e - e;
  CHECK(f.is_zero());
  CHECK(approx_equal(Rational(3) * e, e + e + e));
  PreBlochElt<double> g;
  g.add(C(0.5 + 1e-12), 2);
  CHECK(approx_equal(e, g, 1e-9));
  CHECK_FALSE(approx_equal(e, g, 1e-13));
}

TEST_CASE("to_prebloch") {
  const auto c = Chain<P1>::simplex({inf(), at(0), at(1), at(2)});
  const auto e = to_prebloch(c);
  REQUIRE(e.size() == 1);
  CHECK(close(e.terms()[0].param, C(0.5), 1e-15));
  CHECK(e.terms()[0].coeff == 1);
  CHECK_THROWS_AS(to_prebloch(Chain<P1>::simplex({inf(), at(0), at(1)})), UsageError);
  CHECK(to_prebloch(Chain<P1>()).is_zero());
}

TEST_CASE("ev_simplex") {
  const Mat2<double> translate{{{C(1), C(1)}, {C(0), C(1)}}};
  const Mat2<double> id{{{C(1), C(0)}, {C(0), C(1)}}};
  const auto c = ev_simplex<double>({translate, translate, translate}, at(0));
  CHECK(c == Chain<P1>::simplex({at(0), at(1), at(2), at(3)}));
  CHECK(ev_simplex<double>({id, id, id}, at(0)).is_zero());
  const auto d = ev_simplex<double>({translate, translate}, at(0), inf());
  CHECK(d == Chain<P1>::simplex({at(0), at(1), at(2), inf()}));
}

TEST_CASE("five-term relation") {
  const auto e = five_term<double>({inf(), at(0), at(1), at(2), at(0, 1)});
  CHECK(std::fabs(volume(e).volume) <= 1e-12);
  const auto r = five_term<double>({inf(), at(0), at(1), at(2), at(5)});
  CHECK(volume(r).volume == 0);
  Sampler s(12);
  for (int n = 0; n < 100; ++n) {
    const auto p = s.cp1_points<5>();
    const auto f = five_term<double>(p);
    CHECK(std::fabs(volume(f).volume) <= 1e-9);
    // Invariant under a Mobius transformation.
    const auto g = s.mobius();
    std::array<P1, 5> q;
    for (int i = 0; i < 5; ++i) q[i] = mobius_act(g, p[i]);
    CHECK(approx_equal(five_term<double>(q), f, 1e-8));
  }
}

TEST_CASE("five_faces signs") {
  const auto faces = five_faces(std::array<int, 5>{0, 1, 2, 3, 4});
  REQUIRE(faces.size() == 5);
  CHECK(faces[0].first == std::array<int, 4>{1, 2, 3, 4});
  CHECK(faces[0].second == 1);
  CHECK(faces[1].second == -1);
  CHECK(faces[4].first == std::array<int, 4>{0, 1, 2, 3});
}
