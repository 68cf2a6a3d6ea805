#include <algorithm>
#include <array>

#include "bloch/errors.hpp"
#include "bloch/projective.hpp"
#include "bloch/sampling.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bloch;
using namespace test;

TEST_CASE("cross-ratio worked values") {
  auto x = cross_ratio(inf(), at(0), at(1), at(2));
  REQUIRE_FALSE(x.is_degenerate());
  CHECK(close(x.value(), C(2), 1e-15));

  x = cross_ratio(at(0), inf(), at(1), at(2));
  REQUIRE_FALSE(x.is_degenerate());
  CHECK(close(x.value(), C(0.5), 1e-15));

  CHECK(cross_ratio(at(3, 1), at(3, 1), at(0), at(2)).is_degenerate());
}

TEST_CASE("normalization puts 1 at the largest coordinate, lowest index on ties") {
  P1 p({C(2, 0), C(0, 4)});
  CHECK(p[1] == C(1));
  CHECK(close(p[0], C(0, -0.5), 1e-15));
  P2 q({C(3), C(0, 3), C(1)});
  CHECK(q[0] == C(1));
  CHECK_THROWS_AS(P1({C(0), C(0)}), ZeroVector);
  CHECK_THROWS_AS(P1({C(NAN), C(1)}), ZeroVector);
}

TEST_CASE("mobius action") {
  const Mat2<double> id{{{C(1), C(0)}, {C(0), C(1)}}};
  const Mat2<double> t{{{C(1), C(1)}, {C(0), C(1)}}};
  const P1 p = at(0.3, -2);
  CHECK(mobius_act(id, p) == p);
  CHECK(close(mobius_act(t, at(0))[0], C(1), 1e-15));
  CHECK(mobius_act(t, inf()) == inf());
  const Mat2<double> sing{{{C(1), C(2)}, {C(2), C(4)}}};
  CHECK_THROWS_AS(mobius_act(sing, p), SingularMatrix);
}

TEST_CASE("sl3 action keeps incidence") {
  const P2 e1 = p2(C(1), C(0), C(0));
  const Mat3<double> d{{{C(2), C(0), C(0)}, {C(0), C(1), C(0)}, {C(0), C(0), C(1)}}};
  CHECK(sl3_act(d, e1) == e1);
  Sampler s(11);
  for (int n = 0; n < 50; ++n) {
    const Flag<double> f = s.flag();
    Mat3<double> g;
    for (auto& row : g)
      for (auto& c : row) c = s.complex();
    const P2 x = sl3_act(g, f.point());
    const L2 l = sl3_act(g, f.line());
    CHECK(abs(pair(l, x)) <= 1e-12 * max_abs(l.coords()) * max_abs(x.coords()) * 10);
  }
}

TEST_CASE("det3") {
  const Vec3<double> e1{C(1), C(0), C(0)}, e2{C(0), C(1), C(0)}, e3{C(0), C(0), C(1)};
  CHECK(det3(e1, e2, e3) == C(1));
  CHECK(det3(e1, e1, e2) == C(0));
  const Vec3<double> a{C(1), C(0), C(0)}, b{C(1), C(1), C(1)}, c{C(1), C(2), C(4)};
  CHECK(close(det3(a, b, c), C(2), 1e-15));
  Sampler s(3);
  for (int n = 0; n < 20; ++n) {
    const Vec3<double> u{s.complex(), s.complex(), s.complex()};
    const Vec3<double> v{s.complex(), s.complex(), s.complex()};
    const Vec3<double> w{s.complex(), s.complex(), s.complex()};
    CHECK(det3(u, v, w) == -det3(v, u, w));
  }
}

TEST_CASE("pencil cross-ratio") {
  const P2 v = p2(C(0), C(0), C(1));
  const std::array<L2, 4> lines{l2(C(1), C(0), C(0)), l2(C(0), C(1), C(0)), l2(C(1), C(1), C(0)),
                                l2(C(1), C(2), C(0))};
  const auto x = pencil_cross_ratio(v, lines);
  REQUIRE_FALSE(x.is_degenerate());
  CHECK(close(x.value(), C(0.5), 1e-14));

  Sampler s(5);
  for (int n = 0; n < 10; ++n) {
    const auto y = pencil_cross_ratio(v, lines, s.cp2_line());
    REQUIRE_FALSE(y.is_degenerate());
    CHECK(close(y.value(), x.value(), 1e-10));
  }
  // Rescaled representatives and a simultaneous linear change of frame.
  std::array<L2, 4> scaled = lines;
  for (auto& l : scaled) l = L2({C(0, 7) * l[0], C(0, 7) * l[1], C(0, 7) * l[2]});
  CHECK(close(pencil_cross_ratio(v, scaled).value(), x.value(), 1e-12));
  Mat3<double> g;
  for (auto& row : g)
    for (auto& c : row) c = s.complex();
  std::array<L2, 4> moved;
  for (int i = 0; i < 4; ++i) moved[i] = sl3_act(g, lines[i]);
  CHECK(close(pencil_cross_ratio(sl3_act(g, v), moved).value(), x.value(), 1e-9));

  const std::array<L2, 4> repeated{lines[0], lines[0], lines[2], lines[3]};
  CHECK(pencil_cross_ratio(v, repeated).is_degenerate());
  const std::array<L2, 4> off{lines[0], lines[1], lines[2], l2(C(0), C(0), C(1))};
  CHECK_THROWS_AS(pencil_cross_ratio(v, off), NotConcurrent);
}

TEST_CASE("cross-ratio permutation law") {
  Sampler s(17);
  for (int n = 0; n < 100; ++n) {
    const auto q = s.generic_quadruple();
    const C z = cross_ratio(q[0], q[1], q[2], q[3]).value();
    const C one(1);
    const std::array<C, 3> even{z, one / (one - z), (z - one) / z};
    const std::array<C, 3> odd{one / z, one - z, z / (z - one)};
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      int inv = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) inv += perm[i] > perm[j];
      const C w = cross_ratio(q[perm[0]], q[perm[1]], q[perm[2]], q[perm[3]]).value();
      const auto& orbit = inv % 2 == 0 ? even : odd;
      double best = 1e300;
      for (const C& o : orbit) best = std::min(best, dist(w, o) / std::max(1.0, abs(o)));
      CHECK(best <= 1e-10);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("cross-ratio is mobius invariant") {
  Sampler s(23);
  for (int n = 0; n < 100; ++n) {
    const auto q = s.generic_quadruple();
    const auto g = s.mobius();
    const C a = cross_ratio(q[0], q[1], q[2], q[3]).value();
    const C b = cross_ratio(mobius_act(g, q[0]), mobius_act(g, q[1]), mobius_act(g, q[2]), mobius_act(g, q[3])).value();
    CHECK(dist(a, b) <= 1e-10 * std::max(1.0, abs(a)));
  }
}

TEST_CASE("cross-ratio at extended precision") {
  PrecisionScope scope(200);
  const auto x = cross_ratio(infinity_point<Mp>(), affine_point(Complex<Mp>(Mp(0))), affine_point(Complex<Mp>(Mp(1))),
                             affine_point(Complex<Mp>(Mp(1) / 3)));
  REQUIRE_FALSE(x.is_degenerate());
  CHECK(abs(x.value() - Complex<Mp>(Mp(1) / 3)) < scale2(Mp(1), -190));
}
