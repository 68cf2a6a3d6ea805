#include "bloch/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bloch/chain.hpp"
#include "bloch/regulator.hpp"
#include "bloch/structures.hpp"

namespace bloch {

namespace {

using C = Complex<double>;

double rel(const C& a, const C& b) { return abs(a - b) / std::max(1.0, abs(b)); }

template <class P, class Make>
Triangulation boundary_of(Geometry g, const std::array<P, 5>& pts, Make make) {
  Triangulation t;
  t.geometry = g;
  for (const auto& [face, sign] : five_faces(pts)) t.tetrahedra.push_back(make(face, Rational(sign)));
  return t;
}

// Slope coordinates on the pencil of lines through v: a line f with
// f.v = 0 is determined by its two coordinates off the pivot of v.
ProjPoint1<double> pencil_slope(const Vec3<double>& v, const Vec3<double>& f) {
  std::size_t m = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (abs(v[i]) > abs(v[m])) m = i;
  const std::size_t j = m == 0 ? 1 : 0;
  const std::size_t k = m == 2 ? 1 : 2;
  return ProjPoint1<double>({f[j], f[k]});
}

Vec3<double> cross3(const Vec3<double>& a, const Vec3<double>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Independent evaluation of fw01 from the definition: tangent polar at p0,
// secants through p0, then the cross-ratio of their slopes.
C slope_oracle(const std::array<Vec3<double>, 4>& p) {
  const Vec3<double>& v = p[0];
  const Vec3<double> tangent{conj(v[2]), conj(v[1]), conj(v[0])};
  std::array<ProjPoint1<double>, 4> s{pencil_slope(v, tangent), pencil_slope(v, cross3(v, p[1])),
                                      pencil_slope(v, cross3(v, p[2])), pencil_slope(v, cross3(v, p[3]))};
  auto d = [&](int a, int b) { return s[a][0] * s[b][1] - s[a][1] * s[b][0]; };
  return d(0, 2) * d(1, 3) / (d(0, 3) * d(1, 2));
}

std::array<Vec3<double>, 4> coords(const std::array<NullPoint<double>, 4>& p) {
  return {p[0].point().coords(), p[1].point().coords(), p[2].point().coords(), p[3].point().coords()};
}

int parity(const std::array<int, 4>& perm) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) inv += perm[i] > perm[j] ? 1 : 0;
  return inv % 2;
}

C random_parameter(Sampler& s) {
  while (true) {
    const C z = s.complex();
    if (abs(z) > 0.05 && abs(z - C(1)) > 0.05 && std::fabs(z.im) > 1e-3) return z;
  }
}

Rational random_coeff(Sampler& s) {
  int p = 0;
  while (p == 0) p = s.integer(-4, 4);
  return Rational(p) / Rational(s.integer(1, 3));
}

}  // namespace

Triangulation hyperbolic_boundary(const std::array<ProjPoint1<double>, 5>& p) {
  return boundary_of(Geometry::hyperbolic, p, [](const auto& f, const Rational& c) { return hyperbolic_tetrahedron(f, c); });
}

Triangulation cr_boundary(const std::array<NullPoint<double>, 5>& p) {
  std::array<ProjPoint2<double>, 5> pts;
  for (std::size_t i = 0; i < 5; ++i) pts[i] = p[i].point();
  return boundary_of(Geometry::cr, pts, [](const auto& f, const Rational& c) { return cr_tetrahedron(f, c); });
}

Triangulation flag_boundary(const std::array<Flag<double>, 5>& f) {
  return boundary_of(Geometry::flag, f, [](const auto& t, const Rational& c) { return flag_tetrahedron(t, c); });
}

Triangulation random_boundary(Geometry g, Sampler& s) {
  switch (g) {
    case Geometry::hyperbolic:
    case Geometry::shapes:
      return hyperbolic_boundary(s.cp1_points<5>());
    case Geometry::cr:
      return cr_boundary({s.null_point(), s.null_point(), s.null_point(), s.null_point(), s.null_point()});
    case Geometry::flag:
      return flag_boundary({s.flag(), s.flag(), s.flag(), s.flag(), s.flag()});
  }
  return {};
}

PropertyCheck check_h_identity(Sampler& s, std::size_t trials, double tol) {
  PropertyCheck c{"h-identity", 0, 0, 0, tol, ""};
  static constexpr int pairs[4][2] = {{0, 1}, {1, 0}, {2, 3}, {3, 2}};
  for (std::size_t n = 0; n < trials; ++n) {
    const auto q = s.generic_quadruple();
    const C x = cross_ratio(q[0], q[1], q[2], q[3]).value();
    const FlagTetra<double> t{h_map(q[0]), h_map(q[1]), h_map(q[2]), h_map(q[3])};
    double worst = 0;
    for (const auto& ab : pairs) worst = std::max(worst, abs(z_coordinate(t, ab[0], ab[1]) - x));
    c.record(worst);
  }
  return c;
}

PropertyCheck check_four_times(Sampler& s, std::size_t trials, std::size_t tetrahedra, double tol) {
  PropertyCheck c{"flag(h) = 4 hyperbolic", 0, 0, 0, 0, "parameters within " + to_decimal(tol)};
  InvariantOptions opts;
  opts.compute_delta = false;
  for (std::size_t n = 0; n < trials; ++n) {
    Triangulation t;
    for (std::size_t k = 0; k < tetrahedra; ++k) {
      t.tetrahedra.push_back(hyperbolic_tetrahedron(s.generic_quadruple(), random_coeff(s)));
    }
    const auto h = hyperbolic_invariant<double>(t, opts);
    const auto f = flag_invariant<double>(lift_by_h(t), opts);
    c.record(approx_equal(f.element, Rational(4) * h.element, tol) ? 0 : 1);
  }
  return c;
}

PropertyCheck check_boundary_vanishing(Geometry g, Sampler& s, std::size_t trials, const InvariantOptions& opts) {
  PropertyCheck c{"boundary vanishing (" + to_string(g) + ")", 0, 0, 0, opts.volume_tol, ""};
  std::size_t zero = 0, nonzero = 0, inconclusive = 0;
  for (std::size_t n = 0; n < trials; ++n) {
    const Triangulation t = random_boundary(g, s);
    const auto r = invariant<double>(t, opts);
    c.record(std::fabs(r.volume.volume));
    if (r.delta) {
      switch (r.delta->status) {
        case WedgeStatus::zero:
          ++zero;
          break;
        case WedgeStatus::nonzero:
          ++nonzero;
          ++c.failures;
          break;
        case WedgeStatus::inconclusive:
          ++inconclusive;
          ++c.failures;
          break;
      }
    }
  }
  if (opts.compute_delta) {
    c.note = "delta zero " + std::to_string(zero) + ", nonzero " + std::to_string(nonzero) + ", inconclusive " +
             std::to_string(inconclusive) + " at " + std::to_string(opts.delta_bits) + " bits";
  }
  return c;
}

PropertyCheck check_pencil_independence(Sampler& s, std::size_t quadruples, std::size_t lines, double tol) {
  PropertyCheck c{"fw01 auxiliary-line independence", 0, 0, 0, tol, ""};
  std::size_t degenerate = 0;
  for (std::size_t n = 0; n < quadruples; ++n) {
    const std::array<NullPoint<double>, 4> p{s.null_point(), s.null_point(), s.null_point(), s.null_point()};
    const auto base = fw01(p[0], p[1], p[2], p[3]);
    if (base.is_degenerate()) {
      ++degenerate;
      continue;
    }
    double worst = rel(base.value(), slope_oracle(coords(p)));
    for (std::size_t k = 0; k < lines; ++k) {
      const auto v = fw01(p[0], p[1], p[2], p[3], s.cp2_line());
      worst = std::max(worst, v.is_degenerate() ? 1.0 : rel(v.value(), base.value()));
    }
    c.record(worst);
  }
  if (degenerate > 0) c.note = std::to_string(degenerate) + " degenerate quadruples skipped";
  return c;
}

PropertyCheck check_pencil_oracle(double tol) {
  PropertyCheck c{"fw01 worked quadruple", 0, 0, 0, tol, ""};
  const C h(-0.5);
  const std::array<NullPoint<double>, 4> p{
      NullPoint<double>(ProjPoint2<double>({C(1), C(0), C(0)})),
      NullPoint<double>(ProjPoint2<double>({C(0), C(0), C(1)})),
      NullPoint<double>(ProjPoint2<double>({h, C(1), C(1)})),
      NullPoint<double>(ProjPoint2<double>({h, C(0, 1), C(1)})),
  };
  const auto v = fw01(p[0], p[1], p[2], p[3]);
  const C oracle = slope_oracle(coords(p));
  if (v.is_degenerate()) {
    c.record(1);
  } else {
    c.record(std::max(rel(v.value(), oracle), rel(oracle, C(0, 1))));
  }
  c.note = "oracle value " + to_decimal(oracle.re) + " + " + to_decimal(oracle.im) + "i";
  return c;
}

PropertyCheck check_chain_algebra(Sampler& s, std::size_t trials) {
  PropertyCheck c{"chain algebra", 0, 0, 0, 0, "exact rational arithmetic"};
  auto tuple = [&](std::size_t len) {
    Tuple<int> t(len);
    for (auto& v : t) v = s.integer(0, 7);
    return t;
  };
  auto distinct = [&](std::size_t len) {
    std::vector<int> pool(8);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < len; ++i) std::swap(pool[i], pool[i + s.integer(0, 7 - static_cast<int>(i))]);
    return Tuple<int>(pool.begin(), pool.begin() + static_cast<long>(len));
  };
  for (std::size_t n = 0; n < trials; ++n) {
    int violations = 0;
    Chain<int> c4(4), c3(3);
    for (int k = 0; k < 6; ++k) {
      c4.add(tuple(5), random_coeff(s));
      c3.add(tuple(4), random_coeff(s));
    }
    if (!boundary(boundary(c4)).is_zero()) ++violations;
    // t and an odd rearrangement of t cancel; a repeated vertex vanishes.
    Tuple<int> t = distinct(5);
    Tuple<int> odd = t;
    std::swap(odd[s.integer(0, 1)], odd[s.integer(2, 4)]);
    const Rational q = random_coeff(s);
    Chain<int> pair(4);
    pair.add(t, q);
    pair.add(odd, q);
    if (!pair.is_zero()) ++violations;
    Tuple<int> rep = t;
    rep[4] = rep[s.integer(0, 3)];
    if (!Chain<int>::simplex(rep, q).is_zero()) ++violations;
    for (const Chain<int>* ch : {&c3, &c4}) {
      if (!(project(symmetrize(*ch)) == *ch)) ++violations;
      if (!(boundary(symmetrize(*ch)) == symmetrize(boundary(*ch)))) ++violations;
    }
    c.record(violations);
  }
  return c;
}

PropertyCheck check_dilog_identities(Sampler& s, std::size_t trials, double tol) {
  PropertyCheck c{"Bloch-Wigner functional equations", 0, 0, 0, tol, ""};
  const C one(1);
  for (std::size_t n = 0; n < trials; ++n) {
    const C z = random_parameter(s);
    const double d = bloch_wigner(z);
    const double r[] = {
        bloch_wigner(conj(z)) + d,
        bloch_wigner(one / z) + d,
        bloch_wigner(one - z) + d,
        bloch_wigner(one / (one - z)) - d,
        bloch_wigner((z - one) / z) - d,
    };
    double worst = 0;
    for (double x : r) worst = std::max(worst, std::fabs(x));
    c.record(worst);
  }
  return c;
}

PropertyCheck check_cross_ratio_law(Sampler& s, std::size_t trials, double tol) {
  PropertyCheck c{"cross-ratio permutation law", 0, 0, 0, tol, ""};
  const C one(1);
  for (std::size_t n = 0; n < trials; ++n) {
    const auto q = s.generic_quadruple();
    const C z = cross_ratio(q[0], q[1], q[2], q[3]).value();
    const C even[3] = {z, one / (one - z), (z - one) / z};
    const C odd[3] = {one / z, one - z, z / (z - one)};
    std::array<int, 4> perm{0, 1, 2, 3};
    double worst = 0;
    do {
      const auto x = cross_ratio(q[perm[0]], q[perm[1]], q[perm[2]], q[perm[3]]);
      const C* orbit = parity(perm) == 0 ? even : odd;
      double best = x.is_degenerate() ? 1.0 : rel(x.value(), orbit[0]);
      if (!x.is_degenerate()) {
        for (int k = 1; k < 3; ++k) best = std::min(best, rel(x.value(), orbit[k]));
      }
      worst = std::max(worst, best);
    } while (std::next_permutation(perm.begin(), perm.end()));
    c.record(worst);
  }
  return c;
}

}  // namespace bloch
