#pragma once

// Seeded random configurations for property checks and benchmarks. The
// stream depends only on the seed (mt19937_64 with hand-rolled transforms,
// no implementation-defined distributions).

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "bloch/numeric.hpp"
#include "bloch/projective.hpp"
#include "bloch/structures.hpp"

namespace bloch {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t bits() { return rng_(); }

  // [0, 1)
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int integer(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  double normal() {
    const double u = 1.0 - unit();
    const double v = unit();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * pi<double>() * v);
  }
  Complex<double> complex() { return {normal(), normal()}; }

  ProjPoint1<double> cp1_point() { return affine_point(complex()); }

  // n points of CP^1 with pairwise chordal separation at least `sep`.
  template <std::size_t N>
  std::array<ProjPoint1<double>, N> cp1_points(double sep = 1e-2) {
    std::array<ProjPoint1<double>, N> out;
    for (std::size_t i = 0; i < N; ++i) {
      bool ok = false;
      while (!ok) {
        out[i] = cp1_point();
        ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = abs(det2(out[i], out[j])) >= sep;
      }
    }
    return out;
  }

  // Quadruple whose cross-ratio stays `margin` away from 0, 1 and infinity.
  std::array<ProjPoint1<double>, 4> generic_quadruple(double margin = 0.05) {
    while (true) {
      auto q = cp1_points<4>();
      const auto x = cross_ratio(q[0], q[1], q[2], q[3]);
      if (x.is_degenerate()) continue;
      const Complex<double> z = x.value();
      if (abs(z) > margin && abs(z - Complex<double>(1)) > margin && abs(z) < 1 / margin) return q;
    }
  }

  // x = -|w|^2/2 + i t, y = w, z = 1 is exactly null up to rounding.
  NullPoint<double> null_point() {
    const Complex<double> w = complex();
    const Complex<double> x{-0.5 * norm(w), normal()};
    return NullPoint<double>(ProjPoint2<double>({x, w, Complex<double>(1)}));
  }

  ProjPoint2<double> cp2_point() { return ProjPoint2<double>({complex(), complex(), complex()}); }
  ProjLine2<double> cp2_line() { return ProjLine2<double>({complex(), complex(), complex()}); }

  // Random point, and a random line projected onto the pencil through it.
  Flag<double> flag() {
    const ProjPoint2<double> p = cp2_point();
    const Vec3<double>& x = p.coords();
    Vec3<double> g{complex(), complex(), complex()};
    const Complex<double> s =
        (g[0] * x[0] + g[1] * x[1] + g[2] * x[2]) / Complex<double>(squared_norm(x));
    for (int i = 0; i < 3; ++i) g[i] = g[i] - s * conj(x[i]);
    return Flag<double>(p, ProjLine2<double>(g));
  }

  // Moderately conditioned element of GL(2, C).
  Mat2<double> mobius() {
    while (true) {
      Mat2<double> g{{{complex(), complex()}, {complex(), complex()}}};
      double n2 = 0;
      for (const auto& row : g)
        for (const auto& c : row) n2 += norm(c);
      if (abs(det(g)) > 0.2 * n2) return g;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bloch
