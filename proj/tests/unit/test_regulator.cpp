#include "bloch/regulator.hpp"
#include "bloch/sampling.hpp"
#include "bloch/selftest.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bloch;
using namespace test;

namespace {
const C kOmega{0.5, 0.86602540378443864676};
const double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("li2 special values") {
  CHECK(close(li2(C(0)), C(0), 1e-16));
  CHECK(close(li2(C(1)), C(kPi * kPi / 6), 1e-14));
  CHECK(close(li2(C(-1)), C(-kPi * kPi / 12), 1e-14));
  CHECK(close(li2(C(0.5)), C(kPi * kPi / 12 - 0.5 * std::log(2.0) * std::log(2.0)), 1e-14));
  // Im li2(i) is Catalan's constant.
  CHECK(close(li2(C(0, 1)), C(-kPi * kPi / 48, kCatalan), 1e-14));
}

TEST_CASE("li2 reflection and inversion") {
  Sampler s(13);
  for (int n = 0; n < 200; ++n) {
    const C z = s.complex();
    if (abs(z) < 1e-3 || abs(z - C(1)) < 1e-3) continue;
    // Li2(z) + Li2(1 - z) = pi^2/6 - log z log(1 - z)
    const C lhs = li2(z) + li2(C(1) - z);
    const C rhs = C(kPi * kPi / 6) - log(z) * log(C(1) - z);
    CHECK(dist(lhs, rhs) <= 1e-12 * std::max(1.0, abs(rhs)));
  }
}

TEST_CASE("bloch-wigner") {
  CHECK(std::fabs(bloch_wigner(C(0, 1)) - kCatalan) <= 1e-15);
  CHECK(std::fabs(bloch_wigner(kOmega) - kClausenPiOver3) <= 1e-15);
  CHECK(bloch_wigner(C(-3.5)) == 0);
  CHECK(bloch_wigner(C(0.25)) == 0);
  CHECK_THROWS_AS(bloch_wigner(C(0)), DegenerateParameter);
  CHECK_THROWS_AS(bloch_wigner(C(1)), DegenerateParameter);

  Sampler s(14);
  for (int n = 0; n < 200; ++n) {
    const C z = s.complex();
    const double d = bloch_wigner(z);
    CHECK(std::fabs(bloch_wigner(C(1) - z) + d) <= 1e-12);
    CHECK(std::fabs(bloch_wigner(C(1) / z) + d) <= 1e-12);
    CHECK(std::fabs(bloch_wigner(C(1) / (C(1) - z)) - d) <= 1e-12);
    CHECK(std::fabs(bloch_wigner(conj(z)) + d) <= 1e-12);
    // Maximum is attained at omega.
    CHECK(std::fabs(d) <= kClausenPiOver3 + 1e-12);
  }
}

TEST_CASE("bloch-wigner at high precision") {
  PrecisionScope scope(200);
  const Complex<Mp> i(Mp(0), Mp(1));
  const Mp catalan("0.915965594177219015054603514932384110774149374281672134266498119621763019776254769479356512926115106248574");
  CHECK(abs(bloch_wigner(i) - catalan) < Mp("1e-55"));
  const Complex<Mp> w(Mp(1) / 2, sqrt(Mp(3)) / 2);
  const Mp clausen("1.014941606409653625021202554274520285941689307530299792017489106776597476258244022136470354228256694");
  CHECK(abs(bloch_wigner(w) - clausen) < Mp("1e-55"));
  CHECK(abs(li2(Complex<Mp>(Mp(1))).re - pi<Mp>() * pi<Mp>() / 6) < Mp("1e-55"));
}

TEST_CASE("volumes") {
  PreBlochElt<double> e;
  e.add(kOmega, 2);
  const VolumeReport v = volume(e);
  CHECK(std::fabs(v.volume - 2.0298832128193072500) <= 1e-14);
  CHECK(v.term_count == 1);
  CHECK(v.precision_bits == 53);
  PreBlochElt<double> f;
  f.add(kOmega, 4);
  CHECK(std::fabs(flag_volume(f).volume - kClausenPiOver3) <= 1e-14);
  PreBlochElt<double> zero;
  CHECK(volume(zero).volume == 0);
}
