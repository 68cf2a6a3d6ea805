#include "bloch/prebloch.hpp"
#include "bloch/sampling.hpp"
#include "bloch/wedge.hpp"
#include "doctest.h"

using namespace bloch;

namespace {
using Cm = Complex<Mp>;

bool has_relation(const RelationLattice& l, std::vector<long> row) {
  for (const auto& r : l.relations) {
    bool same = true, opposite = true;
    for (std::size_t k = 0; k < row.size(); ++k) {
      same = same && r[k] == row[k];
      opposite = opposite && r[k] == -row[k];
    }
    if (same || opposite) return true;
  }
  return false;
}

PreBlochElt<Mp> single(const Cm& z) {
  PreBlochElt<Mp> e;
  e.add(z, 1);
  return e;
}

ProjPoint1<Mp> mp_point(double re, double im) { return affine_point(Cm(Mp(re), Mp(im))); }
}  // namespace

TEST_CASE("relation search") {
  PrecisionScope scope(512);
  const auto a = find_relations({Cm(Mp(2)), Cm(Mp(4))}, 128);
  CHECK(a.generators.size() == 3);
  CHECK(has_relation(a, {2, -1, 0}));
  CHECK_FALSE(a.height_exceeded);

  const auto b = find_relations({Cm(Mp(2)), Cm(Mp(3))}, 128);
  for (const auto& r : b.relations) {
    CHECK(r[0] == 0);
    CHECK(r[1] == 0);
  }

  const Cm z(Mp(3) / 7, Mp(5) / 11);
  const auto c = find_relations({z, -z}, 128);
  CHECK(has_relation(c, {1, -1, 1}));

  // i^2 = -1.
  const auto d = find_relations({Cm(Mp(0), Mp(1))}, 128);
  CHECK(has_relation(d, {2, -1}));
}

TEST_CASE("delta on simple elements") {
  PrecisionScope scope(512);
  CHECK(delta_test(PreBlochElt<Mp>(), 128).status == WedgeStatus::zero);
  CHECK(delta_test(single(Cm(Mp(1) / 2)), 128).status == WedgeStatus::zero);
  const auto v = delta_test(single(Cm(Mp(2) / 3)), 128);
  CHECK(v.status == WedgeStatus::nonzero);
  CHECK(v.residual_norm > 0.1);
  // [z] + [1/z] = 0 in the orbit quotient already, [z] - [1 - z] likewise.
  PreBlochElt<Mp> e;
  const Cm z(Mp(1) / 3, Mp(2) / 5);
  e.add(z, 1);
  e.add(Cm(Mp(1)) / z, 1);
  CHECK(e.is_zero());
  CHECK(delta_test(e, 128).status == WedgeStatus::zero);
}

TEST_CASE("delta kills five-term relations") {
  PrecisionScope scope(512);
  const auto inf = infinity_point<Mp>();
  const auto e = five_term<Mp>({inf, mp_point(0, 0), mp_point(1, 0), mp_point(2, 0), mp_point(0, 1)});
  CHECK_FALSE(e.is_zero());
  CHECK(delta_test(e, 128).status == WedgeStatus::zero);
  Sampler s(16);
  for (int n = 0; n < 5; ++n) {
    const auto p = s.cp1_points<5>();
    std::array<ProjPoint1<Mp>, 5> q;
    for (int i = 0; i < 5; ++i) q[i] = ProjPoint1<Mp>({Cm(Mp(p[i][0].re), Mp(p[i][0].im)), Cm(Mp(p[i][1].re), Mp(p[i][1].im))});
    CHECK(delta_test(five_term<Mp>(q), 128).status == WedgeStatus::zero);
    // One face alone is not a relation.
    PreBlochElt<Mp> face;
    const auto x = cross_ratio(q[1], q[2], q[3], q[4]);
    face.add(x.value(), 1);
    CHECK(delta_test(face, 128).status == WedgeStatus::nonzero);
  }
}

TEST_CASE("delta rejects degenerate parameters") {
  PrecisionScope scope(512);
  PreBlochElt<Mp> e;
  e.add_canonical(Cm(Mp(1) + Mp("1e-170")), 1);
  CHECK_THROWS_AS(delta_test(e, 128), DegenerateParameter);
}

TEST_CASE("status names") {
  CHECK(to_string(WedgeStatus::zero) == "zero");
  CHECK(to_string(WedgeStatus::nonzero) == "nonzero");
  CHECK(to_string(WedgeStatus::inconclusive) == "inconclusive");
}
