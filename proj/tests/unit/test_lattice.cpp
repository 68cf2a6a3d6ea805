#include "bloch/errors.hpp"
#include "bloch/lattice.hpp"
#include "bloch/sampling.hpp"
#include "doctest.h"

using namespace bloch;

namespace {
IntMatrix m(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long v : r) out.back().emplace_back(v);
  }
  return out;
}
}  // namespace

TEST_CASE("integer matrix helpers") {
  CHECK(determinant(m({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(m({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
  CHECK(rank(m({{1, 2}, {2, 4}})) == 1);
  CHECK(is_unimodular(m({{2, 1}, {1, 1}})));
  CHECK_FALSE(is_unimodular(m({{2, 0}, {0, 1}})));
  CHECK(multiply(identity_matrix(2), m({{3, 4}, {5, 6}})) == m({{3, 4}, {5, 6}}));
}

TEST_CASE("lll reduction") {
  const auto id = lll_reduce(identity_matrix(3));
  CHECK(id.basis == identity_matrix(3));
  CHECK(is_unimodular(id.transform));

  const auto r = lll_reduce(m({{1, 0}, {10, 1}}));
  CHECK(r.basis == m({{1, 0}, {0, 1}}));
  CHECK(multiply(r.transform, m({{1, 0}, {10, 1}})) == r.basis);

  const IntMatrix b = m({{201, 37}, {1648, 297}});
  const auto s = lll_reduce(b);
  CHECK(is_lll_reduced(s.basis));
  CHECK(multiply(s.transform, b) == s.basis);
  CHECK(abs(determinant(s.basis)) == 1279);
  CHECK(is_unimodular(s.transform));

  CHECK_THROWS_AS(lll_reduce(m({{1, 2}, {2, 4}})), DependentRows);
  CHECK_FALSE(is_lll_reduced(m({{1, 0}, {10, 1}})));
}

TEST_CASE("lll on random lattices") {
  Sampler s(15);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix a(4, std::vector<Integer>(4));
    for (auto& row : a)
      for (auto& v : row) v = s.integer(-50, 50);
    if (determinant(a) == 0) continue;
    const auto r = lll_reduce(a, 0.99);
    CHECK(is_lll_reduced(r.basis, 0.99));
    CHECK(multiply(r.transform, a) == r.basis);
    CHECK(abs(determinant(r.basis)) == abs(determinant(a)));
  }
}

TEST_CASE("rational lll") {
  RatMatrix a{{Rational(1, 2), Rational(0)}, {Rational(5), Rational(1, 3)}};
  const auto r = lll_reduce(a);
  CHECK(is_unimodular(r.transform));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Rational v = 0;
      for (std::size_t k = 0; k < 2; ++k) v += Rational(r.transform[i][k]) * a[k][j];
      CHECK(v == r.basis[i][j]);
    }
}

TEST_CASE("smith normal form") {
  auto check = [](const IntMatrix& a, const IntMatrix& d, std::size_t rk) {
    const SmithForm f = smith_normal_form(a);
    CHECK(f.D == d);
    CHECK(f.rank == rk);
    CHECK(multiply(multiply(f.U, a), f.V) == f.D);
    CHECK(is_unimodular(f.U));
    CHECK(is_unimodular(f.V));
  };
  check(identity_matrix(3), identity_matrix(3), 3);
  check(m({{0, 0}, {0, 0}}), m({{0, 0}, {0, 0}}), 0);
  check(m({{2, 4}, {6, 8}}), m({{2, 0}, {0, 4}}), 2);
  check(m({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), m({{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}), 3);
  check(m({{1, 2, 3}, {2, 4, 6}}), m({{1, 0, 0}, {0, 0, 0}}), 1);
}
