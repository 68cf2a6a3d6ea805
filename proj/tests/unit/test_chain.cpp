#include "bloch/chain.hpp"
#include "bloch/sampling.hpp"
#include "doctest.h"

using namespace bloch;

namespace {
using Ch = Chain<int>;
using Free = FreeChain<int>;

Ch simplex(std::vector<int> t, int c = 1) { return Ch::simplex(std::move(t), Rational(c)); }

std::vector<int> random_tuple(Sampler& s, std::size_t n) {
  std::vector<int> t(n);
  for (auto& v : t) v = s.integer(0, 9);
  return t;
}
}  // namespace

TEST_CASE("boundary of an edge") {
  Ch expected(0);
  expected.add({2}, 1);
  expected.add({1}, -1);
  CHECK(boundary(simplex({1, 2})) == expected);
}

TEST_CASE("alternating normal form") {
  CHECK(simplex({2, 1}) == simplex({1, 2}, -1));
  CHECK(simplex({0, 1, 2, 3}) == simplex({1, 0, 3, 2}));
  CHECK(simplex({3, 0, 1, 2}) == simplex({0, 1, 2, 3}, -1));
  CHECK(simplex({1, 1, 2}).is_zero());
  Ch c = simplex({0, 1, 2});
  c += simplex({1, 0, 2});
  CHECK(c.is_zero());
  CHECK_THROWS_AS(c.add({1, 2}, 1), UsageError);
  CHECK_THROWS_AS(boundary(Ch::simplex({4})), UsageError);
}

TEST_CASE("symmetrize an edge") {
  Free expected;
  expected.add({1, 2}, Rational(1, 2));
  expected.add({2, 1}, Rational(-1, 2));
  CHECK(symmetrize(simplex({1, 2})) == expected);
}

TEST_CASE("chain algebra on random chains") {
  Sampler s(3);
  for (int trial = 0; trial < 50; ++trial) {
    for (std::size_t n : {4u, 5u}) {
      Ch c(static_cast<int>(n) - 1);
      for (int k = 0; k < 4; ++k) c.add(random_tuple(s, n), Rational(s.integer(-5, 5), s.integer(1, 4)));
      CHECK(boundary(boundary(c)).is_zero());
      CHECK(project(symmetrize(c)) == c);
      CHECK(boundary(symmetrize(c)) == symmetrize(boundary(c)));
      // A transposition flips the sign.
      auto t = random_tuple(s, n);
      auto u = t;
      std::swap(u[0], u[n - 1]);
      Ch sum = simplex(t);
      sum += simplex(u);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("free chains") {
  Free f;
  f.add({1, 2, 3}, 2);
  f.add({1, 2, 3}, -2);
  CHECK(f.is_zero());
  f.add({1, 2, 3}, 1);
  CHECK(boundary(boundary(f)).is_zero());
  CHECK(project(f) == simplex({1, 2, 3}));
}
