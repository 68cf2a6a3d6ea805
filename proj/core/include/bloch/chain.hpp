#pragma once

// Alternating chains of ordered point tuples with rational coefficients.
//
// A Chain<Pt> is kept in orbit-canonical form: every tuple is stored in
// ascending order of Pt (coefficient multiplied by the sign of the sorting
// permutation), tuples with a repeated vertex are dropped, and zero
// coefficients never appear. Pt needs a strict weak order via operator<;
// two points are "repeated" when neither is less than the other.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bloch/errors.hpp"
#include "bloch/numeric.hpp"

namespace bloch {

template <class Pt>
using Tuple = std::vector<Pt>;

// Sorts `t` in place and returns the sign of the permutation applied, or 0 if
// two vertices coincide.
template <class Pt>
int sort_with_sign(Tuple<Pt>& t) {
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  int sign = 1;
  std::vector<bool> seen(order.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = order[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  Tuple<Pt> sorted;
  sorted.reserve(t.size());
  for (std::size_t i : order) sorted.push_back(t[i]);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!(sorted[i - 1] < sorted[i])) return 0;
  }
  t = std::move(sorted);
  return sign;
}

template <class Pt>
class Chain {
 public:
  using Terms = std::map<Tuple<Pt>, Rational>;

  Chain() = default;
  explicit Chain(int degree) : degree_(degree) {}

  static Chain simplex(Tuple<Pt> t, const Rational& coeff = Rational(1)) {
    Chain c(static_cast<int>(t.size()) - 1);
    c.add(std::move(t), coeff);
    return c;
  }

  // Degree k means (k+1)-tuples; -1 until the first tuple fixes it.
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(Tuple<Pt> t, const Rational& coeff) {
    if (t.empty()) throw UsageError("chain tuples must be nonempty");
    const int k = static_cast<int>(t.size()) - 1;
    if (degree_ < 0) degree_ = k;
    if (k != degree_) {
      throw UsageError("tuple of degree " + std::to_string(k) + " added to chain of degree " +
                       std::to_string(degree_));
    }
    if (coeff == 0) return;
    const int sign = sort_with_sign(t);
    if (sign == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(t), 0);
    it->second += sign > 0 ? coeff : Rational(-coeff);
    if (it->second == 0) terms_.erase(it);
  }

  Chain& operator+=(const Chain& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    if (degree_ < 0) degree_ = o.degree_;
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    if (degree_ < 0) degree_ = o.degree_;
    return *this;
  }
  Chain& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Rational& s, Chain a) { return a *= s; }
  friend bool operator==(const Chain& a, const Chain& b) { return a.terms_ == b.terms_; }

 private:
  int degree_ = -1;
  Terms terms_;
};

// Alternating boundary sum_i (-1)^i (t_0, ..., t_i omitted, ..., t_k).
template <class Pt>
Chain<Pt> boundary(const Chain<Pt>& c) {
  if (c.degree() < 1) throw UsageError("boundary needs a chain of degree >= 1");
  Chain<Pt> out(c.degree() - 1);
  for (const auto& [t, coeff] : c.terms()) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      Tuple<Pt> face;
      face.reserve(t.size() - 1);
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j != i) face.push_back(t[j]);
      }
      out.add(std::move(face), i % 2 == 0 ? coeff : Rational(-coeff));
    }
  }
  return out;
}

// Chains in the free (non-alternating) model: tuples are kept verbatim.
template <class Pt>
class FreeChain {
 public:
  using Terms = std::map<Tuple<Pt>, Rational>;

  void add(Tuple<Pt> t, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(t), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const FreeChain& a, const FreeChain& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

template <class Pt>
FreeChain<Pt> boundary(const FreeChain<Pt>& c) {
  FreeChain<Pt> out;
  for (const auto& [t, coeff] : c.terms()) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      Tuple<Pt> face;
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (j != i) face.push_back(t[j]);
      }
      out.add(std::move(face), i % 2 == 0 ? coeff : Rational(-coeff));
    }
  }
  return out;
}

// Right inverse of `project`: each canonical n-simplex becomes the signed
// sum of all (n+1)! orderings of its vertices, divided by (n+1)!.
template <class Pt>
FreeChain<Pt> symmetrize(const Chain<Pt>& c) {
  FreeChain<Pt> out;
  for (const auto& [t, coeff] : c.terms()) {
    std::vector<std::size_t> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    Integer factorial = 1;
    for (std::size_t i = 2; i <= t.size(); ++i) factorial *= static_cast<unsigned>(i);
    const Rational weight = coeff / Rational(factorial);
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
      Tuple<Pt> ordered;
      ordered.reserve(t.size());
      for (std::size_t i : perm) ordered.push_back(t[i]);
      out.add(std::move(ordered), inversions % 2 == 0 ? weight : Rational(-weight));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

// Quotient by the alternating relations.
template <class Pt>
Chain<Pt> project(const FreeChain<Pt>& c) {
  Chain<Pt> out;
  for (const auto& [t, coeff] : c.terms()) out.add(t, coeff);
  return out;
}

}  // namespace bloch
