#include "bloch/wedge.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <cstdlib>

#include <Eigen/Dense>

#include "bloch/errors.hpp"
#include "lll_core.hpp"

namespace bloch {

std::string to_string(WedgeStatus s) {
  switch (s) {
    case WedgeStatus::zero:
      return "zero";
    case WedgeStatus::nonzero:
      return "nonzero";
    case WedgeStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

constexpr long long kHeightCap = 1LL << 20;
constexpr long long kCoeffCap = 1LL << 62;
constexpr int kSeparationBits = 6;

// Rows are (e_k | 2^s * (ln|g_k|, arg g_k)); the last row carries the 2 pi
// period of the argument. Coefficients are exact, residuals are updated in
// the working precision alongside them.
struct RelationBasis {
  std::vector<std::vector<long long>> coeff;
  std::vector<std::array<Mp, 2>> resid;
  int scale_exp = 0;

  std::size_t size() const { return coeff.size(); }

  void approx_row(std::size_t i, std::vector<long double>& out) const {
    const std::size_t m = coeff[i].size();
    out.resize(m + 2);
    for (std::size_t j = 0; j < m; ++j) out[j] = static_cast<long double>(coeff[i][j]);
    out[m] = std::ldexp(resid[i][0].convert_to<long double>(), scale_exp);
    out[m + 1] = std::ldexp(resid[i][1].convert_to<long double>(), scale_exp);
  }

  void sub_multiple(std::size_t k, std::size_t j, long double q) {
    if (!(std::fabs(q) < 4.0e18L)) throw PrecisionExhausted("relation coefficients overflow");
    const long long qi = static_cast<long long>(q);
    for (std::size_t c = 0; c < coeff[k].size(); ++c) {
      long long prod = 0, v = 0;
      if (__builtin_mul_overflow(qi, coeff[j][c], &prod) || __builtin_sub_overflow(coeff[k][c], prod, &v) ||
          v > kCoeffCap || v < -kCoeffCap) {
        throw PrecisionExhausted("relation coefficients overflow");
      }
      coeff[k][c] = v;
    }
    const Mp qm(qi);
    resid[k][0] -= qm * resid[j][0];
    resid[k][1] -= qm * resid[j][1];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(coeff[i], coeff[j]);
    std::swap(resid[i], resid[j]);
  }
};

struct Attempt {
  bool ok = true;
  IntMatrix relations;
  bool height_exceeded = false;
};

// Gram-Schmidt norms of the current (scaled) basis.
std::vector<long double> gso_norms(const RelationBasis& basis) {
  const std::size_t n = basis.size();
  std::vector<std::vector<long double>> star(n);
  std::vector<long double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    basis.approx_row(i, star[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const long double bj = detail::dot(star[j], star[j]);
      if (bj == 0) continue;
      const long double mu = detail::dot(star[i], star[j]) / bj;
      for (std::size_t c = 0; c < star[i].size(); ++c) star[i][c] -= mu * star[j][c];
    }
    out[i] = std::sqrt(detail::dot(star[i], star[i]));
  }
  return out;
}

Attempt search(const std::vector<Mp>& lr, const std::vector<Mp>& ar, const Mp& two_pi, int bits, int vbits) {
  const std::size_t m = lr.size();
  RelationBasis basis;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<long long> row(m + 1, 0);
    row[k] = 1;
    basis.coeff.push_back(std::move(row));
    if (k < m) {
      basis.resid.push_back({lr[k], ar[k]});
    } else {
      basis.resid.push_back({Mp(0), two_pi});
    }
  }
  const Mp eps_rel = scale2(Mp(1), 20 - bits);
  const Mp eps_ver = scale2(Mp(1), 20 - vbits);

  // Progressive scaling: each stage starts from an already reduced basis, so
  // the entries handed to the floating-point reduction stay moderate. The
  // scale stops growing once the rows with vanishing residual are clearly
  // separated from the rest: every vector outside their span is then at
  // least 2^6 times longer than the longest of them (a lattice vector off
  // the span of a basis prefix is no shorter than the smallest later
  // Gram-Schmidt norm), and the previous stage found as many relations.
  const int final_exp = std::max(bits - 28, 8);
  std::size_t previous = static_cast<std::size_t>(-1);
  for (int e = std::min(16, final_exp);; e = std::min(e + 16, final_exp)) {
    basis.scale_exp = e;
    detail::lll_core(basis, 0.99L);

    Attempt out;
    std::vector<bool> cand(basis.size(), false);
    long double longest = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& c = basis.coeff[i];
      long long l1 = std::llabs(c[m]), height = 0;
      bool any = false;
      for (std::size_t k = 0; k < m; ++k) {
        l1 += std::llabs(c[k]);
        height = std::max(height, std::llabs(c[k]));
        any = any || c[k] != 0;
      }
      const Mp weight(std::max<long long>(1, l1));
      if (!any) continue;
      if (!(abs(basis.resid[i][0]) <= eps_rel * weight && abs(basis.resid[i][1]) <= eps_rel * weight)) continue;
      Mp s0(0), s1(0);
      for (std::size_t k = 0; k < m; ++k) {
        if (c[k] == 0) continue;
        s0 += Mp(c[k]) * lr[k];
        s1 += Mp(c[k]) * ar[k];
      }
      s1 += Mp(c[m]) * two_pi;
      if (!(abs(s0) <= eps_ver * weight && abs(s1) <= eps_ver * weight)) {
        out.ok = false;
        continue;
      }
      cand[i] = true;
      long double len = 0;
      for (long long x : c) len += static_cast<long double>(x) * static_cast<long double>(x);
      longest = std::max(longest, std::sqrt(len));
      if (height > kHeightCap) out.height_exceeded = true;
      std::vector<Integer> row;
      row.reserve(m);
      for (std::size_t k = 0; k < m; ++k) row.emplace_back(c[k]);
      out.relations.push_back(std::move(row));
    }
    if (!out.ok) return out;

    std::size_t prefix = 0;
    while (prefix < cand.size() && cand[prefix]) ++prefix;
    bool separated = prefix == out.relations.size() && (previous == prefix || e == final_exp);
    previous = prefix;
    if (separated) {
      const std::vector<long double> gs = gso_norms(basis);
      for (std::size_t i = prefix; i < gs.size(); ++i) {
        if (gs[i] < std::ldexp(longest, kSeparationBits)) {
          separated = false;
          break;
        }
      }
    }
    if (separated) return out;
    if (e == final_exp) {
      out.height_exceeded = true;
      return out;
    }
  }
}

}  // namespace

RelationLattice find_relations(const std::vector<Complex<Mp>>& values, int bits) {
  if (bits < 53) throw UsageError("relation search needs at least 53 bits");
  const int wp = working_bits<Mp>();
  if (wp < bits + 32) throw PrecisionExhausted("working precision too low for relation search");
  RelationLattice lat;
  lat.generators = values;
  lat.generators.emplace_back(Mp(-1), Mp(0));
  std::vector<Mp> lr, ar;
  for (const auto& g : lat.generators) {
    if (g == Complex<Mp>()) throw DegenerateParameter("zero in multiplicative support");
    lr.push_back(log(abs(g)));
    ar.push_back(arg(g));
    lat.log_data.emplace_back(to_double(lr.back()), to_double(ar.back()));
  }
  const Mp two_pi = 2 * pi<Mp>();
  for (int attempt = 0; attempt < 4; ++attempt) {
    const int b = bits + 16 * attempt;
    if (b + 32 > wp) break;
    const int vbits = std::min(2 * b, wp - 8);
    Attempt a = search(lr, ar, two_pi, b, vbits);
    if (!a.ok) continue;
    lat.relations = std::move(a.relations);
    lat.height_exceeded = a.height_exceeded;
    lat.detection_bits = b;
    return lat;
  }
  throw PrecisionExhausted("relation candidates failed re-verification");
}

namespace {

struct Pass {
  WedgeStatus status = WedgeStatus::zero;
  double residual = 0;
  std::size_t free_rank = 0;
  RelationLattice lattice;
};

double projected_residual(const IntMatrix& relations, std::size_t m,
                          const std::vector<std::array<std::size_t, 2>>& pairs,
                          const std::vector<Rational>& coeffs) {
  Eigen::MatrixXd w0 = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto a = static_cast<Eigen::Index>(pairs[i][0]);
    const auto b = static_cast<Eigen::Index>(pairs[i][1]);
    const double c = to_double(coeffs[i]);
    w0(a, b) += c;
    w0(b, a) -= c;
  }
  Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  if (!relations.empty()) {
    Eigen::MatrixXd rt(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(relations.size()));
    for (std::size_t j = 0; j < relations.size(); ++j)
      for (std::size_t k = 0; k < m; ++k)
        rt(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = relations[j][k].convert_to<double>();
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rt);
    const Eigen::Index r = qr.rank();
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(rt.rows(), r);
    proj -= q * q.transpose();
  }
  return (proj * w0 * proj).norm() / std::sqrt(2.0);
}

Pass run_pass(const std::vector<Complex<Mp>>& support, const std::vector<std::array<std::size_t, 2>>& pairs,
              const std::vector<Rational>& coeffs, int bits) {
  Pass p;
  p.lattice = find_relations(support, bits);
  const std::size_t m = p.lattice.generators.size();
  const SmithForm snf = smith_normal_form(p.lattice.relations.empty() ? IntMatrix{} : p.lattice.relations);
  const std::size_t r = snf.rank;
  p.free_rank = m - r;
  // x -> (x V) restricted to the columns past the rank is the projection to
  // the torsion-free quotient.
  const IntMatrix V = p.lattice.relations.empty() ? identity_matrix(m) : snf.V;
  const std::size_t f = p.free_rank;
  std::vector<std::vector<Rational>> w(f, std::vector<Rational>(f, Rational(0)));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& u = V[pairs[i][0]];
    const auto& v = V[pairs[i][1]];
    for (std::size_t a = 0; a < f; ++a) {
      if (u[r + a] == 0 && v[r + a] == 0) continue;
      for (std::size_t b = a + 1; b < f; ++b) {
        const Integer x = u[r + a] * v[r + b] - u[r + b] * v[r + a];
        if (x != 0) w[a][b] += coeffs[i] * Rational(x);
      }
    }
  }
  bool zero = true;
  for (std::size_t a = 0; a < f && zero; ++a)
    for (std::size_t b = a + 1; b < f; ++b)
      if (w[a][b] != 0) {
        zero = false;
        break;
      }
  if (zero) {
    p.status = WedgeStatus::zero;
    p.residual = 0;
  } else {
    p.status = WedgeStatus::nonzero;
    p.residual = projected_residual(p.lattice.relations, m, pairs, coeffs);
  }
  if (p.lattice.height_exceeded) p.status = WedgeStatus::inconclusive;
  return p;
}

}  // namespace

WedgeVerdict delta_test(const PreBlochElt<Mp>& e, int bits, double wedge_tol) {
  WedgeVerdict out;
  if (wedge_tol <= 0) wedge_tol = std::ldexp(1.0, 16 - bits);
  if (e.is_zero()) return out;
  const Tolerances& tol = e.tolerances();
  const Mp eps = tol.deg_tol<Mp>();
  const Complex<Mp> one(Mp(1));
  const int wp = working_bits<Mp>();
  const Mp same = scale2(Mp(1), 32 - wp);

  std::vector<Complex<Mp>> support;
  auto index_of = [&](const Complex<Mp>& v) {
    const Mp scale = std::max(Mp(1), abs(v));
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (abs(support[i] - v) <= same * scale) return i;
    }
    support.push_back(v);
    return support.size() - 1;
  };
  std::vector<std::array<std::size_t, 2>> pairs;
  std::vector<Rational> coeffs;
  for (const auto& t : e.terms()) {
    if (abs(t.param) <= eps || abs(t.param - one) <= eps) {
      throw DegenerateParameter("delta of a parameter at 0 or 1");
    }
    const std::size_t a = index_of(t.param);
    const std::size_t b = index_of(one - t.param);
    pairs.push_back({a, b});
    coeffs.push_back(t.coeff);
  }

  // Relation search that runs out of precision is inconclusive, not an error.
  auto pass = [&](int b) {
    try {
      return run_pass(support, pairs, coeffs, b);
    } catch (const PrecisionExhausted&) {
      Pass p;
      p.status = WedgeStatus::inconclusive;
      p.residual = std::numeric_limits<double>::quiet_NaN();
      return p;
    }
  };
  Pass first = pass(bits);
  Pass final = first;
  if (first.status == WedgeStatus::nonzero && first.residual <= wedge_tol) {
    // Nonzero exact coordinates but a residual at rounding level.
    final.status = WedgeStatus::inconclusive;
  } else if (first.status == WedgeStatus::nonzero) {
    const int doubled = std::min(2 * bits, wp - 32);
    if (doubled <= bits) {
      final.status = WedgeStatus::inconclusive;
    } else {
      Pass second = pass(doubled);
      if (second.status == WedgeStatus::zero) {
        final = second;
      } else if (second.status == WedgeStatus::nonzero && second.free_rank == first.free_rank &&
                 std::fabs(second.residual - first.residual) <= 1e-9 * std::max(1.0, first.residual)) {
        final = first;
      } else {
        final = second;
        final.status = WedgeStatus::inconclusive;
      }
    }
  }
  out.status = final.status;
  out.residual_norm = final.residual;
  out.free_rank = final.free_rank;
  out.lattice = std::move(final.lattice);
  return out;
}

}  // namespace bloch
