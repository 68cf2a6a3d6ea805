#include "bloch/selftest.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "bloch/checks.hpp"
#include "bloch/errors.hpp"
#include "bloch/lattice.hpp"
#include "bloch/regulator.hpp"
#include "bloch/wedge.hpp"

namespace bloch {

namespace {

using C = Complex<double>;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!detail.str().empty()) detail << "; ";
    detail << what << (ok ? "" : " FAILED");
    pass = pass && ok;
  }
  void require(const PropertyCheck& c) {
    std::ostringstream s;
    s << c.name << ": " << c.trials << " trials, max " << c.max_residual << " (tol " << c.tolerance << ")";
    if (!c.note.empty()) s << ", " << c.note;
    require(c.pass(), s.str());
  }
};

const C kOmega{0.5, 0.86602540378443864676};
constexpr double kRegularVolume = 2.0298832128;

Triangulation omega_tetrahedra(const C& second) {
  Triangulation t;
  t.geometry = Geometry::hyperbolic;
  t.tetrahedra.push_back(
      hyperbolic_tetrahedron({infinity_point<double>(), affine_point(C(0)), affine_point(C(1)), affine_point(kOmega)}));
  t.tetrahedra.push_back(
      hyperbolic_tetrahedron({infinity_point<double>(), affine_point(C(0)), affine_point(C(1)), affine_point(second)}));
  return t;
}

// Catalan's constant from the Ramanujan-type series
// G = pi/8 log(2 + sqrt 3) + 3/8 sum 1 / ((2n+1)^2 C(2n, n)).
Mp catalan_series(int bits) {
  Mp sum = 0;
  Mp binom = 1;
  for (int n = 0; n < bits; ++n) {
    sum += 1 / (Mp((2 * n + 1)) * (2 * n + 1) * binom);
    binom = binom * 2 * (2 * n + 1) / (n + 1);
  }
  return pi<Mp>() / 8 * log(2 + sqrt(Mp(3))) + 3 * sum / 8;
}

// Even Bernoulli numbers B_0, B_2, ..., B_{2m} from the usual recurrence.
std::vector<Rational> bernoulli_even(int m) {
  std::vector<Rational> b(2 * m + 1);
  b[0] = 1;
  for (int n = 1; n <= 2 * m; ++n) {
    Rational s = 0;
    Integer c = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      s += Rational(c) * b[k];
      c = c * (n + 1 - k) / (k + 1);
    }
    b[n] = -s / (n + 1);
  }
  std::vector<Rational> even;
  for (int j = 0; j <= m; ++j) even.push_back(b[2 * j]);
  return even;
}

// Trigamma by direct summation then Euler-Maclaurin from x + N.
Mp trigamma(const Mp& x) {
  const int n = 40, m = 30;
  Mp s = 0;
  for (int k = 0; k < n; ++k) s += 1 / ((x + k) * (x + k));
  const Mp y = x + n;
  s += 1 / y + 1 / (2 * y * y);
  const auto b = bernoulli_even(m);
  Mp p = y;
  for (int j = 1; j <= m; ++j) {
    p *= y * y;
    s += Mp(b[j].convert_to<Mp>()) / p;
  }
  return s;
}

// Cl2(pi/3) = sqrt(3)/6 (psi1(1/3) - 2 pi^2 / 3).
Mp clausen_pi_over_3() {
  const Mp p = pi<Mp>();
  return sqrt(Mp(3)) / 6 * (trigamma(Mp(1) / 3) - 2 * p * p / 3);
}

void criterion1(Outcome& o, Sampler& s) { o.require(check_h_identity(s, 100, 1e-9)); }

void criterion2(Outcome& o, Sampler& s) { o.require(check_four_times(s, 10, 5, 1e-9)); }

void criterion3(Outcome& o, Sampler&) {
  {
    // Reference values first, from series independent of the dilogarithm.
    const int bits = 160;
    PrecisionScope scope(bits);
    const Mp tol = ldexp(Mp(1), -100);
    const Mp g = catalan_series(bits);
    const Mp c = clausen_pi_over_3();
    const Mp di = bloch_wigner(Complex<Mp>(Mp(0), Mp(1)));
    const Mp dw = bloch_wigner(Complex<Mp>(Mp(1) / 2, sqrt(Mp(3)) / 2));
    auto diff = [](const Mp& x, const Mp& y) {
      std::ostringstream s;
      s << to_double(Mp(abs(x - y)));
      return s.str();
    };
    o.require(std::fabs(to_double(g) - kCatalan) <= 1e-16 && std::fabs(to_double(c) - kClausenPiOver3) <= 1e-16,
              "series oracle reproduces the frozen constants");
    o.require(abs(di - g) < tol, "D(i) vs Catalan series at 160 bits, diff " + diff(di, g));
    o.require(abs(dw - c) < tol, "D(omega) vs trigamma oracle at 160 bits, diff " + diff(dw, c));
  }
  const double di = bloch_wigner(C(0, 1));
  const double dw = bloch_wigner(kOmega);
  o.require(std::fabs(di - kCatalan) <= 1e-9, "D(i) = " + to_decimal(di));
  o.require(std::fabs(dw - kClausenPiOver3) <= 1e-9, "D(omega) = " + to_decimal(dw));
  {
    PrecisionScope scope(128);
    const Mp w_re = Mp(1) / 2, w_im = sqrt(Mp(3)) / 2;
    const Mp di_mp = bloch_wigner(Complex<Mp>(Mp(0), Mp(1)));
    const Mp dw_mp = bloch_wigner(Complex<Mp>(w_re, w_im));
    o.require(std::fabs(to_double(di_mp) - kCatalan) <= 1e-15, "D(i) at 128 bits");
    o.require(std::fabs(to_double(dw_mp) - kClausenPiOver3) <= 1e-15, "D(omega) at 128 bits");
  }
  Triangulation t;
  t.geometry = Geometry::shapes;
  t.tetrahedra = {shape_tetrahedron(kOmega), shape_tetrahedron(kOmega)};
  InvariantOptions opts;
  opts.compute_delta = false;
  const auto r = invariant<double>(t, opts);
  o.require(std::fabs(r.volume.volume - kRegularVolume) <= 1e-8, "volume 2[omega] = " + to_decimal(r.volume.volume));
}

void criterion4(Outcome& o, Sampler& s) {
  InvariantOptions opts;
  opts.delta_bits = 128;
  for (Geometry g : {Geometry::hyperbolic, Geometry::cr, Geometry::flag}) {
    o.require(check_boundary_vanishing(g, s, 100, opts));
  }
}

void criterion5(Outcome& o, Sampler& s) {
  o.require(check_pencil_independence(s, 50, 10, 1e-10));
  o.require(check_pencil_oracle(1e-10));
}

void criterion6(Outcome& o, Sampler& s) { o.require(check_chain_algebra(s, 50)); }

ProjPoint1<Mp> to_mp(const ProjPoint1<double>& p) {
  return ProjPoint1<Mp>({Complex<Mp>(Mp(p[0].re), Mp(p[0].im)), Complex<Mp>(Mp(p[1].re), Mp(p[1].im))});
}

void criterion7(Outcome& o, Sampler& s) {
  const IntMatrix a{{2, 4}, {6, 8}};
  const SmithForm f = smith_normal_form(a);
  const IntMatrix expected{{2, 0}, {0, 4}};
  o.require(f.D == expected && multiply(multiply(f.U, a), f.V) == f.D && is_unimodular(f.U) && is_unimodular(f.V),
            "SNF([[2,4],[6,8]]) = diag(2,4), U A V = D, U and V unimodular");

  PrecisionScope scope(512);
  {
    const RelationLattice l = find_relations({Complex<Mp>(Mp(2)), Complex<Mp>(Mp(4))}, 128);
    bool found = false;
    for (const auto& row : l.relations) {
      found = found || (row[0] == 2 && row[1] == -1) || (row[0] == -2 && row[1] == 1);
    }
    o.require(found, "find_relations({2,4}) contains (2,-1)");
  }
  {
    PreBlochElt<Mp> e;
    e.add(Complex<Mp>(Mp(2) / 3), 1);
    const WedgeVerdict v1 = delta_test(e, 128);
    WedgeVerdict v2;
    {
      PrecisionScope wide(1024);
      PreBlochElt<Mp> e2;
      e2.add(Complex<Mp>(Mp(2) / 3), 1);
      v2 = delta_test(e2, 256);
    }
    const bool stable = v1.status == WedgeStatus::nonzero && v2.status == WedgeStatus::nonzero &&
                        std::fabs(v1.residual_norm - v2.residual_norm) <= 1e-9 * v1.residual_norm;
    std::ostringstream d;
    d << "delta([2/3]) " << to_string(v1.status) << " residual " << v1.residual_norm << ", doubled "
      << to_string(v2.status) << " residual " << v2.residual_norm;
    o.require(stable, d.str());
  }
  {
    std::size_t zero = 0, total = 0;
    const ProjPoint1<Mp> inf = infinity_point<Mp>();
    const auto at = [](double re, double im) { return affine_point(Complex<Mp>(Mp(re), Mp(im))); };
    total++;
    zero += delta_test(five_term<Mp>({inf, at(0, 0), at(1, 0), at(2, 0), at(0, 1)}), 128).status == WedgeStatus::zero;
    for (int n = 0; n < 20; ++n) {
      const auto p = s.cp1_points<5>();
      total++;
      const auto e = five_term<Mp>({to_mp(p[0]), to_mp(p[1]), to_mp(p[2]), to_mp(p[3]), to_mp(p[4])});
      zero += delta_test(e, 128).status == WedgeStatus::zero;
    }
    o.require(zero == total, "five-term delta zero in " + std::to_string(zero) + "/" + std::to_string(total));
  }
}

void criterion8(Outcome& o, Sampler& s) {
  const Triangulation a = omega_tetrahedra(kOmega);
  Triangulation glued = a;
  for (auto& tet : hyperbolic_boundary(s.cp1_points<5>()).tetrahedra) glued.tetrahedra.push_back(tet);
  const auto same = compare<double>(a, a);
  o.require(same.equal, "compare(a, a): " + same.verdict);
  const auto cut = compare<double>(a, glued);
  std::ostringstream d;
  d << "compare(a, a + boundary): " << cut.verdict << ", volume " << cut.volume.volume;
  if (cut.delta) d << ", delta " << to_string(cut.delta->status);
  o.require(cut.equal, d.str());
  const auto moved = compare<double>(a, omega_tetrahedra(kOmega + C(0.1)));
  std::ostringstream m;
  m << "compare(a, perturbed): " << moved.verdict << ", volume difference " << moved.volume.volume;
  o.require(!moved.equal && moved.verdict == "different" && std::fabs(moved.volume.volume) >= 1e-4, m.str());
}

struct Entry {
  const char* name;
  double limit;
  void (*run)(Outcome&, Sampler&);
};

const Entry kCriteria[8] = {
    {"h-identity", 1, criterion1},
    {"flag invariant of h-lift is 4x hyperbolic", 1, criterion2},
    {"regular ideal tetrahedron volume", 1, criterion3},
    {"five-term and boundary vanishing", 30, criterion4},
    {"pencil well-definedness", 5, criterion5},
    {"chain algebra", 1, criterion6},
    {"wedge module", 10, criterion7},
    {"cut-and-paste comparison", 5, criterion8},
};

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > 8) throw UsageError("selftest criteria are numbered 1 to 8");
  const Entry& entry = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = entry.name;
  r.time_limit = entry.limit;
  Sampler sampler(seed + static_cast<std::uint64_t>(id));
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    entry.run(o, sampler);
  } catch (const std::exception& e) {
    o.require(false, std::string("threw: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = o.pass && r.seconds < r.time_limit;
  r.detail = o.detail.str();
  if (r.seconds >= r.time_limit) r.detail += "; runtime over limit";
  return r;
}

std::vector<CriterionResult> run_selftest(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace bloch
