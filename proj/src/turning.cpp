#include "tunneltime/turning.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "tunneltime/errors.hpp"

namespace tunneltime {

namespace {

constexpr int kMaxIterations = 1000;

// Bisects to full double precision; f(a) and f(b) must differ in sign.
template <class F>
double bisect_root(F&& f, double a, double b) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) {
    fail(ErrorKind::BracketFailure, "no sign change of V - E on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits);
  auto [lo, hi] = boost::math::tools::bisect(f, a, b, tol);
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

void check_below_peak(double energy, const Peak& peak) {
  if (!(energy < peak.v)) {
    fail(ErrorKind::OverBarrier,
         "energy " + std::to_string(energy) + " is not below the barrier maximum " + std::to_string(peak.v));
  }
}

// Brackets for the laser-Coulomb barrier: V - E < 0 at lo and hi.
double coulomb_inner_limit(const Barrier& b, double energy, double x_peak) {
  double lo = 0.5 * x_peak;
  for (int i = 0; i < 200 && eval_potential(b, lo) - energy >= 0.0; ++i) lo *= 0.5;
  return lo;
}

double coulomb_outer_limit(const Barrier& b, double energy, double x_peak) {
  const auto& l = std::get<LaserCoulomb>(b);
  double hi = std::max(2.0 * x_peak, std::abs(energy) / l.field);
  for (int i = 0; i < 200 && eval_potential(b, hi) - energy >= 0.0; ++i) hi *= 2.0;
  return hi;
}

// Expands a bracket outward from x until V - E changes sign, clipped to [lo, hi].
template <class F>
double polish_near(F&& f, double x, double lo, double hi) {
  double step = 1e-8 * std::max(1.0, std::abs(x));
  double fx = f(x);
  if (fx == 0.0) return x;
  for (int i = 0; i < 80; ++i) {
    double a = std::max(lo, x - step);
    double b = std::min(hi, x + step);
    if ((f(a) < 0.0) != (fx < 0.0)) return bisect_root(f, a, x);
    if ((f(b) < 0.0) != (fx < 0.0)) return bisect_root(f, x, b);
    if (a == lo && b == hi) break;
    step *= 4.0;
  }
  return bisect_root(f, lo, hi);
}

}  // namespace

TurningPoints turning_points_quadratic(double z, double energy, double field) {
  if (!(field > 0.0) || !(z > 0.0)) fail(ErrorKind::DomainError, "quadratic roots need field > 0 and z > 0");
  if (!(energy < 0.0)) fail(ErrorKind::OverBarrier, "energy must be negative for a laser-Coulomb barrier");
  double e = std::abs(energy);
  double disc = e * e - 4.0 * z * field;
  if (!(disc > 0.0)) fail(ErrorKind::OverBarrier, "discriminant <= 0: no classically forbidden region");
  // Cancellation-free pair: x_R = q/field, x_L = z/q.
  double q = 0.5 * (e + std::sqrt(disc));
  return {z / q, q / field};
}

TurningPoints turning_points_selfconsistent(const Barrier& b, double energy) {
  const auto* lc = std::get_if<LaserCoulomb>(&b);
  if (!lc) fail(ErrorKind::DomainError, "self-consistent roots need a laser-Coulomb barrier");
  const Peak peak = barrier_peak(b);
  check_below_peak(energy, peak);

  auto g = [&](double x) { return eval_potential(b, x) - energy; };
  const double lo = coulomb_inner_limit(b, energy, peak.x);
  const double hi = coulomb_outer_limit(b, energy, peak.x);
  const double e = std::abs(energy);
  const double f = lc->field;

  // One fixed-point branch: x <- root of f x^2 - |E| x + Z_eff(x) = 0.
  auto iterate = [&](double seed, bool right_branch, double a, double c) {
    double x = seed;
    for (int n = 0; n < kMaxIterations; ++n) {
      if (std::abs(g(x)) < kRootTol) return polish_near(g, x, a, c);
      double z = eval_zeff(lc->zeff, x);
      double disc = e * e - 4.0 * z * f;
      if (!(disc > 0.0) || !(z > 0.0)) break;
      double q = 0.5 * (e + std::sqrt(disc));
      double next = right_branch ? q / f : z / q;
      if (!(next > a && next < c)) break;
      x = next;
    }
    // Iteration stalled or oscillated: bisection over the whole branch.
    try {
      return bisect_root(g, a, c);
    } catch (const Error&) {
      fail(ErrorKind::NoConvergence, "turning-point iteration failed and no bisection bracket exists");
    }
  };

  double seed_left = 0.5 * (lo + peak.x);
  double seed_right = 0.5 * (peak.x + hi);
  if (e * e - 4.0 * 1.375 * f > 0.0) {
    auto seeds = turning_points_quadratic(1.375, energy, f);
    seed_left = std::clamp(seeds.left, lo, peak.x);
    seed_right = std::clamp(seeds.right, peak.x, hi);
  }
  return {iterate(seed_left, false, lo, peak.x), iterate(seed_right, true, peak.x, hi)};
}

TurningPoints turning_points_bracketed(const Barrier& b, double energy) {
  validate(b);
  const Peak peak = barrier_peak(b);
  check_below_peak(energy, peak);
  auto g = [&](double x) { return eval_potential(b, x) - energy; };

  if (const auto* r = std::get_if<Rectangular>(&b)) return {0.0, r->length};
  if (const auto* t = std::get_if<Triangular>(&b)) {
    if (t->v0 - t->slope * t->length >= energy) return {0.0, t->length};
    return {0.0, bisect_root(g, 0.0, t->length)};
  }
  if (std::holds_alternative<LaserCoulomb>(b)) {
    double lo = coulomb_inner_limit(b, energy, peak.x);
    double hi = coulomb_outer_limit(b, energy, peak.x);
    return {bisect_root(g, lo, peak.x), bisect_root(g, peak.x, hi)};
  }
  const auto& tab = std::get<Tabulated>(b);
  return {bisect_root(g, tab.x_min(), peak.x), bisect_root(g, peak.x, tab.x_max())};
}

TurningPoints resolve_turning_points(const Barrier& b, double energy) {
  if (const auto* lc = std::get_if<LaserCoulomb>(&b)) {
    if (const auto* c = std::get_if<ConstantZeff>(&lc->zeff)) return turning_points_quadratic(c->z, energy, lc->field);
    return turning_points_selfconsistent(b, energy);
  }
  return turning_points_bracketed(b, energy);
}

TunnelingProblem make_problem(Barrier b, double energy, double mass) {
  validate(b);
  if (!(mass > 0.0) || !std::isfinite(mass)) fail(ErrorKind::DomainError, "mass must be positive");
  if (!std::isfinite(energy)) fail(ErrorKind::DomainError, "energy must be finite");
  check_below_peak(energy, barrier_peak(b));
  auto tp = resolve_turning_points(b, energy);
  if (!(tp.left < tp.right)) fail(ErrorKind::OverBarrier, "turning points coincide");
  return TunnelingProblem{energy, mass, std::move(b), tp.left, tp.right};
}

}  // namespace tunneltime
