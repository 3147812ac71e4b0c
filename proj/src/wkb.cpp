#include "tunneltime/wkb.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tunneltime/errors.hpp"
#include "tunneltime/quadrature.hpp"

namespace tunneltime {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Points this close (relative to the width) to a turning point may have a
// clamped, zero momentum without signalling an interior singularity.
constexpr double kEndpointZone = 1e-6;

void check_tolerance(double quad_tol) {
  if (!(quad_tol >= 1e-13 && quad_tol <= 1e-6)) {
    fail(ErrorKind::DomainError, "quad_tol must lie in [1e-13, 1e-6]");
  }
}

double radicand(const TunnelingProblem& p, double x) {
  double r = 2.0 * p.mass * (eval_potential(p.barrier, x) - p.energy);
  if (r < 0.0) {
    if (r >= -kRadicandClamp) return 0.0;
    fail(ErrorKind::SingularityError, "V < E inside the forbidden region at x = " + std::to_string(x));
  }
  return r;
}

// x = x_L + W sin^2(theta) maps [0, pi/2] onto [x_L, x_R]; dx = W sin(2 theta).
struct SinSquaredMap {
  double x_left;
  double width;
  double x(double theta) const {
    double s = std::sin(theta);
    return x_left + width * s * s;
  }
  double jacobian(double theta) const { return width * std::sin(2.0 * theta); }
};

// Limit of m * dx/dtheta / momentum at a turning point where the potential
// crosses E with finite slope: sqrt(2 m W / |V'|).
double endpoint_limit(const TunnelingProblem& p, bool left) {
  const double w = p.width();
  const double h = 1e-7 * w;
  const double x = left ? p.x_left + h : p.x_right - h;
  const double slope = (eval_potential(p.barrier, x) - p.energy) / h;
  if (!(slope > 0.0)) fail(ErrorKind::SingularityError, "flat potential at a turning point");
  return std::sqrt(2.0 * p.mass * w / slope);
}

}  // namespace

double momentum_magnitude(const TunnelingProblem& p, double x) {
  if (x < p.x_left || x > p.x_right) {
    fail(ErrorKind::DomainError, "x = " + std::to_string(x) + " outside the forbidden region");
  }
  if (x == p.x_left || x == p.x_right) return 0.0;
  return std::sqrt(radicand(p, x));
}

double action_phi(const TunnelingProblem& p, double quad_tol) {
  check_tolerance(quad_tol);
  if (!(p.x_right > p.x_left)) return 0.0;
  const SinSquaredMap map{p.x_left, p.width()};
  auto integrand = [&](double theta) { return std::sqrt(radicand(p, map.x(theta))) * map.jacobian(theta); };
  return integrate_adaptive(integrand, 0.0, kHalfPi, quad_tol).value;
}

double classical_time(const TunnelingProblem& p, double quad_tol) {
  check_tolerance(quad_tol);
  if (!(p.x_right > p.x_left)) fail(ErrorKind::DomainError, "classical time needs x_left < x_right");
  const SinSquaredMap map{p.x_left, p.width()};
  auto integrand = [&](double theta) {
    const double x = map.x(theta);
    const double r = radicand(p, x);
    if (r > 0.0) return p.mass * map.jacobian(theta) / std::sqrt(r);
    const double d_left = (x - p.x_left) / map.width;
    const double d_right = (p.x_right - x) / map.width;
    if (d_left < kEndpointZone) return endpoint_limit(p, true) * std::cos(theta);
    if (d_right < kEndpointZone) return endpoint_limit(p, false) * std::sin(theta);
    fail(ErrorKind::SingularityError, "momentum vanishes inside the forbidden region at x = " + std::to_string(x));
  };
  double tau = integrate_adaptive(integrand, 0.0, kHalfPi, quad_tol).value;
  if (!(tau > 0.0)) fail(ErrorKind::QuadratureFailure, "non-positive classical time");
  return tau;
}

WkbQuantities wkb_quantities(const TunnelingProblem& p, double quad_tol) {
  const double phi = action_phi(p, quad_tol);
  return {phi, classical_time(p, quad_tol), std::exp(-2.0 * phi)};
}

double dphi_dE(const TunnelingProblem& p, double step, double quad_tol) {
  if (!(step > 0.0)) fail(ErrorKind::DomainError, "finite-difference step must be positive");
  auto phi_at = [&](double e) { return action_phi(make_problem(p.barrier, e, p.mass), quad_tol); };
  return (phi_at(p.energy + step) - phi_at(p.energy - step)) / (2.0 * step);
}

}  // namespace tunneltime
