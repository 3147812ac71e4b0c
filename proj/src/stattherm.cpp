#include "tunneltime/stattherm.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "tunneltime/errors.hpp"

namespace tunneltime {

namespace {

double bisect_to(auto f, double a, double b, int bits) {
  boost::math::tools::eps_tolerance<double> tol(bits);
  auto [lo, hi] = boost::math::tools::bisect(f, a, b, tol);
  return 0.5 * (lo + hi);
}

}  // namespace

double entropy(double p_m) {
  if (!(p_m > 0.0 && p_m <= 1.0)) fail(ErrorKind::DomainError, "entropy needs p_m in (0, 1]");
  return p_m * std::log1p(-std::log(p_m));
}

double bracket(double phi) {
  if (!(phi >= 0.0)) fail(ErrorKind::DomainError, "bracket needs phi >= 0");
  const double u = 1.0 + 2.0 * phi;
  return 1.0 / u - std::log1p(2.0 * phi);
}

double critical_phi() {
  // bracket(0) = 1 and bracket(1) < 0.
  static const double phi_star = bisect_to([](double phi) { return bracket(phi); }, 0.0, 1.0, 42);
  return phi_star;
}

double inverse_temperature(double phi, double tau_c) {
  if (!(tau_c > 0.0)) fail(ErrorKind::DomainError, "inverse temperature needs tau_c > 0");
  return -2.0 * tau_c * std::exp(-2.0 * phi) * bracket(phi);
}

double thermal_energy(double p_t, double kBT) {
  if (!(p_t > 0.0 && p_t <= 1.0)) fail(ErrorKind::DomainError, "thermal energy needs p_t in (0, 1]");
  return p_t * 2.0 * std::numbers::pi * kBT;
}

StatState stat_state(double phi, double tau_c) {
  return {entropy(std::exp(-2.0 * phi)), inverse_temperature(phi, tau_c), bracket(phi)};
}

EntropyMaximum entropy_maximum() {
  // dS/dp = log(1 - log p) - 1/(1 - log p); positive near 0, negative at 1.
  auto slope = [](double p) {
    const double u = 1.0 - std::log(p);
    return std::log(u) - 1.0 / u;
  };
  const double p = bisect_to(slope, 0.05, 0.95, std::numeric_limits<double>::digits);
  return {p, entropy(p)};
}

}  // namespace tunneltime
