#include "tunneltime/times.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tunneltime/errors.hpp"
#include "tunneltime/stattherm.hpp"
#include "tunneltime/transmission.hpp"

namespace tunneltime {

namespace {

constexpr double kLargePhi = 20.0;

void check_rect(double energy, double v0, double length, double mass) {
  if (!(energy > 0.0 && energy < v0)) fail(ErrorKind::DomainError, "rectangular times need 0 < E < v0");
  if (!(length >= 0.0)) fail(ErrorKind::DomainError, "barrier width must be non-negative");
  if (!(mass > 0.0)) fail(ErrorKind::DomainError, "mass must be positive");
}

// p_t * sinh(phi) cosh(phi) for the rectangular barrier.
double pt_sinh_cosh(double energy, double v0, double phi) {
  const double k = v0 * v0 / (4.0 * energy * (v0 - energy));
  if (phi < kLargePhi) {
    const double s = std::sinh(phi);
    return s * std::cosh(phi) / (1.0 + k * s * s);
  }
  const double e2 = std::exp(-2.0 * phi);
  const double g = -std::expm1(-2.0 * phi);
  return -std::expm1(-4.0 * phi) / (4.0 * e2 + k * g * g);
}

struct RectParts {
  double phi;
  double phi_e;
  double tau_c;
  double p_t;
  double pt_sc;
};

RectParts rect_parts(double energy, double v0, double length, double mass) {
  const double phi = phi_rectangular(energy, v0, length, mass);
  return {phi, std::sqrt(2.0 * mass * energy) * length, tau_c_rectangular(energy, v0, length, mass),
          pt_rectangular_exact(energy, v0, phi), pt_sinh_cosh(energy, v0, phi)};
}

}  // namespace

double ett_from_decay_ratio(double tau_c, double phi, double decay_over_pt) {
  if (!(tau_c > 0.0)) fail(ErrorKind::DomainError, "ETT needs tau_c > 0");
  return -(tau_c / (2.0 * std::numbers::pi)) * decay_over_pt * bracket(phi);
}

double ett_general(double tau_c, double phi, double p_t) {
  if (!(p_t > 0.0 && p_t <= 1.0)) fail(ErrorKind::DomainError, "ETT needs p_t in (0, 1]");
  return ett_from_decay_ratio(tau_c, phi, std::exp(-2.0 * phi) / p_t);
}

double ett_he(double tau_c, double phi) { return ett_from_decay_ratio(tau_c, phi, decay_over_pt_wkb(phi)); }

double phi_rectangular(double energy, double v0, double length, double mass) {
  check_rect(energy, v0, length, mass);
  return std::sqrt(2.0 * mass * (v0 - energy)) * length;
}

double tau_c_rectangular(double energy, double v0, double length, double mass) {
  check_rect(energy, v0, length, mass);
  // m L^2 / Phi, written so that L = 0 gives 0.
  return mass * length / std::sqrt(2.0 * mass * (v0 - energy));
}

double ett_rectangular(double energy, double v0, double length, double mass) {
  const double phi = phi_rectangular(energy, v0, length, mass);
  const double tau = tau_c_rectangular(energy, v0, length, mass);
  // ((v0 - E) + (v0 sinh phi)^2 / 4E) exp(-2 phi) / (v0 - E), with
  // sinh^2(phi) exp(-2 phi) = (1 - exp(-2 phi))^2 / 4.
  const double e2 = std::exp(-2.0 * phi);
  const double g = -std::expm1(-2.0 * phi);
  const double ratio = e2 + v0 * v0 * g * g / (16.0 * energy * (v0 - energy));
  return -(tau / (2.0 * std::numbers::pi)) * ratio * bracket(phi);
}

double phase_time_rectangular(double energy, double v0, double length, double mass) {
  check_rect(energy, v0, length, mass);
  if (length == 0.0) return 0.0;
  const auto r = rect_parts(energy, v0, length, mass);
  const double phi2 = r.phi * r.phi, e2 = r.phi_e * r.phi_e;
  const double pre = r.tau_c / (2.0 * phi2 * e2 * r.phi_e);
  return pre * (r.p_t * r.phi * e2 * (phi2 - e2) + (phi2 + e2) * (phi2 + e2) * r.pt_sc);
}

double dwell_time_rectangular(double energy, double v0, double length, double mass) {
  check_rect(energy, v0, length, mass);
  if (length == 0.0) return 0.0;
  const auto r = rect_parts(energy, v0, length, mass);
  const double phi2 = r.phi * r.phi, e2 = r.phi_e * r.phi_e;
  const double pre = r.tau_c / (2.0 * phi2 * r.phi_e);
  return pre * (r.p_t * r.phi * (phi2 - e2) + (phi2 + e2) * r.pt_sc);
}

TriangularScalings triangular_scalings(double v0, double energy, double field, double length, double mass) {
  if (!(field > 0.0) || !(length > 0.0) || !(mass > 0.0) || !(energy < v0)) {
    fail(ErrorKind::DomainError, "triangular scalings need field, length, mass > 0 and E < v0");
  }
  const double depth = v0 - energy;
  if (depth / field > length) {
    fail(ErrorKind::RegimeError, "turning point (v0 - E)/field lies beyond the triangle base");
  }
  const double phi_box = std::sqrt(2.0 * mass * depth) * length;
  const double tau_box = mass * length * length / phi_box;
  const double ratio = depth / (field * length);
  return {(2.0 / 3.0) * ratio * phi_box, 2.0 * ratio * tau_box};
}

TimesReport compute_times(const TunnelingProblem& p, double quad_tol) {
  const auto w = wkb_quantities(p, quad_tol);
  TimesReport r{};
  r.phi = w.phi;
  r.tau_c = w.tau_c;
  r.p_m = w.p_m;
  r.p_t_wkb = pt_wkb(w.phi);

  double decay_ratio = decay_over_pt_wkb(w.phi);
  r.p_t_used = r.p_t_wkb;
  if (const auto* rect = std::get_if<Rectangular>(&p.barrier); rect && p.energy > 0.0) {
    r.p_t_used = pt_rectangular_exact(p.energy, rect->v0, w.phi);
    decay_ratio = decay_over_pt_rectangular(p.energy, rect->v0, w.phi);
    r.phase_time = phase_time_rectangular(p.energy, rect->v0, rect->length, p.mass);
    r.dwell_time = dwell_time_rectangular(p.energy, rect->v0, rect->length, p.mass);
  }
  r.ett = ett_from_decay_ratio(w.tau_c, w.phi, decay_ratio);
  r.entropy_over_kB = entropy(w.p_m > 0.0 ? w.p_m : std::numeric_limits<double>::denorm_min());
  r.inv_kBT = inverse_temperature(w.phi, w.tau_c);
  r.kBT = 1.0 / r.inv_kBT;
  r.delta_e_ther = thermal_energy(r.p_t_used, r.kBT);
  r.positivity_flag = w.phi > critical_phi();
  return r;
}

}  // namespace tunneltime
