#pragma once

#include <optional>

#include "tunneltime/turning.hpp"
#include "tunneltime/wkb.hpp"

namespace tunneltime {

/// Every time definition for one problem. Times in a.u.; ett and kBT are signed.
struct TimesReport {
  double ett;
  double tau_c;
  std::optional<double> phase_time;  // rectangular only
  std::optional<double> dwell_time;  // rectangular only
  double p_t_used;
  double p_t_wkb;
  double p_m;
  double phi;
  double entropy_over_kB;
  double inv_kBT;
  double kBT;
  double delta_e_ther;
  bool positivity_flag;  // phi > critical_phi()
};

/// Entropic tunneling time
///   -(tau_c / (2 pi p_t)) exp(-2 phi) (1/(1+2phi) + log(1/(1+2phi))).
double ett_general(double tau_c, double phi, double p_t);

/// Same with exp(-2 phi)/p_t supplied directly, for callers holding a
/// cancellation-free form of the ratio.
double ett_from_decay_ratio(double tau_c, double phi, double decay_over_pt);

/// ETT with the WKB transmission 1/cosh^2(phi).
double ett_he(double tau_c, double phi);

// Rectangular barrier of height v0 and width length, 0 < energy < v0.
double phi_rectangular(double energy, double v0, double length, double mass = 1.0);
double tau_c_rectangular(double energy, double v0, double length, double mass = 1.0);
double ett_rectangular(double energy, double v0, double length, double mass = 1.0);
double phase_time_rectangular(double energy, double v0, double length, double mass = 1.0);
double dwell_time_rectangular(double energy, double v0, double length, double mass = 1.0);

struct TriangularScalings {
  double phi;
  double tau_c;
};

/// Action and classical time of V(x) = v0 - field*x on [0, length] as
/// multiples of the rectangular values. Requires (v0 - E)/field <= length.
TriangularScalings triangular_scalings(double v0, double energy, double field, double length, double mass = 1.0);

/// Quadrature-based report for any resolved problem. Rectangular barriers use
/// the exact transmission, all others the WKB form.
TimesReport compute_times(const TunnelingProblem& p, double quad_tol = kDefaultQuadTol);

}  // namespace tunneltime
