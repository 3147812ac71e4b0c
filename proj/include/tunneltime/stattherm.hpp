#pragma once

namespace tunneltime {

struct StatState {
  double entropy_over_kB;
  double inv_kBT;        // signed
  double bracket_value;  // B(phi)
};

/// S/k_B = p log(1 - log p) for p in (0, 1].
double entropy(double p_m);

/// B(phi) = 1/(1 + 2 phi) + log(1/(1 + 2 phi)). Strictly decreasing, with its
/// only zero at critical_phi().
double bracket(double phi);

/// Zero of bracket(), found by bisection once and cached.
double critical_phi();

/// 1/(k_B T) = -(2 tau_c / hbar) exp(-2 phi) B(phi). Positive iff phi > critical_phi().
double inverse_temperature(double phi, double tau_c);

/// Delta E_ther = p_t * 2 pi k_B T, sign carried by kBT.
double thermal_energy(double p_t, double kBT);

StatState stat_state(double phi, double tau_c);

struct EntropyMaximum {
  double p_m;
  double entropy;
};

/// Stationary point of entropy() on (0, 1).
EntropyMaximum entropy_maximum();

}  // namespace tunneltime
