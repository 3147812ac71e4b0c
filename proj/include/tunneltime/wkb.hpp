#pragma once

#include "tunneltime/turning.hpp"

namespace tunneltime {

inline constexpr double kDefaultQuadTol = 1e-10;

/// Radicands 2m(V - E) above -kRadicandClamp are treated as zero.
inline constexpr double kRadicandClamp = 1e-12;

struct WkbQuantities {
  double phi;    // action in units of hbar
  double tau_c;  // classical (imaginary-time) traversal time, a.u.
  double p_m;    // exp(-2 phi)
};

/// Under-barrier momentum sqrt(2m(V(x) - E)) for x in [x_left, x_right].
double momentum_magnitude(const TunnelingProblem& p, double x);

/// Phi = (1/hbar) * integral of the under-barrier momentum over [x_L, x_R].
double action_phi(const TunnelingProblem& p, double quad_tol = kDefaultQuadTol);

/// tau_c = integral of m / momentum over [x_L, x_R].
double classical_time(const TunnelingProblem& p, double quad_tol = kDefaultQuadTol);

WkbQuantities wkb_quantities(const TunnelingProblem& p, double quad_tol = kDefaultQuadTol);

/// Central difference of Phi in the energy, turning points re-resolved at
/// E +- step. -hbar * dphi_dE equals tau_c.
double dphi_dE(const TunnelingProblem& p, double step = 1e-5, double quad_tol = 1e-12);

}  // namespace tunneltime
