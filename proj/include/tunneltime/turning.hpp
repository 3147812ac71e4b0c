#pragma once

#include "tunneltime/potentials.hpp"

namespace tunneltime {

/// |V(x) - E| bound accepted at a resolved turning point.
inline constexpr double kRootTol = 1e-10;

struct TurningPoints {
  double left;
  double right;
};

/// A fully resolved tunneling configuration: energy, mass, barrier and the
/// classical turning points bounding the forbidden region.
struct TunnelingProblem {
  double energy;
  double mass;
  Barrier barrier;
  double x_left;
  double x_right;

  double width() const { return x_right - x_left; }
};

/// Roots of field*x^2 - |E|*x + z = 0, i.e. V(x) = E for a constant Z_eff.
TurningPoints turning_points_quadratic(double z, double energy, double field);

/// Self-consistent roots for a position-dependent Z_eff: fixed-point iteration
/// on the quadratic with Z_eff(x_n), seeded from the Kullie-constant roots and
/// polished by bisection.
TurningPoints turning_points_selfconsistent(const Barrier& b, double energy);

/// Generic bisection on each side of the barrier peak. Rectangular and
/// triangular barriers use their support edges where V jumps across E.
TurningPoints turning_points_bracketed(const Barrier& b, double energy);

/// Picks the appropriate solver for the barrier family.
TurningPoints resolve_turning_points(const Barrier& b, double energy);

/// Validates inputs, rejects over-barrier energies and resolves the turning
/// points.
TunnelingProblem make_problem(Barrier b, double energy, double mass = 1.0);

}  // namespace tunneltime
