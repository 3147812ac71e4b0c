#pragma once

#include "tunneltime/potentials.hpp"

namespace tunneltime {

inline constexpr int kDefaultSlices = 4096;

struct ScatteringResult {
  double p_t;
  double p_r;
  int grid_points;
};

/// Exact transmission through a rectangular barrier,
/// 1 / (1 + v0^2 sinh^2(phi) / (4 E (v0 - E))).
double pt_rectangular_exact(double energy, double v0, double phi);

/// WKB transmission 1/cosh^2(phi), overflow-safe for large phi.
double pt_wkb(double phi);

/// exp(-2 phi) / p_t for the two closed forms, without forming either factor.
double decay_over_pt_rectangular(double energy, double v0, double phi);
double decay_over_pt_wkb(double phi);

/// Transfer-matrix solution of the stationary Schroedinger equation with V
/// held constant on each of `slices` slices. The barrier sits between flat
/// leads at the potential's edge values. Not available for laser-Coulomb
/// barriers, which have no propagating lead downfield.
ScatteringResult pt_numeric(const Barrier& b, double energy, double mass = 1.0, int slices = kDefaultSlices);

}  // namespace tunneltime
