#include "tunneltime/transmission.hpp"

#include <array>
#include <cmath>
#include <variant>

#include "tunneltime/errors.hpp"

namespace tunneltime {

namespace {

// Above this action the closed forms switch to exp(-2 phi) arithmetic.
constexpr double kLargePhi = 20.0;

void check_rect_energy(double energy, double v0) {
  if (!(energy > 0.0 && energy < v0)) fail(ErrorKind::DomainError, "rectangular formulas need 0 < E < v0");
}

double rect_coupling(double energy, double v0) { return v0 * v0 / (4.0 * energy * (v0 - energy)); }

// Real transfer matrix acting on (psi, psi').
struct Transfer {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  // this <- step * this
  void prepend(const Transfer& s) {
    Transfer r{s.a * a + s.b * c, s.a * b + s.b * d, s.c * a + s.d * c, s.c * b + s.d * d};
    *this = r;
  }
};

Transfer slice_matrix(double k2, double width) {
  if (k2 > 0.0) {
    const double k = std::sqrt(k2);
    const double s = std::sin(k * width), co = std::cos(k * width);
    return {co, s / k, -k * s, co};
  }
  if (k2 < 0.0) {
    const double kappa = std::sqrt(-k2);
    const double s = std::sinh(kappa * width), ch = std::cosh(kappa * width);
    return {ch, s / kappa, kappa * s, ch};
  }
  return {1.0, width, 0.0, 1.0};
}

struct Support {
  double lo, hi;
  double lead_left, lead_right;
};

Support support_of(const Barrier& b) {
  if (const auto* r = std::get_if<Rectangular>(&b)) return {0.0, r->length, 0.0, 0.0};
  if (const auto* t = std::get_if<Triangular>(&b)) return {0.0, t->length, 0.0, 0.0};
  if (const auto* tab = std::get_if<Tabulated>(&b)) {
    return {tab->x_min(), tab->x_max(), (*tab)(tab->x_min()), (*tab)(tab->x_max())};
  }
  fail(ErrorKind::DomainError, "the scattering oracle is not offered for laser-Coulomb barriers");
}

}  // namespace

double pt_rectangular_exact(double energy, double v0, double phi) {
  check_rect_energy(energy, v0);
  if (!(phi >= 0.0)) fail(ErrorKind::DomainError, "phi must be non-negative");
  const double k = rect_coupling(energy, v0);
  if (phi < kLargePhi) {
    const double s = std::sinh(phi);
    return 1.0 / (1.0 + k * s * s);
  }
  const double e2 = std::exp(-2.0 * phi);
  const double g = -std::expm1(-2.0 * phi);
  return e2 / (e2 + 0.25 * k * g * g);
}

double pt_wkb(double phi) {
  if (!(phi >= 0.0)) fail(ErrorKind::DomainError, "phi must be non-negative");
  if (phi < kLargePhi) {
    const double s = std::exp(phi) + std::exp(-phi);
    return 4.0 / (s * s);
  }
  const double e2 = std::exp(-2.0 * phi);
  return 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
}

double decay_over_pt_rectangular(double energy, double v0, double phi) {
  check_rect_energy(energy, v0);
  // exp(-2 phi) (1 + k sinh^2 phi) = exp(-2 phi) + k (1 - exp(-2 phi))^2 / 4
  const double e2 = std::exp(-2.0 * phi);
  const double g = -std::expm1(-2.0 * phi);
  return e2 + 0.25 * rect_coupling(energy, v0) * g * g;
}

double decay_over_pt_wkb(double phi) {
  // cosh^2(phi) exp(-2 phi) = (1 + exp(-2 phi))^2 / 4
  const double e2 = std::exp(-2.0 * phi);
  return 0.25 * (1.0 + e2) * (1.0 + e2);
}

ScatteringResult pt_numeric(const Barrier& b, double energy, double mass, int slices) {
  // A zero-height rectangle is admitted here as the free-particle reference.
  if (const auto* r = std::get_if<Rectangular>(&b); r && r->v0 == 0.0) {
    if (!(r->length > 0.0)) fail(ErrorKind::DomainError, "rectangular barrier needs length > 0");
  } else {
    validate(b);
  }
  if (slices < 64) fail(ErrorKind::DomainError, "the scattering oracle needs at least 64 slices");
  if (!(mass > 0.0)) fail(ErrorKind::DomainError, "mass must be positive");
  const Support sup = support_of(b);
  const double k2_left = 2.0 * mass * (energy - sup.lead_left);
  const double k2_right = 2.0 * mass * (energy - sup.lead_right);
  if (!(k2_left > 0.0) || !(k2_right > 0.0)) {
    fail(ErrorKind::EvanescentLead, "energy is not above both lead levels");
  }
  const double kl = std::sqrt(k2_left);
  const double kr = std::sqrt(k2_right);

  const double h = (sup.hi - sup.lo) / slices;
  Transfer m;
  for (int j = 0; j < slices; ++j) {
    const double xm = sup.lo + (j + 0.5) * h;
    m.prepend(slice_matrix(2.0 * mass * (energy - eval_potential(b, xm)), h));
  }

  // psi = e^{ikx} + r e^{-ikx} on the left, t e^{ikx} on the right.
  const double p = m.b * kl * kr;
  const double den = (p - m.c) * (p - m.c) + (m.a * kr + m.d * kl) * (m.a * kr + m.d * kl);
  const double num_r = (p + m.c) * (p + m.c) + (m.d * kl - m.a * kr) * (m.d * kl - m.a * kr);
  return {4.0 * kl * kr / den, num_r / den, slices};
}

}  // namespace tunneltime
