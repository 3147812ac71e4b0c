#pragma once

#include <functional>

namespace tunneltime {

struct QuadratureResult {
  double value;
  double error;
};

/// Adaptive 21-point Gauss-Kronrod integration on [a, b] with at most 2^16
/// panels. Throws QuadratureFailure when the error estimate exceeds
/// rel_tol * |value|.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol);

}  // namespace tunneltime
