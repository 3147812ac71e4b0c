#include "tunneltime/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "tunneltime/errors.hpp"

namespace tunneltime {

namespace {

constexpr std::size_t kMaxPanels = 1u << 16;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// One 21-point Gauss-Kronrod panel. Boost's estimate is for [-1, 1]; rescale it to [a, b].
Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  double error = 0.0;
  double l1 = 0.0;
  double value = GK::integrate(f, a, b, 0, 0.0, &error, &l1);
  return {a, b, value, error * 0.5 * std::abs(b - a), l1};
}

}  // namespace

// Global adaptive subdivision: always bisect the panel with the largest error.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  if (a == b) return {0.0, 0.0};
  std::priority_queue<Panel> panels;
  Panel first = evaluate_panel(f, a, b);
  double value = first.value;
  double error = first.error;
  double l1 = first.l1;
  panels.push(first);

  auto allowed = [&] {
    // Allow for the roundoff floor of a 21-point rule.
    return std::max(rel_tol * std::abs(value), 50.0 * std::numeric_limits<double>::epsilon() * l1);
  };

  while (error > allowed() && panels.size() < kMaxPanels) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
      panels.push(worst);
      break;
    }
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed drift from the running updates.
  value = 0.0;
  error = 0.0;
  l1 = 0.0;
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    value += it->value;
    error += it->error;
    l1 += it->l1;
  }

  if (!std::isfinite(value)) fail(ErrorKind::QuadratureFailure, "non-finite integral");
  if (error > allowed()) {
    std::ostringstream os;
    os << "error estimate " << error << " exceeds " << allowed() << " within the panel budget";
    fail(ErrorKind::QuadratureFailure, os.str());
  }
  return {value, error};
}

}  // namespace tunneltime
