#include "tunneltime/potentials.hpp"

#include <algorithm>
#include <math.h>  // boost 1.74 pchip calls unqualified isnan

#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/tools/minima.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tunneltime/errors.hpp"

namespace tunneltime {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Bracket for numeric peak searches on the Coulomb-type barrier.
constexpr double kPeakSearchMin = 0.1;
constexpr double kPeakSearchMax = 100.0;
constexpr int kPeakScanPoints = 512;

// Coarse scan over a grid followed by Brent refinement on the neighbouring cells.
template <class F>
Peak numeric_peak(F&& v, const std::vector<double>& xs) {
  const auto n = xs.size();
  std::size_t best = 0;
  double vbest = v(xs[0]);
  for (std::size_t i = 1; i < n; ++i) {
    double vi = v(xs[i]);
    if (vi > vbest) {
      vbest = vi;
      best = i;
    }
  }
  if (best == 0 || best == n - 1) {
    fail(ErrorKind::NoPeak, "potential is monotone on [" + std::to_string(xs.front()) + ", " +
                                std::to_string(xs.back()) + "]");
  }
  auto neg = [&](double x) { return -v(x); };
  auto [x, fneg] = boost::math::tools::brent_find_minima(neg, xs[best - 1], xs[best + 1], 52);
  if (-fneg < vbest) return {xs[best], vbest};
  return {x, -fneg};
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return xs;
}

}  // namespace

ZeffModel zeff_sae() { return SaeZeff{}; }
ZeffModel zeff_kullie() { return ConstantZeff{1.375}; }
ZeffModel zeff_clementi() { return ConstantZeff{1.6875}; }

ZeffModel parse_zeff(std::string_view name) {
  if (name == "sae" || name == "SAE") return zeff_sae();
  if (name == "kullie" || name == "Kullie") return zeff_kullie();
  if (name == "clementi" || name == "Clementi") return zeff_clementi();
  double z = 0.0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), z);
  if (ec != std::errc{} || ptr != name.data() + name.size() || !(z > 0.0)) {
    fail(ErrorKind::DomainError, "unknown Z_eff model '" + std::string(name) + "'");
  }
  return ConstantZeff{z};
}

std::string zeff_label(const ZeffModel& m) {
  return std::visit(overloaded{[](const SaeZeff&) -> std::string { return "SAE"; },
                               [](const ConstantZeff& c) -> std::string {
                                 if (c.z == 1.375) return "Kullie";
                                 if (c.z == 1.6875) return "Clementi";
                                 std::ostringstream os;
                                 os.precision(17);
                                 os << c.z;
                                 return os.str();
                               }},
                    m);
}

double eval_zeff(const ZeffModel& m, double x) {
  return std::visit(overloaded{[](const ConstantZeff& c) { return c.z; },
                               [x](const SaeZeff& s) {
                                 return s.Z + s.a1 * std::exp(-s.a2 * x) + s.a3 * x * std::exp(-s.a4 * x) +
                                        s.a5 * std::exp(-s.a6 * x);
                               }},
                    m);
}

struct Tabulated::Interp {
  boost::math::interpolators::pchip<std::vector<double>> spline;
};

Tabulated::Tabulated(std::vector<Sample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 8) fail(ErrorKind::DomainError, "tabulated barrier needs at least 8 samples");
  std::vector<double> xs, vs;
  xs.reserve(samples_.size());
  vs.reserve(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].x) || !std::isfinite(samples_[i].v)) {
      fail(ErrorKind::DomainError, "tabulated barrier has a non-finite sample");
    }
    if (i > 0 && !(samples_[i].x > samples_[i - 1].x)) {
      fail(ErrorKind::DomainError, "tabulated x values must be strictly increasing");
    }
    xs.push_back(samples_[i].x);
    vs.push_back(samples_[i].v);
  }
  interp_ = std::make_shared<const Interp>(Interp{{std::move(xs), std::move(vs)}});
}

double Tabulated::operator()(double x) const {
  if (x < x_min() || x > x_max()) {
    fail(ErrorKind::DomainError, "x = " + std::to_string(x) + " outside tabulated range");
  }
  return interp_->spline(x);
}

Tabulated read_tabulated(std::istream& in) {
  std::vector<Sample> samples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    Sample s{};
    if (!(ls >> s.x >> s.v)) {
      fail(ErrorKind::DomainError, "malformed sample on line " + std::to_string(lineno));
    }
    samples.push_back(s);
  }
  return Tabulated(std::move(samples));
}

Tabulated load_tabulated(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::DomainError, "cannot open barrier file '" + path + "'");
  return read_tabulated(in);
}

void validate(const Barrier& b) {
  std::visit(overloaded{
                 [](const Rectangular& r) {
                   if (!(r.v0 > 0.0) || !(r.length > 0.0))
                     fail(ErrorKind::DomainError, "rectangular barrier needs v0 > 0 and length > 0");
                 },
                 [](const Triangular& t) {
                   if (!(t.v0 > 0.0) || !(t.length > 0.0) || !(t.slope > 0.0))
                     fail(ErrorKind::DomainError, "triangular barrier needs v0, slope, length > 0");
                 },
                 [](const LaserCoulomb& l) {
                   if (!(l.field > 0.0)) fail(ErrorKind::DomainError, "laser field must be positive");
                   if (auto* c = std::get_if<ConstantZeff>(&l.zeff); c && !(c->z > 0.0))
                     fail(ErrorKind::DomainError, "constant Z_eff must be positive");
                 },
                 [](const Tabulated&) {},
             },
             b);
}

std::string_view barrier_kind(const Barrier& b) {
  return std::visit(overloaded{[](const Rectangular&) { return std::string_view("rect"); },
                               [](const Triangular&) { return std::string_view("tri"); },
                               [](const LaserCoulomb&) { return std::string_view("laser-coulomb"); },
                               [](const Tabulated&) { return std::string_view("tabulated"); }},
                    b);
}

bool in_domain(const Barrier& b, double x) {
  return std::visit(overloaded{[x](const LaserCoulomb&) { return x > 0.0; },
                               [x](const Tabulated& t) { return x >= t.x_min() && x <= t.x_max(); },
                               [x](const auto&) { return std::isfinite(x); }},
                    b);
}

double eval_potential(const Barrier& b, double x) {
  return std::visit(overloaded{
                        [x](const Rectangular& r) { return (x >= 0.0 && x <= r.length) ? r.v0 : 0.0; },
                        [x](const Triangular& t) { return (x >= 0.0 && x <= t.length) ? t.v0 - t.slope * x : 0.0; },
                        [x](const LaserCoulomb& l) {
                          if (!(x > 0.0)) fail(ErrorKind::DomainError, "laser-Coulomb potential needs x > 0");
                          double z = eval_zeff(l.zeff, x);
                          if (!(z > 0.0)) fail(ErrorKind::DomainError, "Z_eff(x) <= 0 at x = " + std::to_string(x));
                          return -z / x - l.field * x;
                        },
                        [x](const Tabulated& t) { return t(x); },
                    },
                    b);
}

Peak barrier_peak(const Barrier& b) {
  return std::visit(overloaded{
                        [](const Rectangular& r) { return Peak{0.5 * r.length, r.v0}; },
                        [](const Triangular& t) { return Peak{0.0, t.v0}; },
                        [&b](const LaserCoulomb& l) {
                          if (auto* c = std::get_if<ConstantZeff>(&l.zeff)) {
                            // dV/dx = z/x^2 - field = 0
                            return Peak{std::sqrt(c->z / l.field), -2.0 * std::sqrt(c->z * l.field)};
                          }
                          return numeric_peak([&b](double x) { return eval_potential(b, x); },
                                              log_grid(kPeakSearchMin, kPeakSearchMax, kPeakScanPoints));
                        },
                        [](const Tabulated& t) {
                          std::vector<double> xs;
                          xs.reserve(t.samples().size());
                          for (const auto& s : t.samples()) xs.push_back(s.x);
                          return numeric_peak(t, xs);
                        },
                    },
                    b);
}

}  // namespace tunneltime
