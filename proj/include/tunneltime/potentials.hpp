#pragma once

#include <istream>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tunneltime {

// Effective nuclear charge models.

struct ConstantZeff {
  double z;
};

/// Single-active-electron charge
///   Z_eff(x) = Z + a1 exp(-a2 x) + a3 x exp(-a4 x) + a5 exp(-a6 x).
struct SaeZeff {
  double Z = 1.0;
  double a1 = 1.231;
  double a2 = 0.662;
  double a3 = -1.325;
  double a4 = 1.236;
  double a5 = -0.231;
  double a6 = 0.480;
};

using ZeffModel = std::variant<ConstantZeff, SaeZeff>;

ZeffModel zeff_sae();
ZeffModel zeff_kullie();    // 1.375
ZeffModel zeff_clementi();  // 1.6875

/// Parses "sae", "kullie", "clementi" or a positive number.
ZeffModel parse_zeff(std::string_view name);
std::string zeff_label(const ZeffModel& m);

double eval_zeff(const ZeffModel& m, double x);

// Barrier families. Rectangular and triangular barriers occupy [0, length]
// and are zero outside it.

struct Rectangular {
  double v0;
  double length;
};

/// V(x) = v0 - slope * x on [0, length].
struct Triangular {
  double v0;
  double slope;
  double length;
};

/// V(x) = -Z_eff(x)/x - field * x, defined for x > 0.
struct LaserCoulomb {
  double field;
  ZeffModel zeff;
};

struct Sample {
  double x;
  double v;
};

/// Sampled potential with monotone (PCHIP) interpolation between nodes.
class Tabulated {
 public:
  explicit Tabulated(std::vector<Sample> samples);

  const std::vector<Sample>& samples() const { return samples_; }
  double x_min() const { return samples_.front().x; }
  double x_max() const { return samples_.back().x; }
  double operator()(double x) const;

 private:
  struct Interp;
  std::vector<Sample> samples_;
  std::shared_ptr<const Interp> interp_;
};

/// Reads whitespace-separated "x V" pairs (atomic units); '#' lines and blank
/// lines are skipped.
Tabulated read_tabulated(std::istream& in);
Tabulated load_tabulated(const std::string& path);

using Barrier = std::variant<Rectangular, Triangular, LaserCoulomb, Tabulated>;

/// Throws DomainError when the barrier parameters violate their invariants.
void validate(const Barrier& b);

std::string_view barrier_kind(const Barrier& b);

bool in_domain(const Barrier& b, double x);
double eval_potential(const Barrier& b, double x);

struct Peak {
  double x;
  double v;
};

/// Location and height of the barrier maximum.
Peak barrier_peak(const Barrier& b);

}  // namespace tunneltime
