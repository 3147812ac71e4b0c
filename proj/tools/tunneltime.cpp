// tunneltime: single-point tunneling times and the reproduction scans.
//
// Exit status: 0 success, 2 usage error, 3 numeric/domain error (or a failed
// Table 1 regression).

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tunneltime/tunneltime.hpp"

namespace tt = tunneltime;
namespace units = tunneltime::units;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BarrierOptions {
  std::string kind = "rect";
  std::optional<double> v0;
  std::optional<double> length;
  std::optional<double> slope;
  std::optional<double> field;
  std::string zeff = "kullie";
  std::string file;
  std::optional<double> energy;
  double mass = 1.0;
  double quad_tol = tt::kDefaultQuadTol;
  std::vector<std::string> unit_overrides;
  std::string format = "text";
  std::string output;
  int slices = tt::kDefaultSlices;

  bool energy_in_ev() const { return has_unit("eV"); }
  bool length_in_angstrom() const { return has_unit("angstrom"); }
  bool time_in_fs() const { return has_unit("fs"); }

  bool has_unit(const std::string& u) const {
    for (const auto& x : unit_overrides)
      if (x == u) return true;
    return false;
  }
};

double require(const std::optional<double>& v, const char* flag, const std::string& kind) {
  if (!v) throw UsageError(std::string("--") + flag + " is required for --barrier " + kind);
  return *v;
}

double to_energy(const BarrierOptions& o, double v) { return o.energy_in_ev() ? units::ev_to_au(v) : v; }
double to_length(const BarrierOptions& o, double v) { return o.length_in_angstrom() ? units::angstrom_to_au(v) : v; }

tt::Barrier build_barrier(const BarrierOptions& o) {
  tt::Barrier b = [&]() -> tt::Barrier {
    if (o.kind == "rect") {
      return tt::Rectangular{to_energy(o, require(o.v0, "v0", o.kind)), to_length(o, require(o.length, "length", o.kind))};
    }
    if (o.kind == "tri") {
      return tt::Triangular{to_energy(o, require(o.v0, "v0", o.kind)), require(o.slope, "slope", o.kind),
                            to_length(o, require(o.length, "length", o.kind))};
    }
    if (o.kind == "laser-coulomb") {
      return tt::LaserCoulomb{require(o.field, "field", o.kind), tt::parse_zeff(o.zeff)};
    }
    if (o.kind == "tabulated") {
      if (o.file.empty()) throw UsageError("--file is required for --barrier tabulated");
      return tt::load_tabulated(o.file);
    }
    throw UsageError("unknown barrier '" + o.kind + "'");
  }();
  tt::validate(b);
  return b;
}

double energy_of(const BarrierOptions& o) {
  if (!o.energy) throw UsageError("--energy is required");
  return to_energy(o, *o.energy);
}

void check_quad_tol(double tol) {
  if (!(tol >= 1e-13 && tol <= 1e-6)) throw UsageError("--quad-tol must lie in [1e-13, 1e-6]");
}

// Output goes to --output when given, standard output otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_stdout() const { return !file_.is_open(); }

 private:
  std::ofstream file_;
};

void add_barrier_options(CLI::App* cmd, BarrierOptions& o) {
  cmd->add_option("--barrier", o.kind, "Barrier family")
      ->check(CLI::IsMember({"rect", "tri", "laser-coulomb", "tabulated"}))
      ->capture_default_str();
  cmd->add_option("--v0", o.v0, "Barrier height (rect, tri)");
  cmd->add_option("--length", o.length, "Barrier width (rect, tri)");
  cmd->add_option("--slope", o.slope, "Field strength of the triangular ramp, a.u.");
  cmd->add_option("--field", o.field, "Laser peak field, a.u. (laser-coulomb)");
  cmd->add_option("--zeff", o.zeff, "Z_eff model: sae, kullie, clementi or a number")->capture_default_str();
  cmd->add_option("--file", o.file, "Two-column x V file (tabulated)");
  cmd->add_option("--energy", o.energy, "Particle energy");
  cmd->add_option("--mass", o.mass, "Particle mass, a.u.")->capture_default_str();
  cmd->add_option("--unit", o.unit_overrides,
                  "Unit overrides: eV (energies), angstrom (lengths), as or fs (displayed lab time)")
      ->check(CLI::IsMember({"au", "eV", "angstrom", "as", "fs"}));
}

void add_output_options(CLI::App* cmd, BarrierOptions& o, std::vector<std::string> formats) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  cmd->add_option("--output,-o", o.output, "Output path (default: standard output)");
}

// times ---------------------------------------------------------------------

int cmd_times(const BarrierOptions& o) {
  check_quad_tol(o.quad_tol);
  auto barrier = build_barrier(o);
  const double energy = energy_of(o);
  const auto problem = tt::make_problem(barrier, energy, o.mass);
  const auto r = tt::compute_times(problem, o.quad_tol);

  std::optional<tt::ScatteringResult> oracle;
  if (!std::holds_alternative<tt::LaserCoulomb>(barrier)) {
    try {
      oracle = tt::pt_numeric(barrier, energy, o.mass, o.slices);
    } catch (const tt::Error& e) {
      std::cerr << "note: scattering oracle unavailable: " << e.what() << '\n';
    }
  }

  Sink sink(o.output);
  auto& out = sink.stream();
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["barrier"] = tt::barrier_kind(barrier);
    j["energy_au"] = energy;
    j["mass_au"] = o.mass;
    j["x_L"] = problem.x_left;
    j["x_R"] = problem.x_right;
    j["phi"] = r.phi;
    j["p_m"] = r.p_m;
    j["tau_c_au"] = r.tau_c;
    j["tau_c_as"] = units::to_attoseconds(r.tau_c);
    j["ett_au"] = r.ett;
    j["ett_as"] = units::to_attoseconds(r.ett);
    j["ett_fs"] = units::to_femtoseconds(r.ett);
    if (r.phase_time) j["phase_time_au"] = *r.phase_time;
    if (r.dwell_time) j["dwell_time_au"] = *r.dwell_time;
    j["p_t_used"] = r.p_t_used;
    j["p_t_wkb"] = r.p_t_wkb;
    if (oracle) j["p_t_oracle"] = oracle->p_t;
    j["entropy_over_kB"] = r.entropy_over_kB;
    j["inv_kBT_au"] = r.inv_kBT;
    j["kBT_au"] = r.kBT;
    j["delta_e_ther_au"] = r.delta_e_ther;
    j["positivity_flag"] = r.positivity_flag;
    out << j.dump(2) << '\n';
    return 0;
  }

  const bool fs = o.time_in_fs();
  auto lab = [&](double t) { return fs ? units::to_femtoseconds(t) : units::to_attoseconds(t); };
  const char* lab_unit = fs ? "fs" : "as";
  auto line = [&](const std::string& key, double au, bool is_time) {
    out << key << " = " << tt::format_double(au) << (is_time ? " a.u." : "");
    if (is_time) out << " (" << tt::format_double(lab(au)) << ' ' << lab_unit << ')';
    out << '\n';
  };
  out << "barrier = " << tt::barrier_kind(barrier) << '\n';
  line("energy", energy, false);
  line("x_L", problem.x_left, false);
  line("x_R", problem.x_right, false);
  line("phi", r.phi, false);
  line("p_m", r.p_m, false);
  line("tau_c", r.tau_c, true);
  line("ett", r.ett, true);
  if (r.phase_time) line("phase_time", *r.phase_time, true);
  if (r.dwell_time) line("dwell_time", *r.dwell_time, true);
  line("p_t_used", r.p_t_used, false);
  line("p_t_wkb", r.p_t_wkb, false);
  if (oracle) line("p_t_oracle", oracle->p_t, false);
  line("entropy_over_kB", r.entropy_over_kB, false);
  line("inv_kBT", r.inv_kBT, false);
  line("kBT", r.kBT, false);
  line("delta_e_ther", r.delta_e_ther, false);
  out << "positivity_flag = " << (r.positivity_flag ? "true" : "false") << '\n';
  if (!r.positivity_flag) std::cerr << "warning: phi <= critical phi; ETT and temperature are negative\n";
  return 0;
}

// table1 --------------------------------------------------------------------

int cmd_table1(const BarrierOptions& o) {
  check_quad_tol(o.quad_tol);
  const auto rows = tt::run_table1(o.quad_tol);
  const auto cells = tt::table1_diff(rows);

  Sink sink(o.output);
  const bool data = o.format != "text";
  if (o.format == "csv") tt::write_csv(sink.stream(), rows);
  if (o.format == "json") tt::write_json(sink.stream(), rows);
  std::ostream& diff = (data && sink.to_stdout()) ? std::cerr : std::cout;

  int failures = 0;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-9s %5s %-9s %14s %12s %10s  %s\n", "model", "field", "cell", "computed",
                "reference", "tolerance", "status");
  diff << buf;
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof buf, "%-9s %5.2f %-9s %14.6f %12.2f %9g%s  %s\n", c.model.c_str(), c.field,
                  c.quantity.c_str(), c.computed, c.reference, c.relative ? 100.0 * c.tolerance : c.tolerance,
                  c.relative ? "%" : " ", c.pass ? "PASS" : "FAIL");
    diff << buf;
    if (!c.pass) {
      ++failures;
      if (c.root_tolerance_shift) {
        diff << "    attribution: root tolerance 1e-4 shifts by " << *c.root_tolerance_shift
             << ", quad_tol 1e-6 shifts by " << *c.quadrature_shift << '\n';
      }
    }
  }
  diff << (failures == 0 ? "all " + std::to_string(cells.size()) + " cells within tolerance\n"
                         : std::to_string(failures) + " cell(s) out of tolerance\n");
  return failures == 0 ? 0 : kExitNumeric;
}

// he-scan -------------------------------------------------------------------

int cmd_he_scan(const BarrierOptions& o, tt::HeScanConfig cfg, const std::string& models) {
  check_quad_tol(o.quad_tol);
  cfg.quad_tol = o.quad_tol;
  cfg.models.clear();
  std::stringstream ss(models);
  for (std::string m; std::getline(ss, m, ',');) {
    if (!m.empty()) cfg.models.push_back(m);
  }
  if (cfg.models.empty()) throw UsageError("--models must name at least one model");
  for (const auto& m : cfg.models) tt::parse_zeff(m);
  if (!(cfg.field_min > 0.0) || !(cfg.field_max > cfg.field_min)) throw UsageError("need 0 < --field-min < --field-max");
  if (cfg.steps < 2) throw UsageError("--steps must be at least 2");

  const auto outcome = tt::he_scan(cfg);
  for (const auto& s : outcome.skipped) std::cerr << "skipped: " << s << '\n';
  Sink sink(o.output);
  if (o.format == "json")
    tt::write_json(sink.stream(), outcome.points);
  else
    tt::write_csv(sink.stream(), outcome.points);
  return 0;
}

// et-scan -------------------------------------------------------------------

int cmd_et_scan(const BarrierOptions& o, const tt::EtScanConfig& cfg) {
  if (!(cfg.energy_ev > 0.0)) throw UsageError("--energy-ev must be positive");
  for (double d : cfg.delta_e_grid)
    if (!(d > 0.0)) throw UsageError("--delta-e values must be positive");
  for (double l : cfg.length_grid)
    if (!(l > 0.0)) throw UsageError("--lengths values must be positive");

  const auto points = tt::et_scan(cfg);
  for (const auto& [de, lmin] : tt::et_flag_contour(points)) {
    std::cerr << "flag contour: delta_e_eff=" << de << " eV: ";
    if (lmin)
      std::cerr << "ETT >= " << tt::kVibrationThresholdFs << " fs from L=" << *lmin << " A\n";
    else
      std::cerr << "never\n";
  }
  Sink sink(o.output);
  if (o.format == "json")
    tt::write_json(sink.stream(), points);
  else
    tt::write_csv(sink.stream(), points);
  return 0;
}

// oracle --------------------------------------------------------------------

int cmd_oracle(const BarrierOptions& o) {
  if (o.slices < 64) throw UsageError("--slices must be at least 64");
  auto barrier = build_barrier(o);
  const double energy = energy_of(o);
  const auto coarse = tt::pt_numeric(barrier, energy, o.mass, o.slices);
  const auto fine = tt::pt_numeric(barrier, energy, o.mass, 2 * o.slices);

  nlohmann::ordered_json j;
  j["barrier"] = tt::barrier_kind(barrier);
  j["energy_au"] = energy;
  j["p_t"] = coarse.p_t;
  j["p_r"] = coarse.p_r;
  j["grid_points"] = coarse.grid_points;
  j["p_t_doubled"] = fine.p_t;
  j["doubling_change_rel"] = std::abs(fine.p_t - coarse.p_t) / coarse.p_t;
  if (const auto* r = std::get_if<tt::Rectangular>(&barrier); r && energy > 0.0 && energy < r->v0) {
    const double phi = tt::phi_rectangular(energy, r->v0, r->length, o.mass);
    j["p_t_exact"] = tt::pt_rectangular_exact(energy, r->v0, phi);
  }
  try {
    const auto problem = tt::make_problem(barrier, energy, o.mass);
    j["p_t_wkb"] = tt::pt_wkb(tt::action_phi(problem));
  } catch (const tt::Error&) {
  }

  Sink sink(o.output);
  auto& out = sink.stream();
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& [k, v] : j.items()) {
      out << k << " = ";
      if (v.is_number_float())
        out << tt::format_double(v.get<double>());
      else if (v.is_string())
        out << v.get<std::string>();
      else
        out << v.dump();
      out << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum tunneling times: entropic, classical, phase and dwell"};
  app.require_subcommand(1);

  BarrierOptions opts;
  tt::HeScanConfig he_cfg;
  std::string he_models = "sae,kullie,clementi";
  double omega = 0.0;
  tt::EtScanConfig et_cfg;

  auto* times = app.add_subcommand("times", "All tunneling times for one barrier and energy");
  add_barrier_options(times, opts);
  times->add_option("--quad-tol", opts.quad_tol, "Relative quadrature tolerance")->capture_default_str();
  times->add_option("--slices", opts.slices, "Slices for the scattering oracle")->capture_default_str();
  add_output_options(times, opts, {"text", "json"});

  auto* table1 = app.add_subcommand("table1", "Reproduce the three-model He table and diff it against reference");
  table1->add_option("--quad-tol", opts.quad_tol, "Relative quadrature tolerance")->capture_default_str();
  add_output_options(table1, opts, {"text", "csv", "json"});

  auto* he = app.add_subcommand("he-scan", "Laser-field scan of the He barrier");
  he->add_option("--field-min", he_cfg.field_min, "Lowest peak field, a.u.")->capture_default_str();
  he->add_option("--field-max", he_cfg.field_max, "Highest peak field, a.u.")->capture_default_str();
  he->add_option("--steps", he_cfg.steps, "Field grid points per model")->capture_default_str();
  he->add_option("--models", he_models, "Comma-separated Z_eff models")->capture_default_str();
  auto* omega_opt = he->add_option("--omega", omega, "Driver angular frequency, a.u. (enables keldysh_gamma)");
  he->add_option("--energy", he_cfg.energy, "Electron energy, a.u.")->capture_default_str();
  he->add_option("--quad-tol", opts.quad_tol, "Relative quadrature tolerance")->capture_default_str();
  add_output_options(he, opts, {"csv", "json"});

  auto* et = app.add_subcommand("et-scan", "Electron-transfer rectangular-barrier scan");
  et->add_option("--energy-ev", et_cfg.energy_ev, "Electron energy, eV")->capture_default_str();
  et->add_option("--delta-e", et_cfg.delta_e_grid, "Effective barrier heights V0 - E, eV")
      ->delimiter(',')
      ->capture_default_str();
  et->add_option("--lengths", et_cfg.length_grid, "Barrier widths, angstrom")->delimiter(',')->capture_default_str();
  add_output_options(et, opts, {"csv", "json"});

  auto* oracle = app.add_subcommand("oracle", "Transfer-matrix transmission for a bounded barrier");
  add_barrier_options(oracle, opts);
  oracle->add_option("--slices", opts.slices, "Number of constant-potential slices")->capture_default_str();
  add_output_options(oracle, opts, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // The default output format differs between subcommands.
  if ((he->parsed() || et->parsed()) && opts.format == "text") opts.format = "csv";

  try {
    if (times->parsed()) return cmd_times(opts);
    if (table1->parsed()) return cmd_table1(opts);
    if (he->parsed()) {
      if (omega_opt->count() > 0) he_cfg.omega = omega;
      return cmd_he_scan(opts, he_cfg, he_models);
    }
    if (et->parsed()) return cmd_et_scan(opts, et_cfg);
    if (oracle->parsed()) return cmd_oracle(opts);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for the option list.\n";
    return kExitUsage;
  } catch (const tt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
