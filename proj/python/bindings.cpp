#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tunneltime/tunneltime.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace py = pybind11;
namespace tt = tunneltime;

namespace {

tt::ZeffModel to_zeff(const py::object& z) {
  if (py::isinstance<py::str>(z)) return tt::parse_zeff(z.cast<std::string>());
  return tt::ConstantZeff{z.cast<double>()};
}

py::object optional_float(double v) { return std::isnan(v) ? py::none() : py::cast(v); }

template <class T>
std::string repr_of(const char* name, const T& fields) {
  std::string out = std::string(name) + "(";
  bool first = true;
  for (const auto& [k, v] : fields) {
    out += (first ? "" : ", ") + k + "=" + v;
    first = false;
  }
  return out + ")";
}

std::string num(double v) { return py::repr(py::float_(v)).cast<std::string>(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum tunneling times: entropic, classical, phase and dwell.";

  // Library errors surface as TunnelTimeError with a `kind` attribute naming the category.
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&] { return py::exception<tt::Error>(m, "TunnelTimeError", PyExc_RuntimeError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tt::Error& e) {
      const py::object& type = error_type.get_stored();
      py::object exc = type(e.what());
      exc.attr("kind") = std::string(e.name());
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  // Barriers.
  py::class_<tt::Rectangular>(m, "Rectangular")
      .def(py::init([](double v0, double length) { return tt::Rectangular{v0, length}; }), py::arg("v0"),
           py::arg("length"))
      .def_readonly("v0", &tt::Rectangular::v0)
      .def_readonly("length", &tt::Rectangular::length)
      .def("__repr__", [](const tt::Rectangular& b) {
        return repr_of("Rectangular", std::vector<std::pair<std::string, std::string>>{{"v0", num(b.v0)},
                                                                                       {"length", num(b.length)}});
      });

  py::class_<tt::Triangular>(m, "Triangular")
      .def(py::init([](double v0, double slope, double length) { return tt::Triangular{v0, slope, length}; }),
           py::arg("v0"), py::arg("slope"), py::arg("length"))
      .def_readonly("v0", &tt::Triangular::v0)
      .def_readonly("slope", &tt::Triangular::slope)
      .def_readonly("length", &tt::Triangular::length)
      .def("__repr__", [](const tt::Triangular& b) {
        return repr_of("Triangular", std::vector<std::pair<std::string, std::string>>{
                                         {"v0", num(b.v0)}, {"slope", num(b.slope)}, {"length", num(b.length)}});
      });

  py::class_<tt::LaserCoulomb>(m, "LaserCoulomb")
      .def(py::init([](double field, const py::object& zeff) { return tt::LaserCoulomb{field, to_zeff(zeff)}; }),
           py::arg("field"), py::arg("zeff") = "sae",
           "zeff is 'sae', 'kullie', 'clementi' or a constant charge.")
      .def_readonly("field", &tt::LaserCoulomb::field)
      .def_property_readonly("zeff", [](const tt::LaserCoulomb& b) { return tt::zeff_label(b.zeff); })
      .def("__repr__", [](const tt::LaserCoulomb& b) {
        return repr_of("LaserCoulomb", std::vector<std::pair<std::string, std::string>>{
                                           {"field", num(b.field)}, {"zeff", "'" + tt::zeff_label(b.zeff) + "'"}});
      });

  py::class_<tt::Tabulated>(m, "Tabulated")
      .def(py::init([](const std::vector<double>& x, const std::vector<double>& v) {
             if (x.size() != v.size()) throw tt::Error(tt::ErrorKind::DomainError, "x and v differ in length");
             std::vector<tt::Sample> s;
             for (std::size_t i = 0; i < x.size(); ++i) s.push_back({x[i], v[i]});
             return tt::Tabulated(std::move(s));
           }),
           py::arg("x"), py::arg("v"))
      .def_static("load", &tt::load_tabulated, py::arg("path"), "Reads whitespace-separated 'x v' lines.")
      .def_property_readonly("x", [](const tt::Tabulated& t) {
        std::vector<double> out;
        for (const auto& s : t.samples()) out.push_back(s.x);
        return out;
      })
      .def_property_readonly("v", [](const tt::Tabulated& t) {
        std::vector<double> out;
        for (const auto& s : t.samples()) out.push_back(s.v);
        return out;
      })
      .def("__call__", &tt::Tabulated::operator(), py::arg("x"));

  m.def("potential", &tt::eval_potential, py::arg("barrier"), py::arg("x"));
  m.def("barrier_kind", [](const tt::Barrier& b) { return std::string(tt::barrier_kind(b)); }, py::arg("barrier"));
  m.def(
      "barrier_peak", [](const tt::Barrier& b) {
        auto p = tt::barrier_peak(b);
        return py::make_tuple(p.x, p.v);
      },
      py::arg("barrier"), "Returns (x, v) of the barrier maximum.");
  m.def("zeff", [](const py::object& model, double x) { return tt::eval_zeff(to_zeff(model), x); }, py::arg("model"),
        py::arg("x"));

  // Turning points and WKB quantities.
  m.def(
      "turning_points", [](const tt::Barrier& b, double energy) {
        auto t = tt::resolve_turning_points(b, energy);
        return py::make_tuple(t.left, t.right);
      },
      py::arg("barrier"), py::arg("energy"));
  m.def(
      "turning_points_quadratic", [](double z, double energy, double field) {
        auto t = tt::turning_points_quadratic(z, energy, field);
        return py::make_tuple(t.left, t.right);
      },
      py::arg("z"), py::arg("energy"), py::arg("field"));

  py::class_<tt::TunnelingProblem>(m, "TunnelingProblem")
      .def(py::init(&tt::make_problem), py::arg("barrier"), py::arg("energy"), py::arg("mass") = 1.0)
      .def_readonly("energy", &tt::TunnelingProblem::energy)
      .def_readonly("mass", &tt::TunnelingProblem::mass)
      .def_readonly("barrier", &tt::TunnelingProblem::barrier)
      .def_readonly("x_left", &tt::TunnelingProblem::x_left)
      .def_readonly("x_right", &tt::TunnelingProblem::x_right)
      .def_property_readonly("width", &tt::TunnelingProblem::width);

  m.def("action_phi", &tt::action_phi, py::arg("problem"), py::arg("quad_tol") = tt::kDefaultQuadTol);
  m.def("classical_time", &tt::classical_time, py::arg("problem"), py::arg("quad_tol") = tt::kDefaultQuadTol);
  m.def("dphi_dE", &tt::dphi_dE, py::arg("problem"), py::arg("step") = 1e-5, py::arg("quad_tol") = 1e-12);

  // Statistical thermodynamics.
  m.def("entropy", &tt::entropy, py::arg("p_m"));
  m.def("bracket", &tt::bracket, py::arg("phi"));
  m.def("critical_phi", &tt::critical_phi);
  m.def("inverse_temperature", &tt::inverse_temperature, py::arg("phi"), py::arg("tau_c"));
  m.def("thermal_energy", &tt::thermal_energy, py::arg("p_t"), py::arg("kBT"));
  m.def(
      "entropy_maximum", [] {
        auto e = tt::entropy_maximum();
        return py::make_tuple(e.p_m, e.entropy);
      },
      "Returns (p*, S(p*)).");

  // Transmission.
  m.def("pt_rectangular_exact", &tt::pt_rectangular_exact, py::arg("energy"), py::arg("v0"), py::arg("phi"));
  m.def("pt_wkb", &tt::pt_wkb, py::arg("phi"));
  py::class_<tt::ScatteringResult>(m, "ScatteringResult")
      .def_readonly("p_t", &tt::ScatteringResult::p_t)
      .def_readonly("p_r", &tt::ScatteringResult::p_r)
      .def_readonly("grid_points", &tt::ScatteringResult::grid_points);
  m.def("pt_numeric", &tt::pt_numeric, py::arg("barrier"), py::arg("energy"), py::arg("mass") = 1.0,
        py::arg("slices") = tt::kDefaultSlices);

  // Times.
  m.def("ett_general", &tt::ett_general, py::arg("tau_c"), py::arg("phi"), py::arg("p_t"));
  m.def("ett_he", &tt::ett_he, py::arg("tau_c"), py::arg("phi"));
  m.def("phi_rectangular", &tt::phi_rectangular, py::arg("energy"), py::arg("v0"), py::arg("length"),
        py::arg("mass") = 1.0);
  m.def("tau_c_rectangular", &tt::tau_c_rectangular, py::arg("energy"), py::arg("v0"), py::arg("length"),
        py::arg("mass") = 1.0);
  m.def("ett_rectangular", &tt::ett_rectangular, py::arg("energy"), py::arg("v0"), py::arg("length"),
        py::arg("mass") = 1.0);
  m.def("phase_time_rectangular", &tt::phase_time_rectangular, py::arg("energy"), py::arg("v0"), py::arg("length"),
        py::arg("mass") = 1.0);
  m.def("dwell_time_rectangular", &tt::dwell_time_rectangular, py::arg("energy"), py::arg("v0"), py::arg("length"),
        py::arg("mass") = 1.0);
  m.def(
      "triangular_scalings",
      [](double v0, double energy, double field, double length, double mass) {
        auto s = tt::triangular_scalings(v0, energy, field, length, mass);
        return py::make_tuple(s.phi, s.tau_c);
      },
      py::arg("v0"), py::arg("energy"), py::arg("field"), py::arg("length"), py::arg("mass") = 1.0,
      "Returns (phi, tau_c) of the triangular barrier.");

  py::class_<tt::TimesReport>(m, "TimesReport")
      .def_readonly("ett", &tt::TimesReport::ett)
      .def_readonly("tau_c", &tt::TimesReport::tau_c)
      .def_readonly("phase_time", &tt::TimesReport::phase_time)
      .def_readonly("dwell_time", &tt::TimesReport::dwell_time)
      .def_readonly("p_t_used", &tt::TimesReport::p_t_used)
      .def_readonly("p_t_wkb", &tt::TimesReport::p_t_wkb)
      .def_readonly("p_m", &tt::TimesReport::p_m)
      .def_readonly("phi", &tt::TimesReport::phi)
      .def_readonly("entropy_over_kB", &tt::TimesReport::entropy_over_kB)
      .def_readonly("inv_kBT", &tt::TimesReport::inv_kBT)
      .def_readonly("kBT", &tt::TimesReport::kBT)
      .def_readonly("delta_e_ther", &tt::TimesReport::delta_e_ther)
      .def_readonly("positivity_flag", &tt::TimesReport::positivity_flag);
  m.def("compute_times", &tt::compute_times, py::arg("problem"), py::arg("quad_tol") = tt::kDefaultQuadTol);

  // Experiments; rows come back as dicts.
  m.attr("HELIUM_ENERGY") = tt::kHeliumEnergy;
  auto table_rows = [](const std::vector<tt::Table1Row>& rows) {
    py::list out;
    for (const auto& r : rows) {
      out.append(py::dict(py::arg("model") = r.model, py::arg("field") = r.field, py::arg("x_left") = r.x_left,
                          py::arg("x_right") = r.x_right, py::arg("tau_c_as") = r.tau_c_as,
                          py::arg("ett_as") = r.ett_as));
    }
    return out;
  };
  m.def("run_table1", [table_rows](double quad_tol) { return table_rows(tt::run_table1(quad_tol)); },
        py::arg("quad_tol") = tt::kDefaultQuadTol);
  m.def("table1_reference", [table_rows] { return table_rows(tt::table1_reference()); });
  m.def(
      "table1_diff",
      [](double quad_tol) {
        py::list out;
        for (const auto& c : tt::table1_diff(tt::run_table1(quad_tol))) {
          out.append(py::dict(py::arg("model") = c.model, py::arg("field") = c.field, py::arg("computed") = c.computed,
                              py::arg("reference") = c.reference, py::arg("tolerance") = c.tolerance,
                              py::arg("relative") = c.relative, py::arg("pass") = c.pass));
        }
        return out;
      },
      py::arg("quad_tol") = tt::kDefaultQuadTol, "Runs the Table 1 reproduction and checks every cell.");

  m.def(
      "he_scan",
      [](double field_min, double field_max, int steps, std::vector<std::string> models, std::optional<double> omega,
         double energy) {
        tt::HeScanConfig cfg;
        cfg.field_min = field_min;
        cfg.field_max = field_max;
        cfg.steps = steps;
        cfg.models = std::move(models);
        cfg.omega = omega;
        cfg.energy = energy;
        const auto outcome = tt::he_scan(cfg);
        py::list points;
        for (const auto& p : outcome.points) {
          points.append(py::dict(py::arg("field") = p.field, py::arg("model") = p.model, py::arg("ett_as") = p.ett_as,
                                 py::arg("tau_c_as") = p.tau_c_as, py::arg("exp_width") = p.exp_width,
                                 py::arg("true_width") = p.true_width, py::arg("phi") = p.phi,
                                 py::arg("keldysh_gamma") = optional_float(p.keldysh_gamma)));
        }
        return py::make_tuple(points, outcome.skipped);
      },
      py::arg("field_min") = 0.04, py::arg("field_max") = 0.11, py::arg("steps") = 15,
      py::arg("models") = std::vector<std::string>{"sae", "kullie", "clementi"}, py::arg("omega") = py::none(),
      py::arg("energy") = tt::kHeliumEnergy, "Returns (points, skipped).");

  m.def(
      "et_scan",
      [](double energy_ev, std::vector<double> delta_e, std::vector<double> lengths) {
        tt::EtScanConfig cfg;
        cfg.energy_ev = energy_ev;
        if (!delta_e.empty()) cfg.delta_e_grid = std::move(delta_e);
        if (!lengths.empty()) cfg.length_grid = std::move(lengths);
        py::list out;
        for (const auto& p : tt::et_scan(cfg)) {
          out.append(py::dict(py::arg("delta_e_eff") = p.delta_e_eff, py::arg("length_angstrom") = p.length_angstrom,
                              py::arg("tau_c_fs") = p.tau_c_fs, py::arg("ett_fs") = p.ett_fs,
                              py::arg("comparable_flag") = p.comparable_flag));
        }
        return out;
      },
      py::arg("energy_ev") = 1.0, py::arg("delta_e") = std::vector<double>{}, py::arg("lengths") = std::vector<double>{},
      "Rectangular-barrier scan in eV / angstrom / fs; empty grids use the defaults.");
  m.def("keldysh_gamma", &tt::keldysh_gamma, py::arg("omega"), py::arg("ionization_potential"), py::arg("field"));

  // Unit conversions.
  m.def("to_attoseconds", &tt::units::to_attoseconds);
  m.def("to_femtoseconds", &tt::units::to_femtoseconds);
  m.def("ev_to_au", &tt::units::ev_to_au);
  m.def("au_to_ev", &tt::units::au_to_ev);
  m.def("angstrom_to_au", &tt::units::angstrom_to_au);
  m.def("au_to_angstrom", &tt::units::au_to_angstrom);
}
