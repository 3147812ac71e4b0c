#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "test_support.hpp"
#include "tunneltime/experiments.hpp"
#include "tunneltime/stattherm.hpp"
#include "tunneltime/times.hpp"
#include "tunneltime/units.hpp"

using namespace tunneltime;
using testing::kind_of;
using testing::rel_diff;

TEST_CASE("Table 1 reproduction") {
  const auto rows = run_table1();
  REQUIRE(rows.size() == 6);
  const auto cells = table1_diff(rows);
  CHECK(cells.size() == 24);
  for (const auto& c : cells) {
    INFO(c.model << " " << c.field << " " << c.quantity << " " << c.computed << " vs " << c.reference);
    CHECK(c.pass);
  }
  for (const auto& r : rows) {
    CHECK(r.x_left < r.x_right);
    CHECK(r.tau_c_as > r.ett_as);
    CHECK(r.ett_as > 0.0);
  }
  // stronger field, shorter times
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    CHECK(rows[i].field == 0.04);
    CHECK(rows[i + 1].field == 0.11);
    CHECK(rows[i].tau_c_as > rows[i + 1].tau_c_as);
    CHECK(rows[i].ett_as > rows[i + 1].ett_as);
  }
}

TEST_CASE("Table 1 diff attributes failing cells") {
  auto rows = run_table1();
  rows[0].tau_c_as *= 1.05;
  rows[1].x_left += 0.5;
  const auto cells = table1_diff(rows);
  int failures = 0;
  for (const auto& c : cells) {
    if (c.pass) continue;
    ++failures;
    if (c.quantity == "tau_c_as") {
      REQUIRE(c.root_tolerance_shift);
      REQUIRE(c.quadrature_shift);
      CHECK(*c.root_tolerance_shift > 0.0);
      CHECK(*c.quadrature_shift >= 0.0);
    } else {
      CHECK_FALSE(c.root_tolerance_shift);
    }
  }
  CHECK(failures == 2);
}

TEST_CASE("He field scan") {
  const auto out = he_scan({});
  CHECK(out.skipped.empty());
  REQUIRE(out.points.size() == 45);
  for (const auto& p : out.points) {
    CHECK(p.ett_as > 0.0);
    CHECK(p.ett_as < 200.0);
    CHECK(p.phi > critical_phi());
    CHECK(p.exp_width == doctest::Approx(0.904 / p.field).epsilon(1e-12));
    CHECK(p.true_width > 0.0);
    CHECK(p.true_width < p.exp_width);
    CHECK(std::isnan(p.keldysh_gamma));
    // subluminal: slower than light across the forbidden region
    CHECK(units::from_attoseconds(p.ett_as) > p.true_width / units::C::speed_of_light_au);
  }
  CHECK(out.points.front().model == "SAE");
  CHECK(out.points.front().field == 0.04);
  CHECK(out.points[14].field == doctest::Approx(0.11).epsilon(1e-15));

  auto ett_at = [&](const std::string& model, double field) {
    for (const auto& p : out.points)
      if (p.model == model && std::abs(p.field - field) < 1e-12) return p.ett_as;
    FAIL("missing scan point");
    return 0.0;
  };
  const double s = ett_at("SAE", 0.04), k = ett_at("Kullie", 0.04), c = ett_at("Clementi", 0.04);
  const double mean = (s + k + c) / 3.0;
  CHECK(std::max({std::abs(s - mean), std::abs(k - mean), std::abs(c - mean)}) / mean < 0.10);
  CHECK(ett_at("Clementi", 0.11) < ett_at("Kullie", 0.11));
  CHECK(ett_at("Kullie", 0.11) < ett_at("SAE", 0.11));
}

TEST_CASE("He scan skips over-barrier points") {
  HeScanConfig cfg;
  cfg.field_min = 0.1;
  cfg.field_max = 0.2;
  cfg.steps = 11;
  cfg.models = {"clementi"};
  const auto out = he_scan(cfg);
  CHECK_FALSE(out.skipped.empty());
  CHECK(out.points.size() + out.skipped.size() == 11);
  CHECK(out.skipped.front().find("OverBarrier") != std::string::npos);
  CHECK(kind_of([] {
          HeScanConfig bad;
          bad.field_min = 0.2;
          bad.field_max = 0.1;
          he_scan(bad);
        }) == ErrorKind::DomainError);
}

TEST_CASE("Keldysh parameter") {
  CHECK(keldysh_gamma(0.0228, 0.904, 0.04) == doctest::Approx(0.76643277591710547).epsilon(1e-14));
  CHECK(keldysh_gamma(0.0228, 0.904, 0.08) == doctest::Approx(0.5 * keldysh_gamma(0.0228, 0.904, 0.04)));
  const double omega = 0.0228, ip = 0.904;
  CHECK(keldysh_gamma(omega, ip, omega * std::sqrt(2.0 * ip)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kind_of([] { keldysh_gamma(0.0, 0.9, 0.04); }) == ErrorKind::DomainError);

  HeScanConfig cfg;
  cfg.omega = omega;
  cfg.steps = 3;
  for (const auto& p : he_scan(cfg).points) CHECK(p.keldysh_gamma == doctest::Approx(keldysh_gamma(omega, ip, p.field)));
}

TEST_CASE("electron-transfer scan") {
  const auto points = et_scan();
  CHECK(points.size() == 5 * 11);
  for (const auto& p : points) {
    CHECK(p.ett_fs < p.tau_c_fs);
    CHECK(p.ett_fs > 0.0);
    CHECK(p.comparable_flag == (p.ett_fs >= 5.0));
    if (p.delta_e_eff >= 0.1 && p.length_angstrom <= 15.0) CHECK_FALSE(p.comparable_flag);
  }
  const auto contour = et_flag_contour(points);
  REQUIRE(contour.size() == 5);
  REQUIRE(contour[0].second);
  CHECK(*contour[0].second == 20.0);
  for (std::size_t i = 1; i < contour.size(); ++i) CHECK_FALSE(contour[i].second);
}

TEST_CASE("electron-transfer closed form matches quadrature") {
  const double e = units::ev_to_au(1.0);
  const double v0 = e + units::ev_to_au(0.5);
  const double length = units::angstrom_to_au(10.0);
  const auto q = wkb_quantities(make_problem(Rectangular{v0, length}, e), 1e-12);
  CHECK(rel_diff(q.tau_c, tau_c_rectangular(e, v0, length)) < 1e-10);
  CHECK(rel_diff(q.phi, phi_rectangular(e, v0, length)) < 1e-10);
}

TEST_CASE("CSV and JSON output") {
  SUBCASE("CSV layout and determinism") {
    std::ostringstream a, b;
    write_csv(a, he_scan({}).points);
    write_csv(b, he_scan({}).points);
    CHECK(a.str() == b.str());
    std::istringstream in(a.str());
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "field,model,ett_as,tau_c_as,exp_width,true_width,phi,keldysh_gamma");
    CHECK(first.rfind("0.040000000000000001,SAE,", 0) == 0);
    CHECK(first.back() == ',');  // no driver frequency
    int lines = 1;
    for (std::string l; std::getline(in, l);) ++lines;
    CHECK(lines == 45);
  }
  SUBCASE("format_double keeps 17 digits") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  }
  SUBCASE("JSON round trip") {
    std::ostringstream os;
    const auto points = et_scan();
    write_json(os, points);
    const auto j = nlohmann::json::parse(os.str());
    REQUIRE(j.size() == points.size());
    CHECK(j[0]["delta_e_eff"].get<double>() == points[0].delta_e_eff);
    CHECK(j[0]["ett_fs"].get<double>() == points[0].ett_fs);
    CHECK(j[0].contains("comparable_flag"));
  }
  SUBCASE("table CSV") {
    std::ostringstream os;
    write_csv(os, run_table1());
    CHECK(os.str().rfind("model,field,x_L,x_R,tau_c_as,ett_as\nSAE,", 0) == 0);
  }
}
