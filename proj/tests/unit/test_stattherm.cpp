#include <doctest.h>

#include <numbers>

#include "test_support.hpp"
#include "tunneltime/stattherm.hpp"
#include "tunneltime/times.hpp"

using namespace tunneltime;
using testing::kind_of;
using testing::rel_diff;

TEST_CASE("entropy") {
  CHECK(entropy(1.0) == 0.0);
  CHECK(entropy(1e-300) < 1e-297);
  CHECK(entropy(1e-300) >= 0.0);
  CHECK(entropy(std::exp(-1.0)) == doctest::Approx(0.25499459743395351).epsilon(1e-14));
  CHECK(kind_of([] { entropy(0.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { entropy(1.5); }) == ErrorKind::DomainError);
  for (int i = 1; i <= 1000; ++i) CHECK(entropy(i / 1000.0) >= 0.0);
}

TEST_CASE("bracket") {
  CHECK(bracket(0.0) == 1.0);
  CHECK(bracket(1.0) == doctest::Approx(-0.76527895533477636).epsilon(1e-14));
  CHECK(critical_phi() == doctest::Approx(0.38161141717594836).epsilon(1e-12));
  CHECK(critical_phi() > 0.3816);
  CHECK(critical_phi() < 0.3817);
  CHECK(std::abs(bracket(critical_phi())) < 1e-12);
  double prev = bracket(0.0);
  for (int i = 1; i <= 2000; ++i) {
    const double b = bracket(0.01 * i);
    CHECK(b < prev);
    CHECK((b < 0.0) == (0.01 * i > critical_phi()));
    prev = b;
  }
}

TEST_CASE("inverse temperature") {
  CHECK(std::abs(inverse_temperature(critical_phi(), 1.0)) < 1e-12);
  CHECK(inverse_temperature(1.0, 1.0) == doctest::Approx(0.20713848835050206).epsilon(1e-14));
  CHECK(inverse_temperature(0.0, 1.0) == -2.0);
  CHECK(inverse_temperature(0.2, 1.0) < 0.0);
  CHECK(inverse_temperature(0.5, 1.0) > 0.0);
  CHECK(kind_of([] { inverse_temperature(1.0, 0.0); }) == ErrorKind::DomainError);

  const auto st = stat_state(1.0, 3.0);
  CHECK(st.inv_kBT == doctest::Approx(-2.0 * 3.0 * std::exp(-2.0) * st.bracket_value).epsilon(1e-15));
}

TEST_CASE("thermal energy") {
  CHECK(thermal_energy(1.0, 1.0) == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(thermal_energy(0.5, 1.0 / inverse_temperature(1.0, 1.0)) ==
        doctest::Approx(15.166629237314209).epsilon(1e-14));
  CHECK(thermal_energy(1e-300, 1.0) < 1e-299);
  CHECK(thermal_energy(0.5, -1.0) < 0.0);
  CHECK(kind_of([] { thermal_energy(0.0, 1.0); }) == ErrorKind::DomainError);
}

TEST_CASE("entropy maximum") {
  const auto m = entropy_maximum();
  CHECK(m.p_m == doctest::Approx(0.46616164172304463).epsilon(1e-12));
  CHECK(m.entropy == doctest::Approx(0.26438044734963432).epsilon(1e-12));
  CHECK(m.p_m > 0.4);
  CHECK(m.p_m < 0.5);
  const double h = 1e-5;
  CHECK(std::abs((entropy(m.p_m + h) - entropy(m.p_m - h)) / (2 * h)) < 1e-8);
  CHECK(entropy(m.p_m + 0.01) < m.entropy);
  CHECK(entropy(m.p_m - 0.01) < m.entropy);
}

TEST_CASE("temperature is the energy derivative of the entropy (rectangular)") {
  const double v0 = 1.0, length = 2.0;
  for (double e : {0.2, 0.5, 0.8}) {
    auto s_of = [&](double en) { return entropy(std::exp(-2.0 * phi_rectangular(en, v0, length))); };
    const double h = 1e-6;
    const double fd = (s_of(e + h) - s_of(e - h)) / (2.0 * h);
    const double analytic =
        inverse_temperature(phi_rectangular(e, v0, length), tau_c_rectangular(e, v0, length));
    CHECK(rel_diff(fd, analytic) < 1e-4);
  }
}
