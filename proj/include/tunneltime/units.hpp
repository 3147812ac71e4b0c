#pragma once

// Hartree atomic units (hbar = m_e = e = 1) are used everywhere inside the
// library. Laboratory units only appear at input parsing and output.

namespace tunneltime::units {

struct PhysicalConstants {
  static constexpr double au_time_in_as = 24.188843265;
  static constexpr double au_energy_in_eV = 27.211386245;
  static constexpr double au_length_in_angstrom = 0.5291772109;
  static constexpr double speed_of_light_au = 137.035999;
  static constexpr double hbar_au = 1.0;
  static constexpr double electron_mass_au = 1.0;
  static constexpr double boltzmann_scale = 1.0;
};

using C = PhysicalConstants;

constexpr double to_attoseconds(double t_au) { return t_au * C::au_time_in_as; }
constexpr double from_attoseconds(double t_as) { return t_as / C::au_time_in_as; }

constexpr double to_femtoseconds(double t_au) { return t_au * C::au_time_in_as * 1e-3; }
constexpr double from_femtoseconds(double t_fs) { return t_fs * 1e3 / C::au_time_in_as; }

constexpr double ev_to_au(double e_ev) { return e_ev / C::au_energy_in_eV; }
constexpr double au_to_ev(double e_au) { return e_au * C::au_energy_in_eV; }

constexpr double angstrom_to_au(double l_angstrom) { return l_angstrom / C::au_length_in_angstrom; }
constexpr double au_to_angstrom(double l_au) { return l_au * C::au_length_in_angstrom; }

}  // namespace tunneltime::units
