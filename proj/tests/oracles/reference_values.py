"""High-precision reference values frozen into the C++ unit tests.

Every number here comes from closed forms or root finding in mpmath at 50
digits, independent of the library code. Run with `python3 reference_values.py`.
"""
from mpmath import mp, mpf, sqrt, sinh, cosh, log, exp, pi, findroot, quad, diff

mp.dps = 50


def bracket(phi):
    return 1 / (1 + 2 * phi) + log(1 / (1 + 2 * phi))


def ett(tau_c, phi, p_t):
    return -tau_c / (2 * pi * p_t) * exp(-2 * phi) * bracket(phi)


def rect(E, V0, L, m=1):
    phi = sqrt(2 * m * (V0 - E)) * L
    tc = m * L**2 / phi
    pe = sqrt(2 * m * E) * L
    pt = 1 / (1 + V0**2 * sinh(phi) ** 2 / (4 * E * (V0 - E)))
    return phi, tc, pe, pt


def phase(E, V0, L):
    phi, tc, pe, pt = rect(E, V0, L)
    return tc * pt / (2 * phi**2 * pe**3) * (
        phi * pe**2 * (phi**2 - pe**2) + (phi**2 + pe**2) ** 2 * sinh(phi) * cosh(phi))


def dwell(E, V0, L):
    phi, tc, pe, pt = rect(E, V0, L)
    return tc * pt / (2 * phi**2 * pe) * (
        phi * (phi**2 - pe**2) + (phi**2 + pe**2) * sinh(phi) * cosh(phi))


def show(name, value):
    print(f"{name:40s} {mp.nstr(value, 17)}")


u_star = findroot(lambda u: 1 / u - log(u), 1.7)
show("u*", u_star)
show("phi* = (u*-1)/2", (u_star - 1) / 2)
show("p_m* = exp(1-u*)", exp(1 - u_star))
show("S(p_m*)", exp(1 - u_star) * log(u_star))
show("bracket(1)", bracket(mpf(1)))
show("inverse_temperature(1, 1)", -2 * exp(-2) * bracket(mpf(1)))
show("thermal_energy(0.5, 1/invT(1,1))", mpf("0.5") * 2 * pi / (-2 * exp(-2) * bracket(mpf(1))))
show("entropy(e^-1)", exp(-1) * log(2))
show("ett_general(1, 1, 1/cosh^2 1)", ett(1, mpf(1), 1 / cosh(1) ** 2))
show("pt_wkb(2)", 1 / cosh(2) ** 2)
show("pt_wkb(15)", 1 / cosh(15) ** 2)
show("ett_rectangular(0.5, 1, 2)", ett(rect(mpf("0.5"), 1, 2)[1], 2, rect(mpf("0.5"), 1, 2)[3]))
show("phase_time_rectangular(0.5, 1, 2)", phase(mpf("0.5"), 1, mpf(2)))
show("dwell_time_rectangular(0.5, 1, 2)", dwell(mpf("0.5"), 1, mpf(2)))
show("phase_time_rectangular(0.5, 2, 200)", phase(mpf("0.5"), 2, mpf(200)))
show("dwell_time_rectangular(0.5, 10, 200)", dwell(mpf("0.5"), 10, mpf(200)))

# Laser-Coulomb (Kullie) checks.
z, F, E = mpf("1.375"), mpf("0.04"), mpf("-0.904")
show("Kullie x_peak", sqrt(z / F))
show("Kullie v_max", -2 * sqrt(z * F))
show("Clementi(0.11) v_max", -2 * sqrt(mpf("1.6875") * mpf("0.11")))
show("momentum Kullie x=11", sqrt(2 * (-z / 11 - F * 11 - E)))
xl = (-E - sqrt(E**2 - 4 * z * F)) / (2 * F)
xr = (-E + sqrt(E**2 - 4 * z * F)) / (2 * F)
show("Kullie x_L", xl)
show("Kullie x_R", xr)
# tau_c and Phi by tanh-sinh quadrature on the raw interval.
tau = quad(lambda x: 1 / sqrt(2 * (-z / x - F * x - E)), [xl, (xl + xr) / 2, xr])
phi = quad(lambda x: sqrt(2 * (-z / x - F * x - E)), [xl, (xl + xr) / 2, xr])
show("Kullie(0.04) tau_c a.u.", tau)
show("Kullie(0.04) phi", phi)
show("Kullie(0.04) ett_he a.u.", ett(tau, phi, 1 / cosh(phi) ** 2))
show("double root z=E^2/(4F)", E**2 / (4 * F))
show("double root x = |E|/(2F)", -E / (2 * F))

show("keldysh(0.0228, 0.904, 0.04)", mpf("0.0228") * sqrt(2 * mpf("0.904")) / mpf("0.04"))
show("to_attoseconds(34.471)", mpf("34.471") * mpf("24.188843265"))
show("angstrom_to_au(5)", 5 / mpf("0.5291772109"))
