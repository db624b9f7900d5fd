#!/usr/bin/env python3
"""High-precision reference values for the symmetric alpha-stable law.

Independent oracle used to freeze golden values into the C++ tests:
everything is computed with mpmath quadrature straight from the defining
integrals, not from the library's evaluation scheme.

  density      p(x)  = (1/pi) Int_0^inf cos(x s) exp(-s^alpha) ds
  derivative   p'(x) = -(1/pi) Int_0^inf s sin(x s) exp(-s^alpha) ds
  hellinger    g(x)  = 1 - Int sqrt(p(z) p(z-x)) dz
  fisher       c_a   = (1/8) Int p'(z)^2 / p(z) dz
  tail         C_a from extrapolating x^(alpha+1) p(x)

Run from anywhere: python3 gen_stable_reference.py
"""

import mpmath as mp

mp.mp.dps = 30


def density(alpha, x):
    f = lambda s: mp.cos(x * s) * mp.exp(-(s ** alpha))
    if x == 0:
        return mp.quad(f, [0, 1, 10, 100, mp.inf]) / mp.pi
    period = 2 * mp.pi / x
    return mp.quadosc(f, [0, mp.inf], period=period) / mp.pi


def ddensity(alpha, x):
    f = lambda s: s * mp.sin(x * s) * mp.exp(-(s ** alpha))
    period = 2 * mp.pi / x
    return -mp.quadosc(f, [0, mp.inf], period=period) / mp.pi


def density_series(alpha, x, kmax=120):
    # Bergstrom tail series (convergent for alpha < 1, else asymptotic; used
    # only where it converges fast -- cross-check for large x)
    s = mp.mpf(0)
    prev = mp.inf
    for k in range(1, kmax):
        t = (
            (-1) ** (k + 1)
            * mp.gamma(alpha * k + 1)
            / mp.factorial(k)
            * mp.sin(k * mp.pi * alpha / 2)
            * x ** (-alpha * k - 1)
        ) / mp.pi
        if abs(t) >= prev:
            break
        s += t
        prev = abs(t)
        if abs(t) < mp.mpf(10) ** (-35):
            break
    return s


def hellinger_gap(alpha, x, zmax=400):
    # overlap in the symmetric difference form, matching no implementation
    # shortcut: direct sqrt-product integral
    dens = lambda z: density(alpha, z) if abs(z) < 30 else density_series(alpha, abs(z))
    f = lambda z: mp.sqrt(dens(z) * dens(z - x))
    pts = [-zmax, -10, -2, 0, x / 2, 2, 10, zmax]
    overlap = mp.quad(f, pts)
    # power-law tails beyond zmax, integrand ~ C_a |z|^-(alpha+1)
    ca = mp.gamma(alpha + 1) * mp.sin(mp.pi * alpha / 2) / mp.pi
    tail = 2 * ca * zmax ** (-alpha) / alpha
    return 1 - overlap - tail


def fisher(alpha, zmax=60):
    dens = lambda z: density(alpha, z) if abs(z) < 30 else density_series(alpha, abs(z))
    dd = lambda z: ddensity(alpha, z) if z != 0 else mp.mpf(0)
    f = lambda z: dd(z) ** 2 / dens(z)
    val = 2 * mp.quad(f, [0, mp.mpf("0.1"), 1, 5, 20, zmax])
    ca = mp.gamma(alpha + 1) * mp.sin(mp.pi * alpha / 2) / mp.pi
    tail = 2 * (alpha + 1) ** 2 * ca * zmax ** (-alpha - 2) / (alpha + 2)
    return (val + tail) / 8


def main():
    print("== density ==")
    for alpha, x in [(0.7, 10.0), (0.5, 1.0), (0.5, 10.0), (1.5, 0.5), (1.2, 3.0), (1.9, 2.0), (0.8, 0.5)]:
        print(f"p({alpha}, {x}) = {mp.nstr(density(alpha, x), 20)}")
    print("p(0.7, 0) =", mp.nstr(density(0.7, 0), 20))

    print("== derivative ==")
    for alpha, x in [(1.5, 2.0), (0.8, 1.0), (1.2, 0.7)]:
        print(f"p'({alpha}, {x}) = {mp.nstr(ddensity(alpha, x), 20)}")

    print("== tail constant (extrapolation) ==")
    for alpha in [0.5, 1.8]:
        v1 = density_series(alpha, mp.mpf(100)) * mp.mpf(100) ** (alpha + 1)
        v2 = density_series(alpha, mp.mpf(1000)) * mp.mpf(1000) ** (alpha + 1)
        v3 = density_series(alpha, mp.mpf(10000)) * mp.mpf(10000) ** (alpha + 1)
        # Richardson in x^-alpha
        w = mp.mpf(10) ** alpha
        r12 = (w * v2 - v1) / (w - 1)
        r23 = (w * v3 - v2) / (w - 1)
        gamma_form = mp.gamma(alpha + 1) * mp.sin(mp.pi * alpha / 2) / mp.pi
        print(f"alpha={alpha}: richardson {mp.nstr(r23, 15)} (prev {mp.nstr(r12, 15)}), gamma-form {mp.nstr(gamma_form, 15)}")

    print("== hellinger gap ==")
    for alpha, x in [(0.8, 0.5), (1.0, 0.01), (1.5, 0.1), (1.5, 0.0666666666666666666)]:
        print(f"g({alpha}, {x}) = {mp.nstr(hellinger_gap(alpha, mp.mpf(x)), 15)}")

    print("== fisher constants ==")
    for alpha in [1.5, 0.8, 1.0, 2.0]:
        if alpha == 2.0:
            print("c(2.0) = 0.0625 (exact)")
        else:
            print(f"c({alpha}) = {mp.nstr(fisher(alpha), 15)}")

    print("== absolute moment E|X|^p ==")
    for alpha, p in [(1.5, 1.0), (0.8, 0.5)]:
        dens = lambda z: density(alpha, z) if abs(z) < 30 else density_series(alpha, abs(z))
        f = lambda z: z ** p * dens(z)
        val = 2 * mp.quad(f, [0, 1, 10, 30])
        # series tail integral
        ca_terms = []
        for k in range(1, 60):
            c = (-1) ** (k + 1) * mp.gamma(alpha * k + 1) / mp.factorial(k) * mp.sin(k * mp.pi * alpha / 2) / mp.pi
            term = c * mp.mpf(30) ** (p - alpha * k) / (alpha * k - p)
            if abs(term) < mp.mpf(10) ** (-30):
                break
            ca_terms.append(term)
        val += 2 * sum(ca_terms)
        print(f"E|X|^{p} (alpha={alpha}) = {mp.nstr(val, 15)}")


if __name__ == "__main__":
    main()
