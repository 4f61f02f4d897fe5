#!/usr/bin/env python3
"""Independent high-precision evaluation of the closed-form values frozen
into the C++ tests. Run with `python3 high_precision_values.py`."""
from mpmath import mp, mpf, sqrt, exp, findroot, diff, pi

mp.dps = 40


def const_ab(ga, gb, inf_d0):
    ga, gb, inf_d0 = mpf(ga), mpf(gb), mpf(inf_d0)
    s = (ga + gb) / (ga * gb)
    m = min(mpf(-1), inf_d0 / s)
    return s * (mpf(1) / 2 + sqrt(2) / 4 * sqrt(3 - m))


def lin_ab(ga, gb):
    ga, gb = mpf(ga), mpf(gb)
    s = (ga + gb) / (ga * gb)
    return s * (1 + sqrt(mpf(3) / 2 + (ga / (2 * (ga + gb))) ** 2))


def const_a(ga, inf_d0):
    ga, inf_d0 = mpf(ga), mpf(inf_d0)
    m = min(mpf(-1), ga * inf_d0)
    return (1 / ga) * (mpf(1) / 2 + sqrt(2) / 4 * sqrt(3 - m))


def steep_plateau_slope_max():
    # d/ds of 0.8 exp(-8 s^4) = -25.6 s^3 exp(-8 s^4); extremum where s^4 = 3/32
    g = lambda s: 25.6 * s**3 * exp(-8 * s**4)
    s = findroot(lambda s: diff(g, s), mpf("0.55"))
    return s, g(s)


def two_plateaus_slope_extremes():
    u = lambda x: mpf("0.1") + mpf("0.35") * exp(-(x + 5) ** 2) + mpf("0.55") * exp(-(x + 3) ** 2)
    du = lambda x: diff(u, x)
    xs = [mpf(-10) + mpf(k) / 1000 for k in range(10001)]
    best_hi = max(xs, key=lambda x: du(x))
    best_lo = min(xs, key=lambda x: du(x))
    x_hi = findroot(lambda x: diff(u, x, 2), best_hi)
    x_lo = findroot(lambda x: diff(u, x, 2), best_lo)
    return du(x_hi), du(x_lo)


if __name__ == "__main__":
    print("const_ab(1,0.5,-1)      =", const_ab(1, 0.5, -1), " vs 1.5+1.5*sqrt2 =", 1.5 + 1.5 * sqrt(2))
    print("const_ab(1,1,0)         =", const_ab(1, 1, 0))
    print("const_ab(3,1.5,-2.0489) =", const_ab(3, 1.5, "-2.0489"))
    print("lin_ab(1,1)             =", lin_ab(1, 1))
    print("lin_ab(1,0.5)           =", lin_ab(1, 0.5))
    print("lin_ab(3,1.5)           =", lin_ab(3, 1.5))
    print("const_a(1,-1)           =", const_a(1, -1))
    print("const_a(1,-5)           =", const_a(1, -5))
    print("const_a(2,0)            =", const_a(2, 0))
    s, g = steep_plateau_slope_max()
    print("steep plateau: s* =", s, " s*^4 =", s**4, " max slope =", g)
    print("steep plateau rhs const_ab(3,1.5,-max) =", const_ab(3, 1.5, -g))
    print("gaussian a=0.35 max slope =", mpf("0.35") * sqrt(2) * exp(mpf(-1) / 2))
    hi, lo = two_plateaus_slope_extremes()
    print("two plateaus sup u0' =", hi, " inf u0' =", lo)
    print("two plateaus u0(-5) =", mpf("0.1") + mpf("0.35") + mpf("0.55") * exp(-4))
    print("LookA flux u=0.5 ubar=1 =", mpf("0.25") * exp(-1))
    print("e =", exp(1))
