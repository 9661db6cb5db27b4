"""Independent reference values for the unit tests (mpmath, 50 digits).

Run `python3 oracle.py` and compare with the constants frozen in
tests/unit/*.cpp. Formulas are transcribed separately from the C++ code.
"""
from mpmath import mp, mpf, mpc, log, exp, pi, sqrt, euler, zeta, e, stieltjes, factorial

mp.dps = 50
W0 = mpf("5.558691")
H = mpf("3.000175332800e12") - mpf(1) / 2
g = euler


def a0(s, Q0, t):
    return (s + Q0) / (2 * t**2 * log(t)) + pi / (2 * log(t)) + pi * (s + Q0) ** 2 / (4 * t * log(t) ** 2)


def a1(s, Q0, t):
    return (s + Q0) / t


def c_backlund(s1, t0, k, eta):
    kt = k * t0
    c1 = sqrt(s1**2 / kt**2 + 1)
    c2 = c1 * sqrt((s1 + 1) ** 2 / kt**2 + 1)
    return log(1 / eta + 1 / kt) + g + eta**4 / (64 * kt**4) + (12 + (c1 - 1 / kt) * eta**2) / (12 * kt) + c2 * eta**2 / 24


def v_factor(kap, s1, t0, eta):
    return (exp(g * kap) / (kap * log(t0))) ** mpf(0.75) * (1 + (log(2) + c_backlund(s1, t0, 2, eta)) / log(t0)) ** mpf(0.25)


def q_rh(s0, t0, eps, s1, eta):
    al = 2 * (1 + eps - s0)
    r = mpf(1) / 2
    sg = mpf(3) / 2 + eps
    A3 = (mpf("0.618") * (1 + a0(sg, mpf("1.31"), t0)) * (1 + a1(sg, mpf("1.31"), t0)) ** (mpf(7) / 6)
          * (1 + r / t0) ** (mpf(1) / 6) * (1 + log(1 + r / t0) / log(t0)) * v_factor(eps, s1, t0, eta))
    B = 1 / e if t0 <= exp(e) else log(log(t0)) / log(t0)
    b1 = 4 / (1 - al) ** 2 * (mpf(1) / 6 + 2 * B + log(A3) / log(t0))
    b2 = 1 / ((eps + al / 2) * log(t0))
    return max(b1, b2)


def a3_h(d, t0, s1, eta):
    sg = mpf(3) / 2 + 2 * d / log(t0)
    u = 1 + 1 / (2 * t0) + d / (t0 * log(t0))
    return (mpf("0.618") * (1 + a0(sg, mpf("1.31"), t0)) * (1 + a1(sg, mpf("1.31"), t0)) ** (mpf(7) / 6)
            * u ** (mpf(1) / 6) * (1 + log(u) / log(t0)) * v_factor(d / log(t0), s1, t0, eta))


def a_eps(e1, t0):
    return 1 + log(1 + e1 / log(t0)) / log(t0)


def q_h(d, beta, e1, s1, eta, t0):
    a = a_eps(e1, t0)
    W = 1 / (d * beta * (1 + 1 / a) - d)
    l1 = 16 * beta / (1 - beta) * (1 - 8 * d / (2 * d + log(t0))) ** -2
    l2 = (1 + beta) / (d * (1 - beta))
    b1 = l1 * (mpf(1) / 6 + 2 * log(log(t0)) / log(t0) + log(a3_h(d, t0, s1, eta)) / log(t0)) + l2
    b2 = 1 / (d * beta * (1 + 1 / a) + d)
    return W, max(b1, b2)


def ladder_sum(lad):
    s = 0
    for j in range(len(lad) - 1):
        s += lad[j][1] * (1 / lad[j][0] - 1 / lad[j + 1][0])
    return s + lad[-1][1] / lad[-1][0]


def y0(lad, d1, s1, eta, t0=mpf(13)):
    S = ladder_sum(lad) if lad else 0
    return max(1 / d1 + 1 / log(t0), v_factor(d1 / log(t0), s1, t0, eta) * exp(S + mpf("24.303") * d1))


def c3(t0):
    return mpf("58.096") * sqrt(1 + 9 / t0**2) * (1 + a0(mpf(2), mpf(1), t0)) ** (mpf(2) / 3)


def yprime0(lad, d1, t0=mpf(13)):
    S = ladder_sum(lad) if lad else 0
    return c3(t0) ** mpf(0.25) * max((1 / d1 + 1 / log(t0)) ** mpf(0.75),
                                     exp(S + mpf("24.303") * d1) * (exp(g * d1 / log(t0)) / d1) ** mpf(0.75))


def c0(W, s1, t0, eta):
    return exp(1 / W) * (log(eta + 1 / t0) + g + 1 / (12 * eta**2) + (1 / t0) * (1 / (6 * eta**2) + 1 / eta + 1)
                         + (16 * (s1**2 + 2 * s1 - 1) + 3) / (192 * eta**2 * t0**2))


GAMMA = [stieltjes(n) for n in range(21)]


def phi0(s, k):
    return sum((-1) ** n * (s - 1) ** n / factorial(n) * GAMMA[n] for n in range(1, k + 1)) + ((s - 1) / 2) ** (k + 1) / (s - 3)


def phi1(s, k):
    return ((s - 3) ** 2 + (s - 1) ** 2) / ((s - 3) ** 2 * (1 + (s - 1) * (phi0(s, k) + g)))


Q_LADDER = [(mpf(w), mpf(q)) for w, q in [
    ("5.559", "928465"), ("5.56", "170199"), ("5.5601", "157356"), ("5.5602", "146346"), ("5.5603", "136750"),
    ("5.5604", "128379"), ("5.5605", "120884"), ("5.561", "93736"), ("5.562", "64686"), ("5.563", "49364"),
    ("5.564", "39919"), ("5.565", "33530"), ("5.566", "28887"), ("5.567", "25383"), ("5.568", "22625"),
    ("5.569", "20414"), ("5.57", "18592"), ("5.575", "12870"), ("5.58", "9863"), ("5.59", "6698"),
    ("5.6", "5082"), ("5.7", "1501"), ("5.8", "888.269"), ("5.9", "635.099"), ("6", "496.670"),
    ("6.1", "409.353"), ("6.2", "349.287"), ("6.3", "305.581"), ("6.4", "272.026"), ("6.5", "246.170"),
    ("6.75", "199.284"), ("7", "168.924"), ("8", "109.668"), ("9", "84.858"), ("10", "71.220"),
    ("11", "62.611"), ("12", "56.653"), ("13", "52.306")]]


def show(name, value):
    print(f"{name:32s} {mp.nstr(value, 30)}")


def main():
    m = mpf
    show("zeta(2)", zeta(2))
    show("zeta(0.5)", zeta(m("0.5")))
    for s in [mpc("0.5", 3), mpc("0.5", 14), mpc(2, 10), mpc(1, 100), mpc("0.75", "0.5")]:
        z = zeta(s)
        show(f"zeta({s}).re", z.real)
        show(f"zeta({s}).im", z.imag)
    show("zeta'(2)", zeta(2, derivative=1))
    show("zeta'(3)", zeta(3, derivative=1))
    z = zeta(mpc("0.5", 20), derivative=1)
    show("zeta'(0.5+20i).re", z.real)
    show("zeta'(0.5+20i).im", z.imag)
    for s in ["1.1", "1.5", "3"]:
        show(f"zeta_real({s})", zeta(m(s)))
    for n in [0, 1, 2, 5, 10, 20]:
        show(f"gamma_{n}", GAMMA[n])
    show("a0(2,1,13)", a0(m(2), m(1), m(13)))
    show("a1(2,1,13)", a1(m(2), m(1), m(13)))
    show("c_backlund ex1", c_backlund(m("1.149567"), m(13), 2, m("3.150198")))
    show("c_backlund ex2", c_backlund(m("1.662479"), m(13), 2, m("3.216997")))
    show("v_factor", v_factor(m("0.030647") / log(13), m("1.149567"), m(13), m("3.150198")))
    show("c3(13)", c3(m(13)))
    show("c3(3)", c3(m(3)))
    for s0, t0, eps, s1, eta in [("0.8", 14, "0.021126", "1.392644", "3.173843"), ("1", 13, "0.037999", "1.889284", "3.054339")]:
        show(f"q_rh({s0})", q_rh(m(s0), m(t0), m(eps), m(s1), m(eta)))
    show("q_rh(one line, e^e)", q_rh(m(1), exp(e), m("0.037816"), m("1.395842"), m("3.177141")))
    W, q = q_h(1 / W0, m("0.713814"), m("0.041793"), m("1.671118"), m("3.367414"), H)
    show("q_h(13) W", W)
    show("q_h(13)", q)
    W, q = q_h(1 / W0, m("0.777942"), m("0.016334"), m("1.624690"), m("4.127955"), H)
    show("q_h(10)", q)
    a = a_eps(m("0.041793"), H)
    show("beta_for_W(13)", (1 / m(13) + 1 / W0) / ((1 / W0) * (1 + 1 / a)))
    lad13 = [r for r in Q_LADDER if r[0] >= 13]
    lad10 = [r for r in Q_LADDER if r[0] >= 10]
    show("ladder_sum(>=10)", ladder_sum(lad10))
    show("y0(13)", y0(lad13, m("0.030647"), m("1.149567"), m("3.150198")))
    show("y0(sigma>=1)", y0([], m("0.032871"), m("1.662479"), m("3.216997")))
    show("yprime0(13)", yprime0(lad13, m("0.030648")))
    show("yprime0(sigma>=1)", yprime0([], m("0.030648")))
    show("c0(W0,1,3,2/3)", c0(W0, 1, m(3), m(2) / 3))
    show("c0(W0,1,1e3,0.41)", c0(W0, 1, m(1000), m("0.41")))
    show("rescale_loglog", m("7.686") * log(m(10) ** 6) / log(log(m(10) ** 6)))
    show("8/log 500", 8 / log(500))
    show("phi0(1.45,1)", phi0(m("1.45"), 1))
    show("phi0(2,3)", phi0(m(2), 3))
    show("phi1(1.83,3)", phi1(m("1.83"), 3))
    show("phi1(1.49,10)", phi1(m("1.49"), 10))


if __name__ == "__main__":
    main()
