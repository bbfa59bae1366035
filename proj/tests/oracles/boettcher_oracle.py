"""Independent symbolic oracle for frozen expected values used by the C++ tests.

Computes the Boettcher series by brute-force iteration of (f^N(z))^(-1/d^N)
using sympy's generic series expansion (no Newton iteration, no shared code
with the library), plus series reversion by undetermined coefficients.
"""
import sympy as sp

w, c, p = sp.symbols("w c p")


def xi(coeffs, N, order):
    """coeffs = [a0, ..., a_{d-1}] (monic implied); returns xi_N mod w^order."""
    d = len(coeffs)
    z = 1 / w
    F = z
    for _ in range(N):
        F = z**0 * (F**d + sum(a * F**i for i, a in enumerate(coeffs)))
    beta = sp.simplify(F * w ** (d**N))
    root = sp.series(beta ** sp.Rational(1, d**N), w, 0, order).removeO()
    return sp.expand(root)


def omega(coeffs, order):
    d = len(coeffs)
    N = 1
    while d**N < order:
        N += 1
    x = xi(coeffs, N, order)
    om = sp.series(w / x, w, 0, order).removeO()
    return sp.expand(om)


def reversion(S, order):
    bs = sp.symbols("b2:%d" % order)
    B = w + sum(b * w**k for k, b in zip(range(2, order), bs))
    comp = sp.expand(sp.series(S.subs(w, B), w, 0, order).removeO())
    sol = {}
    for k in range(2, order):
        eq = comp.coeff(w, k).subs(sol)
        b = bs[k - 2]
        sol[b] = sp.solve(eq, b)[0]
    return sp.expand(B.subs(sol))


def agreement(a, b, order):
    diff = sp.expand(a - b)
    for k in range(order):
        if diff.coeff(w, k) != 0:
            return k
    return order


if __name__ == "__main__":
    print("omega z^2+c:", omega([c, 0], 7))
    print("omega z^2+3:", omega([3, 0], 9))
    print("omega z^3+pz:", omega([0, p, 0], 7))
    Sc = w - c / 2 * w**3 + (3 * c**2 / 8 - c / 4) * w**5
    print("reversion of z^2+c omega:", reversion(Sc, 7))
    print("reversion w+w^2:", reversion(w + w**2, 6))
    print("inverse 1 + c/2 w^2 + (c/4 - c^2/8) w^4:",
          sp.expand(sp.series(1 / (1 + c / 2 * w**2 + (c / 4 - c**2 / 8) * w**4), w, 0, 6).removeO()))
    print("sqrt(1 + c w^2):", sp.expand(sp.series(sp.sqrt(1 + c * w**2), w, 0, 6).removeO()))
    print("w/(1+c w^2):", sp.expand(sp.series(w**2 / (1 + c * w**2), w, 0, 6).removeO()))
    for name, cf in [("z^2+3", [3, 0]), ("z^2+z+1", [1, 1]), ("z^3+2z^2+1", [1, 0, 2]),
                     ("z^3+z+1", [1, 1, 0])]:
        orders = []
        for N in (1, 2):
            M = 2 ** 6 if len(cf) == 2 else 30
            orders.append(agreement(xi(cf, N, M), xi(cf, N + 1, M), M))
        print("cauchy", name, orders)
    print("omega z^2+z+1 order 8:", omega([1, 1], 8))
    print("omega 2+z+z^3 order 8:", omega([2, 1, 0], 8))
