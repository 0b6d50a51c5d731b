"""Independent oracles used by the tests (kept free of the code paths
they check)."""

from fractions import Fraction

import numpy as np


def laguerre_explicit(n, s: Fraction, xi: Fraction):
    """Exact rational L_n^s(xi) from the explicit sum
    sum_k (-1)^k C(n+s, n-k) xi^k / k!."""
    total = Fraction(0)
    for k in range(n + 1):
        binom = Fraction(1)
        for j in range(n - k):
            binom *= (s + k + 1 + j) / Fraction(j + 1)
        fact = 1
        for j in range(1, k + 1):
            fact *= j
        total += Fraction(-1) ** k * binom * xi ** k / fact
    return total


def bisect_root(f, lo, hi, iterations=90):
    """Plain interval bisection; assumes a sign change on [lo, hi]."""
    flo = f(lo)
    if flo == 0.0:
        return lo
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def simpson_fine(f, a, b, panels=2 ** 15):
    """Composite Simpson of a callable on [a, b] with an odd sample count."""
    x = np.linspace(a, b, panels + 1)
    y = f(x)
    w = np.ones(panels + 1)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return (x[1] - x[0]) / 3.0 * np.dot(w, y)


def gaussian_entropy(sigma):
    """Differential entropy of rho(x) ~ exp(-(x-x0)^2/sigma^2)."""
    return 0.5 * (1.0 + np.log(np.pi)) + np.log(sigma)
