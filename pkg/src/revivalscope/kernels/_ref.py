"""NumPy reference implementations of the hot kernels.

Selected automatically when the compiled extension is unavailable (or when
REVIVALSCOPE_PURE_PYTHON=1).  Must stay numerically interchangeable with
``_fast``; the parity tests compare both backends.
"""

import numpy as np

# 2*pi to extended precision; string conversion keeps all long-double digits
TWO_PI_LD = np.longdouble("6.283185307179586476925286766559005768394")

# Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3)
AI_ZERO = 0.3550280538878172
AIP_ZERO = -0.2588194037928068
SQRT_PI = 1.7724538509055160273

# Crossover between the Maclaurin series and the asymptotic expansions.
# At |x| = 7 the series loses ~5e-11 to cancellation while the asymptotic
# series bottoms out near 5e-11; both sides stay inside the 1e-10 budget.
AIRY_SWITCH = 7.0
AIRY_UNDERFLOW = 100.0

_SERIES_MAX_TERMS = 80
_ASYMP_MAX_TERMS = 60


def phase_table(energies, times):
    """exp(-i*E_n*t) for every (t, n), with the product E_n*t reduced
    modulo 2*pi in extended precision before the trig call."""
    e = np.asarray(energies, dtype=np.longdouble)
    t = np.asarray(times, dtype=np.longdouble)
    theta = np.mod(np.outer(t, e), TWO_PI_LD).astype(np.float64)
    return np.exp(-1j * theta)


def _airy_series(x):
    # Ai = c1*f - |c2|*g with f'' = x f; term recurrences avoid factorials
    x = np.asarray(x, dtype=np.float64)
    x3 = x * x * x
    f = np.ones_like(x)
    g = x.copy()
    fp = np.zeros_like(x)
    gp = np.ones_like(x)
    tf = np.ones_like(x)
    tg = x.copy()
    tfp = x * x / 2.0
    tgp = np.ones_like(x)
    fp += tfp
    for k in range(1, _SERIES_MAX_TERMS):
        tf = tf * x3 / ((3 * k) * (3 * k - 1))
        tg = tg * x3 / ((3 * k + 1) * (3 * k))
        if k > 1:
            tfp = tfp * x3 / ((3 * k - 1) * (3 * k - 3))
            fp += tfp
        tgp = tgp * x3 / ((3 * k) * (3 * k - 2))
        f += tf
        g += tg
        gp += tgp
        if max(np.abs(tf).max(initial=0.0), np.abs(tg).max(initial=0.0)) < 1e-18:
            break
    ai = AI_ZERO * f + AIP_ZERO * g
    aip = AI_ZERO * fp + AIP_ZERO * gp
    return ai, aip


def _airy_asym_pos(x):
    x = np.asarray(x, dtype=np.float64)
    zeta = 2.0 / 3.0 * x ** 1.5
    s = np.ones_like(x)
    sv = np.ones_like(x)
    uk = 1.0
    term = np.ones_like(x)
    active = np.ones(x.shape, dtype=bool)
    prev = np.full_like(x, np.inf)
    for k in range(1, _ASYMP_MAX_TERMS):
        uk = uk * (6 * k - 5) * (6 * k - 1) / (72.0 * k)
        term = uk / zeta ** k
        grown = term >= prev
        active &= ~grown
        sgn = -1.0 if k % 2 else 1.0
        s[active] += sgn * term[active]
        sv[active] += sgn * term[active] * (6 * k + 1) / (1.0 - 6 * k)
        prev = term.copy()
        active &= term >= 1e-18
        if not active.any():
            break
    ai = np.exp(-zeta) / (2.0 * SQRT_PI * x ** 0.25) * s
    aip = -(x ** 0.25) * np.exp(-zeta) / (2.0 * SQRT_PI) * sv
    return ai, aip


def _airy_asym_neg(x):
    y = -np.asarray(x, dtype=np.float64)
    zeta = 2.0 / 3.0 * y ** 1.5
    se = np.ones_like(y)
    so = np.zeros_like(y)
    sve = np.ones_like(y)
    svo = np.zeros_like(y)
    uk = 1.0
    active = np.ones(y.shape, dtype=bool)
    prev = np.full_like(y, np.inf)
    for k in range(1, _ASYMP_MAX_TERMS):
        uk = uk * (6 * k - 5) * (6 * k - 1) / (72.0 * k)
        vk = uk * (6 * k + 1) / (1.0 - 6 * k)
        term = uk / zeta ** k
        active &= ~(term >= prev)
        sgn = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            se[active] += sgn * term[active]
            sve[active] += sgn * (vk / zeta ** k)[active]
        else:
            so[active] += sgn * term[active]
            svo[active] += sgn * (vk / zeta ** k)[active]
        prev = term.copy()
        active &= term >= 1e-18
        if not active.any():
            break
    c = np.cos(zeta - np.pi / 4)
    s = np.sin(zeta - np.pi / 4)
    ai = (c * se + s * so) / (SQRT_PI * y ** 0.25)
    aip = (y ** 0.25 / SQRT_PI) * (s * sve - c * svo)
    return ai, aip


def _airy_pair(x):
    x = np.asarray(x, dtype=np.float64)
    ai = np.zeros_like(x)
    aip = np.zeros_like(x)
    m_ser = np.abs(x) <= AIRY_SWITCH
    m_pos = (x > AIRY_SWITCH) & (x <= AIRY_UNDERFLOW)
    m_neg = x < -AIRY_SWITCH
    if m_ser.any():
        ai[m_ser], aip[m_ser] = _airy_series(x[m_ser])
    if m_pos.any():
        ai[m_pos], aip[m_pos] = _airy_asym_pos(x[m_pos])
    if m_neg.any():
        ai[m_neg], aip[m_neg] = _airy_asym_neg(x[m_neg])
    return ai, aip


def airy_ai_values(x):
    """Ai(x) elementwise; exactly 0 beyond the underflow cutoff x > 100."""
    return _airy_pair(x)[0]


def airy_ai_prime_values(x):
    """Ai'(x) elementwise, same branch structure as airy_ai_values."""
    return _airy_pair(x)[1]


def laguerre_values(n, s, xi):
    """Generalized Laguerre L_n^s(xi) by the three-term recurrence
    (k+1) L_{k+1} = (2k+1+s-xi) L_k - (k+s) L_{k-1}."""
    xi = np.asarray(xi, dtype=np.float64)
    l0 = np.ones_like(xi)
    if n == 0:
        return l0
    l1 = 1.0 + s - xi
    for k in range(1, n):
        l0, l1 = l1, ((2 * k + 1 + s - xi) * l1 - (k + s) * l0) / (k + 1.0)
    return l1


def _simpson_weights(m):
    # m sample points; odd m -> plain composite Simpson, even m ->
    # Simpson over the first m-1 points plus a trapezoid end correction
    w = np.zeros(m)
    if m % 2 == 1:
        w[0] = w[-1] = 1.0 / 3.0
        w[1:-1:2] = 4.0 / 3.0
        w[2:-1:2] = 2.0 / 3.0
    else:
        w[0] = w[-2] = 1.0 / 3.0
        w[1:-2:2] = 4.0 / 3.0
        w[2:-2:2] = 2.0 / 3.0
        w[-2] += 0.5
        w[-1] += 0.5
    return w


def simpson_integral(values, dx):
    values = np.asarray(values, dtype=np.float64)
    return float(np.dot(_simpson_weights(len(values)), values) * dx)


def entropy_integral(rho, dx):
    """Composite-Simpson integral of -rho*ln(rho) with 0*ln(0) := 0,
    realized by thresholding at 1e-300."""
    rho = np.asarray(rho, dtype=np.float64)
    safe = np.where(rho > 1e-300, rho, 1.0)
    return float(np.dot(_simpson_weights(len(rho)), -rho * np.log(safe)) * dx)
