# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: phase tables, Airy evaluation, Laguerre recurrence,
entropy quadrature.  API mirrors kernels._ref exactly."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, exp, log, pow, fmodl, acosl, INFINITY, fabs

cdef extern from "math.h" nogil:
    void sincos(double x, double *s, double *c)

cnp.import_array()

cdef long double TWO_PI_L = 2 * acosl(-1)

cdef double AI_ZERO = 0.3550280538878172
cdef double AIP_ZERO = -0.2588194037928068
cdef double SQRT_PI = 1.7724538509055160273
cdef double AIRY_SWITCH = 7.0
cdef double AIRY_UNDERFLOW = 100.0


def phase_table(energies, times):
    """exp(-i*E_n*t) on the (t, n) product grid; E_n*t is formed and reduced
    modulo 2*pi in 80-bit extended precision."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] e = np.ascontiguousarray(energies, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] t = np.ascontiguousarray(times, dtype=np.float64)
    cdef Py_ssize_t nt = t.shape[0], ne = e.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] out = np.empty((nt, ne), dtype=np.complex128)
    cdef Py_ssize_t i, j
    cdef long double tl
    cdef double th, sn, cs
    cdef double complex unit_i = 1j
    for i in range(nt):
        tl = <long double> t[i]
        for j in range(ne):
            th = <double> fmodl((<long double> e[j]) * tl, TWO_PI_L)
            sincos(th, &sn, &cs)
            out[i, j] = cs - unit_i * sn
    return out


cdef void _airy_series(double x, double *ai, double *aip) noexcept nogil:
    cdef double x3 = x * x * x
    cdef double f = 1.0, g = x, fp = 0.0, gp = 1.0
    cdef double tf = 1.0, tg = x, tfp = x * x / 2.0, tgp = 1.0
    cdef int k
    fp += tfp
    for k in range(1, 80):
        tf = tf * x3 / ((3 * k) * (3 * k - 1))
        tg = tg * x3 / ((3 * k + 1) * (3 * k))
        if k > 1:
            tfp = tfp * x3 / ((3 * k - 1) * (3 * k - 3))
            fp += tfp
        tgp = tgp * x3 / ((3 * k) * (3 * k - 2))
        f += tf
        g += tg
        gp += tgp
        if fabs(tf) < 1e-18 and fabs(tg) < 1e-18:
            break
    ai[0] = AI_ZERO * f + AIP_ZERO * g
    aip[0] = AI_ZERO * fp + AIP_ZERO * gp


cdef void _airy_asym_pos(double x, double *ai, double *aip) noexcept nogil:
    cdef double zeta = 2.0 / 3.0 * pow(x, 1.5)
    cdef double s = 1.0, sv = 1.0, uk = 1.0, term, prev = INFINITY, sgn
    cdef int k
    for k in range(1, 60):
        uk = uk * (6 * k - 5) * (6 * k - 1) / (72.0 * k)
        term = uk / pow(zeta, k)
        if term >= prev:
            break
        prev = term
        sgn = -1.0 if k % 2 else 1.0
        s += sgn * term
        sv += sgn * term * (6 * k + 1) / (1.0 - 6 * k)
        if term < 1e-18:
            break
    ai[0] = exp(-zeta) / (2.0 * SQRT_PI * pow(x, 0.25)) * s
    aip[0] = -pow(x, 0.25) * exp(-zeta) / (2.0 * SQRT_PI) * sv


cdef void _airy_asym_neg(double x, double *ai, double *aip) noexcept nogil:
    cdef double y = -x
    cdef double zeta = 2.0 / 3.0 * pow(y, 1.5)
    cdef double se = 1.0, so = 0.0, sve = 1.0, svo = 0.0
    cdef double uk = 1.0, vk, term, prev = INFINITY, sgn
    cdef double c, sn
    cdef int k
    for k in range(1, 60):
        uk = uk * (6 * k - 5) * (6 * k - 1) / (72.0 * k)
        vk = uk * (6 * k + 1) / (1.0 - 6 * k)
        term = uk / pow(zeta, k)
        if term >= prev:
            break
        prev = term
        sgn = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            se += sgn * term
            sve += sgn * vk / pow(zeta, k)
        else:
            so += sgn * term
            svo += sgn * vk / pow(zeta, k)
        if term < 1e-18:
            break
    c = cos(zeta - 0.7853981633974483096)
    sn = sin(zeta - 0.7853981633974483096)
    ai[0] = (c * se + sn * so) / (SQRT_PI * pow(y, 0.25))
    aip[0] = pow(y, 0.25) / SQRT_PI * (sn * sve - c * svo)


cdef void _airy_pair(double x, double *ai, double *aip) noexcept nogil:
    if x > AIRY_UNDERFLOW:
        ai[0] = 0.0
        aip[0] = 0.0
    elif x < -AIRY_SWITCH:
        _airy_asym_neg(x, ai, aip)
    elif x > AIRY_SWITCH:
        _airy_asym_pos(x, ai, aip)
    else:
        _airy_series(x, ai, aip)


def airy_ai_values(x):
    """Ai(x) elementwise; exactly 0 beyond the underflow cutoff x > 100."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xs = np.ascontiguousarray(
        np.atleast_1d(x), dtype=np.float64).ravel()
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(xs.shape[0], dtype=np.float64)
    cdef Py_ssize_t i
    cdef double ai, aip
    for i in range(xs.shape[0]):
        _airy_pair(xs[i], &ai, &aip)
        out[i] = ai
    return out.reshape(np.shape(x)) if np.ndim(x) else out


def airy_ai_prime_values(x):
    """Ai'(x) elementwise, same branch structure as airy_ai_values."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xs = np.ascontiguousarray(
        np.atleast_1d(x), dtype=np.float64).ravel()
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(xs.shape[0], dtype=np.float64)
    cdef Py_ssize_t i
    cdef double ai, aip
    for i in range(xs.shape[0]):
        _airy_pair(xs[i], &ai, &aip)
        out[i] = aip
    return out.reshape(np.shape(x)) if np.ndim(x) else out


def laguerre_values(int n, double s, xi):
    """Generalized Laguerre L_n^s(xi) by the three-term recurrence.

    Recurrence order k is the outer loop so the inner elementwise update
    runs over contiguous memory (vectorizable)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] z = np.ascontiguousarray(
        np.atleast_1d(xi), dtype=np.float64).ravel()
    cdef Py_ssize_t m = z.shape[0], i
    cdef cnp.ndarray[cnp.float64_t, ndim=1] l0 = np.ones(m, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] l1 = np.empty(m, dtype=np.float64)
    cdef int k
    cdef double a, b, c, tmp
    if n == 0:
        return l0.reshape(np.shape(xi)) if np.ndim(xi) else l0
    for i in range(m):
        l1[i] = 1.0 + s - z[i]
    for k in range(1, n):
        a = 2 * k + 1 + s
        b = k + s
        c = 1.0 / (k + 1.0)
        for i in range(m):
            tmp = ((a - z[i]) * l1[i] - b * l0[i]) * c
            l0[i] = l1[i]
            l1[i] = tmp
    return l1.reshape(np.shape(xi)) if np.ndim(xi) else l1


cdef double _simpson(double *y, Py_ssize_t m, double dx) noexcept nogil:
    cdef double acc
    cdef Py_ssize_t i, last
    if m % 2 == 1:
        acc = y[0] + y[m - 1]
        for i in range(1, m - 1, 2):
            acc += 4.0 * y[i]
        for i in range(2, m - 1, 2):
            acc += 2.0 * y[i]
        return acc * dx / 3.0
    # even sample count: Simpson over the first m-1 points, trapezoid tail
    last = m - 1
    acc = y[0] + y[last - 1]
    for i in range(1, last - 1, 2):
        acc += 4.0 * y[i]
    for i in range(2, last - 1, 2):
        acc += 2.0 * y[i]
    return acc * dx / 3.0 + 0.5 * dx * (y[last - 1] + y[last])


def simpson_integral(values, double dx):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] y = np.ascontiguousarray(values, dtype=np.float64)
    return _simpson(&y[0], y.shape[0], dx)


def entropy_integral(rho, double dx):
    """Composite-Simpson integral of -rho*ln(rho) with 0*ln(0) := 0,
    realized by thresholding at 1e-300."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] r = np.ascontiguousarray(rho, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] f = np.empty(r.shape[0], dtype=np.float64)
    cdef Py_ssize_t i
    for i in range(r.shape[0]):
        f[i] = -r[i] * log(r[i]) if r[i] > 1e-300 else 0.0
    return _simpson(&f[0], f.shape[0], dx)
