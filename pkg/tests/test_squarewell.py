"""Square-well basis: spectrum, eigenfunctions, analytic momentum states,
closed-form Gaussian coefficients, time scales."""

import numpy as np
import pytest

from revivalscope.errors import DomainError, IndexRangeError
from revivalscope.kernels import simpson_integral
from revivalscope.squarewell import (SquareWellParams, initial_gaussian,
                                     make_packet, sw_energy, sw_eval_phi,
                                     sw_eval_u, sw_gaussian_coefficients,
                                     sw_timescales)

FIG1 = SquareWellParams(x0=0.5, p0=400.0 * np.pi, sigma=0.1)
FIG3 = SquareWellParams(x0=0.8, p0=0.0, sigma=0.1)


def test_energies():
    assert sw_energy(1) == pytest.approx(np.pi ** 2, rel=1e-14)
    assert sw_energy(2) == pytest.approx(4.0 * np.pi ** 2, rel=1e-14)
    assert sw_energy(400) == pytest.approx(160000.0 * np.pi ** 2, rel=1e-14)
    with pytest.raises(IndexRangeError):
        sw_energy(0)


def test_eigenfunction_values():
    assert sw_eval_u(1, 0.5) == pytest.approx(np.sqrt(2.0), rel=1e-14)
    for n in (1, 2, 17):
        assert sw_eval_u(n, 0.0) == pytest.approx(0.0, abs=1e-13)
    with pytest.raises(DomainError):
        sw_eval_u(1, 1.2)


def test_eigenfunction_orthonormality():
    x = np.linspace(0.0, 1.0, 2 ** 14 + 1)
    dx = x[1] - x[0]
    ns = (1, 2, 9, 25, 50)
    for i in ns:
        for j in ns:
            val = simpson_integral(sw_eval_u(i, x) * sw_eval_u(j, x), dx)
            assert val == pytest.approx(1.0 if i == j else 0.0, abs=1e-8)


def test_phi_singular_value():
    for n in (1, 3, 400):
        pn = n * np.pi
        assert abs(sw_eval_phi(n, pn)) == pytest.approx(
            1.0 / (2.0 * np.sqrt(np.pi)), rel=1e-12)
        assert abs(sw_eval_phi(n, -pn)) == pytest.approx(
            1.0 / (2.0 * np.sqrt(np.pi)), rel=1e-12)
        # continuity across the removable singularity
        near = sw_eval_phi(n, pn + 2e-6)
        assert abs(near - sw_eval_phi(n, pn)) < 1e-5


def test_phi_normalization():
    # the wall-kink 1/p^4 density tail leaves ~2.1e-6/n outside the
    # [-40 pi n, 40 pi n] window, so the 1e-6 target holds from n=3 up
    for n, tol in ((1, 3e-6), (3, 1e-6), (5, 1e-6), (10, 1e-6)):
        span = 40.0 * np.pi * n
        p = np.linspace(-span, span, 2 ** 17 + 1)
        dens = np.abs(sw_eval_phi(n, p)) ** 2
        assert simpson_integral(dens, p[1] - p[0]) == pytest.approx(1.0, abs=tol)


def test_coefficients_fig1_structure():
    ns = np.arange(340, 461)
    coeffs, near_wall = sw_gaussian_coefficients(FIG1, ns)
    assert not near_wall
    w = np.abs(coeffs) ** 2
    assert ns[np.argmax(w)] == 400
    # |a_n|^2 symmetric about the dominant index
    for dn in (1, 5, 12):
        assert w[60 + dn] == pytest.approx(w[60 - dn], rel=1e-9)
    assert w.sum() == pytest.approx(1.0, abs=1e-4)


def test_dominant_index_identity():
    # argmax_n |a_n| = round(p0 L / pi) when x0 = L/2
    for p0 in (100.0, 200.5, 400.0 * np.pi):
        params = SquareWellParams(x0=0.5, p0=p0, sigma=0.1)
        ns = np.arange(1, 600)
        coeffs, _ = sw_gaussian_coefficients(params, ns)
        assert ns[np.argmax(np.abs(coeffs))] == int(round(p0 / np.pi))


def test_coefficients_wall_flag():
    _, near_wall = sw_gaussian_coefficients(FIG3, np.arange(1, 40))
    assert near_wall


def test_coefficients_closed_form_vs_quadrature():
    # oracle: fine Simpson over the whole Gaussian support (the closed
    # form is defined by extending the integral to the real axis)
    ns = np.arange(340, 461)
    coeffs, _ = sw_gaussian_coefficients(FIG1, ns)
    x = np.linspace(FIG1.x0 - 12 * FIG1.sigma, FIG1.x0 + 12 * FIG1.sigma, 2 ** 15 + 1)
    dx = x[1] - x[0]
    psi0 = initial_gaussian(FIG1, x)
    worst = 0.0
    for i, n in enumerate(ns):
        un = np.sqrt(2.0) * np.sin(n * np.pi * x)
        quad = (simpson_integral(un * psi0.real, dx)
                + 1j * simpson_integral(un * psi0.imag, dx))
        worst = max(worst, abs(quad - coeffs[i]))
    assert worst < 1e-10


def test_closed_form_vs_box_quadrature_documents_extension_error():
    # against the literal [0, L] integral the closed form differs by the
    # Gaussian mass outside the box (~2e-7 for the fig1 parameters)
    ns = np.arange(395, 406)
    coeffs, _ = sw_gaussian_coefficients(FIG1, ns)
    x = np.linspace(0.0, 1.0, 2 ** 15 + 1)
    dx = x[1] - x[0]
    psi0 = initial_gaussian(FIG1, x)
    diffs = []
    for i, n in enumerate(ns):
        un = np.sqrt(2.0) * np.sin(n * np.pi * x)
        quad = (simpson_integral(un * psi0.real, dx)
                + 1j * simpson_integral(un * psi0.imag, dx))
        diffs.append(abs(quad - coeffs[i]))
    assert max(diffs) < 1e-6


def test_timescales():
    t_cl, t_rev = sw_timescales(FIG1, 400)
    assert t_cl == pytest.approx(1.0 / (400.0 * np.pi), rel=1e-14)
    assert t_cl == pytest.approx(7.9577e-4, abs=1e-8)
    assert t_rev == pytest.approx(2.0 / np.pi, rel=1e-14)
    assert t_rev == pytest.approx(0.6366198, abs=1e-7)
    for n0 in (1, 7, 400):
        t_cl, t_rev = sw_timescales(FIG1, n0)
        assert t_rev / t_cl == pytest.approx(2.0 * n0, rel=1e-13)
    with pytest.raises(IndexRangeError):
        sw_timescales(FIG1, 0)


def test_mirror_identity_fig3_packet():
    # psi(L-x, T_rev/2) = -psi(x, 0) holds for any coefficient set
    from revivalscope import SpatialGrid, evolve_position

    packet = make_packet(FIG3, 1, 60, renormalize=True)
    grid = SpatialGrid(0.0, 1.0, 2048)
    _, t_rev = sw_timescales(FIG3, packet.dominant_index())
    psi0 = evolve_position(packet, grid, 0.0).values
    psih = evolve_position(packet, grid, t_rev / 2.0).values
    assert np.abs(psih - (-psi0[::-1])).max() < 1e-9
