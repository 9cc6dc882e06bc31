"""Measures on R: transforms gamma/Gamma/kappa, reflection, KMS, splittings."""

import math

import numpy as np
import pytest

from rphardy import kernels, measures
from rphardy.domains import Strip
from rphardy.errors import (
    AsymmetricInput, AtomAtZero, DivergentTransform, NegativeSupport,
    ParameterOutOfRange, ZeroDenominator,
)


# --------------------------------------------------------------------------
# the container
# --------------------------------------------------------------------------

def test_atoms_sorted_and_merged():
    mu = measures.atomic([(1.9, 0.4), (0.7, 1.0), (0.7 + 1e-14, 0.5)])
    assert list(mu.atom_locs) == [0.7, 1.9]
    assert mu.atom_weights[0] == pytest.approx(1.5)


def test_negative_weight_rejected():
    with pytest.raises(ParameterOutOfRange):
        measures.atomic([(0.7, -1.0)])
    with pytest.raises(ParameterOutOfRange):
        measures.gridded(0.0, 0.1, [1.0, -0.5, 1.0])


def test_total_mass_and_integrate():
    mu = measures.atomic([(0.7, 1.0), (1.9, 0.4)])
    assert mu.total_mass() == pytest.approx(1.4)
    got = mu.integrate(lambda lam: lam ** 2)
    assert got.real == pytest.approx(0.7 ** 2 + 0.4 * 1.9 ** 2, abs=1e-15)
    # trapezoid grid integrates a linear function exactly
    grid = measures.gridded(0.0, 0.5, [1.0, 1.0, 1.0, 1.0, 1.0])
    assert grid.total_mass() == pytest.approx(2.0, abs=1e-15)


def test_support_bounds_and_require_support():
    mu = measures.MeasureOnR(np.array([0.7]), np.array([1.0]),
                             grid_x0=1.0, grid_h=0.5,
                             density=np.array([1.0, 1.0, 1.0]))
    lo, hi = mu.support_bounds()
    assert lo == 0.7 and hi == 2.0
    mu.require_support(0.0, 2.0)
    with pytest.raises(NegativeSupport):
        mu.require_support(1.0, 3.0)


def test_plus_rejects_mixed_representations():
    with pytest.raises(ParameterOutOfRange):
        measures.atomic([(0.7, 1.0)]).plus(measures.gridded(1.0, 0.5, [1, 1, 1]))


def test_json_roundtrip():
    mu = measures.MeasureOnR(np.array([-0.3, 0.7]), np.array([0.2, 1.0]),
                             grid_x0=-1.0, grid_h=0.25,
                             density=np.array([0.5, 1.0, 0.75]))
    back = measures.MeasureOnR.from_json(mu.to_json())
    assert np.array_equal(back.atom_locs, mu.atom_locs)
    assert np.array_equal(back.atom_weights, mu.atom_weights)
    assert back.grid_x0 == mu.grid_x0 and back.grid_h == mu.grid_h
    assert np.array_equal(back.density, mu.density)


def test_reflected_and_plus():
    mu = measures.atomic([(0.7, 1.0)])
    r = mu.reflected()
    assert list(r.atom_locs) == [-0.7]
    grid = measures.gridded(0.0, 0.5, [1.0, 2.0, 3.0])
    rg = grid.reflected()
    assert rg.grid_x0 == pytest.approx(-1.0)
    assert list(rg.density) == [3.0, 2.0, 1.0]


# --------------------------------------------------------------------------
# gamma, Gamma, kappa
# --------------------------------------------------------------------------

def test_gamma_map_single_atom():
    nu = measures.gamma_map(measures.atomic([(0.7, 1.0)]), 1.0)
    assert list(nu.atom_locs) == [-0.7, 0.7]
    # frozen 40-digit weight e^{-0.7}
    assert nu.atom_weights[0] == pytest.approx(0.49658530379140951, abs=1e-16)
    assert nu.atom_weights[1] == 1.0


def test_gamma_map_doubles_an_atom_at_zero():
    nu = measures.gamma_map(measures.atomic([(0.0, 0.5)]), 1.0)
    assert list(nu.atom_locs) == [0.0]
    assert nu.atom_weights[0] == pytest.approx(1.0)


def test_Gamma_map_single_atom():
    nu = measures.Gamma_map(measures.atomic([(0.7, 1.0)]), 1.0)
    # frozen 40-digit Fermi weights; they sum to the original mass
    assert nu.atom_weights[list(nu.atom_locs).index(0.7)] == pytest.approx(
        0.66818777216816611, abs=1e-16)
    assert nu.atom_weights[list(nu.atom_locs).index(-0.7)] == pytest.approx(
        0.33181222783183389, abs=1e-16)
    assert nu.total_mass() == pytest.approx(1.0, abs=1e-15)


def test_Gamma_map_keeps_an_atom_at_zero():
    nu = measures.Gamma_map(measures.atomic([(0.0, 0.8)]), 1.0)
    assert list(nu.atom_locs) == [0.0]
    assert nu.atom_weights[0] == pytest.approx(0.8)


@pytest.mark.parametrize("beta", [0.5, 1.0, 3.0])
def test_factorization_gamma_kappa_equals_Gamma(beta):
    mu = measures.atomic([(0.0, 0.5), (0.7, 1.0), (1.9, 0.4)])
    via_kappa = measures.gamma_map(measures.M_kappa(mu, beta), beta)
    direct = measures.Gamma_map(mu, beta)
    assert np.allclose(via_kappa.atom_locs, direct.atom_locs, atol=1e-15)
    assert np.allclose(via_kappa.atom_weights, direct.atom_weights,
                       rtol=0.0, atol=1e-16)


@pytest.mark.parametrize("beta", [0.5, 2.0])
def test_Gamma_inverse_roundtrip_atoms(beta):
    mu = measures.atomic([(0.0, 0.5), (0.7, 1.0), (1.9, 0.4)])
    back = measures.Gamma_inverse(measures.Gamma_map(mu, beta), beta)
    assert np.allclose(back.atom_locs, mu.atom_locs, atol=1e-15)
    assert np.allclose(back.atom_weights, mu.atom_weights, rtol=0.0, atol=1e-16)


def test_Gamma_inverse_roundtrip_grid():
    beta = 1.0
    lam = 0.05 * np.arange(121)
    mu = measures.gridded(0.0, 0.05, np.exp(-lam))
    back = measures.Gamma_inverse(measures.Gamma_map(mu, beta), beta)
    assert back.grid_x0 == pytest.approx(0.0)
    assert np.allclose(back.density, mu.density, rtol=1e-15, atol=0.0)


def test_markov_weight_range():
    lam = np.linspace(-5, 5, 41)
    kappa = measures.markov_weight(2.0, lam)
    assert np.all(kappa > 0.0) and np.all(kappa < 1.0)
    assert measures.markov_weight(2.0, 0.0) == pytest.approx(0.5)


# --------------------------------------------------------------------------
# reflection, fourier, KMS
# --------------------------------------------------------------------------

def test_reflection_check_gamma_image():
    mu = measures.atomic([(0.7, 1.0), (1.9, 0.4)])
    nu = measures.gamma_map(mu, 1.0)
    assert measures.reflection_check(nu, 1.0) < 1e-15
    # a plain symmetric measure fails the e^{-beta lam} law
    sym = measures.atomic([(0.7, 1.0), (-0.7, 1.0)])
    assert measures.reflection_check(sym, 1.0) > 0.4
    # and one-sided support has no mirror at all
    assert measures.reflection_check(mu, 1.0) == math.inf


def test_fourier_frozen_value():
    mu = measures.atomic([(0.7, 1.0), (1.9, 0.4)])
    got = measures.fourier(mu, 0.3 + 0.5j, monitor=False)
    want = 0.81944579489544531 + 0.23037834893199205j
    assert abs(got - want) < 5e-16


def test_fourier_monitor_flags_divergence():
    wide = measures.gridded(0.0, 0.5, np.ones(81))   # support [0, 40]
    with pytest.raises(DivergentTransform):
        measures.fourier(wide, -1.0j)    # e^{lam} against a flat tail
    # same input is accepted when the caller vouches for compact support
    val = measures.fourier(wide, -1.0j, monitor=False)
    assert np.isfinite(val.real)


def test_laplace_value():
    mu = measures.atomic([(0.7, 1.0)])
    assert measures.laplace(mu, 0.5) == pytest.approx(0.70468808971871343,
                                                      abs=1e-16)


@pytest.mark.parametrize("beta", [0.5, 1.0, 3.0])
def test_kms_for_both_transforms(beta):
    mu = measures.atomic([(0.7, 1.0), (1.9, 0.4), (0.0, 0.3)])
    for image in (measures.gamma_map(mu, beta), measures.Gamma_map(mu, beta)):
        assert measures.kms_check(image, beta) < 1e-12


def test_kms_fails_for_raw_measure():
    mu = measures.atomic([(0.7, 1.0), (1.9, 0.4)])
    assert measures.kms_check(mu, 1.0) > 0.1


def test_rp_circle_from_measure_consistency():
    mu = measures.atomic([(0.4, 0.7), (1.2, 0.3)])
    beta = 2.0
    phi_T, phi_R = measures.rp_circle_from_measure(mu, beta)
    from rphardy.rpfunc import phi_circle
    for y in (0.0, 0.3, 1.1):
        want = 0.7 * phi_circle(beta, 0.4, y) + 0.3 * phi_circle(beta, 1.2, y)
        assert phi_T(y) == pytest.approx(want, abs=1e-15)
    # phi_R is a positive-definite function: even, maximal at 0
    assert phi_R(0.0) == pytest.approx(1.0, abs=1e-15)
    assert phi_R(0.3) == pytest.approx(phi_R(-0.3), abs=1e-15)
    assert abs(phi_R(0.9)) <= phi_R(0.0)


def test_theta_involution_check_small():
    # needs the 2 beta reflection law: w(-lam) = e^{-2 beta lam} w(lam)
    beta = 1.0
    nu = measures.atomic([
        (0.4, 0.7), (-0.4, 0.7 * math.exp(-2.0 * beta * 0.4)),
        (1.2, 0.3), (-1.2, 0.3 * math.exp(-2.0 * beta * 1.2))])
    pairs = [(0.3 + 0.4j, 0.1 + 0.6j), (-0.5 + 0.7j, 0.2 + 0.2j)]
    assert measures.theta_involution_check(nu, beta, pairs) < 1e-14


# --------------------------------------------------------------------------
# spectral densities and kernel recovery
# --------------------------------------------------------------------------

def test_szego_strip_measure_recovers_kernel():
    beta = 2.0
    nu = measures.szego_strip_measure(beta)
    z, w = 0.3 + 1.1j, -0.4 + 0.9j
    got = measures.kernel_from_measure(nu, z, w)
    want = kernels.szego(Strip(beta), z, w)
    assert abs(got - want) < 1e-8 * abs(want)


def test_bergman_strip_measure_recovers_kernel():
    beta = 2.0
    nu = measures.bergman_strip_measure(beta)
    z, w = 0.3 + 1.1j, -0.4 + 0.9j
    got = measures.kernel_from_measure(nu, z, w)
    want = kernels.bergman_strip(beta, z, w)
    assert abs(got - want) < 1e-8 * abs(want)


def test_bergman_density_value_at_zero_is_the_limit():
    beta = 2.0
    nu = measures.bergman_strip_measure(beta, halfwidth=1.0, step=0.5)
    nodes = nu.grid_nodes()
    j = int(np.argmin(np.abs(nodes)))
    assert nodes[j] == pytest.approx(0.0)
    assert nu.density[j] == pytest.approx(1.0 / (8.0 * math.pi ** 2 * beta),
                                          rel=1e-14)


def test_exp_tilt_shifts_reflection_factor():
    mu = measures.atomic([(0.7, 1.0), (-0.7, math.exp(-2.0 * 0.7))])
    # mu satisfies the factor-2 law at beta = 1; the tilt by e^{c lam}
    # shifts the factor by 2c/beta, so c = -1/2 lands on the factor-1 law
    assert measures.reflection_check(mu, 1.0, factor=2.0) < 1e-15
    tilted = measures.exp_tilt(mu, -0.5)
    assert measures.reflection_check(tilted, 1.0, factor=1.0) < 1e-15


# --------------------------------------------------------------------------
# Riesz family
# --------------------------------------------------------------------------

def test_riesz_hat_frozen_value():
    got = measures.riesz_hat(0.5, 0.3 + 1.1j)
    want = 0.92822730660675873 + 0.1243064221051814j
    assert abs(got - want) < 5e-16
    with pytest.raises(ParameterOutOfRange):
        measures.riesz_hat(0.5, 0.3 - 0.1j)


@pytest.mark.parametrize("s", [0.5, 1.0, 1.7])
def test_riesz_hat_quad_matches_closed_form(s):
    for z in (0.3 + 1.1j, -1.0 + 0.8j):
        got = measures.riesz_hat_quad(s, z)
        assert abs(got - measures.riesz_hat(s, z)) < 1e-9


def test_riesz_measure_grid_transform_is_only_first_order_for_small_s():
    # the uniform grid carries an O(h^s) error near 0 for s < 1, which is
    # why the quadrature route exists; make sure the gap is real
    s, z = 0.5, 0.3 + 1.1j
    mu = measures.riesz_measure(s, 60.0, 0.01)
    grid_route = measures.fourier(mu, z, monitor=False)
    exact = measures.riesz_hat(s, z)
    assert abs(grid_route - exact) > 1e-3


@pytest.mark.parametrize("s,t", [(0.5, 0.7), (1.3, 2.0)])
def test_riesz_kappa_check(s, t):
    assert measures.riesz_kappa_check(s, 1.0, t) < 1e-12


# --------------------------------------------------------------------------
# geometric splitting
# --------------------------------------------------------------------------

def _sym_atoms():
    return measures.atomic([(0.7, 1.0), (-0.7, 1.0), (1.9, 0.4), (-1.9, 0.4)])


def test_splitting_rejects_asymmetric_input():
    with pytest.raises(AsymmetricInput):
        measures.geometric_splitting(measures.atomic([(0.7, 1.0)]), 1.0,
                                     "alternating")


def test_splitting_plain_rejects_atom_at_zero():
    mu = _sym_atoms().plus(measures.atomic([(0.0, 0.5)]))
    with pytest.raises(AtomAtZero):
        measures.geometric_splitting(mu, 1.0, "plain")


def test_splitting_rejects_grid_node_at_zero():
    grid = measures.gridded(-1.0, 0.5, [1.0, 1.0, 1.0, 1.0, 1.0])
    with pytest.raises(ZeroDenominator):
        measures.geometric_splitting(grid, 1.0, "alternating")


def test_splitting_mode_validation():
    with pytest.raises(ParameterOutOfRange):
        measures.geometric_splitting(_sym_atoms(), 1.0, "geometric")


@pytest.mark.parametrize("mode", ["alternating", "plain"])
def test_splitting_reflection_law_and_one_sided_identity(mode):
    beta = 1.0
    nu, nu_plus, nu_minus = measures.geometric_splitting(_sym_atoms(), beta, mode)
    assert measures.reflection_check(nu, beta, factor=2.0) < 1e-14
    for zeta in (0.2 + 0.4j, -1.0 + 1.1j):
        lhs = measures.fourier(nu, zeta, monitor=False)
        rhs = measures.fourier(nu_plus, zeta, monitor=False) \
            + measures.fourier(nu_plus, 2j * beta - zeta, monitor=False)
        assert abs(lhs - rhs) < 1e-13
    # the two halves exactly partition nu's mass
    assert nu_plus.total_mass() + nu_minus.total_mass() == pytest.approx(
        nu.total_mass(), abs=1e-14)


def test_splitting_alternating_halves_an_atom_at_zero():
    mu = _sym_atoms().plus(measures.atomic([(0.0, 0.8)]))
    nu, nu_plus, nu_minus = measures.geometric_splitting(mu, 1.0, "alternating")
    w_plus = nu_plus.atom_weights[list(nu_plus.atom_locs).index(0.0)]
    w_minus = nu_minus.atom_weights[list(nu_minus.atom_locs).index(0.0)]
    assert w_plus == pytest.approx(0.2)   # nu keeps 0.8/2, each half gets 0.2
    assert w_minus == pytest.approx(0.2)


def test_splitting_grid_halves_carry_trapezoid_weights():
    half = 0.25 * (0.5 + np.arange(8))
    nodes = np.concatenate([-half[::-1], half])
    grid = measures.gridded(float(nodes[0]), 0.25, np.exp(-nodes ** 2))
    nu, nu_plus, nu_minus = measures.geometric_splitting(grid, 1.0, "plain")
    assert nu_plus.density is None          # halves are atomic
    assert nu_plus.total_mass() + nu_minus.total_mass() == pytest.approx(
        nu.total_mass(), abs=1e-15)
