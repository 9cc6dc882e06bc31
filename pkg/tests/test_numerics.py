"""Tests for the shared quadrature / summation / Gram machinery."""

import cmath
import math
import warnings

import numpy as np
import pytest

from rphardy import numerics
from rphardy.errors import ParameterOutOfRange, ToleranceNotReached

# mpmath oracles (40 digits, rounded to double)
SECH_FT_AT_07 = 1.8835305904575709       # pi / cosh(0.35 pi)
SECH2_FT_AT_13 = 0.43009452950455228     # sqrt(pi/2) * 1.3 / sinh(0.65 pi)
EXP_M18 = 0.16529888822158654            # e^{-1.8}
GAUSS_FT_AT_08 = 0.72614903707369092     # e^{-0.32}
PSUM_RHS = 0.74582106433381893           # beta=2, lam=1.3, x=0.45
FTCOSH_RHS = 0.16895814227056924 + 0.019705207075393896j  # beta=1, z=0.6+0.9i


# --------------------------------------------------------------------------
# compensated summation
# --------------------------------------------------------------------------

def test_comp_sum_real_is_exactly_rounded():
    vals = [1e16, 1.0, -1e16]
    assert sum(vals) == 0.0          # the naive sum loses the small term
    assert numerics.comp_sum_real(vals) == 1.0


def test_comp_sum_complex_parts_and_empty():
    vals = [1e16 + 1e16j, 1.0 + 2.0j, -1e16 - 1e16j]
    assert numerics.comp_sum(vals) == 1.0 + 2.0j
    assert numerics.comp_sum([]) == 0.0 + 0.0j
    assert numerics.comp_sum(np.zeros((0,), dtype=complex)) == 0.0 + 0.0j


# --------------------------------------------------------------------------
# quadrature
# --------------------------------------------------------------------------

def test_quad_real_polynomial_on_finite_interval():
    val, err = numerics.quad_real(lambda x: x * x, 0.0, 1.0)
    assert abs(val - 1.0 / 3.0) < 1e-13
    assert err < 1e-10


def test_quad_real_gaussian_over_the_line():
    val, _ = numerics.quad_real(lambda x: math.exp(-x * x), -np.inf, np.inf)
    assert abs(val - math.sqrt(math.pi)) < 5e-10


def test_quad_real_breakpoints_handle_a_kink():
    val, _ = numerics.quad_real(lambda x: abs(x - 0.5), 0.0, 1.0, points=[0.5])
    assert abs(val - 0.25) < 1e-13


def test_quad_complex_exponential():
    # int_0^inf e^{-(1-i)x} dx = 1/(1-i) = (1+i)/2
    val, err = numerics.quad(lambda x: cmath.exp(-(1.0 - 1.0j) * x), 0.0, np.inf)
    assert abs(val - (0.5 + 0.5j)) < 5e-10
    assert err < 1e-9


def test_quad_real_raises_when_the_estimate_misses():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        with pytest.raises(ToleranceNotReached):
            numerics.quad_real(lambda x: math.sin(1e7 * x), 0.0, 1.0, tol=1e-13)


def test_oscillatory_ft_of_lorentzian_is_two_sided_exponential():
    s = 0.9
    f = lambda x: numerics.lorentzian(s, x)
    for t in (2.0, -2.0):
        val = numerics.oscillatory_ft(f, t)
        assert abs(val.real - EXP_M18) < 1e-12
        assert abs(val.imag) < 1e-12
    # t = 0 falls back to plain quadrature and returns the total mass
    assert abs(numerics.oscillatory_ft(f, 0.0) - 1.0) < 1e-10


def test_oscillatory_ft_asymmetric_gaussian_phase():
    # int e^{-(x-a)^2} e^{itx} dx = sqrt(pi) e^{ita} e^{-t^2/4}
    a = 0.3
    f = lambda x: math.exp(-((x - a) ** 2))
    for t in (1.5, -1.5):
        val = numerics.oscillatory_ft(f, t)
        want = math.sqrt(math.pi) * cmath.exp(1j * t * a) * math.exp(-t * t / 4.0)
        assert abs(val - want) < 1e-12


def test_trapezoid_circle_integrates_fourier_modes_exactly():
    assert abs(numerics.trapezoid_circle(lambda t: cmath.exp(3j * t))) < 1e-13
    assert abs(numerics.trapezoid_circle(lambda t: 1.0 + 0.0j) - 2.0 * math.pi) < 1e-13
    val = numerics.trapezoid_circle(lambda t: math.cos(t) ** 2 + 0.0j)
    assert abs(val - math.pi) < 1e-13


# --------------------------------------------------------------------------
# Gram reports
# --------------------------------------------------------------------------

def test_gram_report_accepts_a_psd_matrix():
    A = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=complex)
    rep = numerics.gram_report(A)
    assert rep.verdict
    assert rep.size == 2
    assert rep.hermiticity_defect == 0.0
    assert abs(rep.min_eigenvalue - 1.0) < 1e-12
    assert abs(rep.max_eigenvalue - 3.0) < 1e-12
    assert abs(rep.spectral_norm - 3.0) < 1e-12


def test_gram_report_rejects_an_indefinite_matrix():
    A = np.diag([1.0, -0.5]).astype(complex)
    rep = numerics.gram_report(A)
    assert not rep.verdict
    assert rep.min_eigenvalue < -0.4


def test_gram_report_scales_tolerance_with_the_norm():
    # a tiny negative eigenvalue below tol * norm still passes
    A = np.diag([1e6, -1e-6]).astype(complex)
    assert numerics.gram_report(A, tolerance=1e-10).verdict
    assert not numerics.gram_report(A, tolerance=1e-14).verdict


def test_gram_report_flags_hermiticity_defect():
    A = np.array([[1.0, 0.2 + 0.1j], [0.2 - 0.3j, 1.0]])
    rep = numerics.gram_report(A)
    assert abs(rep.hermiticity_defect - 0.2) < 1e-15


def test_gram_report_rejects_non_square_input():
    with pytest.raises(ParameterOutOfRange):
        numerics.gram_report(np.ones((2, 3)))


def test_hermitian_extremes_on_a_diagonal_matrix():
    lo, hi = numerics.hermitian_extremes(np.diag([-2.0, 0.5, 7.0]))
    assert lo == -2.0 and hi == 7.0


# --------------------------------------------------------------------------
# Fourier conventions and closed-form identities
# --------------------------------------------------------------------------

def test_ft_unitary_gaussian_fixed_point():
    f = lambda p: math.exp(-0.5 * p * p)
    val = numerics.ft_unitary(f, 0.8)
    assert abs(val - GAUSS_FT_AT_08) < 1e-11


def test_lorentzian_normalization():
    val, _ = numerics.quad_real(lambda x: numerics.lorentzian(0.37, x),
                                -np.inf, np.inf)
    assert abs(val - 1.0) < 1e-10


def test_poisson_summation_defect_within_tail_bound():
    chk = numerics.poisson_summation_check(2.0, 1.3, 0.45, K=4000)
    assert abs(chk.rhs - PSUM_RHS) < 5e-16
    assert chk.defect <= chk.tail_bound
    assert chk.tail_bound < 1e-3


def test_poisson_summation_tail_shrinks_with_more_terms():
    loose = numerics.poisson_summation_check(2.0, 1.3, 0.45, K=100)
    tight = numerics.poisson_summation_check(2.0, 1.3, 0.45, K=10000)
    assert tight.tail_bound < loose.tail_bound
    assert tight.defect < loose.tail_bound


def test_poisson_summation_rejects_bad_parameters():
    with pytest.raises(ParameterOutOfRange):
        numerics.poisson_summation_check(-1.0, 1.0, 0.2, K=10)
    with pytest.raises(ParameterOutOfRange):
        numerics.poisson_summation_check(1.0, 0.0, 0.2, K=10)
    with pytest.raises(ParameterOutOfRange):
        numerics.poisson_summation_check(1.0, 1.0, 1.5, K=10)


def test_sech_ft_against_closed_form():
    chk = numerics.sech_ft_check(0.7)
    assert abs(chk.rhs - SECH_FT_AT_07) < 5e-16
    assert chk.defect < 1e-11


def test_sech2_ft_value_and_zero_limit():
    chk = numerics.sech2_ft_check(1.3)
    assert abs(chk.rhs - SECH2_FT_AT_13) < 5e-16
    assert chk.defect < 1e-11
    chk0 = numerics.sech2_ft_check(0.0)
    assert abs(chk0.rhs - math.sqrt(2.0 / math.pi)) < 1e-15
    assert chk0.defect < 1e-11


def test_sech_power_recursion_holds_for_small_n():
    for n in (1, 2, 3):
        chk = numerics.sech_power_recursion_check(n, 0.7)
        assert chk.defect < 1e-10


def test_sech_power_recursion_rejects_n_below_one():
    with pytest.raises(ParameterOutOfRange):
        numerics.sech_power_recursion_check(0, 0.7)


def test_ftcosh_matches_the_sinh_closed_form():
    chk = numerics.ftcosh_check(1.0, 0.6 + 0.9j)
    assert abs(chk.rhs - FTCOSH_RHS) < 5e-16
    assert chk.defect < 1e-10


def test_ftcosh_rejects_points_outside_the_strip_of_convergence():
    with pytest.raises(ParameterOutOfRange):
        numerics.ftcosh_check(1.0, 0.6 + 0.0j)
    with pytest.raises(ParameterOutOfRange):
        numerics.ftcosh_check(1.0, 0.6 + 2.0j)
    with pytest.raises(ParameterOutOfRange):
        numerics.ftcosh_check(1.0, 0.6 - 0.3j)
    with pytest.raises(ParameterOutOfRange):
        numerics.ftcosh_check(-1.0, 0.6 + 0.5j)


def test_hyperbolic_modulus_identities():
    for x, y in ((0.3, 1.1), (-2.0, 0.4), (5.0, -2.7), (0.0, 0.9)):
        s = numerics.sinh_abs_check(x, y)
        c = numerics.cosh_abs_check(x, y)
        assert s.defect <= 1e-12 * (1.0 + abs(s.lhs))
        assert c.defect <= 1e-12 * (1.0 + abs(c.lhs))
