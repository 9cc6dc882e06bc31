"""Modular pair (Delta, J): algebra, standard vectors, coefficient functions."""

import cmath
import math

import numpy as np
import pytest

from rphardy import measures, modular
from rphardy.errors import ParameterOutOfRange, ReflectionViolation


def _setup(beta=1.0):
    mu = measures.atomic([(0.6, 1.0), (1.7, 0.4), (2.9, 0.8), (0.0, 0.5)])
    nu = measures.Gamma_map(mu, beta)
    return modular.build_modular(nu, beta)


def test_space_from_measure_merges_and_mirrors():
    nu = measures.atomic([(0.7, 0.4), (-0.7, 0.6), (0.0, 1.0)])
    space = modular.DiscretizedSpace.from_measure(nu)
    assert list(space.nodes) == [-0.7, 0.0, 0.7]
    assert np.allclose(space.nodes[space.mirror], -space.nodes)
    # mirror is an involution
    assert np.array_equal(space.mirror[space.mirror], np.arange(3))


def test_space_rejects_asymmetric_node_set():
    nu = measures.atomic([(0.7, 0.4), (1.9, 0.6)])
    with pytest.raises(ParameterOutOfRange):
        modular.DiscretizedSpace.from_measure(nu)


def test_inner_is_positive_definite():
    md = _setup()
    rng = np.random.default_rng(41)
    for _ in range(5):
        v = md.space.random_vector(rng)
        n2 = md.space.inner(v, v).real
        assert n2 > 0.0
        assert abs(md.space.norm(v) - math.sqrt(n2)) < 1e-15


def test_build_modular_requires_reflected_measure():
    raw = measures.atomic([(0.7, 1.0), (-0.7, 1.0)])
    with pytest.raises(ReflectionViolation):
        modular.build_modular(raw, 1.0)


def test_delta_and_j_algebra():
    md = _setup()
    rng = np.random.default_rng(42)
    assert modular.j_involution_defect(md, rng) < 1e-14
    assert modular.jdj_defect(md, rng) < 1e-13
    assert modular.flow_unitarity_defect(md, rng) < 1e-13


def test_delta_inverse_undoes_delta():
    md = _setup()
    rng = np.random.default_rng(43)
    v = md.space.random_vector(rng)
    w = md.delta_inverse_apply(md.delta_apply(v))
    assert np.max(np.abs(w - v)) < 1e-14


def test_delta_power_at_minus_i_beta_is_delta():
    # Delta^{-it/beta} at t = i beta multiplies by e^{-beta lam}
    md = _setup()
    rng = np.random.default_rng(44)
    v = md.space.random_vector(rng)
    lhs = md.delta_power_apply(1j * md.beta, v)
    rhs = md.delta_apply(v)
    assert np.max(np.abs(lhs - rhs)) < 1e-14


def test_standard_vectors_are_j_fixed():
    md = _setup()
    rng = np.random.default_rng(45)
    for _ in range(5):
        v = md.space.random_standard_vector(rng)
        assert modular.standard_membership(md.space, v) < 1e-15
        w = md.j_apply(md.delta_power_apply(0.5j * md.beta, v))
        # J Delta^{1/2} fixes the standard cone's real subspace members:
        # J Delta^{1/2} v = v for v(lam) = conj(v(-lam))
        assert np.max(np.abs(w - v)) < 1e-13


def test_modular_coefficient_is_positive_definite_and_kms():
    md = _setup()
    rng = np.random.default_rng(46)
    v = md.space.random_standard_vector(rng)
    ts = np.linspace(-3.0, 3.0, 13)
    G = np.array([[modular.modular_coefficient(md, v, t1 - t2)
                   for t2 in ts] for t1 in ts])
    eig = np.linalg.eigvalsh(0.5 * (G + G.conj().T))
    assert eig.min() >= -1e-12 * max(1.0, eig.max())
    # KMS boundary relation psi(i beta + t) = conj(psi(t))
    for t in (-1.3, 0.0, 0.8):
        lhs = modular.modular_coefficient(md, v, 1j * md.beta + t)
        rhs = modular.modular_coefficient(md, v, t).conjugate()
        assert abs(lhs - rhs) < 1e-13


def test_coefficient_measure_matches_psi():
    md = _setup()
    rng = np.random.default_rng(47)
    v = md.space.random_standard_vector(rng)
    cm = modular.coefficient_measure(md, v)
    for t in (0.0, 0.7, -2.1):
        assert abs(measures.fourier(cm, t, monitor=False)
                   - modular.modular_coefficient(md, v, t)) < 1e-14


@pytest.mark.parametrize("beta,t", [(1.0, 0.0), (1.0, 0.7), (2.5, -1.3)])
def test_psi_hardy_midline_two_forms_agree(beta, t):
    chk = modular.psi_hardy_midline(beta, t)
    assert chk.defect < 1e-10


def test_commutation_compatible_translation_is_exact():
    L, n = 4.0, 256
    t = 3.0 * 2.0 * math.pi / L
    rep = modular.commutation_check(L, n, 0.7, t)
    assert rep.wrap_phase < 1e-12
    assert rep.global_defect < 1e-12


def test_commutation_generic_translation_interior_exact():
    rep = modular.commutation_check(4.0, 256, 0.7, 1.234)
    assert rep.interior_defect < 1e-13
    assert rep.n_wrapped > 0
    assert rep.global_defect <= rep.wrap_phase + 1e-13
