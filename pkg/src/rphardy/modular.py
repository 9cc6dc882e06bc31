"""Finite-dimensional modular data (Delta, J) attached to a beta-reflected
spectral measure, and the associated dynamical checks.

A measure nu with d nu(-lam) = e^{-beta lam} d nu(lam) is discretized into a
weighted node space (:class:`DiscretizedSpace`, nodes symmetric under
lam -> -lam).  On it:

    (Delta v)(lam) = e^{-beta lam} v(lam)            (positive, self-adjoint),
    (J v)(lam)     = e^{-beta lam / 2} conj(v(-lam)) (antilinear),

and the algebraic relations hold to rounding accuracy:

    J^2 = 1,    J Delta J = Delta^{-1},    Delta^{-it/beta} v = e^{i t lam} v.

The standard subspace V consists of the vectors with v(lam) = conj(v(-lam));
membership is J Delta^{1/2}-invariance spelled out on nodes.  For v in V the
coefficient function

    psi(t) = <v, Delta^{-it/beta} v> = sum_j |v_j|^2 e^{i t lam_j} w_j

is positive definite and satisfies the KMS boundary relation
psi(i beta + t) = conj(psi(t)), inherited from the reflection law of the
spectral measure |v|^2 d nu.

:func:`psi_hardy_midline` cross-checks the two integral representations of
the coefficient function of the canonical midline vector over the Szego
spectral density,

    (1/4 pi) Integral e^{-beta lam / 2} (1 + e^{-beta lam})^{-2} e^{i t lam} d lam
  = (1/2 pi) Integral e^{-beta lam} (1 + e^{-2 beta lam})^{-2} e^{2 i t lam} d lam,

equal exactly (substitute lam -> lam / 2 in the second integral).

:func:`commutation_check` realizes the Weyl pair on a periodic grid:
U_t = multiplication by e^{i t x} and V_s = translation by s (arguments
wrapped into the period), so U_t V_s = e^{i t s} V_s U_t holds exactly at
every node whose translate stays inside the fundamental window, while a
wrapped node picks up the phase defect |e^{i t L m} - 1| (m the wrap count);
the check reports both and the defect vanishes when t L is a multiple of
2 pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterOutOfRange, ReflectionViolation
from .measures import MeasureOnR, reflection_check
from .numerics import IdentityCheck, comp_sum, oscillatory_ft

_MERGE_TOL = 1e-12


# --------------------------------------------------------------------------
# discretized space and modular pair
# --------------------------------------------------------------------------

@dataclass
class DiscretizedSpace:
    """Weighted nodes (lam_j, w_j), w_j > 0, with the node set symmetric
    under lam -> -lam; ``mirror[j]`` is the index of -lam_j."""

    nodes: np.ndarray
    weights: np.ndarray
    mirror: np.ndarray

    @staticmethod
    def from_measure(nu: MeasureOnR) -> "DiscretizedSpace":
        nodes_list, weights_list = [], []
        if nu.atom_locs.size:
            nodes_list.append(nu.atom_locs)
            weights_list.append(nu.atom_weights)
        if nu.density is not None:
            nodes_list.append(nu.grid_nodes())
            weights_list.append(nu.grid_quad_weights())
        nodes = np.concatenate(nodes_list)
        weights = np.concatenate(weights_list)
        order = np.argsort(nodes, kind="stable")
        nodes, weights = nodes[order], weights[order]
        if np.any(weights <= 0.0):
            raise ParameterOutOfRange("discretization needs strictly positive weights")
        mirror = np.empty(nodes.size, dtype=int)
        for j, lam in enumerate(nodes):
            hits = np.nonzero(np.abs(nodes + lam) <= 1e-9 * max(1.0, abs(lam)))[0]
            if hits.size != 1:
                raise ParameterOutOfRange(
                    "node set must be symmetric with distinct nodes")
            mirror[j] = hits[0]
        return DiscretizedSpace(nodes, weights, mirror)

    @property
    def dim(self) -> int:
        return self.nodes.size

    def inner(self, v, u) -> complex:
        """<v, u> = sum conj(v_j) u_j w_j."""
        return comp_sum(np.conjugate(np.asarray(v)) * np.asarray(u) * self.weights)

    def norm(self, v) -> float:
        return math.sqrt(max(0.0, self.inner(v, v).real))

    def random_vector(self, rng) -> np.ndarray:
        return rng.standard_normal(self.dim) + 1j * rng.standard_normal(self.dim)

    def random_standard_vector(self, rng) -> np.ndarray:
        """Random element of the standard subspace: v(lam) = conj(v(-lam))."""
        v = self.random_vector(rng)
        return 0.5 * (v + np.conjugate(v[self.mirror]))


@dataclass
class ModularData:
    """The pair (Delta, J) over a discretized beta-reflected measure."""

    space: DiscretizedSpace
    beta: float

    def delta_apply(self, v) -> np.ndarray:
        return np.exp(-self.beta * self.space.nodes) * np.asarray(v)

    def delta_inverse_apply(self, v) -> np.ndarray:
        return np.exp(self.beta * self.space.nodes) * np.asarray(v)

    def delta_power_apply(self, t: float, v) -> np.ndarray:
        """Delta^{-i t / beta} v = e^{i t lam} v (the modular flow)."""
        return np.exp(1j * t * self.space.nodes) * np.asarray(v)

    def j_apply(self, v) -> np.ndarray:
        v = np.asarray(v)
        return np.exp(-0.5 * self.beta * self.space.nodes) \
            * np.conjugate(v[self.space.mirror])


def build_modular(nu: MeasureOnR, beta: float,
                  reflection_tol: float = 1e-10) -> ModularData:
    """Discretize nu and attach (Delta, J); nu must satisfy the
    beta-reflection law to within ``reflection_tol`` or
    :class:`ReflectionViolation` is raised."""
    defect = reflection_check(nu, beta)
    if not defect <= reflection_tol:
        raise ReflectionViolation(
            "measure violates the beta-reflection law (defect %.3g)" % defect)
    return ModularData(DiscretizedSpace.from_measure(nu), beta)


# --------------------------------------------------------------------------
# algebraic checks
# --------------------------------------------------------------------------

def j_involution_defect(md: ModularData, rng, n_vectors: int = 5) -> float:
    """max relative defect of J^2 = 1 on random vectors."""
    worst = 0.0
    for _ in range(n_vectors):
        v = md.space.random_vector(rng)
        jjv = md.j_apply(md.j_apply(v))
        worst = max(worst, float(np.max(np.abs(jjv - v)))
                    / float(np.max(np.abs(v))))
    return worst


def jdj_defect(md: ModularData, rng, n_vectors: int = 5) -> float:
    """max relative defect of J Delta J = Delta^{-1} on random vectors,
    measured entrywise against the entries of Delta^{-1} v."""
    worst = 0.0
    for _ in range(n_vectors):
        v = md.space.random_vector(rng)
        lhs = md.j_apply(md.delta_apply(md.j_apply(v)))
        rhs = md.delta_inverse_apply(v)
        scale = np.abs(rhs)
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / scale)))
    return worst


def flow_unitarity_defect(md: ModularData, rng, t_values=(0.7, -2.3, 11.0),
                          n_vectors: int = 3) -> float:
    """max relative defect of ||Delta^{-it/beta} v|| = ||v||."""
    worst = 0.0
    for _ in range(n_vectors):
        v = md.space.random_vector(rng)
        n0 = md.space.norm(v)
        for t in t_values:
            n1 = md.space.norm(md.delta_power_apply(t, v))
            worst = max(worst, abs(n1 - n0) / n0)
    return worst


def standard_membership(space: DiscretizedSpace, v) -> float:
    """Defect of v from the standard subspace: max |v_j - conj(v_{-j})|."""
    v = np.asarray(v)
    return float(np.max(np.abs(v - np.conjugate(v[space.mirror]))))


def modular_coefficient(md: ModularData, v, t: complex) -> complex:
    """psi(t) = <v, Delta^{-it/beta} v>, evaluated for complex t as the
    transform sum |v_j|^2 e^{i t lam_j} w_j (t = i beta gives the KMS dual)."""
    v = np.asarray(v)
    return comp_sum(np.abs(v) ** 2 * np.exp(1j * complex(t) * md.space.nodes)
                    * md.space.weights)


def coefficient_measure(md: ModularData, v) -> MeasureOnR:
    """The spectral measure |v|^2 d nu of psi, as an atomic measure; for
    v in the standard subspace it inherits the beta-reflection law."""
    v = np.asarray(v)
    return MeasureOnR(md.space.nodes.copy(), np.abs(v) ** 2 * md.space.weights)


# --------------------------------------------------------------------------
# the midline coefficient function, two ways
# --------------------------------------------------------------------------

def psi_hardy_midline(beta: float, t: float, tol: float = 1e-10) -> IdentityCheck:
    """Two integral forms of the midline coefficient function (equal exactly
    by the substitution lam -> lam / 2 in the second)."""
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")

    # e^{-x} (1 + e^{-2x})^{-2} = e^{x} / (2 cosh x)^2; evaluating through
    # log(2 cosh x) = |x| + log1p(e^{-2|x|}) keeps both tails finite.
    def envelope(x):
        if not math.isfinite(x):
            return 0.0
        return math.exp(x - 2.0 * (abs(x) + math.log1p(math.exp(-2.0 * abs(x)))))

    a = oscillatory_ft(lambda lam: envelope(0.5 * beta * lam), t, tol=tol)
    b = oscillatory_ft(lambda lam: envelope(beta * lam), 2.0 * t, tol=tol)
    a /= 4.0 * math.pi
    b /= 2.0 * math.pi
    return IdentityCheck(a, b, abs(a - b))


# --------------------------------------------------------------------------
# Weyl commutation on a periodic grid
# --------------------------------------------------------------------------

@dataclass
class CommutationReport:
    """Node-wise defects of the Weyl relation V_s U_t = e^{i t s} U_t V_s
    on the periodic grid."""

    global_defect: float      # max over all nodes
    interior_defect: float    # max over nodes whose translate does not wrap
    wrap_phase: float         # |e^{i t L} - 1|, the single-wrap phase defect
    n_wrapped: int


def commutation_check(beta_length: float, n_nodes: int, s: float, t: float,
                      test_width: float = None) -> CommutationReport:
    """Realize U_t (multiplication by e^{itx}) and V_s (translation by s,
    arguments wrapped into [-L/2, L/2)) on the grid of n_nodes points over a
    period L = beta_length, applied to a periodized Gaussian test function;
    reports the node-wise defect of V_s U_t = e^{its} U_t V_s."""
    L = float(beta_length)
    if L <= 0.0 or n_nodes < 2:
        raise ParameterOutOfRange("need a positive period and >= 2 nodes")
    h = L / n_nodes
    x = -L / 2.0 + h * np.arange(n_nodes)
    width = test_width if test_width is not None else L / 6.0

    def wrap(u):
        return u - L * np.round(u / L)

    f = lambda u: np.exp(-(wrap(u) / width) ** 2)

    shifted = x + s
    wrapped = wrap(shifted)
    m = np.round((shifted - wrapped) / L).astype(int)

    lhs = np.exp(1j * t * wrapped) * f(shifted)          # (V_s U_t f)(x)
    rhs = np.exp(1j * t * s) * np.exp(1j * t * x) * f(shifted)  # e^{its} (U_t V_s f)(x)
    defect = np.abs(lhs - rhs)

    interior = m == 0
    interior_defect = float(np.max(defect[interior])) if np.any(interior) else 0.0
    return CommutationReport(
        global_defect=float(np.max(defect)),
        interior_defect=interior_defect,
        wrap_phase=abs(np.exp(1j * t * L) - 1.0),
        n_wrapped=int(np.sum(~interior)),
    )
