"""Positive measures on the real line and the transforms that move them
between the positivity pictures.

A :class:`MeasureOnR` is a finite positive measure stored as a list of atoms
plus an optional density sampled on a uniform grid (integrated by the
trapezoid rule).  The two pictures are connected by the maps (beta > 0):

    gamma(mu) = mu + e_beta mu^vee            (mu supported on [0, inf)),
    Gamma(mu) = (mu + mu^vee) / (1 + e_{-beta}),

where mu^vee is the pushforward under lam -> -lam and e_c denotes the density
e^{c lam}.  They agree after the Markov reweighting M_kappa with
kappa(lam) = 1 / (1 + e^{-beta lam}):  gamma(M_kappa mu) = Gamma(mu).

A measure nu in the image satisfies the beta-reflection law
d nu(-lam) = e^{-beta lam} d nu(lam); :func:`reflection_check` measures the
relative defect.  Its Fourier transform

    nu_hat(z) = Integral e^{i z lam} d nu(lam)

is the bridge to the strip: nu_hat extends holomorphically to 0 < Im z < c
whenever e^{-c lam} is integrable at +infinity, the KMS boundary relation
nu_hat(i beta + t) = conj(nu_hat(t)) holds iff the reflection law does, and
K(z, w) = nu_hat(z - conj(w)) is a positive-definite reflection-invariant
kernel.  Two concrete 2 beta-reflected spectral densities reproduce the strip
kernels exactly,

    szego:    (1/2 pi)   d lam / (1 + e^{-2 beta lam})      -> (i/4 beta) / sinh(pi (z - conj w) / (2 beta)),
    bergman:  (1/4 pi^2) lam d lam / (1 - e^{-2 beta lam})  -> the squared kernel,

and the Riesz family d mu_s = p^{s-1} dp / GAMMA(s) on (0, inf) has
mu_s_hat(z) = (i/z)^s.  All numerical transforms are guarded by a divergence
monitor: if either 5% tail of the grid still contributes more than 1e-12 of
the total absolute mass of the summand, :class:`DivergentTransform` is raised
instead of returning a silently truncated value.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gamma as gamma_function

from .errors import (
    AsymmetricInput,
    AtomAtZero,
    DivergentTransform,
    NegativeSupport,
    ParameterOutOfRange,
    ZeroDenominator,
)
from .numerics import comp_sum, comp_sum_real, quad

_MERGE_TOL = 1e-12


# --------------------------------------------------------------------------
# the measure container
# --------------------------------------------------------------------------

@dataclass
class MeasureOnR:
    """Finite positive measure: atoms plus an optional gridded density.

    ``atom_locs`` / ``atom_weights`` are parallel arrays (sorted, weights > 0,
    locations closer than 1e-12 merged).  The density part lives on the
    uniform grid ``grid_x0 + h * arange(len(values))`` and is integrated with
    trapezoid weights (half weight at both ends).
    """

    atom_locs: np.ndarray = field(default_factory=lambda: np.empty(0))
    atom_weights: np.ndarray = field(default_factory=lambda: np.empty(0))
    grid_x0: float | None = None
    grid_h: float | None = None
    density: np.ndarray | None = None

    def __post_init__(self):
        self.atom_locs = np.asarray(self.atom_locs, dtype=float)
        self.atom_weights = np.asarray(self.atom_weights, dtype=float)
        if self.atom_locs.shape != self.atom_weights.shape:
            raise ParameterOutOfRange("atom arrays must be parallel")
        if np.any(self.atom_weights < 0.0):
            raise ParameterOutOfRange("atom weights must be nonnegative")
        order = np.argsort(self.atom_locs, kind="stable")
        self.atom_locs = self.atom_locs[order]
        self.atom_weights = self.atom_weights[order]
        self._merge_atoms()
        if self.density is not None:
            if self.grid_x0 is None or self.grid_h is None or self.grid_h <= 0:
                raise ParameterOutOfRange("gridded density needs x0 and h > 0")
            self.density = np.asarray(self.density, dtype=float)
            if self.density.ndim != 1 or self.density.size < 2:
                raise ParameterOutOfRange("density must be a 1-d array, >= 2 nodes")
            if np.any(self.density < 0.0):
                raise ParameterOutOfRange("density must be nonnegative")

    def _merge_atoms(self):
        if self.atom_locs.size == 0:
            return
        locs, weights = [], []
        for loc, w in zip(self.atom_locs, self.atom_weights):
            if locs and abs(loc - locs[-1]) <= _MERGE_TOL:
                weights[-1] += w
            else:
                locs.append(float(loc))
                weights.append(float(w))
        keep = [j for j, w in enumerate(weights) if w > 0.0]
        self.atom_locs = np.array([locs[j] for j in keep])
        self.atom_weights = np.array([weights[j] for j in keep])

    # -- basic geometry ----------------------------------------------------

    def grid_nodes(self) -> np.ndarray:
        if self.density is None:
            return np.empty(0)
        return self.grid_x0 + self.grid_h * np.arange(self.density.size)

    def grid_quad_weights(self) -> np.ndarray:
        """Trapezoid weights h * (1/2, 1, ..., 1, 1/2) times the density."""
        if self.density is None:
            return np.empty(0)
        w = np.full(self.density.size, self.grid_h)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w * self.density

    def total_mass(self) -> float:
        return comp_sum_real(self.atom_weights) + comp_sum_real(self.grid_quad_weights())

    def support_bounds(self) -> tuple[float, float]:
        los, his = [], []
        if self.atom_locs.size:
            los.append(float(self.atom_locs[0]))
            his.append(float(self.atom_locs[-1]))
        if self.density is not None:
            nodes = self.grid_nodes()
            live = np.nonzero(self.density > 0.0)[0]
            if live.size:
                los.append(float(nodes[live[0]]))
                his.append(float(nodes[live[-1]]))
        if not los:
            return (0.0, 0.0)
        return (min(los), max(his))

    def require_support(self, lo: float, hi: float):
        a, b = self.support_bounds()
        if a < lo - _MERGE_TOL or b > hi + _MERGE_TOL:
            raise NegativeSupport(
                "support [%g, %g] escapes the required interval [%g, %g]"
                % (a, b, lo, hi))

    def integrate(self, f) -> complex:
        """Integral of a numpy-vectorized function against the measure."""
        total = 0.0 + 0.0j
        if self.atom_locs.size:
            total += comp_sum(np.asarray(f(self.atom_locs)) * self.atom_weights)
        if self.density is not None:
            total += comp_sum(np.asarray(f(self.grid_nodes())) * self.grid_quad_weights())
        return total

    def map_density(self, factor) -> "MeasureOnR":
        """New measure with atoms and density multiplied pointwise by
        ``factor(lam)`` (vectorized, must be nonnegative on the support)."""
        atoms_w = self.atom_weights * np.asarray(factor(self.atom_locs), dtype=float) \
            if self.atom_locs.size else self.atom_weights.copy()
        dens = None
        if self.density is not None:
            dens = self.density * np.asarray(factor(self.grid_nodes()), dtype=float)
        return MeasureOnR(self.atom_locs.copy(), atoms_w,
                          self.grid_x0, self.grid_h, dens)

    def reflected(self) -> "MeasureOnR":
        """Pushforward under lam -> -lam."""
        dens = None
        x0 = h = None
        if self.density is not None:
            dens = self.density[::-1].copy()
            h = self.grid_h
            x0 = -(self.grid_x0 + self.grid_h * (self.density.size - 1))
        return MeasureOnR(-self.atom_locs[::-1], self.atom_weights[::-1].copy(),
                          x0, h, dens)

    def plus(self, other: "MeasureOnR") -> "MeasureOnR":
        """Sum of measures; gridded parts must share the same grid."""
        if (self.density is None) != (other.density is None):
            raise ParameterOutOfRange("cannot add gridded and atom-only densities")
        dens = x0 = h = None
        if self.density is not None:
            same = (abs(self.grid_x0 - other.grid_x0) <= _MERGE_TOL
                    and abs(self.grid_h - other.grid_h) <= _MERGE_TOL
                    and self.density.size == other.density.size)
            if not same:
                raise ParameterOutOfRange("grids must match to add densities")
            dens, x0, h = self.density + other.density, self.grid_x0, self.grid_h
        return MeasureOnR(np.concatenate([self.atom_locs, other.atom_locs]),
                          np.concatenate([self.atom_weights, other.atom_weights]),
                          x0, h, dens)

    # -- (de)serialization ---------------------------------------------------

    def to_json(self) -> str:
        obj = {"atoms": [[float(l), float(w)] for l, w
                         in zip(self.atom_locs, self.atom_weights)]}
        if self.density is not None:
            obj["density"] = {"x0": self.grid_x0, "h": self.grid_h,
                              "values": [float(v) for v in self.density]}
        return json.dumps(obj)

    @staticmethod
    def from_json(text: str) -> "MeasureOnR":
        obj = json.loads(text)
        atoms = obj.get("atoms", [])
        locs = np.array([a[0] for a in atoms], dtype=float)
        weights = np.array([a[1] for a in atoms], dtype=float)
        dens = obj.get("density")
        if dens is None:
            return MeasureOnR(locs, weights)
        return MeasureOnR(locs, weights, float(dens["x0"]), float(dens["h"]),
                          np.asarray(dens["values"], dtype=float))


def atomic(pairs) -> MeasureOnR:
    """Measure sum w_j delta_{lam_j} from (location, weight) pairs."""
    pairs = list(pairs)
    locs = np.array([p[0] for p in pairs], dtype=float)
    weights = np.array([p[1] for p in pairs], dtype=float)
    return MeasureOnR(locs, weights)


def gridded(x0: float, h: float, values) -> MeasureOnR:
    """Density measure on the uniform grid x0 + h * arange(len(values))."""
    return MeasureOnR(grid_x0=x0, grid_h=h, density=np.asarray(values, dtype=float))


# --------------------------------------------------------------------------
# the maps gamma, Gamma, M_kappa
# --------------------------------------------------------------------------

def _atom_index(mu: MeasureOnR, loc: float) -> int | None:
    hits = np.nonzero(np.abs(mu.atom_locs - loc) <= _MERGE_TOL)[0]
    return int(hits[0]) if hits.size else None


def gamma_map(mu: MeasureOnR, beta: float) -> MeasureOnR:
    """gamma(mu) = mu + e_beta mu^vee for mu supported on [0, inf).

    An atom w delta_lam with lam > 0 acquires the mirror atom
    w e^{-beta lam} delta_{-lam}; an atom at 0 doubles.  A density m(lam)
    extends to m(-lam) e^{-beta lam} on the negative axis; at the lone shared
    node lam = 0 the two branches agree (value m(0)), so nothing doubles.
    """
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    mu.require_support(0.0, math.inf)

    locs = list(mu.atom_locs)
    weights = list(mu.atom_weights)
    out_locs, out_weights = [], []
    for loc, w in zip(locs, weights):
        if abs(loc) <= _MERGE_TOL:
            out_locs.append(0.0)
            out_weights.append(2.0 * w)
        else:
            out_locs.extend([loc, -loc])
            out_weights.extend([w, w * math.exp(-beta * loc)])

    x0 = h = dens = None
    if mu.density is not None:
        nodes = mu.grid_nodes()
        if abs(nodes[0]) > _MERGE_TOL:
            raise ParameterOutOfRange(
                "density extension needs the grid to start at lam = 0")
        mirror = (mu.density * np.exp(-beta * nodes))[::-1]
        dens = np.concatenate([mirror[:-1], mu.density])
        h = mu.grid_h
        x0 = -float(nodes[-1])
    return MeasureOnR(np.asarray(out_locs), np.asarray(out_weights), x0, h, dens)


def Gamma_map(mu: MeasureOnR, beta: float) -> MeasureOnR:
    """Gamma(mu) = (mu + mu^vee) / (1 + e^{-beta lam}) for mu on [0, inf)."""
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    mu.require_support(0.0, math.inf)

    out_locs, out_weights = [], []
    for loc, w in zip(mu.atom_locs, mu.atom_weights):
        if abs(loc) <= _MERGE_TOL:
            out_locs.append(0.0)
            out_weights.append(w)       # (w + w) / (1 + 1)
        else:
            out_locs.extend([loc, -loc])
            out_weights.extend([w / (1.0 + math.exp(-beta * loc)),
                                w / (1.0 + math.exp(beta * loc))])

    x0 = h = dens = None
    if mu.density is not None:
        nodes = mu.grid_nodes()
        if abs(nodes[0]) > _MERGE_TOL:
            raise ParameterOutOfRange(
                "density extension needs the grid to start at lam = 0")
        full = np.concatenate([nodes[::-1][:-1] * -1.0, nodes])
        vals = np.concatenate([mu.density[::-1][:-1], mu.density])
        dens = vals / (1.0 + np.exp(-beta * full))
        h = mu.grid_h
        x0 = -float(nodes[-1])
    return MeasureOnR(np.asarray(out_locs), np.asarray(out_weights), x0, h, dens)


def markov_weight(beta: float, lam):
    """kappa(lam) = 1 / (1 + e^{-beta lam}), the reweighting with
    gamma(M_kappa mu) = Gamma(mu)."""
    return 1.0 / (1.0 + np.exp(-beta * np.asarray(lam, dtype=float)))


def M_kappa(mu: MeasureOnR, beta: float) -> MeasureOnR:
    return mu.map_density(lambda lam: markov_weight(beta, lam))


def Gamma_inverse(nu: MeasureOnR, beta: float) -> MeasureOnR:
    """Recover mu on [0, inf) from nu = Gamma(mu).

    Atoms: mu({lam}) = (1 + e^{-beta lam}) nu({lam}) for lam > 0, while an
    atom at 0 passes through unchanged (Gamma sends w delta_0 to w delta_0).
    Densities use the factor (1 + e^{-beta lam}) at every node including 0,
    where its value 2 undoes the halving m(0) -> m(0)/2 that continuity
    forces on the Gamma density at the origin."""
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    keep = nu.atom_locs > _MERGE_TOL
    locs = nu.atom_locs[keep]
    weights = nu.atom_weights[keep] * (1.0 + np.exp(-beta * locs))
    j0 = _atom_index(nu, 0.0)
    if j0 is not None:
        locs = np.concatenate([[0.0], locs])
        weights = np.concatenate([[nu.atom_weights[j0]], weights])

    x0 = h = dens = None
    if nu.density is not None:
        nodes = nu.grid_nodes()
        mask = nodes >= -_MERGE_TOL
        sub_nodes = nodes[mask]
        dens = nu.density[mask] * (1.0 + np.exp(-beta * sub_nodes))
        x0 = float(sub_nodes[0])
        h = nu.grid_h
    return MeasureOnR(locs, weights, x0, h, dens)


# --------------------------------------------------------------------------
# reflection law, Fourier transform, KMS
# --------------------------------------------------------------------------

def reflection_check(nu: MeasureOnR, beta: float, factor: float = 1.0) -> float:
    """Largest relative defect in  d nu(-lam) = e^{-factor * beta * lam} d nu(lam).

    Returns inf when the support itself is asymmetric (for example a bare
    delta_lam with no mirror atom).
    """
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    c = factor * beta
    worst = 0.0

    locs, weights = nu.atom_locs, nu.atom_weights
    for loc, w in zip(locs, weights):
        if loc < -_MERGE_TOL:
            continue
        j = _atom_index(nu, -loc)
        target = w * math.exp(-c * loc)
        mirror = weights[j] if j is not None else 0.0
        if target == 0.0 and mirror == 0.0:
            continue
        if target == 0.0 or (j is None and target > 0.0):
            return math.inf
        worst = max(worst, abs(mirror - target) / abs(target))
    for loc, w in zip(locs, weights):
        if loc < -_MERGE_TOL and _atom_index(nu, -loc) is None and w > 0.0:
            return math.inf

    if nu.density is not None:
        nodes = nu.grid_nodes()
        n = nodes.size
        if abs(nodes[0] + nodes[-1]) > 1e-9 * max(1.0, abs(nodes[-1])):
            return math.inf
        vals = nu.density
        pos = nodes > _MERGE_TOL
        lam = nodes[pos]
        right = vals[pos]
        left = vals[::-1][pos]          # value at -lam
        target = right * np.exp(-c * lam)
        both_zero = (target == 0.0) & (left == 0.0)
        bad = (target == 0.0) & ~both_zero
        if np.any(bad):
            return math.inf
        live = ~both_zero
        if np.any(live):
            worst = max(worst, float(np.max(
                np.abs(left[live] - target[live]) / np.abs(target[live]))))
    return worst


def fourier(nu: MeasureOnR, z: complex, monitor: bool = True) -> complex:
    """nu_hat(z) = Integral e^{i z lam} d nu(lam).

    With ``monitor`` on, the gridded part must have decayed: if either 5%
    tail of the grid contributes more than 1e-12 of the total absolute mass
    of the summand, :class:`DivergentTransform` is raised.
    """
    z = complex(z)
    total = 0.0 + 0.0j
    if nu.atom_locs.size:
        total += comp_sum(np.exp(1j * z * nu.atom_locs) * nu.atom_weights)
    if nu.density is not None:
        nodes = nu.grid_nodes()
        summand = np.exp(1j * z * nodes) * nu.grid_quad_weights()
        if monitor:
            mags = np.abs(summand)
            s = float(np.sum(mags))
            if s > 0.0:
                k = max(1, int(math.ceil(0.05 * mags.size)))
                head = float(np.sum(mags[:k]))
                tail = float(np.sum(mags[-k:]))
                if max(head, tail) > 1e-12 * s:
                    raise DivergentTransform(
                        "grid tails still carry %.3g of the transform mass at "
                        "z = %s; enlarge the grid" % (max(head, tail) / s, z))
        total += comp_sum(summand)
    return total


def laplace(nu: MeasureOnR, y: float, monitor: bool = True) -> float:
    """Laplace transform Integral e^{-y lam} d nu(lam) = nu_hat(i y)."""
    return fourier(nu, 1j * y, monitor=monitor).real


def kms_check(nu: MeasureOnR, beta: float, t_grid=None,
              monitor: bool = True) -> float:
    """max_t |nu_hat(i beta + t) - conj(nu_hat(t))| over the t grid."""
    if t_grid is None:
        t_grid = np.linspace(-4.0, 4.0, 33)
    worst = 0.0
    for t in t_grid:
        lhs = fourier(nu, 1j * beta + t, monitor=monitor)
        rhs = fourier(nu, t, monitor=monitor).conjugate()
        worst = max(worst, abs(lhs - rhs))
    return worst


def rp_circle_from_measure(mu: MeasureOnR, beta: float):
    """From mu on [0, inf), the pair of positive-definite functions

        phi_T(y) = Gamma(mu)_hat(i y)   on the circle of circumference beta,
        phi_R(x) = Gamma(mu)_hat(x)     on the line,

    returned as (phi_T, phi_R) callables."""
    nu = Gamma_map(mu, beta)
    return (lambda y: laplace(nu, y), lambda x: fourier(nu, x).real)


def kernel_from_measure(nu: MeasureOnR, z: complex, w: complex,
                        monitor: bool = True) -> complex:
    """K(z, w) = nu_hat(z - conj(w)) on the strip."""
    return fourier(nu, complex(z) - complex(w).conjugate(), monitor=monitor)


def theta_involution_check(nu: MeasureOnR, beta: float, pairs,
                           monitor: bool = True) -> float:
    """Invariance of K(z, w) = nu_hat(z - conj w) under the strip flip
    z -> beta i + conj(z) for a 2 beta-reflected nu:  checks
    |nu_hat(2 beta i - zeta) - nu_hat(zeta)| over zeta = z - conj(w)."""
    worst = 0.0
    for z, w in pairs:
        zeta = complex(z) - complex(w).conjugate()
        lhs = fourier(nu, 2j * beta - zeta, monitor=monitor)
        rhs = fourier(nu, zeta, monitor=monitor)
        worst = max(worst, abs(lhs - rhs))
    return worst


# --------------------------------------------------------------------------
# named spectral measures
# --------------------------------------------------------------------------

def szego_strip_measure(beta: float, halfwidth: float = None,
                        step: float = 0.02) -> MeasureOnR:
    """Spectral density (1/2 pi) / (1 + e^{-2 beta lam}) of the strip Szego
    kernel, sampled on a symmetric grid."""
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    if halfwidth is None:
        halfwidth = 64.0 / beta
    n = int(round(halfwidth / step))
    nodes = step * np.arange(-n, n + 1)
    dens = (1.0 / (2.0 * math.pi)) / (1.0 + np.exp(-2.0 * beta * nodes))
    return MeasureOnR(grid_x0=float(nodes[0]), grid_h=step, density=dens)


def bergman_strip_measure(beta: float, halfwidth: float = None,
                          step: float = 0.02) -> MeasureOnR:
    """Spectral density (1/4 pi^2) lam / (1 - e^{-2 beta lam}) of the squared
    kernel; the lam = 0 node takes the continuous value 1 / (8 pi^2 beta)."""
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    if halfwidth is None:
        halfwidth = 64.0 / beta
    n = int(round(halfwidth / step))
    nodes = step * np.arange(-n, n + 1)
    dens = np.empty(nodes.size)
    nz = nodes != 0.0
    dens[nz] = nodes[nz] / (-np.expm1(-2.0 * beta * nodes[nz]))
    dens[~nz] = 1.0 / (2.0 * beta)
    dens /= 4.0 * math.pi ** 2
    return MeasureOnR(grid_x0=float(nodes[0]), grid_h=step, density=dens)


def exp_tilt(mu: MeasureOnR, c: float) -> MeasureOnR:
    """Multiply the measure by the density e^{c lam}."""
    return mu.map_density(lambda lam: np.exp(c * np.asarray(lam, dtype=float)))


# --------------------------------------------------------------------------
# Riesz family
# --------------------------------------------------------------------------

def riesz_measure(s: float, lam_max: float, step: float) -> MeasureOnR:
    """Truncation of d mu_s = p^{s-1} dp / GAMMA(s) to (0, lam_max], sampled
    on the half-offset grid p = step/2, 3 step/2, ... (no node at the
    endpoint singularity when s < 1)."""
    if s <= 0.0:
        raise ParameterOutOfRange("need s > 0")
    n = int(round(lam_max / step))
    nodes = step * (0.5 + np.arange(n))
    dens = nodes ** (s - 1.0) / gamma_function(s)
    return MeasureOnR(grid_x0=float(nodes[0]), grid_h=step, density=dens)


def riesz_hat(s: float, z: complex) -> complex:
    """mu_s_hat(z) = (i / z)^s for Im z > 0 (principal power; the base lies
    in the right half-plane there)."""
    z = complex(z)
    if z.imag <= 0.0:
        raise ParameterOutOfRange("closed form needs Im z > 0")
    return (1j / z) ** s


def riesz_hat_quad(s: float, z: complex, tol: float = 1e-10) -> complex:
    """mu_s_hat(z) by adaptive quadrature of p^{s-1} e^{izp} / GAMMA(s) over
    (0, inf), avoiding the O(step^s) first-cell error a uniform grid makes
    for s < 1.  The endpoint singularity is flattened by p = q^m on (0, 1]
    and the tail truncated where e^{-Im z * p} is below roundoff."""
    if s <= 0.0:
        raise ParameterOutOfRange("need s > 0")
    z = complex(z)
    if z.imag <= 0.0:
        raise ParameterOutOfRange("transform needs Im z > 0")
    g = gamma_function(s)
    m = max(2, math.ceil(2.0 / s))  # makes the q-exponent m*s - 1 >= 1
    head, _ = quad(lambda q: m * q ** (m * s - 1.0)
                   * cmath.exp(1j * z * q ** m) / g, 0.0, 1.0, tol=tol)
    upper = 1.0 + 60.0 / z.imag
    tail, _ = quad(lambda p: p ** (s - 1.0) * cmath.exp(1j * z * p) / g,
                   1.0, upper, tol=tol)
    return head + tail


def nu_s_measure(s: float, beta: float, lam_max: float, step: float) -> MeasureOnR:
    """The 2 beta-reflected companion of the Riesz measure,

        d nu_s(p) = (1/GAMMA(s)) |p|^{s-2} p / (1 - e^{-2 beta p}) dp,

    truncated symmetrically and sampled on the half-offset grid (+- step/2,
    +- 3 step/2, ...); the density is positive on both half-lines."""
    if s <= 0.0 or beta <= 0.0:
        raise ParameterOutOfRange("need s > 0 and beta > 0")
    n = int(round(lam_max / step))
    pos = step * (0.5 + np.arange(n))
    nodes = np.concatenate([-pos[::-1], pos])
    dens = np.abs(nodes) ** (s - 1.0) * np.sign(nodes) \
        / (-np.expm1(-2.0 * beta * nodes)) / gamma_function(s)
    return MeasureOnR(grid_x0=float(nodes[0]), grid_h=step, density=dens)


def riesz_kappa_check(s: float, beta: float, t: float,
                      lam_max: float = 40.0, step: float = 0.01) -> float:
    """Matched-truncation identity for the odd part of the Riesz transforms.

    The pointwise density algebra gives, for p > 0,

        nu_s(p) - nu_s(-p) = p^{s-1} / GAMMA(s)  =  mu_s density,

    so with one positive node set {p_j} (half-offset grid, plain weight
    ``step`` per node) the antisymmetrized sums

        A = sum_j v_j [nu_s(p_j) - nu_s(-p_j)] (e^{i t p_j} - e^{-i t p_j}),
        B = sum_j v_j mu_s(p_j) (e^{i t p_j} - e^{-i t p_j})
          = 2 i Im(truncated mu_s_hat(t))

    agree exactly; the defect |A - B| is pure floating-point noise.  (Each
    transform alone diverges on the real axis; only the difference is a
    measure-theoretic object, which is why the comparison is made at matched
    symmetric truncation rather than through the monitored transforms.)
    """
    if s <= 0.0 or beta <= 0.0:
        raise ParameterOutOfRange("need s > 0 and beta > 0")
    n = int(round(lam_max / step))
    p = step * (0.5 + np.arange(n))
    v = np.full(n, step)
    dens_mu = p ** (s - 1.0) / gamma_function(s)
    dens_plus = p ** (s - 1.0) / (-np.expm1(-2.0 * beta * p)) / gamma_function(s)
    dens_minus = p ** (s - 1.0) / (np.expm1(2.0 * beta * p)) / gamma_function(s)
    osc = np.exp(1j * t * p) - np.exp(-1j * t * p)
    a = comp_sum(v * (dens_plus - dens_minus) * osc)
    b = comp_sum(v * dens_mu * osc)
    return abs(a - b)


# --------------------------------------------------------------------------
# geometric splitting
# --------------------------------------------------------------------------

def geometric_splitting(mu: MeasureOnR, beta: float, mode: str):
    """Split a symmetric measure mu into a 2 beta-reflected nu and its
    positive / negative halves, nu = nu_plus + nu_minus.

    mode "alternating":  d nu = d mu / (1 + e^{-2 beta lam});
    mode "plain":        d nu = sgn(lam) d mu / (1 - e^{-2 beta lam}),
                         which has a pole at lam = 0: an atom there raises
                         :class:`AtomAtZero`, a grid node there raises
                         :class:`ZeroDenominator` (use a half-offset grid).

    An atom of mu at 0 contributes half its nu-weight to each half in the
    alternating mode.  Gridded mu must use a symmetric grid without a node at
    the origin; the halves of its nu come back as atomic measures carrying
    the parent trapezoid weights, so the splitting is exact at the
    quadrature level (a standalone half-grid would halve the weight of the
    innermost node and break nu = nu_plus + nu_minus).
    """
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    if mode not in ("alternating", "plain"):
        raise ParameterOutOfRange("mode must be 'alternating' or 'plain'")

    if _symmetry_defect(mu) > 1e-9:
        raise AsymmetricInput("geometric splitting needs a symmetric measure")

    locs, weights = mu.atom_locs, mu.atom_weights
    at_zero = _atom_index(mu, 0.0)
    if mode == "plain" and at_zero is not None and weights[at_zero] > 0:
        raise AtomAtZero("the plain splitting density has a pole at lam = 0")

    if mode == "alternating":
        f = lambda lam: 1.0 / (1.0 + np.exp(-2.0 * beta * lam))
    else:
        f = lambda lam: np.sign(lam) / (-np.expm1(-2.0 * beta * lam))

    if mu.density is not None:
        nodes = mu.grid_nodes()
        if np.any(np.abs(nodes) <= _MERGE_TOL):
            raise ZeroDenominator(
                "splitting a gridded measure needs a grid without the node 0")

    nu = mu.map_density(f)

    plus_locs = nu.atom_locs > _MERGE_TOL
    minus_locs = nu.atom_locs < -_MERGE_TOL
    p_l, p_w = list(nu.atom_locs[plus_locs]), list(nu.atom_weights[plus_locs])
    m_l, m_w = list(nu.atom_locs[minus_locs]), list(nu.atom_weights[minus_locs])
    if at_zero is not None and mode == "alternating":
        half = 0.5 * nu.atom_weights[_atom_index(nu, 0.0)]
        p_l.append(0.0), p_w.append(half)
        m_l.append(0.0), m_w.append(half)

    if nu.density is not None:
        nodes = nu.grid_nodes()
        qw = nu.grid_quad_weights()
        for positive, locs_out, w_out in ((True, p_l, p_w), (False, m_l, m_w)):
            mask = nodes > _MERGE_TOL if positive else nodes < -_MERGE_TOL
            locs_out.extend(nodes[mask])
            w_out.extend(qw[mask])

    nu_plus = MeasureOnR(np.asarray(p_l), np.asarray(p_w))
    nu_minus = MeasureOnR(np.asarray(m_l), np.asarray(m_w))
    return nu, nu_plus, nu_minus


def _symmetry_defect(mu: MeasureOnR) -> float:
    """Relative defect of mu under lam -> -lam."""
    worst = 0.0
    for loc, w in zip(mu.atom_locs, mu.atom_weights):
        j = _atom_index(mu, -loc)
        mirror = mu.atom_weights[j] if j is not None else 0.0
        if w == 0.0 and mirror == 0.0:
            continue
        if w == 0.0 or mirror == 0.0:
            return math.inf
        worst = max(worst, abs(mirror - w) / abs(w))
    if mu.density is not None:
        nodes = mu.grid_nodes()
        if abs(nodes[0] + nodes[-1]) > 1e-9 * max(1.0, abs(nodes[-1])):
            return math.inf
        vals = mu.density
        rev = vals[::-1]
        scale = float(np.max(np.abs(vals))) or 1.0
        worst = max(worst, float(np.max(np.abs(vals - rev))) / scale)
    return worst
