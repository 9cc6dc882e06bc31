"""Reflection-positive function families on the integers, the line, and the
circle of circumference beta, together with their positivity certificates.

The three basic families (lam is the spectral parameter):

* integers:  phi_lam(n) = lam^{|n|},            lam in [-1, 1];
* line:      phi_lam(t) = e^{-lam |t|},         lam >= 0;
* circle:    phi_lam([y]) = (e^{-y lam} + e^{-(beta - y) lam}) / (1 + e^{-beta lam}),
             y reduced mod beta, lam >= 0.

The circle family has the explicit Fourier coefficients

    c_n = (1/pi) * s / (s^2 + n^2) * (1 - e^{-beta lam}) / (1 + e^{-beta lam}),
    s = beta lam / (2 pi),

all nonnegative, which is the positive-definiteness certificate made concrete;
``phi_circle_partial_sum`` resums them for convergence tests.

Positivity is checked two ways: ``pd_gram`` builds the group Gram
phi(g_j - g_k) for samples anywhere on the group, while ``rp_gram`` builds the
reflected Gram phi(s_j + s_k) for samples in the positive semigroup
(nonnegative integers / half-line / the arc (0, beta/2)).

The strip enters through the functions c_t and g_t:

    c_t(z) = (e^{itz} + e^{-beta t} e^{-itz}) / (1 + e^{-beta t}),
    g_t(z) = e^{t beta / 2} e^{itz},

with sup_strip |c_t| = 1, c_t(0) = 1, and the membership characterization
``z interior to the strip  iff  |c_t(z)| < 1 for all t > 0`` implemented by
:func:`strip_membership` on a logarithmic t-grid (boundary points get an exact
unimodularity witness t = 2 pi / |Re z|).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterOutOfRange, SampleOutsidePositiveCone
from .numerics import GramReport, comp_sum_real, gram_report

GROUPS = ("integers", "line", "circle")


def _check_group(group: str) -> str:
    if group not in GROUPS:
        raise ParameterOutOfRange("group must be one of %r" % (GROUPS,))
    return group


# --------------------------------------------------------------------------
# the three families
# --------------------------------------------------------------------------

def phi_int(lam: float, n: int) -> float:
    """lam^{|n|} on the integers; lam in [-1, 1]."""
    if not -1.0 <= lam <= 1.0:
        raise ParameterOutOfRange("integer family needs lam in [-1, 1]")
    n = abs(int(n))
    if lam == 0.0:
        return 1.0 if n == 0 else 0.0
    return float(lam ** n)


def phi_line(lam: float, t: float) -> float:
    """e^{-lam |t|} on the line; lam >= 0."""
    if lam < 0.0:
        raise ParameterOutOfRange("line family needs lam >= 0")
    return math.exp(-lam * abs(t))


def reduce_mod(y: float, beta: float) -> float:
    """Canonical representative of y in [0, beta)."""
    r = math.fmod(y, beta)
    return r + beta if r < 0.0 else r


def phi_circle(beta: float, lam: float, y: float) -> float:
    """The circle family at the class [y]; beta > 0, lam >= 0."""
    if beta <= 0.0:
        raise ParameterOutOfRange("circle needs beta > 0")
    if lam < 0.0:
        raise ParameterOutOfRange("circle family needs lam >= 0")
    y = reduce_mod(y, beta)
    return ((math.exp(-y * lam) + math.exp(-(beta - y) * lam))
            / (1.0 + math.exp(-beta * lam)))


def phi_circle_fourier(beta: float, lam: float, n: int) -> float:
    """Fourier coefficient c_n of the circle family (all nonnegative).

    For lam = 0 the family degenerates to the constant 1: c_0 = 1, c_n = 0.
    """
    if beta <= 0.0:
        raise ParameterOutOfRange("circle needs beta > 0")
    if lam < 0.0:
        raise ParameterOutOfRange("circle family needs lam >= 0")
    if lam == 0.0:
        return 1.0 if n == 0 else 0.0
    s = beta * lam / (2.0 * math.pi)
    lorentz = s / (math.pi * (s * s + float(n) ** 2))
    ratio = -math.expm1(-beta * lam) / (1.0 + math.exp(-beta * lam))
    return lorentz * ratio


def phi_circle_partial_sum(beta: float, lam: float, y: float, N: int) -> float:
    """Resummation  sum_{|n| <= N} c_n e^{2 pi i n y / beta}  (real by symmetry)."""
    n = np.arange(1, N + 1, dtype=float)
    if lam == 0.0:
        return 1.0
    s = beta * lam / (2.0 * math.pi)
    ratio = -math.expm1(-beta * lam) / (1.0 + math.exp(-beta * lam))
    coeffs = ratio * s / (math.pi * (s * s + n * n))
    terms = 2.0 * coeffs * np.cos(2.0 * math.pi * n * y / beta)
    c0 = ratio / (math.pi * s)
    return c0 + comp_sum_real(terms)


def rp_family_eval(group: str, mixing, g, beta: float = None) -> float:
    """Mix a family over its spectral parameter:  Integral phi_lam(g) d mu(lam).

    ``mixing`` is a :class:`rphardy.measures.MeasureOnR`; its support must lie
    in [-1, 1] for the integers and in [0, inf) for the line and the circle.
    """
    _check_group(group)
    lo, hi = (-1.0, 1.0) if group == "integers" else (0.0, math.inf)
    mixing.require_support(lo, hi)

    if group == "integers":
        f = lambda lam: np.asarray(lam, dtype=float) ** abs(int(g))
    elif group == "line":
        f = lambda lam: np.exp(-np.asarray(lam, dtype=float) * abs(g))
    else:
        if beta is None:
            raise ParameterOutOfRange("circle evaluation needs beta")
        y = reduce_mod(float(g), beta)

        def f(lam):
            lam = np.asarray(lam, dtype=float)
            return ((np.exp(-y * lam) + np.exp(-(beta - y) * lam))
                    / (1.0 + np.exp(-beta * lam)))

    return float(mixing.integrate(f).real)


# --------------------------------------------------------------------------
# Gram certificates
# --------------------------------------------------------------------------

def _phi_of(group, beta, lam):
    if group == "integers":
        return lambda g: phi_int(lam, g)
    if group == "line":
        return lambda g: phi_line(lam, g)
    return lambda g: phi_circle(beta, lam, g)


def pd_gram(group: str, lam: float, samples, beta: float = None,
            tolerance: float = 1e-10) -> GramReport:
    """Gram matrix phi(g_j - g_k) over arbitrary group samples (mod beta on
    the circle); PSD verdict certifies positive definiteness on the group."""
    _check_group(group)
    phi = _phi_of(group, beta, lam)
    xs = list(samples)
    n = len(xs)
    G = np.empty((n, n))
    for j in range(n):
        for k in range(n):
            G[j, k] = phi(xs[j] - xs[k])
    return gram_report(G, tolerance)


def rp_gram(group: str, lam: float, samples, beta: float = None,
            tolerance: float = 1e-10) -> GramReport:
    """Reflected Gram phi(s_j + s_k) over positive-semigroup samples.

    The admissible cones: nonnegative integers, the half-line [0, inf), and
    the open arc (0, beta/2) on the circle; anything else raises
    :class:`SampleOutsidePositiveCone`.
    """
    _check_group(group)
    xs = list(samples)
    for s in xs:
        if group == "integers" and (int(s) != s or s < 0):
            raise SampleOutsidePositiveCone("integer cone is n >= 0, got %r" % (s,))
        if group == "line" and s < 0:
            raise SampleOutsidePositiveCone("line cone is t >= 0, got %r" % (s,))
        if group == "circle" and not 0.0 < s < beta / 2.0:
            raise SampleOutsidePositiveCone(
                "circle cone is the open arc (0, beta/2), got %r" % (s,))
    phi = _phi_of(group, beta, lam)
    n = len(xs)
    G = np.empty((n, n))
    for j in range(n):
        for k in range(n):
            G[j, k] = phi(xs[j] + xs[k])
    return gram_report(G, tolerance)


def param_rp_check(n: int, samples, tolerance: float = 1e-10) -> GramReport:
    """Gram of the signed power family p_n(t, eps) = eps^n e^{-n |t|} on the
    group R x {+1, -1} with the flip involution: entries

        K_{jk} = p_n(g_j g_k^{-1}) = (eps_j eps_k)^n e^{-n |t_j - t_k|}.
    """
    if n < 0 or int(n) != n:
        raise ParameterOutOfRange("power must be a nonnegative integer")
    pts = [(float(t), int(e)) for (t, e) in samples]
    for _, e in pts:
        if e not in (-1, 1):
            raise ParameterOutOfRange("sign component must be +1 or -1")
    m = len(pts)
    G = np.empty((m, m))
    for j in range(m):
        tj, ej = pts[j]
        for k in range(m):
            tk, ek = pts[k]
            G[j, k] = float((ej * ek) ** n) * math.exp(-n * abs(tj - tk))
    return gram_report(G, tolerance)


# --------------------------------------------------------------------------
# the strip functions c_t and g_t
# --------------------------------------------------------------------------

def c_func(beta: float, t: float, z: complex) -> complex:
    """c_t(z) = (e^{itz} + e^{-beta t} e^{-itz}) / (1 + e^{-beta t}),  t > 0.

    Computed in factored form so the value stays finite whenever the true
    value does; for points far outside the closed strip and large t the value
    genuinely overflows (|c_t| grows like e^{t(2|Im z - beta/2| - beta)}).
    """
    if beta <= 0.0 or t <= 0.0:
        raise ParameterOutOfRange("need beta > 0 and t > 0")
    z = complex(z)
    a = 1j * t * z            # exponent of the first term
    b = -beta * t - 1j * t * z
    m = max(a.real, b.real)
    val = cmath.exp(a - m) + cmath.exp(b - m)
    return cmath.exp(m) * val / (1.0 + math.exp(-beta * t))


def c_log_abs(beta: float, t: float, z: complex) -> float:
    """log |c_t(z)|, overflow-free for any z and t."""
    if beta <= 0.0 or t <= 0.0:
        raise ParameterOutOfRange("need beta > 0 and t > 0")
    z = complex(z)
    a = 1j * t * z
    b = -beta * t - 1j * t * z
    m = max(a.real, b.real)
    mag = abs(cmath.exp(a - m) + cmath.exp(b - m))
    if mag == 0.0:
        return -math.inf
    return m + math.log(mag) - math.log1p(math.exp(-beta * t))


def g_func(beta: float, t: float, z: complex) -> complex:
    """g_t(z) = e^{t beta/2} e^{itz}; its Hardy norm on the strip is e^{|t| beta/2}."""
    return math.exp(t * beta / 2.0) * cmath.exp(1j * t * complex(z))


@dataclass
class StripMembership:
    """Outcome of the |c_t| < 1 characterization scan."""

    verdict: str          # "interior" | "exterior" | "boundary" | "unknown"
    witness_t: float | None   # a t with |c_t(z)| >= 1, when one exists
    max_log_abs: float    # max of log |c_t(z)| over the scanned grid


def strip_membership(beta: float, z: complex, t_grid=None,
                     boundary_tol: float = 1e-12) -> StripMembership:
    """Grid scan of the characterization ``z in open strip iff |c_t(z)| < 1
    for all t > 0``.

    Boundary points are detected exactly: there |c_t| = 1 is attained at
    t = 2 pi / |Re z| (and c_t = 1 identically when Re z = 0).  A point that
    is geometrically outside but for which the grid finds no unimodularity
    witness is reported as "unknown" rather than misclassified.
    """
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    z = complex(z)
    if t_grid is None:
        t_grid = np.geomspace(1e-3, 1e3, 60)

    y = z.imag
    if abs(y) <= boundary_tol or abs(y - beta) <= boundary_tol:
        x = z.real
        witness = 2.0 * math.pi / abs(x) if x != 0.0 else None
        return StripMembership("boundary", witness, 0.0)

    logs = np.array([c_log_abs(beta, t, z) for t in t_grid])
    worst = float(np.max(logs))
    if worst >= 0.0:
        witness = float(t_grid[int(np.argmax(logs >= 0.0))])
        return StripMembership("exterior", witness, worst)
    if 0.0 < y < beta:
        return StripMembership("interior", None, worst)
    return StripMembership("unknown", None, worst)
