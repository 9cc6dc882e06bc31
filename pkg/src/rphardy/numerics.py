"""Shared numerical machinery: quadrature, compensated sums, Gram reports,
Fourier conventions, and the closed-form transform identities used as oracles
by the higher-level modules.

Quadrature strategy
-------------------
* finite intervals: adaptive Gauss-Kronrod (QUADPACK QAGS), optional breakpoints;
* infinite intervals: double-exponential (tanh-sinh) nodes;
* oscillatory Fourier integrals on the line: QUADPACK's QAWF cosine/sine weights.

Every routine returns an error estimate together with the value, and raises
:class:`ToleranceNotReached` instead of silently returning garbage when the
estimate misses the requested tolerance by a wide margin.

Two Fourier conventions appear in the formulas and are exposed under two
distinct names so they can never be confused:

* ``ft_unitary(f, x)``  = (1/sqrt(2 pi)) * Integral f(p) e^{ixp} dp
* ``ft_measure`` (in :mod:`rphardy.measures`) = Integral e^{ixp} dmu(p),
  no prefactor.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.integrate

from .errors import ParameterOutOfRange, ToleranceNotReached

TWO_PI = 2.0 * math.pi
SQRT_TWO_PI = math.sqrt(TWO_PI)


# --------------------------------------------------------------------------
# compensated summation
# --------------------------------------------------------------------------

def comp_sum_real(values) -> float:
    """Exactly rounded sum of real terms (order-independent to the last ulp)."""
    return math.fsum(values)


def comp_sum(values) -> complex:
    """Compensated sum of complex terms: fsum on the real and imaginary parts."""
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray) else values)
    if arr.size == 0:
        return 0.0 + 0.0j
    return complex(math.fsum(arr.real.ravel()), math.fsum(arr.imag.ravel()))


# --------------------------------------------------------------------------
# quadrature
# --------------------------------------------------------------------------

def _tolerance_guard(value: complex, err: float, tol: float) -> None:
    if not np.isfinite(err) or err > 50.0 * tol * (1.0 + abs(value)):
        raise ToleranceNotReached(
            "quadrature error estimate %.3e misses target %.3e" % (err, tol)
        )


def quad_real(f, a, b, *, tol: float = 1e-10, points=None):
    """Integrate a real scalar function, returning ``(value, error_estimate)``."""
    if np.isinf(a) or np.isinf(b):
        res = scipy.integrate.tanhsinh(
            np.vectorize(f, otypes=[float]), a, b, atol=tol / 4, rtol=1e-13
        )
        value, err = float(res.integral), float(res.error)
    else:
        value, err = scipy.integrate.quad(
            f, a, b, epsabs=tol / 4, epsrel=1e-12, limit=400, points=points
        )
    _tolerance_guard(value, err, tol)
    return value, err


def quad(f, a, b, *, tol: float = 1e-10, points=None):
    """Integrate a complex-valued scalar function over [a, b].

    Infinite endpoints are allowed.  Returns ``(value, error_estimate)`` where
    the estimate is the sum of the real- and imaginary-part estimates.
    """
    re, re_err = quad_real(lambda x: f(x).real, a, b, tol=tol, points=points)
    im, im_err = quad_real(lambda x: f(x).imag, a, b, tol=tol, points=points)
    return complex(re, im), re_err + im_err


def oscillatory_ft(f, t: float, *, tol: float = 1e-10) -> complex:
    """Fourier integral  Integral_R f(x) e^{itx} dx  for real-valued decaying f.

    Splits into even/odd parts and uses QUADPACK's cosine/sine weights on
    [0, inf), which remain accurate when f decays too slowly (e.g. like 1/x^2)
    for naive truncation.
    """
    if t == 0.0:
        val, _ = quad_real(f, -np.inf, np.inf, tol=tol)
        return complex(val)
    w = abs(t)
    even = lambda x: f(x) + f(-x)
    odd = lambda x: f(x) - f(-x)
    re, re_err = scipy.integrate.quad(even, 0, np.inf, weight="cos", wvar=w,
                                      epsabs=tol / 4, limlst=120)
    im, im_err = scipy.integrate.quad(odd, 0, np.inf, weight="sin", wvar=w,
                                      epsabs=tol / 4, limlst=120)
    value = complex(re, math.copysign(1.0, t) * im)
    _tolerance_guard(value, re_err + im_err, tol)
    return value


def trapezoid_circle(f, n_nodes: int = 1024) -> complex:
    """Integral_0^{2 pi} f(t) dt by the n-node trapezoid rule.

    For smooth 2 pi-periodic integrands the rule converges geometrically, so
    2**10 nodes deliver machine accuracy for every circle integral used here.
    """
    t = TWO_PI * np.arange(n_nodes) / n_nodes
    vals = np.asarray([f(tj) for tj in t], dtype=complex)
    return complex(TWO_PI / n_nodes * comp_sum(vals))


# --------------------------------------------------------------------------
# Gram matrices
# --------------------------------------------------------------------------

@dataclass
class GramReport:
    """Result of a positive-semidefiniteness test of a Gram matrix."""

    size: int
    hermiticity_defect: float
    min_eigenvalue: float
    max_eigenvalue: float
    spectral_norm: float
    tolerance: float
    verdict: bool


def hermitian_extremes(G: np.ndarray):
    """Smallest and largest eigenvalue of the Hermitian part of ``G``."""
    G = np.asarray(G)
    H = 0.5 * (G + G.conj().T)
    eigs = np.linalg.eigvalsh(H)
    return float(eigs[0]), float(eigs[-1])


def gram_report(G: np.ndarray, tolerance: float = 1e-10) -> GramReport:
    """PSD verdict for a (nominally Hermitian) Gram matrix.

    The verdict is ``min_eig >= -tolerance * max(1, ||G||_2)``; the spectral
    norm is that of the Hermitian part, which is what the eigenvalue test sees.
    """
    G = np.atleast_2d(np.asarray(G, dtype=complex))
    if G.shape[0] != G.shape[1]:
        raise ParameterOutOfRange("Gram matrix must be square, got %r" % (G.shape,))
    herm_defect = float(np.max(np.abs(G - G.conj().T))) if G.size else 0.0
    lo, hi = hermitian_extremes(G)
    norm = max(abs(lo), abs(hi))
    return GramReport(
        size=G.shape[0],
        hermiticity_defect=herm_defect,
        min_eigenvalue=lo,
        max_eigenvalue=hi,
        spectral_norm=norm,
        tolerance=tolerance,
        verdict=bool(lo >= -tolerance * max(1.0, norm)),
    )


# --------------------------------------------------------------------------
# Fourier conventions
# --------------------------------------------------------------------------

def ft_unitary(f, x: float, *, tol: float = 1e-10) -> complex:
    """Unitary-convention Fourier transform (1/sqrt(2 pi)) Int f(p) e^{ixp} dp."""

    def integrand(p):
        # tanh-sinh probes the literal endpoints, where cos(x * inf) has no
        # value; the transform needs decaying f, so the true contribution is 0
        if not math.isfinite(p):
            return 0.0j
        return f(p) * complex(math.cos(x * p), math.sin(x * p))

    val, _ = quad(integrand, -np.inf, np.inf, tol=tol)
    return val / SQRT_TWO_PI


# --------------------------------------------------------------------------
# closed-form transform identities (used as oracles elsewhere)
# --------------------------------------------------------------------------

@dataclass
class IdentityCheck:
    """One numerically evaluated identity: lhs, rhs, and their disagreement."""

    lhs: complex
    rhs: complex
    defect: float
    tail_bound: float | None = None


def lorentzian(s: float, x) -> float:
    """Normalized Lorentzian density (1/pi) s / (s^2 + x^2), total mass 1."""
    return s / (math.pi * (s * s + x * x))


def poisson_summation_check(beta: float, lam: float, x: float, K: int) -> IdentityCheck:
    """Periodization of the Lorentzian against its closed geometric form.

    lhs: sum over |k| <= K of  psi_s(k) e^{i k x 2 pi / beta},  s = beta lam / (2 pi)
    rhs: (e^{-lam x} + e^{-lam (beta - x)}) / (1 - e^{-lam beta}),  0 <= x <= beta.

    The omitted tail is bounded by 2 s / (pi K): |psi_s(k)| <= s/(pi k^2) and
    sum_{k>K} k^{-2} < 1/K.
    """
    if beta <= 0 or lam <= 0:
        raise ParameterOutOfRange("beta and lam must be > 0")
    if not 0.0 <= x <= beta:
        raise ParameterOutOfRange("x must lie in [0, beta]")
    s = beta * lam / TWO_PI
    k = np.arange(1, K + 1, dtype=float)
    terms = 2.0 * lorentzian(s, k) * np.cos(k * TWO_PI * x / beta)
    lhs = lorentzian(s, 0.0) + comp_sum_real(terms)
    rhs = (math.exp(-lam * x) + math.exp(-lam * (beta - x))) / (-math.expm1(-lam * beta))
    tail = 2.0 * s / (math.pi * K)
    return IdentityCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs), tail_bound=tail)


def _sech_pow(u: float, n: int) -> float:
    """Overflow-free 1 / cosh(u)^n (underflows to 0 in the far tails)."""
    if not math.isfinite(u):
        return 0.0
    e = math.exp(-abs(u))
    return (2.0 * e / (1.0 + e * e)) ** n


def sech_ft_check(xi: float, *, tol: float = 1e-11) -> IdentityCheck:
    """Integral e^{i x xi} / cosh(x) dx  =  pi / cosh(pi xi / 2)."""

    def integrand(u):
        s = _sech_pow(u, 1)
        return math.cos(xi * u) * s if s else 0.0

    lhs, _ = quad_real(integrand, -np.inf, np.inf, tol=tol)
    rhs = math.pi / math.cosh(math.pi * xi / 2.0)
    return IdentityCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))


def sech2_ft_check(lam: float, *, tol: float = 1e-11) -> IdentityCheck:
    """(1/sqrt(2 pi)) Integral e^{i x lam} / cosh(x)^2 dx
    = sqrt(pi/2) * lam / sinh(pi lam / 2),  with limit sqrt(2/pi) at lam = 0."""

    def integrand(u):
        s = _sech_pow(u, 2)
        return math.cos(lam * u) * s if s else 0.0

    lhs, _ = quad_real(integrand, -np.inf, np.inf, tol=tol)
    lhs /= SQRT_TWO_PI
    if lam == 0.0:
        rhs = math.sqrt(2.0 / math.pi)
    else:
        rhs = math.sqrt(math.pi / 2.0) * lam / math.sinh(math.pi * lam / 2.0)
    return IdentityCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))


def sech_power_recursion_check(n: int, p: float, *, tol: float = 1e-11) -> IdentityCheck:
    """Two-quadrature check of the step-two recursion between sech-power transforms:

    Integral e^{ixp} cosh(x)^{-n-2} dx
      = (n^2 + p^2) / (n (n + 1)) * Integral e^{ixp} cosh(x)^{-n} dx.
    """
    if n < 1:
        raise ParameterOutOfRange("recursion needs n >= 1")

    def integrand(u, k):
        s = _sech_pow(u, k)
        return math.cos(p * u) * s if s else 0.0

    low, _ = quad_real(lambda u: integrand(u, n), -np.inf, np.inf, tol=tol)
    high, _ = quad_real(lambda u: integrand(u, n + 2), -np.inf, np.inf, tol=tol)
    rhs = (n * n + p * p) / (n * (n + 1.0)) * low
    return IdentityCheck(lhs=high, rhs=rhs, defect=abs(high - rhs))


def ftcosh_check(beta: float, z: complex, *, tol: float = 1e-10) -> IdentityCheck:
    """Fourier transform of the Fermi-type density against its sinh closed form:

    (1/2 pi) Integral e^{i z lam} / (1 + e^{-2 beta lam}) d lam
      =  (i / 4 beta) / sinh(pi z / (2 beta)),     0 < Im z < 2 beta.

    The integrand decays like e^{-Im(z) lam} at +inf and e^{-(2 beta - Im z)|lam|}
    at -inf, so the transform only exists on the open strip of height 2 beta.
    """
    z = complex(z)
    if beta <= 0:
        raise ParameterOutOfRange("beta must be > 0")
    if not 0.0 < z.imag < 2.0 * beta:
        raise ParameterOutOfRange("need 0 < Im z < 2 beta for convergence")

    y = z.imag

    def density(lam: float) -> float:
        # e^{-y lam} / (1 + e^{-2 beta lam}), with the overflowing factor
        # folded into the exponent on the left tail where the product decays
        # like e^{(2 beta - y) lam}
        if not math.isfinite(lam):
            return 0.0
        if lam >= 0.0:
            return math.exp(-y * lam) / (1.0 + math.exp(-2.0 * beta * lam))
        return math.exp((2.0 * beta - y) * lam) / (1.0 + math.exp(2.0 * beta * lam))

    lhs = oscillatory_ft(density, z.real, tol=tol) / TWO_PI
    rhs = 0.25j / (beta * np.sinh(math.pi * z / (2.0 * beta)))
    return IdentityCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))


def sinh_abs_check(x: float, y: float) -> IdentityCheck:
    """|sinh(x + iy)|^2 = sinh(x)^2 + sin(y)^2."""
    lhs = abs(np.sinh(complex(x, y))) ** 2
    rhs = math.sinh(x) ** 2 + math.sin(y) ** 2
    return IdentityCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))


def cosh_abs_check(x: float, y: float) -> IdentityCheck:
    """|cosh(x + iy)|^2 = sinh(x)^2 + cos(y)^2."""
    lhs = abs(np.cosh(complex(x, y))) ** 2
    rhs = math.sinh(x) ** 2 + math.cos(y) ** 2
    return IdentityCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))
