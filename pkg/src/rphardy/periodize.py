"""Partial-fraction / image-charge series for the strip kernels, with
explicit a-priori tail bounds, plus the geometric splitting of the Szego
kernel into one-sided pieces.

The two scalar building blocks are

    pi / sin(pi z)              = sum_n (-1)^n / (z - n),
    (pi / 2 beta) / sinh(pi z / (2 beta)) = sum_k (-1)^k / (z + 2 k i beta),

both summed symmetrically: the k = 0 term plus paired terms (k, -k), which
turns the conditionally convergent sums into absolutely convergent ones with
paired terms O(1/k^2).  The strip kernels follow by specializing to
zeta = z - conj(w):

    szego:    Q(z, w)  = (i / 2 pi) sum_n (-1)^n / (zeta + 2 n beta i),
    bergman:  Q(z, w)^2 = -(1 / 4 pi^2) sum_k 1 / (zeta + 2 k i beta)^2.

Every evaluator returns a :class:`SeriesEval` carrying the proven tail bound
(valid once N exceeds the stated threshold; below it the bound is reported as
inf) together with the closed-form value and the actual defect, so soundness
``defect <= tail_bound`` is a one-line assertion.

Tail bounds, all elementary alternating/absolute estimates:

    cosecant:  8 |z| / (3 N)            for N >= 2 |z|,
    sinh:      2 |z| / (3 beta^2 N)     for N >= |z| / beta,
    szego:     |zeta| / (3 pi beta^2 N) for N >= |zeta| / beta,
    bergman:   5 / (18 pi^2 beta^2 N)   for N >= |zeta| / beta.

``szego_series_split`` sums the two one-sided halves (images n >= 0 and
n <= -1 separately, adjacent pairs (2j, 2j+1) for absolute convergence);
their sum reproduces the full kernel.  ``geometric_splitting`` is re-exported
from :mod:`rphardy.measures` since the split lives on the spectral side.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .domains import Strip
from .errors import ParameterOutOfRange, PoleOnLattice
from .kernels import bergman_strip, szego
from .measures import geometric_splitting  # noqa: F401  (re-export)
from .numerics import comp_sum

_LATTICE_TOL = 1e-12


@dataclass
class SeriesEval:
    """A partial sum together with its certificate."""

    value: complex
    closed_form: complex
    defect: float
    n_terms: int         # pairs (or pair-blocks) beyond the central term
    tail_bound: float    # proven bound on |value - limit|; inf below threshold

    @property
    def sound(self) -> bool:
        return self.defect <= self.tail_bound


def _check_terms(N: int):
    if N < 1:
        raise ParameterOutOfRange("need at least one term")


def cosecant_series(z: complex, N: int) -> SeriesEval:
    """Partial sum of  pi / sin(pi z) = 1/z + sum_{k>=1} (-1)^k 2z / (z^2 - k^2)."""
    _check_terms(N)
    z = complex(z)
    if abs(z - round(z.real)) <= _LATTICE_TOL and abs(z.imag) <= _LATTICE_TOL:
        raise PoleOnLattice("z is an integer")
    k = np.arange(1.0, N + 1.0)
    terms = np.where(k % 2 == 0, 1.0, -1.0) * 2.0 * z / (z * z - k * k)
    value = 1.0 / z + comp_sum(terms)
    closed = math.pi / cmath.sin(math.pi * z)
    bound = 8.0 * abs(z) / (3.0 * N) if N >= 2.0 * abs(z) else math.inf
    return SeriesEval(value, closed, abs(value - closed), N, bound)


def sinh_series(beta: float, z: complex, N: int) -> SeriesEval:
    """Partial sum of  (pi/2 beta) / sinh(pi z / 2 beta)
    = 1/z + sum_{k>=1} (-1)^k 2z / (z^2 + 4 k^2 beta^2)."""
    _check_terms(N)
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    z = complex(z)
    if abs(z.real) <= _LATTICE_TOL and \
            abs(z.imag - 2.0 * beta * round(z.imag / (2.0 * beta))) <= _LATTICE_TOL:
        raise PoleOnLattice("z lies on the lattice 2 i beta Z")
    k = np.arange(1.0, N + 1.0)
    terms = np.where(k % 2 == 0, 1.0, -1.0) * 2.0 * z / (z * z + 4.0 * beta * beta * k * k)
    value = 1.0 / z + comp_sum(terms)
    closed = (math.pi / (2.0 * beta)) / cmath.sinh(math.pi * z / (2.0 * beta))
    bound = 2.0 * abs(z) / (3.0 * beta * beta * N) if N >= abs(z) / beta else math.inf
    return SeriesEval(value, closed, abs(value - closed), N, bound)


def _zeta(beta, z, w):
    zeta = complex(z) - complex(w).conjugate()
    if abs(zeta.real) <= _LATTICE_TOL and \
            abs(zeta.imag - 2.0 * beta * round(zeta.imag / (2.0 * beta))) <= _LATTICE_TOL:
        raise PoleOnLattice("z - conj(w) lies on the lattice 2 i beta Z")
    return zeta


def szego_series(beta: float, z: complex, w: complex, N: int) -> SeriesEval:
    """Image-charge series of the strip Szego kernel,
    Q(z, w) = (i / 2 pi) sum_n (-1)^n / (z - conj(w) + 2 n beta i)."""
    _check_terms(N)
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    zeta = _zeta(beta, z, w)
    k = np.arange(1.0, N + 1.0)
    terms = np.where(k % 2 == 0, 1.0, -1.0) * 2.0 * zeta \
        / (zeta * zeta + 4.0 * beta * beta * k * k)
    value = (1j / (2.0 * math.pi)) * (1.0 / zeta + comp_sum(terms))
    closed = szego(Strip(beta), z, w)
    bound = abs(zeta) / (3.0 * math.pi * beta * beta * N) \
        if N >= abs(zeta) / beta else math.inf
    return SeriesEval(value, closed, abs(value - closed), N, bound)


def bergman_series(beta: float, z: complex, w: complex, N: int) -> SeriesEval:
    """Image-charge series of the squared kernel,
    Q(z, w)^2 = -(1 / 4 pi^2) sum_k 1 / (z - conj(w) + 2 k i beta)^2,
    absolutely convergent with paired terms ~ -1 / (2 beta^2 k^2)."""
    _check_terms(N)
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    zeta = _zeta(beta, z, w)
    k = np.arange(1.0, N + 1.0)
    d = 2j * beta * k
    pair = 1.0 / (zeta + d) ** 2 + 1.0 / (zeta - d) ** 2
    value = -(1.0 / (4.0 * math.pi ** 2)) * (1.0 / zeta ** 2 + comp_sum(pair))
    closed = bergman_strip(beta, z, w)
    bound = 5.0 / (18.0 * math.pi ** 2 * beta * beta * N) \
        if N >= abs(zeta) / beta else math.inf
    return SeriesEval(value, closed, abs(value - closed), N, bound)


def szego_series_split(beta: float, z: complex, w: complex, N: int):
    """One-sided halves of the Szego image series:

        Q_plus  = (i / 2 pi) sum_{n >= 0}  (-1)^n / (zeta + 2 n beta i),
        Q_minus = (i / 2 pi) sum_{n <= -1} (-1)^n / (zeta + 2 n beta i),

    each summed over adjacent pairs; returns (plus, minus, recombined)
    where ``recombined`` is a :class:`SeriesEval` of plus + minus against the
    closed-form kernel.  Each adjacent pair beyond index 2N has magnitude at
    most 1 / (2 beta j^2) once 2 j beta >= |zeta|, so each half carries a tail
    of at most 1 / (4 pi beta (N - 1)) and the recombined bound is
    1 / (2 pi beta (N - 1)), valid for N >= max(2, |zeta| / (2 beta) + 1)."""
    _check_terms(N)
    if beta <= 0.0:
        raise ParameterOutOfRange("need beta > 0")
    zeta = _zeta(beta, z, w)

    def one_sided(sign):
        # n runs over sign * {0, 1, ..., 2N-1} for sign=+1, and
        # sign * {1, ..., 2N} for sign=-1; adjacent pairing keeps it absolute.
        if sign > 0:
            n = np.arange(0.0, 2.0 * N)
        else:
            n = -np.arange(1.0, 2.0 * N + 1.0)
        signs = np.where(np.mod(n, 2) == 0, 1.0, -1.0)
        terms = signs / (zeta + 2j * beta * n)
        return (1j / (2.0 * math.pi)) * comp_sum(terms)

    plus = one_sided(+1)
    minus = one_sided(-1)
    total = plus + minus
    closed = szego(Strip(beta), z, w)
    if N >= max(2.0, abs(zeta) / (2.0 * beta) + 1.0):
        bound = 1.0 / (2.0 * math.pi * beta * (N - 1))
    else:
        bound = math.inf
    return plus, minus, SeriesEval(total, closed, abs(total - closed), N, bound)
