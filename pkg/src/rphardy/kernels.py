"""Reproducing kernels on the disc, half-plane and strip, and the boundary
operators built from them.

Normalizations
--------------
The Szego kernels carry the boundary measure of each domain:

* disc        Q(z, w) = (1/2 pi) / (1 - z conj(w))
* half-plane  Q(z, w) = (1/2 pi) i / (z - conj(w))
* strip       Q(z, w) = (i / 4 beta) / sinh(pi (z - conj(w)) / (2 beta))

The Poisson kernels are the boundary densities normalized to total mass one
(for the strip the two boundary components together carry mass one).  They are
related to the Szego kernel by the ratio identity

    P_z(x) = |Q(z, x)|^2 / Q(z, z)

which :func:`hua_ratio` evaluates directly so the closed forms can be checked
against it.

Power kernels follow the convention that the half-plane version is the bare
principal power (i/(z - conj(w)))^s with no 2 pi factor, the strip version is
the s-th power of the strip Szego kernel above, and the disc version is
(1/2 pi) (1 - z conj(w))^{-s}.

Boundary functions are represented as callables ``f(component, x)`` where
``component`` names a boundary component of the domain ("circle", "line",
"lower"/"upper") and ``x`` is the boundary parameter (angle on the circle,
real coordinate on the lines).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import numerics
from .domains import DISC, HALF_PLANE, Disc, Domain, HalfPlane, Strip, transfer_map
from .errors import (
    BranchCutViolation,
    DivergentLogIntegral,
    NonPositiveModulus,
    OutsideDomain,
    ParameterOutOfRange,
    PoleAtInput,
    ToleranceNotReached,
    UnsupportedPair,
)
from .numerics import GramReport, IdentityCheck, gram_report

_POLE_TOL = 1e-13


def _require_closure(domain: Domain, z: complex, tol: float = 1e-9) -> complex:
    z = complex(z)
    if domain.locate(z, tol) == "exterior":
        raise OutsideDomain("%r is outside the closed %s" % (z, domain.name))
    return z


# --------------------------------------------------------------------------
# Szego / Poisson / Bergman
# --------------------------------------------------------------------------

def szego(domain: Domain, z: complex, w: complex) -> complex:
    """Szego kernel Q(z, w); z and w may lie in the closure as long as the
    kernel stays finite (the boundary-extended evaluation).
    """
    z = _require_closure(domain, z)
    w = _require_closure(domain, w)
    if isinstance(domain, Disc):
        den = 1.0 - z * w.conjugate()
        if abs(den) <= _POLE_TOL:
            raise PoleAtInput("szego pole: z conj(w) = 1")
        return 1.0 / (2.0 * math.pi * den)
    if isinstance(domain, HalfPlane):
        den = z - w.conjugate()
        if abs(den) <= _POLE_TOL:
            raise PoleAtInput("szego pole: z = conj(w)")
        return 0.5j / (math.pi * den)
    if isinstance(domain, Strip):
        b = domain.beta
        arg = math.pi * (z - w.conjugate()) / (2.0 * b)
        if arg.real > 350.0:
            # 1/sinh(arg) = 2 e^{-arg} up to relative error e^{-2 Re arg}
            return 0.5j * cmath.exp(-arg) / b
        if arg.real < -350.0:
            return -0.5j * cmath.exp(arg) / b
        s = cmath.sinh(arg)
        if abs(s) <= _POLE_TOL:
            raise PoleAtInput("szego pole: z - conj(w) on the lattice 2 i beta Z")
        return 0.25j / (b * s)
    raise UnsupportedPair("no szego kernel for %r" % (domain,))


def szego_diag(domain: Domain, z: complex) -> float:
    """Q(z, z) for interior z (always real and positive)."""
    domain.require_interior(z)
    return szego(domain, z, z).real


def poisson(domain: Domain, z: complex, x: float, component: str = None) -> float:
    """Poisson kernel P_z at the boundary point of parameter ``x``.

    * disc:       x is the boundary angle, kernel w.r.t. dt on [0, 2 pi);
    * half-plane: x is the real coordinate, kernel w.r.t. dx, prefactor 1/pi
      (total mass one, and the Fourier transform at i lam is e^{-lam |t|});
    * strip:      x is the real coordinate of the "lower" (Im = 0) or "upper"
      (Im = beta) component; the two components together have mass one.
    """
    z = domain.require_interior(complex(z))
    if isinstance(domain, Disc):
        if component not in (None, "circle"):
            raise ParameterOutOfRange("disc boundary component is 'circle'")
        r = abs(z)
        th = cmath.phase(z)
        den = 1.0 - 2.0 * r * math.cos(th - x) + r * r
        return (1.0 - r * r) / (2.0 * math.pi * den)
    if isinstance(domain, HalfPlane):
        if component not in (None, "line"):
            raise ParameterOutOfRange("half-plane boundary component is 'line'")
        dx = x - z.real
        if abs(dx) > 1e150:
            inv = 1.0 / dx
            return z.imag * inv * inv / math.pi
        return z.imag / (math.pi * (dx * dx + z.imag * z.imag))
    if isinstance(domain, Strip):
        b = domain.beta
        if component is None:
            component = "lower"
        u = math.pi * (z.real - x) / (2.0 * b)
        if component == "lower":
            trig = math.sin(math.pi * z.imag / (2.0 * b)) ** 2
        elif component == "upper":
            trig = math.cos(math.pi * z.imag / (2.0 * b)) ** 2
        else:
            raise ParameterOutOfRange("strip components are 'lower'/'upper'")
        num = math.sin(math.pi * z.imag / b)
        au = abs(u)
        if au > 300.0:
            # sinh(u)^2 + trig = e^{2|u|}/4 up to relative error e^{-2|u|}
            return num * math.exp(-2.0 * au) / b
        return num / (4.0 * b * (math.sinh(u) ** 2 + trig))
    raise UnsupportedPair("no poisson kernel for %r" % (domain,))


def hua_ratio(domain: Domain, z: complex, x: float, component: str = None) -> float:
    """|Q(z, x)|^2 / Q(z, z) evaluated from the Szego kernel alone.

    Coincides with :func:`poisson` on all three domains; keeping the two
    computations separate is what makes the consistency check meaningful.
    """
    comp = component or domain.boundary_components()[0]
    xb = domain.boundary_embed(comp, x)
    q = szego(domain, xb, z)
    return abs(q) ** 2 / szego_diag(domain, z)


def poisson_midline_strip(beta: float, lam: float, x: float) -> float:
    """Closed sech form of the strip Poisson kernel at a midline base point:

    P_{lam + i beta/2}("lower", x) = (1/2 beta) / cosh(pi (lam - x) / beta).
    """
    return 0.5 / (beta * math.cosh(math.pi * (lam - x) / beta))


def bergman_strip(beta: float, z: complex, w: complex) -> complex:
    """Bergman kernel of the strip,

        K(z, w) = -1 / (4 beta sinh(pi (z - conj(w)) / (2 beta)))^2,

    i.e. exactly the square of the strip Szego kernel."""
    q = szego(Strip(beta), z, w)
    return q * q


def power_kernel(domain: Domain, s: float, z: complex, w: complex) -> complex:
    """Power kernel Q_s with the conventions documented in the module header."""
    if not (s > 0):
        raise ParameterOutOfRange("power kernel needs s > 0, got %r" % (s,))
    z = _require_closure(domain, z)
    w = _require_closure(domain, w)
    if isinstance(domain, Disc):
        base = 1.0 - z * w.conjugate()
        if abs(base) <= _POLE_TOL:
            raise PoleAtInput("power kernel pole on the disc")
        return base ** (-s) / (2.0 * math.pi)
    if isinstance(domain, HalfPlane):
        den = z - w.conjugate()
        if abs(den) <= _POLE_TOL:
            raise PoleAtInput("power kernel pole on the half-plane")
        base = 1j / den
    elif isinstance(domain, Strip):
        base = szego(domain, z, w)  # (i / 4 beta) / sinh(...), Re > 0 inside
    else:
        raise UnsupportedPair("no power kernel for %r" % (domain,))
    # both bases land in the open right half-plane for interior points, so the
    # principal power is continuous; guard anyway.
    if base.real <= 0.0 and base.imag == 0.0:
        raise BranchCutViolation("power kernel base on the negative real axis")
    return base ** s


# --------------------------------------------------------------------------
# outer functions and the boundary flip
# --------------------------------------------------------------------------

def outer_f(domain: Domain, w: complex, z: complex) -> complex:
    """Normalized kernel function F_w(z) = Q(z, w) / sqrt(Q(w, w)).

    For w on the fixed set of the reflection, |F_w|^2 on the boundary is the
    Poisson kernel P_w (the outer representative of that modulus).
    """
    return szego(domain, z, w) / math.sqrt(szego_diag(domain, w))


def boundary_reflect(domain: Domain, component: str, x: float):
    """Parameter form of the boundary reflection induced by sigma."""
    if isinstance(domain, Disc):
        return ("circle", -x)
    if isinstance(domain, HalfPlane):
        return ("line", -x)
    if isinstance(domain, Strip):
        if component == "lower":
            return ("upper", x)
        if component == "upper":
            return ("lower", x)
        raise ParameterOutOfRange("strip components are 'lower'/'upper'")
    raise UnsupportedPair("no boundary reflection for %r" % (domain,))


def h_boundary(domain: Domain, w: complex, component: str, x: float) -> complex:
    """The flip multiplier h_w(x) = Q_w*(x) / Q_w*(sigma(x)) on the boundary.

    Unimodular whenever w lies on the fixed set of sigma.
    """
    domain.require_interior(w)
    zb = domain.boundary_embed(component, x)
    rcomp, rx = boundary_reflect(domain, component, x)
    zr = domain.boundary_embed(rcomp, rx)
    if isinstance(domain, Strip):
        # zb and zr share the same real part, so the ratio of the two sinh
        # factors stays O(1) even where each kernel alone underflows.
        b = domain.beta
        ab = cmath.pi * (zb - w.conjugate()) / (2.0 * b)
        ar = cmath.pi * (zr - w.conjugate()) / (2.0 * b)
        if ab.real > 350.0:
            return cmath.exp(ar - ab)
        if ab.real < -350.0:
            return cmath.exp(ab - ar)
        return cmath.sinh(ar) / cmath.sinh(ab)
    return szego(domain, zb, w) / szego(domain, zr, w)


@dataclass
class BoundaryFunction:
    """A function on the boundary of ``domain``, sampled as f(component, x)."""

    domain: Domain
    func: object  # callable (component, x) -> complex

    def __call__(self, component: str, x: float) -> complex:
        return complex(self.func(component, x))

    def reflected(self) -> "BoundaryFunction":
        """f composed with the boundary reflection."""
        dom = self.domain

        def rf(component, x):
            rcomp, rx = boundary_reflect(dom, component, x)
            return self.func(rcomp, rx)

        return BoundaryFunction(dom, rf)


def boundary_restriction(domain: Domain, holo) -> BoundaryFunction:
    """Boundary values of a function given by a closed form on the closure."""
    return BoundaryFunction(
        domain, lambda comp, x: holo(domain.boundary_embed(comp, x))
    )


def theta_apply(domain: Domain, w: complex, f) -> BoundaryFunction:
    """The flip operator (theta_w f)(x) = h_w(x) * f(sigma(x)).

    It is an involution for every interior w (h_w(x) h_w(sigma x) = 1 holds by
    construction) and fixes the boundary kernel Q_w*.
    """
    domain.require_interior(w)

    def tf(component, x):
        rcomp, rx = boundary_reflect(domain, component, x)
        return h_boundary(domain, w, component, x) * f(rcomp, rx)

    return BoundaryFunction(domain, tf)


def boundary_inner(domain: Domain, f, g, *, nodes: int = 1024,
                   tol: float = 1e-10) -> complex:
    """L^2 inner product <f, g> over the boundary (conjugate-linear in f).

    Circle integrals use the spectrally accurate trapezoid rule; line
    components use adaptive quadrature over R and must decay.
    """
    if isinstance(domain, Disc):
        return numerics.trapezoid_circle(
            lambda t: f("circle", t).conjugate() * g("circle", t), nodes
        )
    total = 0.0 + 0.0j
    for comp in domain.boundary_components():
        val, _ = numerics.quad(
            lambda x, c=comp: complex(f(c, x)).conjugate() * complex(g(c, x)),
            -np.inf, np.inf, tol=tol,
        )
        total += val
    return total


def flip_pairing_check(domain: Domain, w: complex, F, *, nodes: int = 1024,
                       tol: float = 1e-10) -> IdentityCheck:
    """Quadrature check of  <f*, theta_w f*> = |f(w)|^2 / Q(w, w)  for f = F Q_w.

    F should be holomorphic on the closure with at most polynomial growth (the
    kernel factor supplies the decay on unbounded boundaries).
    """
    w = domain.require_interior(complex(w))
    fstar = boundary_restriction(domain, lambda zb: F(zb) * szego(domain, zb, w))
    lhs = boundary_inner(domain, fstar, theta_apply(domain, w, fstar),
                         nodes=nodes, tol=tol)
    fw = F(w) * szego_diag(domain, w)
    rhs = abs(fw) ** 2 / szego_diag(domain, w)
    return IdentityCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))


# --------------------------------------------------------------------------
# outer function from a boundary modulus
# --------------------------------------------------------------------------

def outer_from_modulus(psi, z: complex, *, tol: float = 1e-9) -> complex:
    """Outer function on the half-plane with boundary modulus psi^{1/2}:

        F(z) = exp( (1/2 pi i) Int_R [ 1/(p - z) - p/(1 + p^2) ] log psi(p) dp )

    psi must be strictly positive on the line and log psi integrable against
    (1 + p^2)^{-1}; non-positive samples raise NonPositiveModulus and a
    quadrature failure raises DivergentLogIntegral.
    """
    z = HALF_PLANE.require_interior(complex(z))

    def integrand(p: float) -> complex:
        if abs(p) > 1e100:
            # the Herglotz weight is O(1/p^2) while log psi grows at most
            # logarithmically for any polynomially bounded modulus, so this
            # region contributes nothing at double precision (and psi itself
            # may underflow to 0 out here).
            return 0.0j
        v = psi(p)
        if not v > 0.0:
            raise NonPositiveModulus("psi(%g) = %r is not positive" % (p, v))
        return (1.0 / (p - z) - p / (1.0 + p * p)) * math.log(v)

    a = z.real
    total = 0.0 + 0.0j
    try:
        for lo, hi, pts in ((-np.inf, a - 2.0, None),
                            (a - 2.0, a + 2.0, [a]),
                            (a + 2.0, np.inf, None)):
            val, _ = numerics.quad(integrand, lo, hi, tol=tol, points=pts)
            total += val
    except ToleranceNotReached as exc:
        raise DivergentLogIntegral(str(exc)) from exc
    return cmath.exp(total / (2j * math.pi))


# --------------------------------------------------------------------------
# Gram positivity and the kernel transfer identity
# --------------------------------------------------------------------------

def kernel_gram(domain: Domain, points, kind: str = "szego",
                s: float = None, tolerance: float = 1e-10) -> GramReport:
    """PSD report for the Gram matrix K(z_j, z_k) of one of the built-in kernels.

    ``kind`` is "szego", "power" (requires ``s``) or "bergman" (strip only).
    """
    pts = [complex(p) for p in points]
    if kind == "szego":
        k = lambda a, b: szego(domain, a, b)
    elif kind == "power":
        if s is None:
            raise ParameterOutOfRange("power kernel needs the exponent s")
        k = lambda a, b: power_kernel(domain, s, a, b)
    elif kind == "bergman":
        if not isinstance(domain, Strip):
            raise UnsupportedPair("bergman kernel is implemented on the strip")
        k = lambda a, b: bergman_strip(domain.beta, a, b)
    else:
        raise UnsupportedPair("unknown kernel kind %r" % (kind,))
    n = len(pts)
    G = np.empty((n, n), dtype=complex)
    for j in range(n):
        for l in range(n):
            G[j, l] = k(pts[j], pts[l])
    return gram_report(G, tolerance)


def _safe_sqrt(v: complex) -> complex:
    v = complex(v)
    if v.imag == 0.0 and v.real <= 0.0:
        raise BranchCutViolation(
            "transfer derivative %r lies on the branch cut" % (v,)
        )
    return cmath.sqrt(v)


def szego_transfer_check(src: Domain, dst: Domain, z: complex,
                         w: complex) -> IdentityCheck:
    """Pointwise check of the kernel transformation rule under the canonical
    biholomorphism phi: src -> dst,

        Q_src(z, w) = sqrt(phi'(z)) conj(sqrt(phi'(w))) Q_dst(phi z, phi w).

    The principal square roots are asserted to stay off the cut at the two
    evaluation points (they do for all strip points and for disc points with
    |z| bounded away from the critical circle through 1).
    """
    phi, dphi = transfer_map(src, dst)
    lhs = szego(src, z, w)
    pref = _safe_sqrt(dphi(z)) * _safe_sqrt(dphi(w)).conjugate()
    rhs = pref * szego(dst, phi(z), phi(w))
    return IdentityCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))
