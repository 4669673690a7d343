"""Shear construction, linear combinations and combined dilatations.

A harmonic map f = h + conj(g) is built from an analytic prevertex map F
and a dilatation omega by solving h + g = F, g' = omega h', which gives
h' = F'/(1 + omega).  h itself comes from integrating h' along the
radial segment [0, z] (the integrand is analytic on the disk, so the
path choice is free and radial segments keep clear of boundary poles).

For the monomial dilatation pairs used with the rational prevertex
family, the combined dilatation of t f_1 + (1 - t) f_2 is also produced
in closed rational form (a numerator/denominator polynomial pair) by
exact coefficient assembly, never by fitting; those coefficients feed
the Cohn zero-counting chain.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .maps import AnalyticFunction, MonomialDilatation
from .poly import Polynomial, conj_reciprocal

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(20)
# Mapped to [0, 1].
_NODES01 = 0.5 * (_GL_NODES + 1.0)
_WEIGHTS01 = 0.5 * _GL_WEIGHTS


class QuadratureFailure(RuntimeError):
    """Panel doubling exhausted max_subdivisions before reaching tol."""


@dataclass(frozen=True)
class QuadratureParams:
    tol: float = 1e-11
    max_subdivisions: int = 2**14


def _composite(fprime, zs, panels):
    """Composite Gauss-Legendre of fprime(s z) z over s in [0, 1]."""
    edges = np.linspace(0.0, 1.0, panels + 1)
    width = 1.0 / panels
    s = (edges[:-1, None] + width * _NODES01[None, :]).ravel()
    w = np.tile(width * _WEIGHTS01, panels)
    vals = fprime(s[:, None] * zs[None, :])
    return (w[:, None] * vals).sum(axis=0) * zs


def radial_integral(fprime, z, quad: QuadratureParams = QuadratureParams()):
    """Integrate fprime from 0 to each z along the radial segment.

    Vectorized over z; panel count doubles until successive composite
    rules agree to quad.tol relative.
    """
    z_arr = np.asarray(z, dtype=complex)
    zs = np.atleast_1d(z_arr).ravel()
    panels = 4
    prev = _composite(fprime, zs, panels)
    while True:
        panels *= 2
        if panels > quad.max_subdivisions:
            raise QuadratureFailure(
                f"no convergence to tol={quad.tol:g} within "
                f"{quad.max_subdivisions} subdivisions"
            )
        cur = _composite(fprime, zs, panels)
        err = np.abs(cur - prev)
        if np.all(err <= quad.tol * np.abs(cur) + 1e-15):
            break
        prev = cur
    out = cur.reshape(np.atleast_1d(z_arr).shape)
    if z_arr.ndim == 0:
        return complex(out[0])
    return out


@dataclass(frozen=True)
class RationalDilatation:
    """omega(z) = numerator(z)/denominator(z) with exact coefficients."""

    numerator: Polynomial
    denominator: Polynomial

    def __call__(self, z):
        return self.numerator(z) / self.denominator(z)


@dataclass
class HarmonicMap:
    """f(z) = h(z) + conj(g(z)) with an evaluable dilatation handle."""

    h: AnalyticFunction
    g: AnalyticFunction
    omega: object  # callable: MonomialDilatation, RationalDilatation, ...
    label: str = ""
    value_at: object = None  # optional fused evaluator, avoids re-integrating

    def __call__(self, z):
        if self.value_at is not None:
            return self.value_at(z)
        return self.h(z) + np.conj(self.g(z))

    def jacobian(self, z):
        hp = self.h.derivative_at(z)
        gp = self.g.derivative_at(z)
        return np.abs(hp) ** 2 - np.abs(gp) ** 2


def shear_construct(
    F: AnalyticFunction,
    omega,
    quad: QuadratureParams = QuadratureParams(),
) -> HarmonicMap:
    """Shear F by omega: h' = F'/(1 + omega), g = F - h, h(0) = g(0) = 0."""

    def h_prime(z):
        w = omega(z)
        if np.any(np.abs(w) >= 1.0):
            raise ValueError("|omega| must stay below 1 on the disk")
        return F.derivative_at(z) / (1.0 + w)

    def h_value(z):
        return radial_integral(h_prime, z, quad)

    def g_value(z):
        return F.value_at(z) - h_value(z)

    def g_prime(z):
        return F.derivative_at(z) - h_prime(z)

    def f_value(z):
        hv = h_value(z)
        return hv + np.conj(F.value_at(z) - hv)

    label = f"shear({F.label}, {omega})"
    h = AnalyticFunction(h_value, h_prime, f"h:{label}")
    g = AnalyticFunction(g_value, g_prime, f"g:{label}")
    return HarmonicMap(h=h, g=g, omega=omega, label=label, value_at=f_value)


@dataclass(frozen=True)
class LinCombSpec:
    f1: HarmonicMap
    f2: HarmonicMap
    t: float

    def __post_init__(self):
        if not 0.0 <= self.t <= 1.0:
            raise ValueError("t must lie in [0, 1]")


def lincomb(spec: LinCombSpec) -> HarmonicMap:
    """t f_1 + (1 - t) f_2, with the combined h'-ratio dilatation.

    The endpoints t = 0 and t = 1 short-circuit to the constituent map
    so that a vanishing weight never multiplies a near-boundary pole.
    """
    f1, f2, t = spec.f1, spec.f2, spec.t
    if t == 1.0:
        return f1
    if t == 0.0:
        return f2

    def combo(a1, a2):
        return lambda z: t * a1(z) + (1.0 - t) * a2(z)

    h = AnalyticFunction(
        combo(f1.h.value_at, f2.h.value_at),
        combo(f1.h.derivative_at, f2.h.derivative_at),
        f"h:lincomb(t={t:g})",
    )
    g = AnalyticFunction(
        combo(f1.g.value_at, f2.g.value_at),
        combo(f1.g.derivative_at, f2.g.derivative_at),
        f"g:lincomb(t={t:g})",
    )

    def omega(z):
        h1p = f1.h.derivative_at(z)
        h2p = f2.h.derivative_at(z)
        num = t * f1.omega(z) * h1p + (1.0 - t) * f2.omega(z) * h2p
        den = t * h1p + (1.0 - t) * h2p
        return num / den

    def f_value(z):
        return t * f1(z) + (1.0 - t) * f2(z)

    return HarmonicMap(
        h=h,
        g=g,
        omega=omega,
        label=f"{t:g}*[{f1.label}] + {1 - t:g}*[{f2.label}]",
        value_at=f_value,
    )


def _mono_poly(omega: MonomialDilatation) -> Polynomial:
    c = np.zeros(omega.power + 1, dtype=complex)
    c[omega.power] = omega.coefficient
    return Polynomial(c)


def combined_dilatation_eq5(
    omega1: MonomialDilatation,
    omega2: MonomialDilatation,
    alpha1: float,
    alpha2: float,
    t: float,
) -> RationalDilatation:
    """Combined dilatation for two sheared rational-family maps.

    Exact polynomial assembly of

        (1+z^2)(t w1 + (1-t) w2 + w1 w2) - 2z(a1 t w1 + a1 t w1 w2
                                              + (1-t) a2 w2 + (1-t) a2 w1 w2)
        -----------------------------------------------------------------
        (1+z^2)(1 + t w2 + (1-t) w1) - 2z(a2 + a1 t - a2 t
                                          + a1 t w2 + (1-t) a2 w1)

    with monomial w1, w2 substituted in.
    """
    if not (-1.0 <= alpha1 <= 1.0 and -1.0 <= alpha2 <= 1.0):
        raise ValueError("alphas must lie in [-1, 1]")
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    w1 = _mono_poly(omega1)
    w2 = _mono_poly(omega2)
    w12 = w1 * w2
    one_plus_z2 = Polynomial([1.0, 0.0, 1.0])
    two_z = Polynomial([0.0, 2.0])

    a_part = t * w1 + (1.0 - t) * w2 + w12
    b_part = (alpha1 * t) * (w1 + w12) + ((1.0 - t) * alpha2) * (w2 + w12)
    num = one_plus_z2 * a_part - two_z * b_part

    c_part = Polynomial([1.0]) + t * w2 + (1.0 - t) * w1
    d_part = (
        Polynomial([alpha2 + alpha1 * t - alpha2 * t])
        + (alpha1 * t) * w2
        + ((1.0 - t) * alpha2) * w1
    )
    den = one_plus_z2 * c_part - two_z * d_part
    return RationalDilatation(num, den)


def gamma_polys(alpha1: float, alpha2: float, t: float):
    """The cubic gamma with omega = -z gamma/gamma* for the -z / z pair.

    Returns (gamma, gamma*), gamma ascending
    [2t-1, 1+2 a2 (1-t) - 2 a1 t, 2t-1 - 2 a1 t - 2 a2 (1-t), 1].
    """
    if not (-1.0 <= alpha1 <= 1.0 and -1.0 <= alpha2 <= 1.0):
        raise ValueError("alphas must lie in [-1, 1]")
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    gamma = Polynomial(
        [
            2.0 * t - 1.0,
            1.0 + 2.0 * alpha2 * (1.0 - t) - 2.0 * alpha1 * t,
            2.0 * t - 1.0 - 2.0 * alpha1 * t - 2.0 * alpha2 * (1.0 - t),
            1.0,
        ]
    )
    return gamma, conj_reciprocal(gamma)


def gamma_rational(alpha1: float, alpha2: float, t: float) -> RationalDilatation:
    """omega = -z gamma / gamma* as a rational pair."""
    gamma, gamma_star = gamma_polys(alpha1, alpha2, t)
    return RationalDilatation(Polynomial([0.0, -1.0]) * gamma, gamma_star)


def dilatation_example213(t: float) -> RationalDilatation:
    """Combined dilatation z(z - t)/(1 - t z) of the worked strip/alpha pair."""
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    return RationalDilatation(Polynomial([0.0, -t, 1.0]), Polynomial([1.0, -t]))
