"""Concrete analytic function families on the unit disk.

Two prevertex families drive everything downstream: the rational family
F_alpha(z) = z(1 - alpha z)/(1 - z^2) and the vertical-strip family
F_theta(z) = log((1 + z e^{i theta})/(1 + z e^{-i theta})) / (2i sin theta).
Both are normalized (F(0) = 0, F'(0) = 1) and univalent, convex in the
direction of the imaginary axis.

Also provided: monomial dilatations c z^n and the closed-form analytic /
co-analytic parts of the sheared maps for the dilatations -z, z and the
worked theta = pi/2, alpha = -1 pair, used as oracles for the numeric
shear construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

# Evaluation is restricted to the open disk; closed forms have poles on
# |z| = 1, so verification grids stay at r <= R_MAX_GRID and witness
# searches may push to R_MAX_SEARCH.
R_MAX_GRID = 0.95
R_MAX_SEARCH = 0.999


class DomainError(ValueError):
    """Evaluation requested at a point outside the open unit disk."""


class UnsupportedDilatation(ValueError):
    """No closed form is available for the requested dilatation."""


def _in_disk(z):
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("evaluation point outside the open unit disk")
    return z


def _maybe_scalar(v):
    return complex(v) if np.ndim(v) == 0 else v


@dataclass(frozen=True)
class AnalyticFunction:
    """Evaluable handle on the disk: value and analytic derivative."""

    value_at: Callable
    derivative_at: Callable
    label: str = ""

    def __call__(self, z):
        return self.value_at(z)


@dataclass(frozen=True)
class MonomialDilatation:
    """omega(z) = c z^n with |c| <= 1, so |omega| < 1 on the open disk."""

    coefficient: complex
    power: int

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("power must be >= 1")
        if abs(self.coefficient) > 1.0 + 1e-15:
            raise ValueError("|coefficient| must be <= 1")

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return _maybe_scalar(self.coefficient * z**self.power)

    def __str__(self):
        c, n = self.coefficient, self.power
        zpow = "z" if n == 1 else f"z^{n}"
        if c == 1:
            return zpow
        if c == -1:
            return f"-{zpow}"
        if c.imag == 0:
            return f"{c.real:g}*{zpow}"
        sign = "+" if c.imag >= 0 else "-"
        return f"{c.real:g}{sign}{abs(c.imag):g}i*{zpow}"


@dataclass(frozen=True)
class FamilyParams:
    """Which prevertex family a constituent map comes from."""

    family: str  # "alpha" or "theta"
    alpha: float | None = None
    theta: float | None = None

    def __post_init__(self):
        if self.family == "alpha":
            if self.alpha is None or not -1.0 <= self.alpha <= 1.0:
                raise ValueError("alpha must be given and lie in [-1, 1]")
        elif self.family == "theta":
            if self.theta is None or not 0.0 < self.theta < math.pi:
                raise ValueError("theta must be given and lie in (0, pi)")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def param(self):
        return self.alpha if self.family == "alpha" else self.theta

    def prevertex(self) -> AnalyticFunction:
        if self.family == "alpha":
            return prevertex_alpha(self.alpha)
        return prevertex_theta(self.theta)


def prevertex_alpha(alpha: float) -> AnalyticFunction:
    """F_alpha(z) = z(1 - alpha z)/(1 - z^2), alpha in [-1, 1]."""
    if not -1.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [-1, 1]")

    def value(z):
        z = _in_disk(z)
        return _maybe_scalar(z * (1.0 - alpha * z) / (1.0 - z * z))

    def derivative(z):
        z = _in_disk(z)
        return _maybe_scalar((1.0 + z * z - 2.0 * alpha * z) / (1.0 - z * z) ** 2)

    return AnalyticFunction(value, derivative, f"F_alpha({alpha:g})")


def prevertex_theta(theta: float) -> AnalyticFunction:
    """Vertical strip map, theta in (0, pi), principal logarithm."""
    if not 0.0 < theta < math.pi:
        raise ValueError("theta must lie in (0, pi)")
    eip = np.exp(1j * theta)
    eim = np.exp(-1j * theta)
    c = 1.0 / (2j * math.sin(theta))

    def value(z):
        z = _in_disk(z)
        return _maybe_scalar(c * np.log((1.0 + z * eip) / (1.0 + z * eim)))

    def derivative(z):
        z = _in_disk(z)
        return _maybe_scalar(1.0 / ((1.0 + z * eip) * (1.0 + z * eim)))

    return AnalyticFunction(value, derivative, f"F_theta({theta:g})")


def _log_halfplane(w):
    # Arguments stay in the right half plane for |z| < 1; principal log.
    return np.log(w)


def closed_form_parts_alpha(alpha: float, omega: MonomialDilatation):
    """Closed-form (h, g) for the alpha family sheared by -z or z.

    g is realized as F_alpha - h, which coincides with the printed
    co-analytic part and keeps h + g = F_alpha exact by construction.
    """
    if not -1.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [-1, 1]")
    F = prevertex_alpha(alpha)
    a = alpha
    key = (complex(omega.coefficient), omega.power)
    if key == (-1 + 0j, 1):

        def h_val(z):
            z = _in_disk(z)
            return _maybe_scalar(
                (1.0 - a) / (4.0 * (1.0 - z) ** 2)
                - (1.0 + a) / (4.0 * (1.0 + z))
                + (1.0 + a) / 8.0 * _log_halfplane((1.0 + z) / (1.0 - z))
                + a / 2.0
            )

        def h_der(z):
            z = _in_disk(z)
            return _maybe_scalar(
                (1.0 - a) / (2.0 * (1.0 - z) ** 3)
                + (1.0 + a) / (4.0 * (1.0 + z) ** 2)
                + (1.0 + a) / (4.0 * (1.0 - z * z))
            )

        label = f"h[alpha={a:g},omega=-z]"
    elif key == (1 + 0j, 1):

        def h_val(z):
            z = _in_disk(z)
            return _maybe_scalar(
                (1.0 - a) / (4.0 * (1.0 - z))
                - (1.0 + a) / (4.0 * (1.0 + z) ** 2)
                + (1.0 - a) / 8.0 * _log_halfplane((1.0 + z) / (1.0 - z))
                + a / 2.0
            )

        def h_der(z):
            z = _in_disk(z)
            return _maybe_scalar(
                (1.0 - a) / (4.0 * (1.0 - z) ** 2)
                + (1.0 + a) / (2.0 * (1.0 + z) ** 3)
                + (1.0 - a) / (4.0 * (1.0 - z * z))
            )

        label = f"h[alpha={a:g},omega=z]"
    else:
        raise UnsupportedDilatation(
            f"no closed form for omega = {omega}; use the quadrature shear"
        )

    h = AnalyticFunction(h_val, h_der, label)
    g = AnalyticFunction(
        lambda z: F.value_at(z) - h_val(z),
        lambda z: F.derivative_at(z) - h_der(z),
        label.replace("h[", "g["),
    )
    return h, g


def _atan(z):
    # Principal-branch arctan for complex input; (1 + iz)/(1 - iz) stays
    # in the right half plane on the disk.
    return _maybe_scalar(
        np.log((1.0 + 1j * np.asarray(z, complex)) / (1.0 - 1j * np.asarray(z, complex)))
        / 2j
    )


def closed_form_parts_example213():
    """The worked theta = pi/2 / alpha = -1 pair of sheared maps.

    Returns ((h1, g1), (h2, g2)): the strip map arctan z sheared by -z
    and z/(1-z) sheared by z^2, with h1 + g1 = arctan z and
    h2 + g2 = z/(1-z).
    """

    def h1_val(z):
        z = _in_disk(z)
        return _maybe_scalar(
            0.5 * _atan(z) - 0.5 * np.log(1.0 - z) + 0.25 * np.log(1.0 + z * z)
        )

    def h1_der(z):
        z = _in_disk(z)
        return _maybe_scalar(1.0 / ((1.0 - z) * (1.0 + z * z)))

    def g1_val(z):
        z = _in_disk(z)
        return _maybe_scalar(
            0.5 * _atan(z) + 0.5 * np.log(1.0 - z) - 0.25 * np.log(1.0 + z * z)
        )

    def g1_der(z):
        z = _in_disk(z)
        return _maybe_scalar(-z / ((1.0 - z) * (1.0 + z * z)))

    def h2_val(z):
        z = _in_disk(z)
        return _maybe_scalar(
            z / (2.0 * (1.0 - z)) - 0.5 * np.log(1.0 - z) + 0.25 * np.log(1.0 + z * z)
        )

    def h2_der(z):
        z = _in_disk(z)
        return _maybe_scalar(1.0 / ((1.0 - z) ** 2 * (1.0 + z * z)))

    def g2_val(z):
        z = _in_disk(z)
        return _maybe_scalar(
            z / (2.0 * (1.0 - z)) + 0.5 * np.log(1.0 - z) - 0.25 * np.log(1.0 + z * z)
        )

    def g2_der(z):
        z = _in_disk(z)
        return _maybe_scalar(z * z / ((1.0 - z) ** 2 * (1.0 + z * z)))

    h1 = AnalyticFunction(h1_val, h1_der, "h[theta=pi/2,omega=-z]")
    g1 = AnalyticFunction(g1_val, g1_der, "g[theta=pi/2,omega=-z]")
    h2 = AnalyticFunction(h2_val, h2_der, "h[alpha=-1,omega=z^2]")
    g2 = AnalyticFunction(g2_val, g2_der, "g[alpha=-1,omega=z^2]")
    return (h1, g1), (h2, g2)
