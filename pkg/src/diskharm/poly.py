"""Complex polynomial algebra and unit-disk zero counting.

Polynomials are stored as ascending-power complex coefficient vectors.
Zero counting inside |z| = 1 runs a chain of Cohn reductions (each valid
step peels off exactly one zero inside the circle) and falls back to a
simultaneous-iteration root finder whenever the reduction precondition
|c0| < |cn| fails or the chain bottoms out.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Degree trimming, relative to the largest coefficient magnitude.
TAU_TRIM = 1e-13
# Safety margin on the strict |c0| < |cn| Cohn precondition.
TAU_COHN = 1e-10
# A root r counts as "on the circle" when ||r| - 1| <= TAU_CIRCLE.
TAU_CIRCLE = 1e-8
# Residual acceptance for the root finder: |p(r)| <= TAU_ROOT * scale(p).
TAU_ROOT = 1e-9
MAX_ITERS = 500


class PreconditionViolated(ValueError):
    """Cohn reduction attempted with |c0| >= |cn| (up to margin)."""


class NoConvergence(RuntimeError):
    """Root iteration failed the residual test after MAX_ITERS sweeps."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals


class Polynomial:
    """Complex polynomial c0 + c1 z + ... + cn z^n.

    Trailing coefficients below TAU_TRIM * max|c| are dropped at
    construction, so ``degree`` always names a retained coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = np.atleast_1d(np.asarray(coeffs, dtype=complex))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        scale = np.max(np.abs(c))
        if scale == 0.0:
            c = c[:1]
        else:
            keep = c.size
            while keep > 1 and abs(c[keep - 1]) <= TAU_TRIM * scale:
                keep -= 1
            c = c[:keep]
        self.coeffs = c

    @property
    def degree(self):
        return self.coeffs.size - 1

    @property
    def scale(self):
        return float(np.max(np.abs(self.coeffs)))

    def __call__(self, z):
        return eval_poly(self, z)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(
            np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __add__(self, other):
        other = _coerce(other)
        n = max(self.coeffs.size, other.coeffs.size)
        a = np.zeros(n, dtype=complex)
        a[: self.coeffs.size] = self.coeffs
        a[: other.coeffs.size] += other.coeffs
        return Polynomial(a)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return self + (-1.0) * _coerce(other)

    def __rsub__(self, other):
        return _coerce(other) + (-1.0) * self

    def __mul__(self, other):
        if isinstance(other, (int, float, complex, np.number)):
            return Polynomial(self.coeffs * complex(other))
        other = _coerce(other)
        return Polynomial(np.convolve(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def allclose(self, other, rtol=1e-12):
        """Coefficientwise comparison relative to the larger scale."""
        other = _coerce(other)
        n = max(self.coeffs.size, other.coeffs.size)
        a = np.zeros(n, dtype=complex)
        b = np.zeros(n, dtype=complex)
        a[: self.coeffs.size] = self.coeffs
        b[: other.coeffs.size] = other.coeffs
        ref = max(self.scale, other.scale, 1e-300)
        return bool(np.all(np.abs(a - b) <= rtol * ref))


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, float, complex, np.number)):
        return Polynomial([complex(value)])
    return Polynomial(value)


@dataclass(frozen=True)
class ZeroCount:
    """Zeros of a polynomial split by position relative to |z| = 1."""

    inside: int
    on_circle: int
    outside: int
    method: str  # "cohn_chain" or "root_oracle"

    @property
    def total(self):
        return self.inside + self.on_circle + self.outside


def eval_poly(p: Polynomial, z):
    """Horner evaluation; accepts scalars or numpy arrays."""
    z = np.asarray(z, dtype=complex)
    out = np.full(z.shape, p.coeffs[-1], dtype=complex)
    for c in p.coeffs[-2::-1]:
        out = out * z + c
    if out.ndim == 0:
        return complex(out)
    return out


def conj_reciprocal(p: Polynomial) -> Polynomial:
    """p*(z) = z^n conj(p(1/conj z)): reversed, conjugated coefficients."""
    return Polynomial(np.conj(p.coeffs[::-1]))


def cohn_step(p: Polynomial) -> Polynomial:
    """One Cohn reduction: (conj(cn) p - c0 p*) / z, degree n-1.

    The constant term of conj(cn) p - c0 p* cancels identically, so the
    z-division is an index shift; the dropped term is asserted tiny
    rather than divided out numerically.
    """
    n = p.degree
    if n < 1:
        raise PreconditionViolated("degree must be >= 1")
    c = p.coeffs
    a0, an = c[0], c[-1]
    s = p.scale
    if abs(a0) >= abs(an) - TAU_COHN * s:
        raise PreconditionViolated(
            f"|c0| = {abs(a0):.3e} not strictly below |cn| = {abs(an):.3e}"
        )
    star = np.conj(c[::-1])
    q = np.conj(an) * c - a0 * star
    if abs(q[0]) > 10.0 * TAU_TRIM * s:
        raise PreconditionViolated(
            f"constant term {abs(q[0]):.3e} did not cancel in reduction"
        )
    return Polynomial(q[1:])


def roots(p: Polynomial):
    """All degree-many roots by Aberth-Ehrlich simultaneous iteration.

    Zeros at the origin are stripped off first (the iteration's inverse
    distances degenerate for coincident points).  Every returned root r
    satisfies |p(r)| <= TAU_ROOT * scale(p).
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1 to extract roots")
    c = p.coeffs
    s = p.scale
    at_origin = 0
    while c.size > 1 and abs(c[0]) <= TAU_TRIM * s:
        c = c[1:]
        at_origin += 1
    found = [0j] * at_origin
    n = c.size - 1
    if n == 0:
        return found
    if n == 1:
        found.append(complex(-c[0] / c[1]))
        return found

    monic = c / c[-1]
    dcoef = monic[1:] * np.arange(1, n + 1)

    def horner(coefs, x):
        out = np.full(x.shape, coefs[-1], dtype=complex)
        for cc in coefs[-2::-1]:
            out = out * x + cc
        return out

    def iterate(z):
        for _ in range(MAX_ITERS):
            pv = horner(monic, z)
            dv = horner(dcoef, z)
            dv = np.where(dv == 0, 1e-300, dv)
            newton = pv / dv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            sums = np.sum(1.0 / diff, axis=1)
            denom = 1.0 - newton * sums
            denom = np.where(denom == 0, 1e-300, denom)
            step = newton / denom
            z = z - step
            if np.max(np.abs(step)) < 1e-15 * (1.0 + np.max(np.abs(z))):
                break
        return z

    abs_poly = Polynomial(np.abs(p.coeffs))

    def residuals(z):
        # Backward error per root: |p(r)| relative to sum_k |c_k| |r|^k,
        # so far-out roots (tiny leading coefficient) are judged fairly.
        return np.abs(eval_poly(p, z)) / np.abs(eval_poly(abs_poly, np.abs(z)))

    # Perturbed roots of unity scaled by the Cauchy bound; deterministic.
    cauchy = 1.0 + float(np.max(np.abs(monic[:-1])))
    k = np.arange(n)
    z = iterate(0.5 * cauchy * np.exp(2j * np.pi * (k + 0.35) / n + 0.45j))

    res = residuals(z)
    if np.max(res) > TAU_ROOT:
        # The circle start occasionally stalls; re-seed from companion
        # matrix eigenvalues and polish with the same iteration.
        z = iterate(np.asarray(np.roots(monic[::-1]), dtype=complex))
        res = residuals(z)
    if np.max(res) > TAU_ROOT:
        raise NoConvergence(
            f"max relative residual {np.max(res):.3e} exceeds "
            f"{TAU_ROOT:.3e} after {MAX_ITERS} iterations",
            residuals=res,
        )
    found.extend(complex(r) for r in z)
    return found


def _classify(rts):
    inside = on = outside = 0
    for r in rts:
        m = abs(r)
        if abs(m - 1.0) <= TAU_CIRCLE:
            on += 1
        elif m < 1.0:
            inside += 1
        else:
            outside += 1
    return inside, on, outside


def count_zeros_unit_disk(p: Polynomial) -> ZeroCount:
    """Count zeros inside / on / outside |z| = 1.

    Runs Cohn reductions while the strict precondition holds (each step
    accounts for one inside zero); any remainder is classified through
    the root oracle.  ``method`` records which path concluded the count:
    "cohn_chain" when the chain exhausted the polynomial down to degree
    <= 1, "root_oracle" when a reduction was refused.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    inside = 0
    q = p
    method = "cohn_chain"
    while q.degree > 1:
        try:
            q = cohn_step(q)
        except PreconditionViolated:
            method = "root_oracle"
            break
        inside += 1
    on = outside = 0
    if q.degree >= 1:
        i2, on, outside = _classify(roots(q))
        inside += i2
    return ZeroCount(inside=inside, on_circle=on, outside=outside, method=method)
