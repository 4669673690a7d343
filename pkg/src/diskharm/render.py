"""Deterministic SVG/CSV rendering of harmonic map images.

The image of the disk is drawn as the images of concentric circles
(rings) and radial segments (rays), the classic mesh used for the
figures these maps are known by.  Output is byte-stable for a fixed
RenderSpec: fixed sample counts, fixed numeric formats, no clocks and
no randomness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .shear import HarmonicMap


@dataclass(frozen=True)
class RenderSpec:
    rings: int = 10
    rays: int = 24
    r_max: float = 0.95
    samples_per_curve: int = 256

    def __post_init__(self):
        if self.rings < 1 or self.rays < 4 or self.samples_per_curve < 64:
            raise ValueError(
                "need rings >= 1, rays >= 4 and samples_per_curve >= 64"
            )
        if not 0.0 < self.r_max < 1.0:
            raise ValueError("r_max must lie in (0, 1)")


def sample_mesh(f: HarmonicMap, spec: RenderSpec):
    """Image curves of the polar mesh under f.

    Returns (rings, rays): lists of complex arrays.  Ring k is the image
    of |z| = r_max (k+1)/rings; ray k runs from 0 out to r_max along
    direction 2 pi k / rays.
    """
    n = spec.samples_per_curve
    th = 2.0 * np.pi * np.arange(n + 1) / n  # closed curve: repeat start
    rings = []
    for k in range(1, spec.rings + 1):
        r = spec.r_max * k / spec.rings
        rings.append(f(r * np.exp(1j * th)))
    rays = []
    s = np.linspace(0.0, spec.r_max, n)
    for k in range(spec.rays):
        rays.append(f(s * np.exp(2j * np.pi * k / spec.rays)))
    return rings, rays


def boundary_csv(f: HarmonicMap, spec: RenderSpec) -> str:
    """CSV of the outermost ring: r, angle, Re f, Im f; 17 significant
    digits, newline-terminated rows."""
    n = spec.samples_per_curve
    th = 2.0 * np.pi * np.arange(n) / n
    w = f(spec.r_max * np.exp(1j * th))
    lines = ["r,angle,re_f,im_f"]
    for ang, val in zip(th, np.atleast_1d(w)):
        lines.append(
            f"{spec.r_max:.17g},{ang:.17g},{val.real:.17g},{val.imag:.17g}"
        )
    return "\n".join(lines) + "\n"


def _fmt(v):
    return f"{v:.6f}"


def _polyline(points, stroke, width):
    pts = " ".join(f"{_fmt(p.real)},{_fmt(-p.imag)}" for p in points)
    return (
        f'<polyline fill="none" stroke="{stroke}" '
        f'stroke-width="{_fmt(width)}" points="{pts}"/>'
    )


def render_svg(f: HarmonicMap, spec: RenderSpec) -> str:
    """SVG 1.1 document of the mesh image, viewport = bbox + 5% margin."""
    rings, rays = sample_mesh(f, spec)
    allpts = np.concatenate(rings + rays)
    xmin, xmax = allpts.real.min(), allpts.real.max()
    ymin, ymax = allpts.imag.min(), allpts.imag.max()
    mx = 0.05 * (xmax - xmin) or 1e-3
    my = 0.05 * (ymax - ymin) or 1e-3
    x0, y0 = xmin - mx, -(ymax + my)  # svg y axis points down
    wbox, hbox = (xmax - xmin) + 2 * mx, (ymax - ymin) + 2 * my
    stroke_w = 0.002 * max(wbox, hbox)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(wbox)} {_fmt(hbox)}" '
        f'width="640" height="{_fmt(640 * hbox / wbox)}">',
        # Axes for orientation.
        f'<line x1="{_fmt(x0)}" y1="0" x2="{_fmt(x0 + wbox)}" y2="0" '
        f'stroke="#bbbbbb" stroke-width="{_fmt(stroke_w)}"/>',
        f'<line x1="0" y1="{_fmt(y0)}" x2="0" y2="{_fmt(y0 + hbox)}" '
        f'stroke="#bbbbbb" stroke-width="{_fmt(stroke_w)}"/>',
    ]
    for curve in rays:
        parts.append(_polyline(curve, "#7799cc", stroke_w))
    for k, curve in enumerate(rings):
        color = "#000000" if k == len(rings) - 1 else "#cc6666"
        parts.append(_polyline(curve, color, stroke_w))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def bounding_box(f: HarmonicMap, spec: RenderSpec):
    """(xmin, xmax, ymin, ymax) of the sampled mesh image."""
    rings, rays = sample_mesh(f, spec)
    allpts = np.concatenate(rings + rays)
    return (
        float(allpts.real.min()),
        float(allpts.real.max()),
        float(allpts.imag.min()),
        float(allpts.imag.max()),
    )
