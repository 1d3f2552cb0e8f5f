"""Static SVG scene rendering: region, neighborhood, points, contour.

Output is deterministic text (fixed six-decimal formatting, no timestamps),
so identical scenes serialize to identical bytes.  The y axis is flipped on
emission so the picture matches mathematical orientation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certifier import ExclusionSet
from .regions import (ConvexPolygon, ConvexRegion, Disk, OffsetContour,
                      Segment, offset_contour)

_NEIGHBORHOOD_SAMPLES = 240


@dataclass(frozen=True)
class Scene:
    region: ConvexRegion
    eps: float
    zeros: tuple[complex, ...] = ()
    poles: tuple[complex, ...] = ()
    critical: tuple[complex, ...] = ()
    contour: OffsetContour | None = None
    exclusions: ExclusionSet | None = None


def _fmt(x: float) -> str:
    out = f"{x:.6f}"
    return "0.000000" if out == "-0.000000" else out


def _region_extent(region: ConvexRegion) -> list[complex]:
    if isinstance(region, Disk):
        c, r = region.center, region.radius
        return [c + r, c - r, c + 1j * r, c - 1j * r]
    if isinstance(region, Segment):
        return [region.a, region.b]
    return list(region.vertices)


def _bounding_box(scene: Scene):
    pts: list[complex] = []
    pad_r = scene.eps if scene.eps > 0 else 0.0
    for z in _region_extent(scene.region):
        pts.extend([z + pad_r, z - pad_r, z + 1j * pad_r, z - 1j * pad_r])
    pts.extend(scene.zeros)
    pts.extend(scene.poles)
    pts.extend(scene.critical)
    if scene.contour is not None:
        pts.extend(complex(z) for z in scene.contour.samples)
    if scene.exclusions is not None:
        for ball in scene.exclusions.balls:
            pts.extend([ball.center + ball.radius, ball.center - ball.radius,
                        ball.center + 1j * ball.radius,
                        ball.center - 1j * ball.radius])
    xs = [z.real for z in pts]
    ys = [z.imag for z in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-6)
    pad = 0.05 * span
    return x0 - pad, x1 + pad, y0 - pad, y1 + pad


def _polyline(points, close: bool) -> str:
    coords = " ".join(f"{_fmt(z.real)},{_fmt(-z.imag)}" for z in points)
    tag = "polygon" if close else "polyline"
    return f'<{tag} points="{coords}"'


def render_svg(scene: Scene) -> str:
    """Render the scene as an SVG 1.1 document string."""
    x0, x1, y0, y1 = _bounding_box(scene)
    width, height = x1 - x0, y1 - y0
    marker = 0.012 * max(width, height)
    stroke = 0.4 * marker
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(-y1)} {_fmt(width)} {_fmt(height)}">',
    ]
    region = scene.region
    if isinstance(region, Disk):
        parts.append(
            f'<circle cx="{_fmt(region.center.real)}" '
            f'cy="{_fmt(-region.center.imag)}" r="{_fmt(region.radius)}" '
            f'fill="#cfe3f7" stroke="#5b8db8" stroke-width="{_fmt(stroke)}"/>')
    elif isinstance(region, Segment):
        parts.append(
            f'<line x1="{_fmt(region.a.real)}" y1="{_fmt(-region.a.imag)}" '
            f'x2="{_fmt(region.b.real)}" y2="{_fmt(-region.b.imag)}" '
            f'stroke="#5b8db8" stroke-width="{_fmt(2 * stroke)}"/>')
    else:
        parts.append(
            _polyline(region.vertices, close=True)
            + f' fill="#cfe3f7" stroke="#5b8db8" stroke-width="{_fmt(stroke)}"/>')
    if scene.eps > 0:
        ring = offset_contour(scene.region, scene.eps, _NEIGHBORHOOD_SAMPLES)
        parts.append(
            _polyline([complex(z) for z in ring.samples], close=True)
            + f' fill="none" stroke="#7a7a7a" stroke-width="{_fmt(stroke)}"'
            f' stroke-dasharray="{_fmt(3 * stroke)} {_fmt(3 * stroke)}"/>')
    if scene.exclusions is not None:
        for ball in scene.exclusions.balls:
            parts.append(
                f'<circle cx="{_fmt(ball.center.real)}" '
                f'cy="{_fmt(-ball.center.imag)}" r="{_fmt(ball.radius)}" '
                f'fill="#dddddd" fill-opacity="0.5" stroke="#aaaaaa" '
                f'stroke-width="{_fmt(0.5 * stroke)}"/>')
    if scene.contour is not None:
        parts.append(
            _polyline([complex(z) for z in scene.contour.samples], close=True)
            + f' fill="none" stroke="#e07b39" stroke-width="{_fmt(stroke)}"/>')
    for z in scene.zeros:
        parts.append(f'<circle cx="{_fmt(z.real)}" cy="{_fmt(-z.imag)}" '
                     f'r="{_fmt(marker)}" fill="#1f3b57"/>')
    for p in scene.poles:
        x, y = p.real, -p.imag
        parts.append(
            f'<path d="M {_fmt(x - marker)} {_fmt(y - marker)} '
            f'L {_fmt(x + marker)} {_fmt(y + marker)} '
            f'M {_fmt(x - marker)} {_fmt(y + marker)} '
            f'L {_fmt(x + marker)} {_fmt(y - marker)}" '
            f'stroke="#b03a2e" stroke-width="{_fmt(0.8 * stroke)}" fill="none"/>')
    for c in scene.critical:
        x, y = c.real, -c.imag
        parts.append(
            f'<path d="M {_fmt(x)} {_fmt(y - marker)} '
            f'L {_fmt(x + 0.9 * marker)} {_fmt(y + 0.7 * marker)} '
            f'L {_fmt(x - 0.9 * marker)} {_fmt(y + 0.7 * marker)} Z" '
            f'fill="#2d7a3a"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
