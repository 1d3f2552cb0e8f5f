"""Bounded convex regions of the plane and their offset contours.

Three shapes are supported: disks, segments, and strictly convex polygons
with counterclockwise vertices.  Degenerate point sets (a zero-radius disk or
a segment with equal endpoints) are allowed everywhere.  Neighborhoods are
treated as closed: membership tests use distance <= eps + membership_tol so
boundary points count reproducibly under floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

MEMBERSHIP_TOL = 1e-9
CONTOUR_TOL = 1e-9

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")


@dataclass(frozen=True)
class Segment:
    a: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple[complex, ...]

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        n = len(verts)
        if n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        for i in range(n):
            u = verts[(i + 1) % n] - verts[i]
            w = verts[(i + 2) % n] - verts[(i + 1) % n]
            if _cross(u, w) <= 0:
                raise ValueError(
                    "vertices must be strictly convex in counterclockwise order")
        object.__setattr__(self, "vertices", verts)


ConvexRegion = Disk | Segment | ConvexPolygon


@dataclass(frozen=True, eq=False)
class OffsetContour:
    """Closed sample sequence tracing {z : d(z, region) = offset_distance},
    winding once counterclockwise.  The curve closes implicitly from the last
    sample back to the first."""

    samples: np.ndarray
    offset_distance: float
    region: ConvexRegion

    def __post_init__(self):
        arr = np.array(self.samples, dtype=np.complex128)
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)
        object.__setattr__(self, "offset_distance", float(self.offset_distance))


def _cross(u: complex, w: complex) -> float:
    return u.real * w.imag - u.imag * w.real


def diameter(region: ConvexRegion) -> float:
    """Supremum of pairwise distances within the region."""
    if isinstance(region, Disk):
        return 2.0 * region.radius
    if isinstance(region, Segment):
        return abs(region.b - region.a)
    verts = region.vertices
    best = 0.0
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            best = max(best, abs(verts[i] - verts[j]))
    return best


def centroid(region: ConvexRegion) -> complex:
    if isinstance(region, Disk):
        return region.center
    if isinstance(region, Segment):
        return 0.5 * (region.a + region.b)
    verts = region.vertices
    area2 = 0.0
    acc = 0j
    for i in range(len(verts)):
        u, w = verts[i], verts[(i + 1) % len(verts)]
        c = _cross(u, w)
        area2 += c
        acc += (u + w) * c
    return acc / (3.0 * area2)


def _segment_closest(z: complex, a: complex, b: complex) -> complex:
    ab = b - a
    denom = abs(ab) ** 2
    if denom == 0:
        return a
    t = ((z - a).real * ab.real + (z - a).imag * ab.imag) / denom
    t = min(1.0, max(0.0, t))
    return a + t * ab


def _polygon_contains(z: complex, verts) -> bool:
    n = len(verts)
    for i in range(n):
        if _cross(verts[(i + 1) % n] - verts[i], z - verts[i]) < 0:
            return False
    return True


def distance(z: complex, region: ConvexRegion) -> tuple[float, complex]:
    """Distance from z to the region and the (unique) closest point.

    Returns (0, z) when z lies in the region.
    """
    z = complex(z)
    if isinstance(region, Disk):
        off = z - region.center
        r = abs(off)
        if r <= region.radius:
            return 0.0, z
        if r == 0:
            return region.radius, region.center
        w = region.center + region.radius * off / r
        return r - region.radius, w
    if isinstance(region, Segment):
        w = _segment_closest(z, region.a, region.b)
        d = abs(z - w)
        return (0.0, z) if d == 0 else (d, w)
    verts = region.vertices
    if _polygon_contains(z, verts):
        return 0.0, z
    best_d = math.inf
    best_w = verts[0]
    n = len(verts)
    for i in range(n):
        w = _segment_closest(z, verts[i], verts[(i + 1) % n])
        d = abs(z - w)
        if d < best_d:
            best_d, best_w = d, w
    return best_d, best_w


def distances(zs, region: ConvexRegion) -> np.ndarray:
    """Vectorized distance from each point of zs to the region."""
    arr = np.asarray(zs, dtype=np.complex128)
    if isinstance(region, Disk):
        return np.maximum(np.abs(arr - region.center) - region.radius, 0.0)
    if isinstance(region, Segment):
        a, b = region.a, region.b
        ab = b - a
        denom = abs(ab) ** 2
        if denom == 0:
            return np.abs(arr - a)
        t = ((arr - a).real * ab.real + (arr - a).imag * ab.imag) / denom
        t = np.clip(t, 0.0, 1.0)
        return np.abs(arr - (a + t * ab))
    verts = region.vertices
    n = len(verts)
    flat = arr.ravel()
    inside = np.ones(flat.shape, dtype=bool)
    best = np.full(flat.shape, np.inf)
    for i in range(n):
        u, w = verts[i], verts[(i + 1) % n]
        e = w - u
        rel = flat - u
        inside &= (e.real * rel.imag - e.imag * rel.real) >= 0
        denom = abs(e) ** 2
        t = np.clip((rel.real * e.real + rel.imag * e.imag) / denom, 0.0, 1.0)
        best = np.minimum(best, np.abs(flat - (u + t * e)))
    best[inside] = 0.0
    return best.reshape(arr.shape)


def in_neighborhood(z: complex, region: ConvexRegion, eps: float,
                    membership_tol: float = MEMBERSHIP_TOL) -> bool:
    """Closed eps-neighborhood membership; eps = 0 tests the region itself."""
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    return distance(z, region)[0] <= eps + membership_tol


def _offset_pieces(region: ConvexRegion, d: float):
    """Decompose the offset curve into ccw arcs and straight edges."""
    if isinstance(region, Disk):
        return [("arc", region.center, region.radius + d, 0.0, _TWO_PI)]
    if isinstance(region, Segment):
        a, b = region.a, region.b
        if a == b:
            return [("arc", a, d, 0.0, _TWO_PI)]
        t = (b - a) / abs(b - a)
        nrm = -1j * t
        th = math.atan2(nrm.imag, nrm.real)
        return [
            ("edge", a + nrm * d, b + nrm * d),
            ("arc", b, d, th, math.pi),
            ("edge", b - nrm * d, a - nrm * d),
            ("arc", a, d, th + math.pi, math.pi),
        ]
    verts = region.vertices
    n = len(verts)
    pieces = []
    normals = []
    for i in range(n):
        t = verts[(i + 1) % n] - verts[i]
        normals.append(-1j * t / abs(t))
    for i in range(n):
        nrm = normals[i]
        pieces.append(("edge", verts[i] + nrm * d, verts[(i + 1) % n] + nrm * d))
        th0 = math.atan2(nrm.imag, nrm.real)
        th1 = math.atan2(normals[(i + 1) % n].imag, normals[(i + 1) % n].real)
        sweep = (th1 - th0) % _TWO_PI
        pieces.append(("arc", verts[(i + 1) % n], d, th0, sweep))
    return pieces


def offset_contour(region: ConvexRegion, d: float,
                   min_samples: int = 64) -> OffsetContour:
    """Sample the outward offset curve at distance d > 0 from the region.

    Straight edges are offset in parallel and joined by circular arcs at the
    vertices; samples are spaced at arc length at most perimeter/min_samples.
    """
    if d <= 0:
        raise ValueError("offset distance must be positive")
    if min_samples < 4:
        raise ValueError("need at least 4 samples")
    pieces = _offset_pieces(region, d)
    lengths = []
    for piece in pieces:
        if piece[0] == "arc":
            lengths.append(piece[2] * piece[4])
        else:
            lengths.append(abs(piece[2] - piece[1]))
    total = sum(lengths)
    h = total / min_samples
    samples: list[complex] = []
    for piece, length in zip(pieces, lengths):
        if length == 0:
            continue
        m = max(1, math.ceil(length / h - 1e-12))
        if piece[0] == "arc":
            _, center, radius, th0, sweep = piece
            for j in range(m):
                th = th0 + sweep * j / m
                samples.append(center + radius * complex(math.cos(th), math.sin(th)))
        else:
            _, start, end = piece
            for j in range(m):
                samples.append(start + (end - start) * (j / m))
    return OffsetContour(np.array(samples), d, region)


def scale_region(region: ConvexRegion, factor: complex) -> ConvexRegion:
    """Image of the region under z -> factor * z (rotation and scaling)."""
    factor = complex(factor)
    if factor == 0:
        raise ValueError("factor must be nonzero")
    if isinstance(region, Disk):
        return Disk(factor * region.center, abs(factor) * region.radius)
    if isinstance(region, Segment):
        return Segment(factor * region.a, factor * region.b)
    return ConvexPolygon(tuple(factor * v for v in region.vertices))


def sample_point(region: ConvexRegion, rng: np.random.Generator) -> complex:
    """Uniform sample from the region (uniform along a segment)."""
    if isinstance(region, Disk):
        r = region.radius * math.sqrt(rng.random())
        th = _TWO_PI * rng.random()
        return region.center + r * complex(math.cos(th), math.sin(th))
    if isinstance(region, Segment):
        return region.a + rng.random() * (region.b - region.a)
    verts = region.vertices
    xs = [v.real for v in verts]
    ys = [v.imag for v in verts]
    while True:
        z = complex(rng.uniform(min(xs), max(xs)), rng.uniform(min(ys), max(ys)))
        if _polygon_contains(z, verts):
            return z


def convex_hull_region(points) -> ConvexRegion:
    """Convex hull of a finite point set as a region.

    Collapses to a point (zero-radius disk) or a segment when the hull is
    degenerate; otherwise returns a strictly convex ccw polygon.
    """
    pts = sorted({(complex(z).real, complex(z).imag) for z in points})
    if not pts:
        raise ValueError("need at least one point")
    if len(pts) == 1:
        return Disk(complex(*pts[0]), 0.0)
    span = max(abs(pts[-1][0] - pts[0][0]),
               max(p[1] for p in pts) - min(p[1] for p in pts))
    tol = 1e-13 * max(1.0, span) ** 2

    def half(seq):
        out: list[tuple[float, float]] = []
        for p in seq:
            while len(out) >= 2 and _cross(
                    complex(out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]),
                    complex(p[0] - out[-1][0], p[1] - out[-1][1])) <= tol:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) <= 2:
        return Segment(complex(*pts[0]), complex(*pts[-1]))
    return ConvexPolygon(tuple(complex(*p) for p in hull))
