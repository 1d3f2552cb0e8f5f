"""Contour-based certification of critical-point counts.

This is an independent route to lower bounds on the number of critical
points near a convex region: factor f into the polynomial of its zeros
inside the region times the remainder, surround the region with a
constant-offset contour that avoids small exclusion balls around the
remainder's zeros and poles, check that the inside factor's logarithmic
derivative dominates the remainder's on the contour (the Rouche hypothesis),
and then count via the argument principle.  The critical-point root finder
is never consulted; the winding integrand is evaluated purely from the known
zero and pole locations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (ContourBoundaryConflict, ContourNotFound, HypothesisUnmet,
                     MarginNonPositive, NonIntegerWinding, SampleAtSingularity)
from .rational import (CLUSTER_TOL, RationalFunction, log_derivative_values,
                       rational_product)
from .regions import (CONTOUR_TOL, MEMBERSHIP_TOL, ConvexRegion, OffsetContour,
                      distance, distances, offset_contour)

MARGIN_FLOOR = 1e-8      # below this, dominance is numerically uncertain
MAX_WINDING_SAMPLES = 2 ** 18
_WINDING_TOL = 0.1       # max distance of the raw integral to an integer


@dataclass(frozen=True)
class ExclusionBall:
    center: complex
    radius: float


@dataclass(frozen=True)
class ExclusionSet:
    """Closed balls around the remainder's zeros and poles; the contour must
    clear every ball by at least one extra radius."""

    balls: tuple[ExclusionBall, ...]

    def clears(self, samples: np.ndarray) -> bool:
        for ball in self.balls:
            if float(np.min(np.abs(samples - ball.center))) < 2.0 * ball.radius:
                return False
        return True


@dataclass(frozen=True)
class RoucheCertificate:
    """A verified lower bound on the critical points of ``function`` inside
    the eps-neighborhood of the contour's region."""

    contour: OffsetContour
    margin: float
    winding: int
    zeros_poles_inside: int
    critical_lower_bound: int
    valid: bool
    eps: float
    k: int
    function: RationalFunction


def split_instance(f: RationalFunction, region: ConvexRegion,
                   membership_tol: float = MEMBERSHIP_TOL
                   ) -> tuple[RationalFunction, RationalFunction]:
    """Factor f into (inside, remainder): inside is the monic polynomial of
    the zeros of f lying in the region, remainder carries everything else."""
    inside: list[complex] = []
    outside: list[complex] = []
    for z in f.zeros:
        if distance(z, region)[0] <= membership_tol:
            inside.append(z)
        else:
            outside.append(z)
    return (RationalFunction(tuple(inside), (), 1.0),
            RationalFunction(tuple(outside), f.poles, f.scale))


def perturb_to_simple(f: RationalFunction, delta: float = 1e-7, seed: int = 0,
                      cluster_tol: float = CLUSTER_TOL) -> RationalFunction:
    """Displace coincident zeros/poles by independent offsets of magnitude at
    most delta so all points become pairwise distinct.  Already-simple input
    is returned unchanged; the result is deterministic for a fixed seed."""
    pts = list(f.zeros) + list(f.poles)
    if _pairwise_separated(pts, cluster_tol):
        return f
    rng = np.random.default_rng(seed)
    for _ in range(100):
        moved = _displace_clusters(pts, delta, cluster_tol, rng)
        if _pairwise_separated(moved, cluster_tol):
            nz = len(f.zeros)
            return RationalFunction(tuple(moved[:nz]), tuple(moved[nz:]), f.scale)
    raise RuntimeError("could not separate coincident points; raise delta")


def _pairwise_separated(pts, tol: float) -> bool:
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(pts[i] - pts[j]) <= tol:
                return False
    return True


def _displace_clusters(pts, delta, tol, rng):
    moved = list(pts)
    for i in range(len(pts)):
        crowded = any(abs(pts[i] - pts[j]) <= tol
                      for j in range(len(pts)) if j != i)
        if crowded:
            r = delta * math.sqrt(rng.random())
            th = 2.0 * math.pi * rng.random()
            moved[i] = pts[i] + r * complex(math.cos(th), math.sin(th))
    return moved


def exclusion_set(remainder: RationalFunction, eps: float,
                  n_minus_k: int) -> ExclusionSet:
    """One ball of radius eps/(8(n-k)) per zero and pole of the remainder.

    A constant remainder yields the empty set.  With at most n - k points,
    any tangent chain of balls spans at most eps/4.
    """
    if remainder.is_constant:
        return ExclusionSet(())
    if n_minus_k < 1:
        raise ValueError("n_minus_k must be at least 1 for a nonconstant remainder")
    if eps <= 0:
        raise ValueError("eps must be positive")
    radius = eps / (8.0 * n_minus_k)
    balls = tuple(ExclusionBall(w, radius)
                  for w in remainder.zeros + remainder.poles)
    return ExclusionSet(balls)


def find_contour(region: ConvexRegion, eps: float, excl: ExclusionSet,
                 min_samples: int = 512) -> OffsetContour:
    """Pick a constant offset in (eps/2, eps) whose sampled contour clears
    every exclusion ball by at least one ball radius.

    Nine candidate offsets are tried, nearest the midline 3*eps/4 first.
    Raises ContourNotFound when all fail; that only means this one-parameter
    family is exhausted, not that no admissible path exists.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    clearance = eps / 20.0
    candidates = np.linspace(eps / 2.0 + clearance, eps - clearance, 9)
    midline = 0.75 * eps
    # equidistant pairs tie toward the smaller offset, robust to rounding
    for d in sorted(candidates,
                    key=lambda d: (round(abs(d - midline) / eps, 9), d)):
        contour = offset_contour(region, float(d), min_samples)
        if excl.clears(contour.samples):
            return contour
    raise ContourNotFound(
        "no constant-offset contour clears the exclusion balls")


def rouche_margin(inside: RationalFunction, remainder: RationalFunction,
                  contour: OffsetContour,
                  cluster_tol: float = CLUSTER_TOL) -> float:
    """Minimum over the contour samples of |inside'/inside| - |rem'/rem|,
    both logarithmic derivatives evaluated by their partial-fraction sums.

    Positive margin is the Rouche hypothesis for transferring zero counts.
    """
    z = contour.samples
    for w in (inside.zeros + inside.poles
              + remainder.zeros + remainder.poles):
        if float(np.min(np.abs(z - w))) <= cluster_tol:
            raise SampleAtSingularity(f"contour sample at zero/pole {w}")
    gv = np.abs(log_derivative_values(inside, z)) if not inside.is_constant \
        else np.zeros(len(z))
    hv = np.abs(log_derivative_values(remainder, z)) \
        if not remainder.is_constant else np.zeros(len(z))
    return float(np.min(gv - hv))


def _winding_from_values(values: np.ndarray, samples: np.ndarray) -> int:
    """Trapezoidal closed-curve integral of the sampled integrand, divided by
    2*pi*i and snapped to the nearest integer."""
    nxt_v = np.roll(values, -1)
    nxt_z = np.roll(samples, -1)
    integral = np.sum((nxt_z - samples) * (values + nxt_v) / 2.0)
    raw = integral / (2j * math.pi)
    nearest = round(raw.real)
    if abs(raw - nearest) > _WINDING_TOL:
        raise NonIntegerWinding(
            f"winding integral {raw:.6f} is not close to an integer")
    return int(nearest)


def winding_count(f: RationalFunction, contour: OffsetContour,
                  cluster_tol: float = CLUSTER_TOL) -> int:
    """Zeros minus poles of f enclosed by the contour, via the argument
    principle applied to f'/f along the sampled curve.

    Raises NonIntegerWinding when the sampling is too coarse to trust.
    """
    z = contour.samples
    for w in f.zeros + f.poles:
        if float(np.min(np.abs(z - w))) <= cluster_tol:
            raise SampleAtSingularity(f"zero/pole {w} lies on the contour")
    return _winding_from_values(log_derivative_values(f, z), z)


def _log_derivative_field(f: RationalFunction, z: np.ndarray):
    """Values of F and F' at z for F = f'/f, from the known points of f:
    F = sum 1/(z-a) - sum 1/(z-b), F' = -sum 1/(z-a)^2 + sum 1/(z-b)^2."""
    val = np.zeros_like(z)
    slope = np.zeros_like(z)
    for a in f.zeros:
        inv = 1.0 / (z - a)
        val += inv
        slope -= inv * inv
    for b in f.poles:
        inv = 1.0 / (z - b)
        val -= inv
        slope += inv * inv
    return val, slope


def certify(f: RationalFunction, region: ConvexRegion, eps: float, k: int,
            min_samples: int = 512, margin_floor: float = MARGIN_FLOOR,
            delta: float = 1e-7, seed: int = 0,
            membership_tol: float = MEMBERSHIP_TOL,
            contour_tol: float = CONTOUR_TOL) -> RoucheCertificate:
    """Certify that f has at least k - 1 critical points in the closed
    eps-neighborhood of the region, without locating any critical point.

    Pipeline: split off the zeros inside the region, perturb coincident
    points to simple position, build the exclusion balls, pick a clearing
    constant-offset contour, check the dominance margin, then count critical
    points inside the contour by the argument principle:

        winding of (gh)'/(gh)  =  #critical - (#zeros + #poles)   inside,

    so critical_lower_bound = winding + zeros_poles_inside, and the enclosed
    face lies inside the eps-neighborhood by construction.

    Raises MarginNonPositive, ContourNotFound or NonIntegerWinding when no
    certificate can be produced; none of these disproves the property.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if eps <= 0:
        raise ValueError("eps must be positive")
    inside, remainder = split_instance(f, region, membership_tol)
    if len(inside.zeros) < k:
        raise HypothesisUnmet(
            f"only {len(inside.zeros)} zeros in the region, need {k}")
    n = f.total_count
    combined = perturb_to_simple(
        RationalFunction(inside.zeros + remainder.zeros, remainder.poles,
                         f.scale), delta=delta, seed=seed)
    n_in = len(inside.zeros)
    inside = RationalFunction(combined.zeros[:n_in], (), 1.0)
    remainder = RationalFunction(combined.zeros[n_in:], combined.poles, f.scale)

    excl = exclusion_set(remainder, eps, max(n - k, 1))
    contour = find_contour(region, eps, excl, min_samples)
    margin = rouche_margin(inside, remainder, contour)
    if margin <= margin_floor:
        raise MarginNonPositive(
            f"dominance margin {margin:.3e} is not safely positive")

    product = rational_product(inside, remainder)
    while True:
        val, slope = _log_derivative_field(product, contour.samples)
        if float(np.min(np.abs(val))) == 0.0:
            raise SampleAtSingularity("integrand vanished at a contour sample")
        try:
            winding = _winding_from_values(slope / val, contour.samples)
            break
        except NonIntegerWinding:
            if len(contour.samples) * 2 > MAX_WINDING_SAMPLES:
                raise
            contour = offset_contour(region, contour.offset_distance,
                                     len(contour.samples) * 2)
            margin = min(margin, rouche_margin(inside, remainder, contour))
            if margin <= margin_floor:
                raise MarginNonPositive(
                    f"dominance margin {margin:.3e} lost under refinement")

    pts = np.asarray(product.zeros + product.poles, dtype=np.complex128)
    dist = distances(pts, region)
    if bool(np.any(np.abs(dist - contour.offset_distance) <= contour_tol)):
        raise ContourBoundaryConflict("a zero/pole lies on the contour")
    zeros_poles_inside = int(np.count_nonzero(dist < contour.offset_distance))
    bound = winding + zeros_poles_inside
    return RoucheCertificate(
        contour=contour,
        margin=margin,
        winding=winding,
        zeros_poles_inside=zeros_poles_inside,
        critical_lower_bound=bound,
        valid=bound >= k - 1,
        eps=eps,
        k=k,
        function=product,
    )
