"""Complex polynomials and rational functions represented by their roots.

A rational function is stored as its multisets of zeros and poles (repeated
entries encode multiplicity) together with a leading coefficient.  Point
configurations are the primary objects here; coefficient vectors are expanded
on demand, and the critical-point machinery works from the partial-fraction
form of the logarithmic derivative so that clustered configurations stay well
conditioned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MultiplicityViolation, NonConvergence

ROOT_TOL = 1e-12     # per-root correction tolerance for the root iteration
CLUSTER_TOL = 1e-9   # grouping tolerance for multiplicity and cancellation

_TRIM_REL = 1e-9     # leading coefficients below this relative floor are noise
_GOLDEN_ANGLE = math.pi * (3.0 - math.sqrt(5.0))
_SMALL_DEGREE = 14   # below this, plain Python beats numpy dispatch overhead


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, coefficients in ascending degree order.

    Exactly-zero leading coefficients are stripped on construction, so the
    leading coefficient is nonzero unless the polynomial is identically zero
    (represented as the single coefficient 0).
    """

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        if not coeffs:
            coeffs = (0j,)
        end = len(coeffs)
        while end > 1 and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coefficients", coeffs[:end])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coefficients) == 1 and self.coefficients[0] == 0

    @classmethod
    def from_roots(cls, roots, scale: complex = 1.0) -> "Polynomial":
        coeffs = np.array([complex(scale)], dtype=np.complex128)
        for r in roots:
            coeffs = np.convolve(coeffs, np.array([-complex(r), 1.0 + 0j]))
        return cls(tuple(coeffs))


@dataclass(frozen=True)
class RationalFunction:
    """scale * prod(z - zero) / prod(z - pole), zeros and poles as multisets."""

    zeros: tuple[complex, ...]
    poles: tuple[complex, ...]
    scale: complex = 1.0 + 0j

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(complex(z) for z in self.zeros))
        object.__setattr__(self, "poles", tuple(complex(p) for p in self.poles))
        object.__setattr__(self, "scale", complex(self.scale))
        if self.scale == 0:
            raise ValueError("scale must be nonzero")

    @property
    def total_count(self) -> int:
        """Combined number of zeros and poles, with multiplicity."""
        return len(self.zeros) + len(self.poles)

    @property
    def is_constant(self) -> bool:
        return not self.zeros and not self.poles

    def numerator(self) -> Polynomial:
        return Polynomial.from_roots(self.zeros, self.scale)

    def denominator(self) -> Polynomial:
        return Polynomial.from_roots(self.poles, 1.0)


@dataclass(frozen=True)
class RootSet:
    """Roots returned by an iteration, plus the worst residual at them."""

    points: tuple[complex, ...]
    residual: float


def poly_eval(p: Polynomial, z: complex) -> complex:
    """Evaluate by Horner's scheme, highest degree first."""
    acc = 0j
    for c in reversed(p.coefficients):
        acc = acc * z + c
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    c = p.coefficients
    if len(c) == 1:
        return Polynomial((0j,))
    return Polynomial(tuple(i * c[i] for i in range(1, len(c))))


def poly_roots(p: Polynomial, root_tol: float = ROOT_TOL,
               max_iterations: int = 200) -> RootSet:
    """All deg(p) roots with multiplicity, by simultaneous (Aberth) iteration.

    Raises NonConvergence if the corrections have not settled after
    ``max_iterations`` rounds; the caller may retry with perturbed input.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no root set")
    coeffs = list(p.coefficients)
    at_origin = 0
    while at_origin < len(coeffs) - 1 and coeffs[at_origin] == 0:
        at_origin += 1
    coeffs = coeffs[at_origin:]
    deg = len(coeffs) - 1
    if deg == 0:
        return RootSet((0j,) * at_origin, 0.0)
    if deg <= _SMALL_DEGREE:
        roots, residual = _aberth_small(coeffs, root_tol, max_iterations)
    else:
        roots, residual = _aberth(np.asarray(coeffs, dtype=np.complex128),
                                  root_tol, max_iterations)
    return RootSet((0j,) * at_origin + tuple(roots), residual)


def _initial_circle(coeffs, deg: int):
    # Fujiwara root bound: tight even when the coefficient profile is steep,
    # where the naive 1 + max|c_i/c_lead| circle can start the iteration
    # orders of magnitude too far out to contract within budget.
    lead = abs(coeffs[-1])
    radius = 0.0
    for j in range(1, deg + 1):
        c = abs(coeffs[deg - j])
        if c != 0:
            radius = max(radius, (c / lead) ** (1.0 / j))
    radius = 2.0 * radius if radius > 0 else 1.0
    return [radius * complex(math.cos(_GOLDEN_ANGLE * j + 0.4),
                             math.sin(_GOLDEN_ANGLE * j + 0.4))
            for j in range(deg)]


def _aberth(coeffs: np.ndarray, root_tol: float, max_iterations: int):
    deg = len(coeffs) - 1
    z = np.array(_initial_circle(coeffs, deg))
    abs_coeffs = np.abs(coeffs)
    eps = np.finfo(float).eps
    for _ in range(max_iterations):
        pv = np.full_like(z, coeffs[-1])
        dv = np.zeros_like(z)
        fv = np.full(deg, abs_coeffs[-1])
        az = np.abs(z)
        for i in range(deg - 1, -1, -1):
            dv = dv * z + pv
            pv = pv * z + coeffs[i]
            fv = fv * az + abs_coeffs[i]
        settled = np.abs(pv) <= 8.0 * eps * fv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        srep = (1.0 / diff).sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            newton = pv / dv
            step = newton / (1.0 - newton * srep)
        step = np.where(np.isfinite(step), step,
                        np.where(np.isfinite(newton), newton, 0.1 + 0.1j))
        step = np.where(settled, 0.0, step)
        z = z - step
        done = settled | (np.abs(step) <= root_tol * np.maximum(1.0, np.abs(z)))
        if bool(np.all(done)):
            pv = np.full_like(z, coeffs[-1])
            for i in range(deg - 1, -1, -1):
                pv = pv * z + coeffs[i]
            return z, float(np.max(np.abs(pv)))
    raise NonConvergence(
        f"root corrections not settled after {max_iterations} iterations")


def _aberth_small(coeffs: list, root_tol: float, max_iterations: int):
    # Scalar variant of _aberth; faster than numpy for tiny degrees.
    deg = len(coeffs) - 1
    z = _initial_circle(coeffs, deg)
    abs_coeffs = [abs(c) for c in coeffs]
    eps = 2.220446049250313e-16
    rev = list(range(deg - 1, -1, -1))
    for _ in range(max_iterations):
        all_done = True
        pvals = []
        for i in range(deg):
            zi = z[i]
            pv = coeffs[-1]
            dv = 0j
            fv = abs_coeffs[-1]
            azi = abs(zi)
            for j in rev:
                dv = dv * zi + pv
                pv = pv * zi + coeffs[j]
                fv = fv * azi + abs_coeffs[j]
            pvals.append(pv)
            if abs(pv) <= 8.0 * eps * fv:
                continue
            srep = 0j
            for j2 in range(deg):
                if j2 != i:
                    d = zi - z[j2]
                    if d != 0:
                        srep += 1.0 / d
            if dv == 0:
                step = 0.1 + 0.1j
            else:
                newton = pv / dv
                denom = 1.0 - newton * srep
                step = newton if denom == 0 else newton / denom
            z[i] = zi - step
            if abs(step) > root_tol * max(1.0, abs(z[i])):
                all_done = False
        if all_done:
            residual = 0.0
            for zi in z:
                pv = coeffs[-1]
                for j in rev:
                    pv = pv * zi + coeffs[j]
                residual = max(residual, abs(pv))
            return z, residual
    raise NonConvergence(
        f"root corrections not settled after {max_iterations} iterations")


def _cluster(points, tol: float):
    """Group nearly coincident points; returns (centers, multiplicities)."""
    centers: list[complex] = []
    counts: list[int] = []
    for z in points:
        for i, c in enumerate(centers):
            if abs(z - c) <= tol:
                counts[i] += 1
                centers[i] = c + (z - c) / counts[i]
                break
        else:
            centers.append(complex(z))
            counts.append(1)
    return centers, counts


def _weighted_cofactor_sum(centers: np.ndarray, weights: np.ndarray):
    """Coefficients of sum_w weights[w] * prod_{v != w} (z - v), ascending.

    Also returns per-coefficient magnitude bounds (the same sum with absolute
    values) so callers can tell genuinely vanishing leading coefficients from
    roundoff survivors.
    """
    d = len(centers)
    full = np.array([1.0 + 0j])
    for c in centers:
        full = np.convolve(full, np.array([-c, 1.0 + 0j]))
    cof = np.empty((d, d), dtype=np.complex128)
    col = np.full(d, full[d])
    cof[:, d - 1] = col
    for j in range(d - 1, 0, -1):
        col = full[j] + centers * col
        cof[:, j - 1] = col
    numer = weights @ cof
    bound = np.abs(weights) @ np.abs(cof)
    return numer, bound


def _trim_leading(coeffs: np.ndarray, bounds: np.ndarray,
                  rel: float = _TRIM_REL) -> np.ndarray:
    end = len(coeffs)
    while end > 1 and abs(coeffs[end - 1]) <= rel * bounds[end - 1]:
        end -= 1
    return coeffs[:end]


# Extended precision, when the platform offers it, pushes the evaluation
# noise of the partial-fraction refinement below the double-precision floor;
# near-degenerate critical clusters benefit by several digits.
_REFINE_DTYPE = getattr(np, "complex256", np.complex128)


def _refine_partial_fraction(roots: np.ndarray, centers: np.ndarray,
                             weights: np.ndarray, root_tol: float,
                             max_iterations: int = 200) -> np.ndarray:
    """Aberth iteration on the roots of N(z) = D(z) * sum_w weights/(z - w)
    with D = prod(z - w), evaluating everything in partial-fraction form.

    Expanding N into coefficients loses relative accuracy when its roots
    cluster (badly enough that the coefficient path alone returns garbage
    for a hundred zeros packed in a segment); the product form keeps the
    Newton correction N/N' = R/(R' + R*S) (with R the weighted sum and
    S = D'/D) accurate from the center data alone.  The coefficient-path
    roots only seed the iteration.
    """
    z = roots.astype(_REFINE_DTYPE, copy=True)
    cw = centers.astype(_REFINE_DTYPE)
    ww = weights.astype(_REFINE_DTYPE)
    res_floor = 16.0 * float(np.finfo(getattr(np, "longdouble", np.float64)).eps)
    settled = np.zeros(len(z), dtype=bool)
    for _ in range(max_iterations):
        dc = z[:, None] - cw[None, :]
        tiny = np.abs(dc) == 0.0
        if bool(np.any(tiny)):
            dc = dc + tiny * (root_tol + 1e-30)
        inv = 1.0 / dc
        rv = inv @ ww
        rs = -(inv * inv) @ ww
        sv = inv.sum(axis=1)
        # settle on residual too: |R| at the evaluation-noise floor means
        # coincident roots cannot shrink their corrections any further
        noise = res_floor * (np.abs(inv) @ np.abs(ww))
        settled = settled | (np.abs(rv) <= noise)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        rep = (1.0 / diff).sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            newton = rv / (rs + rv * sv)
            step = newton / (1.0 - newton * rep)
        step = np.where(np.isfinite(step), step,
                        np.where(np.isfinite(newton), newton, 0.1 + 0.1j))
        # damp runaway corrections; far from a root Newton can overshoot
        cap = 0.5 * (1.0 + np.abs(z))
        mag = np.abs(step)
        step = np.where(mag > cap, step * (cap / np.where(mag == 0, 1.0, mag)),
                        step)
        step = np.where(settled, 0.0, step)
        z = z - step
        settled = settled | (np.abs(step) <= root_tol * np.maximum(1.0, np.abs(z)))
        if bool(np.all(settled)):
            break
    else:
        raise NonConvergence(
            f"critical-point corrections not settled after {max_iterations} "
            "iterations")
    return z.astype(np.complex128)


def critical_points(f: RationalFunction, root_tol: float = ROOT_TOL,
                    cluster_tol: float = CLUSTER_TOL) -> RootSet:
    """All finite critical points of f (zeros of the numerator of f' in
    lowest form), with multiplicity.

    A zero of multiplicity m contributes m - 1 critical points at itself;
    those are emitted directly.  The remaining critical points are the roots
    of the partial-fraction numerator sum_w c_w * prod_{v != w}(z - v) over
    the distinct zeros and poles, with c_w the signed multiplicity.
    """
    zc, zm = _cluster(f.zeros, cluster_tol)
    pc, pm = _cluster(f.poles, cluster_tol)
    known: list[complex] = []
    for c, m in zip(zc, zm):
        known.extend([c] * (m - 1))
    if not zc and not pc:
        return RootSet((), 0.0)
    centers = np.array(zc + pc, dtype=np.complex128)
    weights = np.array(zm + [-m for m in pm], dtype=np.complex128)
    extra, residual = _partial_fraction_roots(centers, weights, root_tol)
    return RootSet(tuple(known) + extra, residual)


def _partial_fraction_roots(centers, weights, root_tol):
    """Roots of the numerator of sum_w weights/(z - w), with a product-form
    refinement pass; returns (points, residual)."""
    numer, bound = _weighted_cofactor_sum(centers, weights)
    numer = _trim_leading(numer, bound)
    if len(numer) == 1:
        return (), 0.0
    seed = poly_roots(Polynomial(tuple(numer)), root_tol=root_tol)
    refined = _refine_partial_fraction(np.asarray(seed.points), centers,
                                       weights, root_tol)
    residual = 0.0
    for z in refined:
        acc = 0j
        for c in reversed(numer):
            acc = acc * z + c
        residual = max(residual, abs(acc))
    return tuple(refined), residual


def log_derivative(f: RationalFunction, root_tol: float = ROOT_TOL,
                   cluster_tol: float = CLUSTER_TOL) -> RationalFunction:
    """f'/f as a rational function, requiring all zeros and poles simple.

    The result has the critical points of f as zeros and the zeros and poles
    of f as (simple) poles.
    """
    pts = f.zeros + f.poles
    if not pts:
        raise ValueError("a constant has identically zero logarithmic derivative")
    _, counts = _cluster(pts, cluster_tol)
    if any(m > 1 for m in counts):
        raise MultiplicityViolation("zeros and poles must all be simple")
    centers = np.asarray(pts, dtype=np.complex128)
    weights = np.concatenate([np.ones(len(f.zeros)),
                              -np.ones(len(f.poles))]).astype(np.complex128)
    numer, bound = _weighted_cofactor_sum(centers, weights)
    numer = _trim_leading(numer, bound)
    if len(numer) == 1:
        return RationalFunction((), pts, complex(numer[0]))
    roots, _ = _partial_fraction_roots(centers, weights, root_tol)
    return RationalFunction(roots, pts, complex(numer[-1]))


def rational_product(a: RationalFunction, b: RationalFunction,
                     cluster_tol: float = CLUSTER_TOL) -> RationalFunction:
    """Product of two rational functions, reduced to lowest form."""
    return _reduced(a.zeros + b.zeros, a.poles + b.poles,
                    a.scale * b.scale, cluster_tol)


def from_points(zeros, poles, cluster_tol: float = CLUSTER_TOL) -> RationalFunction:
    """Monic rational function with the given zeros and poles, reduced."""
    return _reduced(tuple(zeros), tuple(poles), 1.0 + 0j, cluster_tol)


def _reduced(zeros, poles, scale, tol):
    remaining = [complex(p) for p in poles]
    kept_zeros: list[complex] = []
    for z in zeros:
        z = complex(z)
        for i, p in enumerate(remaining):
            if abs(z - p) <= tol:
                del remaining[i]
                break
        else:
            kept_zeros.append(z)
    return RationalFunction(tuple(kept_zeros), tuple(remaining), scale)


def rational_eval(f: RationalFunction, z):
    """Evaluate f at z (scalar or array) from its product form."""
    arr = np.asarray(z, dtype=np.complex128)
    num = np.full_like(arr, f.scale)
    for a in f.zeros:
        num = num * (arr - a)
    den = np.ones_like(arr)
    for b in f.poles:
        den = den * (arr - b)
    out = num / den
    return complex(out) if np.isscalar(z) or arr.ndim == 0 else out


def log_derivative_values(f: RationalFunction, z):
    """f'/f at z (scalar or array) via the partial-fraction sum
    sum 1/(z - zero) - sum 1/(z - pole), multiplicities as repetition."""
    arr = np.asarray(z, dtype=np.complex128)
    acc = np.zeros_like(arr)
    for a in f.zeros:
        acc = acc + 1.0 / (arr - a)
    for b in f.poles:
        acc = acc - 1.0 / (arr - b)
    return complex(acc) if np.isscalar(z) or arr.ndim == 0 else acc
