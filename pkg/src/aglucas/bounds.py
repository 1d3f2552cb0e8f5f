"""Closed-form epsilon bounds for the approximate Gauss-Lucas property.

For a bounded convex region of diameter s and a rational function with n
zeros and poles combined, at least k of the zeros in the region, the
sufficient inequalities below guarantee that at least k - 1 critical points
lie in the closed eps-neighborhood.  The psi1 family bounds the least such
eps for the unit disk (radius 1); the named bounds of Kakeya, Marden and
Biernacki are classical, Kakeya's being exact for k = 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

ENTRY_NAMES = ("eps_general", "eps_disk", "psi1_disk",
               "kakeya", "marden", "biernacki")


@dataclass(frozen=True)
class BoundEntry:
    value: float | None
    condition_met: bool


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    s: float
    entries: dict[str, BoundEntry]
    best: str | None


def _validate(n: int, k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k > n:
        raise ValueError("k must not exceed n")


def ragl_general_holds(n: int, k: int, eps: float, s: float) -> bool:
    """Sufficient condition for any bounded convex region of diameter s:
    16(s+eps)^2/eps^2 < k/(n-k)^2.  k = n is the classical theorem."""
    _validate(n, k)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if s < 0:
        raise ValueError("s must be nonnegative")
    if k == n:
        return True
    return 16.0 * (s + eps) ** 2 / eps ** 2 < k / (n - k) ** 2


def ragl_disk_holds(n: int, k: int, eps: float, s: float) -> bool:
    """Sharper sufficient condition when the region is a disk of diameter s:
    8(s+eps)/eps < k/(n-k)^2."""
    _validate(n, k)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if s < 0:
        raise ValueError("s must be nonnegative")
    if k == n:
        return True
    return 8.0 * (s + eps) / eps < k / (n - k) ** 2


def eps_threshold_general(n: int, k: int, s: float) -> float | None:
    """Solve the general inequality for eps: any eps strictly above
    4s(n-k)/(sqrt(k) - 4(n-k)) works, provided sqrt(k) > 4(n-k).
    Returns None when that side condition fails; 0.0 when k = n."""
    _validate(n, k)
    if k == n:
        return 0.0
    gap = n - k
    root_k = math.sqrt(k)
    if root_k <= 4.0 * gap:
        return None
    return 4.0 * s * gap / (root_k - 4.0 * gap)


def eps_threshold_disk(n: int, k: int, s: float) -> float | None:
    """Solve the disk inequality for eps: any eps strictly above
    8s(n-k)^2/(k - 8(n-k)^2) works, provided k > 8(n-k)^2."""
    _validate(n, k)
    if k == n:
        return 0.0
    gap2 = 8.0 * (n - k) ** 2
    if k <= gap2:
        return None
    return s * gap2 / (k - gap2)


def psi1_disk_bound(n: int, k: int) -> float | None:
    """Upper bound 8(n-k)^2/(k - 8(n-k)^2) on psi1(n, k), valid when
    k > 8(n-k)^2; None otherwise."""
    _validate(n, k)
    gap2 = 8.0 * (n - k) ** 2
    if k <= gap2:
        return None
    return gap2 / (k - gap2)


def psi1_kakeya(n: int) -> float:
    """Exact value csc(pi/n) - 1 of psi1(n, 2) for the unit disk."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 1.0 / math.sin(math.pi / n) - 1.0


def psi1_marden(n: int, k: int) -> float:
    """Marden's bound csc(pi/(2(n-k+1))) - 1, a function of n - k only."""
    _validate(n, k)
    if k < 2:
        raise ValueError("k must be at least 2")
    return 1.0 / math.sin(math.pi / (2.0 * (n - k + 1))) - 1.0


def psi1_biernacki(n: int, k: int) -> float:
    """Biernacki's bound prod_{j=1..n-k} (n+j)/(n-j) - 1; 0 when k = n."""
    _validate(n, k)
    if k < 2:
        raise ValueError("k must be at least 2")
    prod = 1.0
    for j in range(1, n - k + 1):
        prod *= (n + j) / (n - j)
    return prod - 1.0


def bound_report(n: int, k: int, s: float) -> BoundReport:
    """Evaluate every bound at (n, k, s) with applicability flags."""
    _validate(n, k)
    eps_gen = eps_threshold_general(n, k, s)
    eps_dsk = eps_threshold_disk(n, k, s)
    psi_dsk = psi1_disk_bound(n, k)
    entries = {
        "eps_general": BoundEntry(eps_gen, eps_gen is not None),
        "eps_disk": BoundEntry(eps_dsk, eps_dsk is not None),
        "psi1_disk": BoundEntry(psi_dsk, psi_dsk is not None),
        "kakeya": BoundEntry(psi1_kakeya(n) if k == 2 else None, k == 2),
        "marden": BoundEntry(psi1_marden(n, k) if k >= 2 else None, k >= 2),
        "biernacki": BoundEntry(psi1_biernacki(n, k) if k >= 2 else None, k >= 2),
    }
    best = None
    best_value = math.inf
    for name in ("eps_general", "psi1_disk", "kakeya", "marden", "biernacki"):
        entry = entries[name]
        if entry.value is not None and entry.value < best_value:
            best, best_value = name, entry.value
    return BoundReport(n, k, float(s), entries, best)


def bound_table(n_values, gap: int, s: float) -> list[BoundReport]:
    """One report per n at k = n - gap."""
    if gap < 0:
        raise ValueError("gap must be nonnegative")
    if gap >= min(n_values):
        raise ValueError("gap must be smaller than every n")
    return [bound_report(n, n - gap, s) for n in n_values]


def bound_table_csv(reports) -> str:
    """Render reports as CSV with one row per (n, k, s)."""
    lines = ["n,k,s," + ",".join(ENTRY_NAMES) + ",best"]
    for rep in reports:
        cells = [str(rep.n), str(rep.k), repr(rep.s)]
        for name in ENTRY_NAMES:
            value = rep.entries[name].value
            cells.append("" if value is None else repr(value))
        cells.append(rep.best or "")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
