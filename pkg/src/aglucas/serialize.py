"""JSON encodings for instances, regions and reports, plus CSV helpers.

Wire formats:
  rational function  {"zeros": [[re, im], ...], "poles": [[re, im], ...],
                      "scale": [re, im]}
  region             {"disk": {"center": [re, im], "radius": r}}
                     | {"segment": {"a": [re, im], "b": [re, im]}}
                     | {"polygon": {"vertices": [[re, im], ...]}}
"""

from __future__ import annotations

import math

from .certifier import RoucheCertificate
from .engine import AGLReport
from .extremal import AsymptoticRow, ProbeRow, SearchResult
from .rational import RationalFunction
from .regions import ConvexPolygon, ConvexRegion, Disk, Segment


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _unpair(v) -> complex:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise ValueError(f"expected [re, im], got {v!r}")
    return complex(float(v[0]), float(v[1]))


def function_to_json(f: RationalFunction) -> dict:
    return {"zeros": [_pair(z) for z in f.zeros],
            "poles": [_pair(p) for p in f.poles],
            "scale": _pair(f.scale)}


def function_from_json(data: dict) -> RationalFunction:
    if not isinstance(data, dict):
        raise ValueError("instance must be a JSON object")
    zeros = tuple(_unpair(z) for z in data.get("zeros", []))
    poles = tuple(_unpair(p) for p in data.get("poles", []))
    scale = _unpair(data["scale"]) if "scale" in data else 1.0 + 0j
    return RationalFunction(zeros, poles, scale)


def region_to_json(region: ConvexRegion) -> dict:
    if isinstance(region, Disk):
        return {"disk": {"center": _pair(region.center),
                         "radius": region.radius}}
    if isinstance(region, Segment):
        return {"segment": {"a": _pair(region.a), "b": _pair(region.b)}}
    return {"polygon": {"vertices": [_pair(v) for v in region.vertices]}}


def region_from_json(data: dict) -> ConvexRegion:
    if not isinstance(data, dict) or len(data) != 1:
        raise ValueError("region must be an object with exactly one shape key")
    if "disk" in data:
        d = data["disk"]
        return Disk(_unpair(d["center"]), float(d["radius"]))
    if "segment" in data:
        s = data["segment"]
        return Segment(_unpair(s["a"]), _unpair(s["b"]))
    if "polygon" in data:
        verts = data["polygon"]["vertices"]
        return ConvexPolygon(tuple(_unpair(v) for v in verts))
    raise ValueError(f"unknown region shape: {list(data)!r}")


def agl_report_to_json(report: AGLReport) -> dict:
    required = report.required_epsilon
    return {
        "n": report.n,
        "k_requested": report.k_requested,
        "zeros_in_region": report.zeros_in_region,
        "critical_in_neighborhood": report.critical_in_neighborhood,
        "holds": report.holds,
        "required_epsilon": None if math.isinf(required) else required,
        "critical_points": [_pair(z) for z in report.critical_points],
        "critical_distances": list(report.critical_distances),
    }


def certificate_to_json(cert: RoucheCertificate) -> dict:
    return {
        "valid": cert.valid,
        "offset_distance": cert.contour.offset_distance,
        "sample_count": int(cert.contour.samples.size),
        "margin": cert.margin,
        "winding": cert.winding,
        "zeros_poles_inside": cert.zeros_poles_inside,
        "critical_lower_bound": cert.critical_lower_bound,
        "eps": cert.eps,
        "k": cert.k,
        "failure_reason": None,
    }


def certificate_failure_json(reason: str, eps: float, k: int) -> dict:
    return {"valid": False, "failure_reason": reason, "eps": eps, "k": k}


def search_result_to_json(result: SearchResult) -> dict:
    return {
        "n": result.n,
        "k": result.k,
        "best_required_epsilon": result.best_required_epsilon,
        "evaluations": result.evaluations,
        "seed": result.seed,
        "zeros": [_pair(z) for z in result.best_configuration.zeros],
    }


def search_trace_csv(result: SearchResult) -> str:
    lines = ["evaluations,best_required_epsilon"]
    for evals, value in result.trace:
        lines.append(f"{evals},{value!r}")
    if not result.trace:
        lines.append(f"{result.evaluations},{result.best_required_epsilon!r}")
    return "\n".join(lines) + "\n"


def asymptotic_rows_csv(rows: list[AsymptoticRow]) -> str:
    lines = ["n,zero_fraction,critical_fraction"]
    for row in rows:
        lines.append(f"{row.n},{row.zero_fraction!r},{row.critical_fraction!r}")
    return "\n".join(lines) + "\n"


def probe_rows_csv(rows: list[ProbeRow]) -> str:
    lines = ["ratio,n,k,trials,failures,failure_rate,worst_shortfall"]
    for r in rows:
        lines.append(f"{r.ratio!r},{r.n},{r.k},{r.trials},{r.failures},"
                     f"{r.failure_rate!r},{r.worst_shortfall}")
    return "\n".join(lines) + "\n"
