"""JSON reports (schema ``relpoly/1``).

Output is deterministic: vertices go counterclockwise from the
lexicographically least one, and keys keep a fixed order.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .arcs import ArcSet, Direction
from .bns import Membership, SigmaReport
from .geometry import MarkedPolytope
from .pipeline import PolytopeResult, Presentation
from .splitting import ComplexityReport, SplittingData

SCHEMA = "relpoly/1"


def _dir(d: Optional[Direction]):
    return None if d is None else [d.a, d.b]


def presentation_json(p: Presentation, text: Optional[str] = None) -> dict:
    out = {"generators": list(p.names), "relator": p.relator.format(p.names)}
    if text is not None:
        out["input"] = text
    return out


def polytope_json(poly: MarkedPolytope) -> dict:
    return {
        "vertices": [
            {"x": v[0], "y": v[1], "marked": m} for v, m in zip(poly.vertices, poly.marked)
        ],
        "normalization": "min-corner-origin",
    }


def result_json(res: PolytopeResult, text: Optional[str] = None) -> dict:
    info = res.info
    out: dict[str, Any] = {
        "schema_version": SCHEMA,
        "presentation": presentation_json(res.presentation, text),
        "b1": info.b1,
        "classification": info.classification.value,
        "polytope": polytope_json(res.polytope),
    }
    if info.b1 == 1:
        # the polytope sits on the first axis, measured by phi0
        out["polytope"]["axis"] = _dir(info.phi0)
    return out


def arcs_json(arcs: ArcSet) -> list:
    return [{"start": _dir(a.start), "end": _dir(a.end)} for a in arcs.arcs]


def sigma_json(rep: SigmaReport) -> dict:
    out = {
        "full_circle": rep.full_sphere,
        "arcs": arcs_json(rep.arcs),
        "marked_vertex_count": rep.marked_vertex_count,
    }
    if rep.points:
        out["points"] = [_dir(d) for d in rep.points]
    return out


def membership_json(m: Membership) -> dict:
    return {
        "phi": _dir(m.phi),
        "in_sigma": m.in_sigma,
        "vertex": None if m.vertex is None else list(m.vertex),
        "ascending_hnn": m.ascending_hnn,
    }


def splitting_json(rep: ComplexityReport, data: Optional[SplittingData] = None) -> dict:
    out: dict[str, Any] = {
        "phi": _dir(rep.phi),
        "thickness": rep.thickness,
        "c": rep.c,
        "c_f": rep.c_f,
        "certified": rep.hypothesis_certified,
        "status": rep.status,
        "witness": None,
    }
    if data is not None:
        q = data.presentation
        out["witness"] = {
            "stable_letter": data.stable_letter,
            "base_letter": data.base_letter,
            "d": data.d,
            "D": data.D,
            "rank": data.rank,
            "relator": [list(t) for t in data.relator],
            "hnn": data.format(),
            "converted": q.format(),
            "basis": {
                data.base_letter: data.basis[0].format(),
                data.stable_letter: data.basis[1].format(),
            },
        }
    return out


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2)
