"""JSON documents read and written by the command line tool."""

from __future__ import annotations

from typing import Any

from .basis import FreeWord, GeneratorSet
from .retraction import HomotopyPath
from .spine import SpineEdge, SpineGraph, SpinePoint, SpineVertex
from .star import Configuration, SpineError, StarParams, StarPoint

SCHEMA = "spinecalc/1"


class FormatError(ValueError):
    """Malformed or invalid input document."""


def _point(x: StarPoint) -> dict:
    return {"arm": x.arm, "dist": x.dist}


def configuration_to_dict(c: Configuration) -> dict:
    p = c.params
    return {"n": p.n, "k": p.k, "kappa": p.kappa, "points": [_point(x) for x in c]}


def configuration_from_dict(d: Any) -> Configuration:
    try:
        params = StarParams(int(d["n"]), int(d["k"]), d.get("kappa"))
        raw = d["points"]
        if not isinstance(raw, list):
            raise FormatError("'points' must be a list")
        pts = []
        for r in raw:
            arm, dist = int(r["arm"]), float(r["dist"])
            if arm < 0 or arm > params.n:
                raise FormatError(f"arm {arm} out of range 0..{params.n}")
            if (arm == 0) != (dist == 0):
                raise FormatError(f"arm 0 must have dist 0 and vice versa, got ({arm}, {dist})")
            pts.append(StarPoint(arm, dist))
        if len(set(pts)) != len(pts):
            raise FormatError("duplicate points")
        return Configuration(params, tuple(pts))
    except FormatError:
        raise
    except (KeyError, TypeError, AttributeError) as exc:
        raise FormatError(f"malformed configuration: {exc!r}") from exc
    except SpineError as exc:
        raise FormatError(f"invalid configuration: {exc}") from exc


def graph_to_dict(g: SpineGraph) -> dict:
    return {
        "schema": SCHEMA,
        "n": g.n,
        "k": g.k,
        "vertices": [{"kind": v.kind.value, "arms": list(v.arms)} for v in g.vertices],
        "edges": [
            {"c0": a, "c1": b, "slide_arm": e.slide_arm} for e, (a, b) in zip(g.edges, g.ends)
        ],
    }


def _vertex(v: SpineVertex) -> dict:
    return {"kind": v.kind.value, "arms": list(v.arms)}


def spine_point_to_dict(p: SpinePoint) -> dict:
    if p.vertex is not None:
        return {"vertex": _vertex(p.vertex)}
    e: SpineEdge = p.edge
    return {
        "edge": {"c0": _vertex(e.c0), "c1": _vertex(e.c1), "slide_arm": e.slide_arm},
        "s": p.s,
    }


def basis_to_dict(gens: GeneratorSet) -> dict:
    return {
        "schema": SCHEMA,
        "rank": gens.rank,
        "generators": [
            {"index": g.index, "edge": g.edge, "loop_vertices": list(g.loop_vertices)} for g in gens
        ],
    }


def loop_from_dict(d: Any) -> list[int]:
    try:
        vs = d["vertices"]
        if not isinstance(vs, list) or not all(isinstance(v, int) for v in vs):
            raise FormatError("'vertices' must be a list of integers")
        return vs
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed loop: {exc!r}") from exc


def word_to_dict(w: FreeWord) -> dict:
    return {"schema": SCHEMA, "word": list(w.letters), "text": str(w)}


def trace_to_dict(path: HomotopyPath, target: SpinePoint, steps: int) -> dict:
    trace = []
    for i in range(steps + 1):
        t = i / steps
        trace.append({"t": t, "points": [_point(x) for x in path.sample(t)]})
    return {"schema": SCHEMA, "trace": trace, "target": spine_point_to_dict(target)}
