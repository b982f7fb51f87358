"""Combinatorial construction of the k-spine D_k(S_n).

Vertices are integer compositions of the per-arm particle counts, counting
only particles strictly inside an arm:

* type I  -- center occupied, counts sum to ``k - 1``;
* type II -- every arm's innermost particle at distance 1/2, counts sum to
  ``k`` and are not all on one arm.

An edge joins a type I vertex ``a`` to the type II vertex ``a + e_m``; along
it the particle at the center slides out onto arm ``m`` while every other
arm's particles move half a unit inward.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from .star import (
    CENTER,
    EPS,
    Configuration,
    NotRegularError,
    SpineError,
    StarParams,
    StarPoint,
    is_regular,
)


class VertexKind(str, enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"


@dataclass(frozen=True, order=True)
class SpineVertex:
    kind: VertexKind
    arms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kind", VertexKind(self.kind))
        object.__setattr__(self, "arms", tuple(int(a) for a in self.arms))
        if any(a < 0 for a in self.arms):
            raise SpineError(f"negative particle count in {self.arms}")

    @property
    def is_concentrated(self) -> bool:
        """All strictly-inside particles sit on a single arm."""
        return sum(1 for a in self.arms if a) <= 1

    def label(self) -> str:
        return f"{self.kind.value}:{','.join(map(str, self.arms))}"

    def __repr__(self):
        return f"SpineVertex({self.label()})"


@dataclass(frozen=True)
class SpineEdge:
    c0: SpineVertex
    c1: SpineVertex
    slide_arm: int

    def __post_init__(self):
        if self.c0.kind is not VertexKind.TYPE_I or self.c1.kind is not VertexKind.TYPE_II:
            raise SpineError("an edge runs from a type I vertex to a type II vertex")
        expected = _bump(self.c0.arms, self.slide_arm)
        if self.c1.arms != expected:
            raise SpineError(f"{self.c1.label()} is not {self.c0.label()} slid along arm {self.slide_arm}")


@dataclass(frozen=True)
class SpinePoint:
    """A vertex of the spine, or an interior point ``s`` in (0, 1) of an edge."""

    vertex: SpineVertex | None = None
    edge: SpineEdge | None = None
    s: float | None = None

    def __post_init__(self):
        if (self.vertex is None) == (self.edge is None):
            raise SpineError("a spine point is either a vertex or an edge point")
        if self.edge is not None and not (self.s is not None and 0.0 < self.s < 1.0):
            raise SpineError(f"edge parameter must lie in (0, 1), got {self.s}")

    @classmethod
    def on_edge(cls, edge: SpineEdge, s: float) -> "SpinePoint":
        """Edge point, collapsed onto an endpoint when ``s`` is within EPS of it."""
        if s <= EPS:
            return cls(vertex=edge.c0)
        if s >= 1.0 - EPS:
            return cls(vertex=edge.c1)
        return cls(edge=edge, s=float(s))

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    def __repr__(self):
        if self.vertex is not None:
            return f"SpinePoint({self.vertex.label()})"
        e = self.edge
        return f"SpinePoint({e.c0.label()}->{e.c1.label()}, s={self.s:g})"


def _bump(arms: tuple[int, ...], m: int, by: int = 1) -> tuple[int, ...]:
    out = list(arms)
    out[m - 1] += by
    return tuple(out)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class SpineGraph:
    n: int
    k: int
    vertices: tuple[SpineVertex, ...]
    edges: tuple[SpineEdge, ...]
    ends: tuple[tuple[int, int], ...]
    incident: tuple[tuple[int, ...], ...]
    _vindex: dict = field(default_factory=dict, compare=False, repr=False)
    _eindex: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def root(self) -> int:
        """Basepoint: the type I vertex with all particles on arm 1."""
        arms = (self.k - 1,) + (0,) * (self.n - 1)
        return self.index(SpineVertex(VertexKind.TYPE_I, arms))

    def index(self, v: SpineVertex) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise SpineError(f"{v!r} is not a vertex of D_{self.k}(S_{self.n})") from None

    def edge_index(self, e: SpineEdge) -> int:
        try:
            return self._eindex[(self.index(e.c0), e.slide_arm)]
        except KeyError:
            raise SpineError(f"{e!r} is not an edge of D_{self.k}(S_{self.n})") from None

    def edge_between(self, u: int, v: int) -> int | None:
        a, b = (u, v) if u < v else (v, u)
        va, vb = self.vertices[a], self.vertices[b]
        if va.kind is not VertexKind.TYPE_I or vb.kind is not VertexKind.TYPE_II:
            return None
        diff = [y - x for x, y in zip(va.arms, vb.arms)]
        if sorted(diff) != [0] * (self.n - 1) + [1]:
            return None
        return self._eindex.get((a, diff.index(1) + 1))

    def other_end(self, e: int, v: int) -> int:
        a, b = self.ends[e]
        if v == a:
            return b
        if v == b:
            return a
        raise SpineError(f"vertex {v} is not an endpoint of edge {e}")


def build_spine(params: StarParams) -> SpineGraph:
    n, k = params.n, params.k
    type_i = [SpineVertex(VertexKind.TYPE_I, a) for a in compositions(k - 1, n)]
    type_ii = [
        SpineVertex(VertexKind.TYPE_II, a)
        for a in compositions(k, n)
        if sum(1 for x in a if x) > 1
    ]
    vertices = tuple(type_i + type_ii)
    vindex = {v: i for i, v in enumerate(vertices)}

    edges, ends, eindex = [], [], {}
    incident: list[list[int]] = [[] for _ in vertices]
    for i, v in enumerate(type_i):
        for m in range(1, n + 1):
            target = SpineVertex(VertexKind.TYPE_II, _bump(v.arms, m))
            j = vindex.get(target)
            if j is None:  # sliding a concentrated vertex along its own arm
                continue
            e = len(edges)
            edges.append(SpineEdge(v, target, m))
            ends.append((i, j))
            eindex[(i, m)] = e
            incident[i].append(e)
            incident[j].append(e)

    return SpineGraph(
        n=n,
        k=k,
        vertices=vertices,
        edges=tuple(edges),
        ends=tuple(ends),
        incident=tuple(tuple(sorted(x)) for x in incident),
        _vindex=vindex,
        _eindex=eindex,
    )


def vertex_degree(g: SpineGraph, v: SpineVertex) -> int:
    return len(g.incident[g.index(v)])


def euler_characteristic(g: SpineGraph) -> int:
    return len(g.vertices) - len(g.edges)


def realize(params: StarParams, p: SpinePoint) -> Configuration:
    """Geometric configuration of a spine point.

    On the edge ``a -> a + e_m`` at parameter ``s`` the slide arm carries
    ``s/2, 1 + s/2, ...`` and every other arm ``1 - s/2, 2 - s/2, ...``; at
    ``s = 0`` the innermost slide-arm particle is the center.
    """
    if p.vertex is not None:
        v = p.vertex
        if v.kind is VertexKind.TYPE_I:
            pts = [CENTER] + [StarPoint(i, float(j)) for i, a in enumerate(v.arms, 1) for j in range(1, a + 1)]
        else:
            pts = [StarPoint(i, j + 0.5) for i, a in enumerate(v.arms, 1) for j in range(a)]
    else:
        e, half = p.edge, p.s / 2.0
        pts = []
        for i, a in enumerate(e.c1.arms, 1):
            if i == e.slide_arm:
                pts.extend(StarPoint(i, j + half) for j in range(a))
            else:
                pts.extend(StarPoint(i, j + 1.0 - half) for j in range(a))
    if len(pts) != params.k or len(p.vertex.arms if p.vertex else p.edge.c1.arms) != params.n:
        raise SpineError(f"{p!r} does not belong to D_{params.k}(S_{params.n})")
    return Configuration(params, tuple(pts))


def snap(params: StarParams, c: Configuration) -> SpinePoint:
    """Inverse of ``realize`` on regular configurations."""
    if c.params.n != params.n or c.params.k != params.k:
        raise SpineError("configuration belongs to a different star or particle count")
    regular, governing = is_regular(c)
    if not regular:
        occupied = sum(1 for a in c.strict_counts() if a) + (params.n if c.has_center else 0)
        if occupied < 2:
            raise NotRegularError("fewer than two arms are occupied")
        raise NotRegularError("no arm forms a chain with every other arm")
    counts = c.strict_counts()
    d = 0.0 if c.has_center else min(x.dist for x in c)
    if d <= EPS:
        return SpinePoint(vertex=SpineVertex(VertexKind.TYPE_I, counts))
    if abs(d - 0.5) <= EPS:
        return SpinePoint(vertex=SpineVertex(VertexKind.TYPE_II, counts))
    (m,) = governing
    c1 = SpineVertex(VertexKind.TYPE_II, counts)
    c0 = SpineVertex(VertexKind.TYPE_I, _bump(counts, m, -1))
    return SpinePoint.on_edge(SpineEdge(c0, c1, m), 2.0 * d)


def to_dot(g: SpineGraph) -> str:
    lines = [f'graph "D_{g.k}(S_{g.n})" {{']
    for i, v in enumerate(g.vertices):
        # type I solid, type II hollow
        if v.kind is VertexKind.TYPE_I:
            style = "style=filled, fillcolor=black, fontcolor=white"
        else:
            style = "style=solid"
        lines.append(f'  v{i} [label="{v.label()}", {style}];')
    for e, (a, b) in enumerate(g.ends):
        lines.append(f'  v{a} -- v{b} [label="{g.edges[e].slide_arm}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
