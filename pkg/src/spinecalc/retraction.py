"""Deformation retraction of configurations onto the k-spine.

Write ``p <= q`` for the two smallest innermost-particle distances over
distinct occupied arms.  The target keeps every arm's particle count and puts
the innermost particle of the nearest arm at ``p / (p + q)`` and of every
other arm at ``q / (p + q)``, spacing the rest one unit apart.  Degenerate
cases:

* at most one arm has particles strictly inside it: all particles collapse
  onto that arm's type I vertex (center plus ``1, 2, ..., k - 1``);
* the center is occupied: the target is the type I vertex with the same
  strict per-arm counts.

The homotopy moves the sorted distance vector of each arm linearly to the
target's; sorted order is kept, so particles never collide.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .basis import FreeWord, SpanningTree, loop_to_word
from .spine import (
    SpineEdge,
    SpineGraph,
    SpinePoint,
    SpineVertex,
    VertexKind,
    _bump,
    realize,
)
from .star import EPS, Configuration, SpineError, StarParams, StarPoint, hausdorff_distance


@dataclass(frozen=True)
class RetractionTarget:
    target: SpinePoint
    governing_arm: int | None
    p: float
    q: float
    case: str  # "single-arm", "center" or "free"


def _check(params: StarParams, c: Configuration):
    if (c.params.n, c.params.k) != (params.n, params.k):
        raise SpineError(
            f"configuration is for n={c.params.n}, k={c.params.k}; expected n={params.n}, k={params.k}"
        )


def retract_target(params: StarParams, c: Configuration) -> RetractionTarget:
    _check(params, c)
    n, k = params.n, params.k
    by_arm = c.arm_distances()
    if len(by_arm) <= 1:
        (m,) = by_arm  # k >= 2, so some point is off the center
        arms = (0,) * n
        vertex = SpineVertex(VertexKind.TYPE_I, _bump(arms, m, k - 1))
        return RetractionTarget(SpinePoint(vertex=vertex), None, 0.0, 0.0, "single-arm")

    counts = c.strict_counts()
    nearest = sorted((d[0], i) for i, d in by_arm.items())
    if c.has_center:
        vertex = SpineVertex(VertexKind.TYPE_I, counts)
        return RetractionTarget(SpinePoint(vertex=vertex), None, 0.0, nearest[0][0], "center")

    (p, m), (q, _) = nearest[0], nearest[1]
    edge = SpineEdge(
        SpineVertex(VertexKind.TYPE_I, _bump(counts, m, -1)),
        SpineVertex(VertexKind.TYPE_II, counts),
        m,
    )
    return RetractionTarget(SpinePoint.on_edge(edge, 2.0 * p / (p + q)), m, p, q, "free")


def retract(params: StarParams, c: Configuration) -> Configuration:
    """End point R(c, 1) of the retraction, as a configuration."""
    return realize(params, retract_target(params, c).target)


def _arm_lists(c: Configuration, owner: int) -> dict[int, list[float]]:
    out: dict[int, list[float]] = defaultdict(list)
    for x in c:
        out[owner if x.is_center else x.arm].append(x.dist)
    for v in out.values():
        v.sort()
    return out


@dataclass(frozen=True)
class HomotopyPath:
    source: Configuration
    target: Configuration
    # one (arm, start distance, end distance) per particle; arm 0 is the center
    trajectories: tuple[tuple[int, float, float], ...]

    def sample(self, t: float) -> Configuration:
        if not 0.0 <= t <= 1.0:
            raise SpineError(f"homotopy time must lie in [0, 1], got {t}")
        if t == 0.0:
            return self.source
        if t == 1.0:
            return self.target
        pts = [StarPoint(a, (1.0 - t) * d0 + t * d1) for a, d0, d1 in self.trajectories]
        return Configuration(self.source.params, tuple(pts))

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        a, d0, d1 = zip(*self.trajectories)
        return np.array(a), np.array(d0), np.array(d1)


def homotopy(params: StarParams, c: Configuration) -> HomotopyPath:
    rt = retract_target(params, c)
    target = realize(params, rt.target)
    # single-arm case: the innermost particle of that arm ends at the center
    owner = rt.target.vertex.arms.index(params.k - 1) + 1 if rt.case == "single-arm" else 0
    src, dst = _arm_lists(c, owner), _arm_lists(target, owner)
    traj = []
    for arm in sorted(src):
        a, b = src[arm], dst.get(arm, [])
        if len(a) != len(b):
            raise AssertionError(f"particle count on arm {arm} changed: {a} -> {b}")
        traj.extend((arm, x, y) for x, y in zip(a, b))
    return HomotopyPath(c, target, tuple(traj))


def min_pairwise_distance(arms, d0, d1, ts) -> np.ndarray:
    """Minimum pairwise particle distance along straight-line trajectories.

    ``arms``, ``d0``, ``d1`` have shape ``(..., k)``; the result has shape
    ``(..., len(ts))``.  Particles on one arm (or the center) are ``|x - y|``
    apart, particles on different arms ``x + y``.
    """
    arms, d0, d1 = np.asarray(arms), np.asarray(d0, float), np.asarray(d1, float)
    ts = np.asarray(ts, float)[:, None]
    pos = d0[..., None, :] * (1.0 - ts) + d1[..., None, :] * ts  # (..., T, k)
    i, j = np.triu_indices(arms.shape[-1], 1)
    same = (arms[..., i] == arms[..., j])[..., None, :]
    xi, xj = pos[..., i], pos[..., j]
    dist = np.where(same, np.abs(xi - xj), xi + xj)
    return dist.min(axis=-1)


def _locate(g: SpineGraph, p: SpinePoint) -> tuple[int | None, int | None]:
    if p.vertex is not None:
        return g.index(p.vertex), None
    return None, g.edge_index(p.edge)


def project_loop(
    params: StarParams,
    g: SpineGraph,
    t: SpanningTree,
    samples: Sequence[Configuration],
) -> FreeWord:
    """Word of a sampled loop of configurations.

    Each sample is retracted onto the spine; the walk through the spine is
    recorded as the sequence of vertices it crosses.  Consecutive samples must
    land on the same or adjacent edges.
    """
    if not samples:
        return FreeWord()
    if hausdorff_distance(samples[0], samples[-1]) > EPS:
        raise SpineError("sampled loop is not closed (first and last samples differ)")
    start, edge = _locate(g, retract_target(params, samples[0]).target)
    if start is None:
        raise SpineError("sampled loop must start at a configuration retracting to a spine vertex")

    path = [start]
    cur: int | None = None  # edge whose interior we are on; path[-1] is one of its ends

    def too_far(i):
        return SpineError(
            f"samples {i - 1} and {i} retract to non-adjacent parts of the spine; sample more finely"
        )

    for i, c in enumerate(samples[1:], 1):
        v, e = _locate(g, retract_target(params, c).target)
        tail = path[-1]
        if v is not None:
            if v == tail:
                pass
            elif cur is not None and v == g.other_end(cur, tail):
                path.append(v)
            elif g.edge_between(tail, v) is not None:
                path.append(v)
            elif cur is not None and g.edge_between(g.other_end(cur, tail), v) is not None:
                path.extend([g.other_end(cur, tail), v])
            else:
                raise too_far(i)
            cur = None
        else:
            ends = g.ends[e]
            if e == cur or tail in ends:
                pass
            elif cur is not None and g.other_end(cur, tail) in ends:
                path.append(g.other_end(cur, tail))
            else:
                hits = [z for z in ends if g.edge_between(tail, z) is not None]
                if len(hits) != 1:
                    raise too_far(i)
                path.append(hits[0])
            cur = e
    if cur is not None or path[-1] != start:
        raise SpineError("sampled loop does not return to its starting vertex")
    return loop_to_word(g, t, path)


def realize_loop(
    params: StarParams, g: SpineGraph, loop: Sequence[int], samples_per_edge: int = 20
) -> list[Configuration]:
    """Sample a closed vertex path of the spine as configurations."""
    out: list[Configuration] = []
    for u, v in zip(loop, loop[1:]):
        e = g.edge_between(u, v)
        if e is None:
            raise SpineError(f"vertices {u} and {v} are not adjacent")
        forward = g.ends[e][0] == u
        start = 1 if out else 0
        for j in range(start, samples_per_edge + 1):
            s = j / samples_per_edge
            out.append(realize(params, SpinePoint.on_edge(g.edges[e], s if forward else 1.0 - s)))
    if not out:
        out.append(realize(params, SpinePoint(vertex=g.vertices[loop[0]])))
    return out


def random_configurations(
    params: StarParams, rng: np.random.Generator, count: int
) -> list[Configuration]:
    """Random configurations; about a tenth use the center, a tenth stay on one arm."""
    n, k, kappa = params.n, params.k, params.kappa
    with_center = rng.random(count) < 0.1
    one_arm = rng.random(count) < 0.1
    arms = rng.integers(1, n + 1, size=(count, k))
    arms[one_arm] = arms[one_arm, :1]
    dists = rng.uniform(0.0, kappa, size=(count, k))
    out = []
    for a, d, ctr in zip(arms.tolist(), dists.tolist(), with_center):
        m = k - 1 if ctr else k
        pts = {StarPoint(x, y) for x, y in zip(a[:m], d[:m]) if y > 0.0}
        if ctr:
            pts.add(StarPoint(0, 0.0))
        if len(pts) != k:  # measure-zero collision or zero draw; redraw
            out.extend(random_configurations(params, rng, 1))
            continue
        out.append(Configuration(params, tuple(pts)))
    return out


def random_configuration(params: StarParams, rng: np.random.Generator) -> Configuration:
    return random_configurations(params, rng, 1)[0]


def random_spine_point(g: SpineGraph, rng: np.random.Generator) -> SpinePoint:
    e = g.edges[int(rng.integers(len(g.edges)))]
    return SpinePoint.on_edge(e, float(rng.uniform(0.0, 1.0)))


def stability_ratio(
    params: StarParams, c: Configuration, rng: np.random.Generator, eta: float = 1e-4
) -> float:
    """Hausdorff distance between the targets of ``c`` and a perturbation of size ``eta``, over ``eta``.

    The perturbation moves every particle along its arm by at most ``eta``.
    """
    pts = [
        x if x.is_center else StarPoint(x.arm, min(params.kappa, x.dist + float(rng.uniform(-eta, eta))))
        for x in c
    ]
    c2 = Configuration(params, tuple(pts))
    return hausdorff_distance(retract(params, c), retract(params, c2)) / eta
