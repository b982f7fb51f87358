"""Invariant sweeps over (n, k); each check returns a list of failure messages."""

from __future__ import annotations

from collections import deque
from math import comb

import numpy as np

from .basis import build_tree, rank_formula
from .embedding import compatible_tree, embed, verify_monomorphism
from .retraction import (
    homotopy,
    min_pairwise_distance,
    random_configuration,
    random_spine_point,
    retract,
)
from .spine import SpineGraph, VertexKind, build_spine, euler_characteristic, realize
from .star import EPS, StarParams, hausdorff_distance, is_regular


def check_structure(g: SpineGraph) -> list[str]:
    n, k = g.n, g.k
    bad = []
    n1 = sum(1 for v in g.vertices if v.kind is VertexKind.TYPE_I)
    n2 = len(g.vertices) - n1
    if n1 != comb(n + k - 2, n - 1):
        bad.append(f"type I count {n1} != C({n + k - 2},{n - 1})")
    if n2 != comb(n + k - 1, n - 1) - n:
        bad.append(f"type II count {n2} != C({n + k - 1},{n - 1}) - {n}")
    if len(g.edges) != n * comb(n + k - 2, n - 1) - n:
        bad.append(f"edge count {len(g.edges)} != {n}*C({n + k - 2},{n - 1}) - {n}")
    for e, (a, b) in enumerate(g.ends):
        if g.vertices[a].kind is not VertexKind.TYPE_I or g.vertices[b].kind is not VertexKind.TYPE_II:
            bad.append(f"edge {e} is not type I -- type II")
    for i, v in enumerate(g.vertices):
        if v.kind is VertexKind.TYPE_I:
            want = n - 1 if v.is_concentrated else n
            if len(g.incident[i]) != want:
                bad.append(f"{v!r} has degree {len(g.incident[i])}, expected {want}")
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for e in g.incident[u]:
            w = g.other_end(e, u)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(g.vertices):
        bad.append(f"graph has {len(g.vertices) - len(seen)} vertices unreachable from vertex 0")
    if 1 - euler_characteristic(g) != rank_formula(n, k):
        bad.append(f"1 - chi = {1 - euler_characteristic(g)} != rank formula {rank_formula(n, k)}")
    return bad


def check_embedding(gk1: SpineGraph, gk: SpineGraph, m: int) -> list[str]:
    emb = embed(gk1, gk, m)
    tk1 = build_tree(gk1)
    tk = compatible_tree(gk, emb, tk1)
    rep = verify_monomorphism(gk1, gk, emb, tk1, tk)
    return [f"n={gk.n} k={gk.k} arm={m}: {f}" for f in rep.failures]


def check_retraction(
    params: StarParams, g: SpineGraph, rng: np.random.Generator, samples: int
) -> list[str]:
    bad = []
    ts = np.linspace(0.0, 1.0, 101)
    for _ in range(samples):
        c = random_configuration(params, rng)
        target = retract(params, c)
        if not is_regular(target)[0]:
            bad.append(f"target of {c.points} is not regular")
            continue
        again = retract(params, target)
        if hausdorff_distance(target, again) > EPS:
            bad.append(f"retraction not idempotent at {c.points}")
        if min_pairwise_distance(*homotopy(params, c).arrays(), ts).min() <= 0.0:
            bad.append(f"collision along homotopy from {c.points}")
        sp = random_spine_point(g, rng)
        c0 = realize(params, sp)
        if hausdorff_distance(retract(params, c0), c0) > EPS:
            bad.append(f"spine point {sp!r} moved by the retraction")
    return bad


def sweep(n_max: int, k_max: int, seed: int = 0, samples: int = 200):
    """Yield ``(label, failures)`` over 2 <= n <= n_max, 2 <= k <= k_max."""
    rng = np.random.default_rng(seed)
    graphs = {}
    for n in range(2, n_max + 1):
        for k in range(2, k_max + 1):
            g = graphs[n, k] = build_spine(StarParams(n, k))
            yield f"structure n={n} k={k}", check_structure(g)
            if k >= 3:
                bad = []
                for m in range(1, n + 1):
                    bad += check_embedding(graphs[n, k - 1], g, m)
                yield f"embedding n={n} k={k - 1}->{k} arms=1..{n}", bad
            yield f"retraction n={n} k={k} samples={samples}", check_retraction(
                StarParams(n, k), g, rng, samples
            )
