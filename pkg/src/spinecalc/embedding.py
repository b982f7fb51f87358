"""Embeddings D_{k-1}(S_n) -> D_k(S_n) that add one particle to a fixed arm.

``embed(..., m)`` sends a configuration to the configuration with one extra
particle at the outer end of arm ``m``; on compositions this is
``a -> a + e_m`` for both vertex kinds.  For ``m = 1`` the basepoint goes to
the basepoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .basis import FreeWord, SpanningTree, basis, loop_to_word, spanning_tree
from .spine import SpineEdge, SpineGraph, SpineVertex, _bump
from .star import SpineError


@dataclass(frozen=True)
class EmbeddingMap:
    arm: int
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]

    def map_loop(self, loop):
        return [self.vertex_map[v] for v in loop]


def embed(gk1: SpineGraph, gk: SpineGraph, m: int = 1) -> EmbeddingMap:
    if gk1.n != gk.n:
        raise SpineError(f"arm counts differ: n={gk1.n} vs n={gk.n}")
    if gk.k != gk1.k + 1:
        raise SpineError(f"expected particle counts k-1 and k, got {gk1.k} and {gk.k}")
    if not 1 <= m <= gk.n:
        raise SpineError(f"arm {m} out of range 1..{gk.n}")

    def image(v: SpineVertex) -> SpineVertex:
        return SpineVertex(v.kind, _bump(v.arms, m))

    vmap = tuple(gk.index(image(v)) for v in gk1.vertices)
    emap = tuple(
        gk.edge_index(SpineEdge(image(e.c0), image(e.c1), e.slide_arm)) for e in gk1.edges
    )
    return EmbeddingMap(arm=m, vertex_map=vmap, edge_map=emap)


def compatible_tree(gk: SpineGraph, emb: EmbeddingMap, tk1: SpanningTree) -> SpanningTree:
    """Spanning tree of ``gk`` that contains the image of ``tk1``."""
    return spanning_tree(gk, (emb.edge_map[e] for e in tk1.tree_edges))


@dataclass(frozen=True)
class MonomorphismReport:
    n: int
    k: int
    arm: int
    correspondence: tuple[tuple[int, int, int], ...]  # (source gen, target gen, sign)
    verified: bool
    failures: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "arm": self.arm,
            "correspondence": [
                {"source_gen": j, "target_gen": j2, "sign": s} for j, j2, s in self.correspondence
            ],
            "verified": self.verified,
        }


def verify_monomorphism(
    gk1: SpineGraph,
    gk: SpineGraph,
    emb: EmbeddingMap,
    tk1: SpanningTree,
    tk: SpanningTree,
) -> MonomorphismReport:
    """Check that every level-(k-1) generator maps to a distinct single generator.

    Image loops are based at the image of the level-(k-1) root, which for
    ``arm != 1`` is not the level-k root; ``loop_to_word`` reads them up to
    conjugation by a tree path, which adds no letters.
    """
    corr, failures, targets = [], [], set()
    for gen in basis(gk1, tk1):
        word: FreeWord = loop_to_word(gk, tk, emb.map_loop(gen.loop_vertices))
        if len(word) != 1:
            failures.append(f"generator {gen.index} maps to {word} (length {len(word)})")
            continue
        (x,) = word.letters
        if abs(x) in targets:
            failures.append(f"generator {gen.index} maps to g{abs(x)}, already hit")
        targets.add(abs(x))
        corr.append((gen.index, abs(x), 1 if x > 0 else -1))
    return MonomorphismReport(
        n=gk.n,
        k=gk.k,
        arm=emb.arm,
        correspondence=tuple(corr),
        verified=not failures,
        failures=tuple(failures),
    )
