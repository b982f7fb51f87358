"""Free basis of the braid group pi_1(D_k(S_n)) from a spanning tree.

Each edge outside the spanning tree gives one generator: walk the tree from
the root to the edge's type I end, cross the edge, and walk the tree home.
A closed edge path is turned into a word by dropping tree edges and reading
off the signed generator of every non-tree edge it crosses.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .spine import SpineGraph
from .star import SpineError


def rank_formula(n: int, k: int) -> int:
    """Rank of the free group B_k(S_n), i.e. 1 - chi(D_k(S_n))."""
    if n < 2 or k < 2:
        raise SpineError(f"rank formula needs n, k >= 2 (got n={n}, k={k})")
    return 1 + (n - 1) * comb(n + k - 2, n - 1) - comb(n + k - 1, n - 1)


@dataclass(frozen=True)
class FreeWord:
    """Word in the free basis; ``+j`` is generator j, ``-j`` its inverse.

    Letters are freely reduced on construction.
    """

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        stack: list[int] = []
        for x in self.letters:
            if x == 0:
                raise SpineError("generator letters are nonzero")
            if stack and stack[-1] == -x:
                stack.pop()
            else:
                stack.append(int(x))
        object.__setattr__(self, "letters", tuple(stack))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple(-x for x in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"g{x}" if x > 0 else f"g{-x}^-1" for x in self.letters)


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: tuple[tuple[int, int] | None, ...]  # (parent vertex, edge) per vertex
    tree_edges: frozenset[int]
    # non-tree edge index -> generator number (1-based, ascending edge order)
    generator_of: dict = field(default_factory=dict, compare=False, repr=False)

    def path_to_root(self, v: int) -> list[int]:
        path = [v]
        while self.parent[v] is not None:
            v = self.parent[v][0]
            path.append(v)
        return path

    def path_from_root(self, v: int) -> list[int]:
        return self.path_to_root(v)[::-1]


def spanning_tree(g: SpineGraph, seed_edges: Iterable[int] = ()) -> SpanningTree:
    """Spanning tree containing the acyclic edge set ``seed_edges``.

    The seed edges go in first; the rest is filled in by breadth-first search
    from the root, scanning incident edges in ascending index order.  With no
    seeds this is the plain BFS tree.
    """
    nv = len(g.vertices)
    comp = list(range(nv))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    chosen: set[int] = set()
    for e in sorted(set(seed_edges)):
        a, b = (find(x) for x in g.ends[e])
        if a == b:
            raise SpineError(f"seed edges contain a cycle (edge {e})")
        comp[a] = b
        chosen.add(e)

    root = g.root
    seen = [False] * nv
    seen[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for e in g.incident[u]:
            w = g.other_end(e, u)
            a, b = find(u), find(w)
            if a != b:
                comp[a] = b
                chosen.add(e)
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    if not all(seen):
        raise SpineError(f"D_{g.k}(S_{g.n}) is disconnected; no spanning tree")

    # orient the chosen edges away from the root
    adj: list[list[int]] = [[] for _ in range(nv)]
    for e in chosen:
        a, b = g.ends[e]
        adj[a].append(e)
        adj[b].append(e)
    parent: list[tuple[int, int] | None] = [None] * nv
    done = [False] * nv
    done[root] = True
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for e in sorted(adj[u]):
            w = g.other_end(e, u)
            if not done[w]:
                done[w] = True
                parent[w] = (u, e)
                queue.append(w)

    non_tree = [e for e in range(len(g.edges)) if e not in chosen]
    return SpanningTree(
        root=root,
        parent=tuple(parent),
        tree_edges=frozenset(chosen),
        generator_of={e: j for j, e in enumerate(non_tree, 1)},
    )


def build_tree(g: SpineGraph) -> SpanningTree:
    return spanning_tree(g)


@dataclass(frozen=True)
class Generator:
    index: int
    edge: int
    loop_vertices: tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSet:
    generators: tuple[Generator, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def basis(g: SpineGraph, t: SpanningTree) -> GeneratorSet:
    gens = []
    for e, j in sorted(t.generator_of.items()):
        c0, c1 = g.ends[e]
        loop = t.path_from_root(c0) + t.path_to_root(c1)
        gens.append(Generator(index=j, edge=e, loop_vertices=tuple(loop)))
    return GeneratorSet(tuple(gens))


def loop_to_word(g: SpineGraph, t: SpanningTree, loop: Sequence[int]) -> FreeWord:
    """Word of a closed vertex path.

    The loop may be based at any vertex: tree paths carry no letters, so a
    loop at ``v`` reads the same as its conjugate by the tree path to the root.
    """
    loop = list(loop)
    if len(loop) <= 1:
        return FreeWord()
    if loop[0] != loop[-1]:
        raise SpineError(f"loop is not closed: starts at {loop[0]}, ends at {loop[-1]}")
    nv = len(g.vertices)
    letters = []
    for u, v in zip(loop, loop[1:]):
        if not (0 <= u < nv and 0 <= v < nv):
            raise SpineError(f"vertex index out of range in step {u} -> {v}")
        e = g.edge_between(u, v)
        if e is None:
            raise SpineError(f"vertices {u} and {v} are not adjacent")
        j = t.generator_of.get(e)
        if j is not None:
            letters.append(j if g.ends[e][0] == u else -j)
    return FreeWord(tuple(letters))
