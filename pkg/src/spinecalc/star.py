"""Metric model of the star graph S_n and configurations of points on it.

A point on the star is stored in arm coordinates ``(arm, dist)``: ``arm`` is
the index of the closed edge ``[v0, v_arm]`` and ``dist`` is the distance to
the center ``v0`` in the scaled metric ``d = kappa * rho`` (so each arm has
length ``kappa``).  The center itself is always written ``(0, 0.0)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

EPS = 1e-9


class SpineError(ValueError):
    """Domain error: a precondition on the star, its spine or a configuration failed."""


class NotRegularError(SpineError):
    """The configuration is not a point of the k-spine."""

    def __init__(self, reason: str):
        super().__init__(f"configuration is not regular: {reason}")
        self.reason = reason


@dataclass(frozen=True)
class StarParams:
    n: int
    k: int
    kappa: float | None = None

    def __post_init__(self):
        if self.n < 2:
            raise SpineError(f"star needs n >= 2 arms, got n={self.n}")
        if self.k < 2:
            raise SpineError(f"need k >= 2 particles, got k={self.k}")
        if self.kappa is None:
            object.__setattr__(self, "kappa", float(self.k - 1))
        elif self.kappa < self.k - 1:
            raise SpineError(f"kappa must be >= k - 1 = {self.k - 1}, got {self.kappa}")


@dataclass(frozen=True, order=True)
class StarPoint:
    arm: int
    dist: float

    def __post_init__(self):
        if self.dist < 0:
            raise SpineError(f"negative distance {self.dist}")
        if self.dist == 0:
            # every arm contains the center; keep a single encoding for it
            object.__setattr__(self, "arm", 0)
        elif self.arm < 1:
            raise SpineError(f"point at distance {self.dist} needs an arm index >= 1")
        object.__setattr__(self, "dist", float(self.dist))

    @property
    def is_center(self) -> bool:
        return self.arm == 0

    def __repr__(self):
        return f"({self.arm}, {self.dist:g})"


CENTER = StarPoint(0, 0.0)


@dataclass(frozen=True)
class Configuration:
    """k distinct points of the star, kept sorted."""

    params: StarParams
    points: tuple[StarPoint, ...] = field(default=())

    def __post_init__(self):
        pts = tuple(sorted(self.points))
        object.__setattr__(self, "points", pts)
        p = self.params
        if len(pts) != p.k:
            raise SpineError(f"expected {p.k} points, got {len(pts)}")
        for a, b in zip(pts, pts[1:]):
            if a == b:
                raise SpineError(f"duplicate point {a}")
        for x in pts:
            if x.arm > p.n:
                raise SpineError(f"arm {x.arm} out of range 1..{p.n}")
            if x.dist > p.kappa + EPS:
                raise SpineError(f"distance {x.dist} exceeds arm length {p.kappa}")

    def __iter__(self) -> Iterator[StarPoint]:
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    @property
    def has_center(self) -> bool:
        return self.points[0].is_center

    def strict_counts(self) -> tuple[int, ...]:
        """Number of points strictly inside each arm (center excluded)."""
        counts = [0] * self.params.n
        for x in self.points:
            if x.arm:
                counts[x.arm - 1] += 1
        return tuple(counts)

    def arm_distances(self) -> dict[int, list[float]]:
        """Sorted distances of the points strictly inside each occupied arm."""
        out: dict[int, list[float]] = {}
        for x in self.points:  # already sorted by (arm, dist)
            if x.arm:
                out.setdefault(x.arm, []).append(x.dist)
        return out


def point_distance(a: StarPoint, b: StarPoint) -> float:
    if a.arm == b.arm or a.arm == 0 or b.arm == 0:
        return abs(a.dist - b.dist)
    return a.dist + b.dist


def hausdorff_distance(A: Iterable[StarPoint], B: Iterable[StarPoint]) -> float:
    A, B = list(A), list(B)
    if not A or not B:
        raise SpineError("Hausdorff distance is only defined for non-empty sets")
    ab = max(min(point_distance(a, b) for b in B) for a in A)
    ba = max(min(point_distance(a, b) for a in A) for b in B)
    return max(ab, ba)


def distance_to_center(points: Iterable[StarPoint]) -> float:
    return min(x.dist for x in points)


def arm_set(c: Iterable[StarPoint], i: int) -> frozenset[StarPoint]:
    """Points of ``c`` on the closed arm ``[v0, v_i]``."""
    if i < 1:
        raise SpineError(f"arm index must be >= 1, got {i}")
    return frozenset(x for x in c if x.arm == i or x.arm == 0)


def is_chain(points: Iterable[StarPoint]) -> bool:
    """Whether consecutive points along the geodesic are exactly one unit apart.

    Only meaningful for subsets of the union of two closed arms, which is a
    geodesic segment through the center; a set spread over three or more arms
    raises ``ValueError``.
    """
    pts = list(points)
    arms = sorted({x.arm for x in pts if x.arm})
    if len(arms) > 2:
        raise ValueError(f"points span arms {arms}; not a geodesic segment")
    # first arm runs toward the center (negative side), second away from it
    pos = sorted(-x.dist if x.arm == arms[0] else x.dist for x in pts if x.arm) if arms else []
    if any(x.is_center for x in pts):
        pos = sorted(pos + [0.0])
    return all(abs(b - a - 1.0) <= EPS for a, b in zip(pos, pos[1:]))


def is_regular(c: Configuration) -> tuple[bool, frozenset[int]]:
    """Test membership in the k-spine; returns ``(regular, governing arms)``.

    An arm ``m`` governs when it is nonempty, lies nearest the center
    (``d(A_m, v0) = d(c, v0)``), and its union with every arm is a chain.
    The nearest-arm condition matters when only two arms are occupied: the
    chain test is symmetric in the pair, but only the inner arm governs.

    The union of two closed arms is a chain exactly when each arm is one on
    its own (read outward from the center when the center is occupied) and,
    with the center free, the two innermost distances add up to 1.  That is
    what is checked here, in O(k).
    """
    n = c.params.n
    center = c.has_center
    by_arm = c.arm_distances()
    arms = list(range(1, n + 1)) if center else sorted(by_arm)
    if len(arms) < 2:
        return False, frozenset()
    for d in by_arm.values():
        seq = [0.0] + d if center else d
        if any(abs(b - a - 1.0) > EPS for a, b in zip(seq, seq[1:])):
            return False, frozenset()
    if center:
        return True, frozenset(arms)
    nearest = {i: d[0] for i, d in by_arm.items()}
    p = min(nearest.values())
    governing = frozenset(
        m
        for m in arms
        if nearest[m] - p <= EPS
        and all(abs(nearest[m] + nearest[i] - 1.0) <= EPS for i in arms if i != m)
    )
    return bool(governing), governing
