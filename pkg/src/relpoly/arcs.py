"""Primitive integer directions and open arcs of the circle of directions.

Everything is exact: membership of a direction in an arc is decided by
signs of 2x2 determinants, never by angles.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import NotPrimitive
from .geometry import MarkedPolytope, angle_key, cross, outward_normal


@dataclass(frozen=True, order=True)
class Direction:
    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) == (0, 0) or gcd(self.a, self.b) != 1:
            raise NotPrimitive(f"({self.a},{self.b}) is not a primitive integer vector")

    @classmethod
    def reduce(cls, a: int, b: int) -> "Direction":
        g = gcd(a, b)
        if g == 0:
            raise NotPrimitive("the zero vector has no direction")
        return cls(a // g, b // g)

    @classmethod
    def parse(cls, text: str) -> "Direction":
        try:
            a, b = (int(t) for t in text.split(","))
        except ValueError:
            raise NotPrimitive(f"expected 'a,b' with integers, got {text!r}") from None
        return cls(a, b)

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b))

    def __getitem__(self, i: int) -> int:
        return (self.a, self.b)[i]

    def __neg__(self) -> "Direction":
        return Direction(-self.a, -self.b)

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


AXES = (Direction(1, 0), Direction(0, 1), Direction(-1, 0), Direction(0, -1))


@dataclass(frozen=True)
class Arc:
    """The open counterclockwise arc from ``start`` to ``end``."""

    start: Direction
    end: Direction

    def __post_init__(self):
        if self.start == self.end:
            raise ValueError("an arc needs distinct endpoints")

    def contains(self, d: Sequence[int]) -> bool:
        u, w = self.start, self.end
        c = cross(u, w)
        if c > 0:
            return cross(u, d) > 0 and cross(d, w) > 0
        if c == 0:  # half circle
            return cross(u, d) > 0
        return not (cross(w, d) >= 0 and cross(d, u) >= 0)

    def negate(self) -> "Arc":
        return Arc(-self.start, -self.end)

    @property
    def span_sign(self) -> int:
        """+1 if shorter than a half circle, 0 if exactly half, -1 if longer."""
        c = cross(self.start, self.end)
        return (c > 0) - (c < 0)

    def interior(self) -> Direction:
        """The simplest primitive direction strictly inside the arc."""
        return simplest_direction(self)


@dataclass(frozen=True)
class ArcSet:
    full_circle: bool = False
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        if self.full_circle and self.arcs:
            raise ValueError("a full circle carries no arc list")
        arcs = tuple(sorted(self.arcs, key=lambda a: angle_key(tuple(a.start))))
        object.__setattr__(self, "arcs", arcs)

    @property
    def is_empty(self) -> bool:
        return not self.full_circle and not self.arcs

    def contains(self, d: Sequence[int]) -> bool:
        return self.full_circle or any(a.contains(d) for a in self.arcs)

    def __len__(self) -> int:
        return len(self.arcs)


def simplest_between(lo: tuple[int, int], hi: tuple[int, int]) -> tuple[int, int]:
    """Simplest fraction ``p/q`` with ``lo < p/q < hi`` by Stern-Brocot descent.

    Fractions are ``(numerator, denominator)`` pairs with nonnegative entries;
    ``(1, 0)`` stands for infinity.
    """
    left, right = (0, 1), (1, 0)
    while True:
        med = (left[0] + right[0], left[1] + right[1])
        # med <= lo  ->  move right ; med >= hi -> move left
        if med[0] * lo[1] <= lo[0] * med[1]:
            left = med
        elif med[0] * hi[1] >= hi[0] * med[1]:
            right = med
        else:
            return med


def simplest_direction(arc: Arc) -> Direction:
    """Axis directions first; otherwise the arc sits inside one open quadrant
    (endpoints possibly on its boundary) and the Stern-Brocot tree over slopes
    gives the direction with the smallest entries."""
    for d in AXES:
        if arc.contains(d):
            return d
    probe = _any_interior(arc)
    sa = 1 if probe.a > 0 else -1
    sb = 1 if probe.b > 0 else -1
    # reflect into the first quadrant; slopes b/a as (b, a) fractions
    s0 = (abs(arc.start.b), abs(arc.start.a))
    s1 = (abs(arc.end.b), abs(arc.end.a))
    lo, hi = _order(s0, s1)
    p, q = simplest_between(lo, hi)
    d = Direction(sa * q, sb * p)
    if not arc.contains(d):
        raise AssertionError(f"search left the arc {arc}")
    return d


def _order(f: tuple[int, int], g: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    return (f, g) if f[0] * g[1] < g[0] * f[1] else (g, f)


def _any_interior(arc: Arc) -> Direction:
    u, w = arc.start, arc.end
    c = cross(u, w)
    if c > 0:
        return Direction.reduce(u.a + w.a, u.b + w.b)
    if c == 0:
        return Direction(-u.b, u.a)
    return Direction.reduce(-(u.a + w.a), -(u.b + w.b))


def intersect(a: Arc, b: Arc) -> Optional[Arc]:
    """Intersection of two open arcs each at most a half circle, or None."""
    if a.start == b.start or b.contains(a.start):
        start = a.start
    elif a.contains(b.start):
        start = b.start
    else:
        return None
    if a.end == b.end or b.contains(a.end):
        end = a.end
    elif a.contains(b.end):
        end = b.end
    else:
        return None
    if start == end:
        return None
    cand = Arc(start, end)
    probe = _any_interior(cand)
    if a.contains(probe) and b.contains(probe):
        return cand
    return None


def vertex_cones(p: MarkedPolytope) -> list[Optional[Arc]]:
    """Open normal cone of each vertex; ``None`` for the lone vertex of a point."""
    n = len(p.vertices)
    if n == 1:
        return [None]
    edges = p.edges()
    normals = [Direction(*outward_normal(e)) for e in edges]
    return [Arc(normals[i - 1], normals[i]) for i in range(n)]


def marked_normal_arcs(p: MarkedPolytope) -> ArcSet:
    """Directions pairing maximally with a marked vertex of ``p``."""
    if len(p.vertices) == 1:
        return ArcSet(full_circle=True) if p.marked[0] else ArcSet()
    cones = vertex_cones(p)
    return ArcSet(arcs=tuple(c for c, m in zip(cones, p.marked) if m))


def edge_normals(p: MarkedPolytope) -> list[Direction]:
    return [Direction(*outward_normal(e)) for e in p.edges()]
