"""Marked lattice polygons in the plane, with exact integer arithmetic.

A polygon is stored by its vertices in counterclockwise order starting
from the lexicographically least one; segments and points are allowed.
Minkowski sums and differences work on the angle-sorted edge sequence,
which makes both operations exact and linear in the number of edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .errors import DifferenceDoesNotExist, EmptyInput, MarkingInconsistent

Point = tuple[int, int]


def cross(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1]


def _sub(p: Sequence[int], q: Sequence[int]) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def _add(p: Sequence[int], q: Sequence[int]) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def _half(d: Sequence[int]) -> int:
    # 0 for angles in (-pi/2, pi/2], 1 for (pi/2, 3pi/2]
    return 0 if d[0] > 0 or (d[0] == 0 and d[1] > 0) else 1


def _angle_cmp(u: Point, v: Point) -> int:
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu - hv
    c = cross(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


angle_key = cmp_to_key(_angle_cmp)


def _primitive(d: Sequence[int]) -> tuple[Point, int]:
    g = gcd(d[0], d[1])
    return (d[0] // g, d[1] // g), g


@dataclass(frozen=True)
class MarkedPolytope:
    vertices: tuple[Point, ...]
    marked: tuple[bool, ...]

    def __post_init__(self):
        verts = tuple((int(p[0]), int(p[1])) for p in self.vertices)
        marks = tuple(bool(m) for m in self.marked)
        if not verts:
            raise EmptyInput("a polytope needs at least one vertex")
        if len(verts) != len(marks):
            raise ValueError("one mark flag per vertex")
        start = verts.index(min(verts))
        verts = verts[start:] + verts[:start]
        marks = marks[start:] + marks[:start]
        n = len(verts)
        if len(set(verts)) != n:
            raise ValueError(f"repeated vertex in {verts}")
        if n >= 3:
            for i in range(n):
                a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
                if cross(_sub(b, a), _sub(c, b)) <= 0:
                    raise ValueError(f"vertices {verts} are not strictly convex and CCW")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "marked", marks)

    @classmethod
    def point(cls, p: Point, marked: bool = True) -> "MarkedPolytope":
        return cls((p,), (marked,))

    @classmethod
    def segment(cls, p: Point, q: Point, marked=(True, True)) -> "MarkedPolytope":
        return cls((p, q), tuple(marked))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    @property
    def marked_vertices(self) -> list[Point]:
        return [v for v, m in zip(self.vertices, self.marked) if m]

    def is_marked(self, v: Point) -> bool:
        return self.marked[self.vertices.index(tuple(v))]

    def mark_map(self) -> dict[Point, bool]:
        return dict(zip(self.vertices, self.marked))

    def edges(self) -> list[Point]:
        """Edge vectors ``v_{i+1} - v_i`` in CCW order (sorted by angle)."""
        n = len(self.vertices)
        if n == 1:
            return []
        return [_sub(self.vertices[(i + 1) % n], self.vertices[i]) for i in range(n)]

    def translate(self, t: Sequence[int]) -> "MarkedPolytope":
        return MarkedPolytope(tuple(_add(v, t) for v in self.vertices), self.marked)

    def with_marks(self, marked: Iterable[bool]) -> "MarkedPolytope":
        return MarkedPolytope(self.vertices, tuple(marked))

    def unmarked(self) -> "MarkedPolytope":
        return self.with_marks([False] * len(self.vertices))

    def linear_image(self, matrix: Sequence[Sequence[int]]) -> "MarkedPolytope":
        """Apply the integer matrix ``[[a, b], [c, d]]`` (acting on columns).

        Only unimodular (det +-1) or at least invertible maps keep the vertex
        structure; orientation reversal is repaired by rebuilding the hull.
        """
        (a, b), (c, d) = matrix
        pts = {(a * x + b * y, c * x + d * y): m for (x, y), m in zip(self.vertices, self.marked)}
        hull = convex_hull(pts)
        return MarkedPolytope(hull, tuple(pts[v] for v in hull))

    def contains(self, p: Sequence[int]) -> bool:
        verts = self.vertices
        if len(verts) == 1:
            return tuple(p) == verts[0]
        if len(verts) == 2:
            a, b = verts
            if cross(_sub(b, a), _sub(p, a)) != 0:
                return False
            return dot(_sub(p, a), _sub(p, b)) <= 0
        n = len(verts)
        return all(cross(_sub(verts[(i + 1) % n], verts[i]), _sub(p, verts[i])) >= 0 for i in range(n))

    def __str__(self) -> str:
        return " ".join(f"({x},{y}){'*' if m else ''}" for (x, y), m in zip(self.vertices, self.marked))


X = MarkedPolytope.segment((0, 0), (1, 0))
Y = MarkedPolytope.segment((0, 0), (0, 1))
XY = MarkedPolytope(((0, 0), (1, 0), (1, 1), (0, 1)), (True,) * 4)


def convex_hull(points: Iterable[Sequence[int]]) -> tuple[Point, ...]:
    """Monotone chain; returns strictly convex CCW vertices from the least point."""
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if len(pts) <= 2:
        return tuple(pts)

    def chain(seq):
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and cross(_sub(out[-1], out[-2]), _sub(p, out[-1])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return tuple(hull)


def hull_of_multiset(m) -> MarkedPolytope:
    """Hull of a lattice multiset; a vertex is marked iff its count is 1.

    ``m`` is a :class:`~relpoly.groupring.LatticeMultiset` or a plain
    mapping from points to positive counts.
    """
    counts: Mapping = getattr(m, "counts", m)
    if not counts:
        raise EmptyInput("cannot take the hull of an empty multiset")
    hull = convex_hull(counts)
    return MarkedPolytope(hull, tuple(counts[v] == 1 for v in hull))


def _edge_lengths(p: MarkedPolytope) -> dict[Point, int]:
    out: dict[Point, int] = {}
    for e in p.edges():
        d, g = _primitive(e)
        out[d] = out.get(d, 0) + g
    return out


def _from_edges(start: Point, lengths: Mapping[Point, int]) -> tuple[Point, ...]:
    verts = [start]
    cur = start
    for d in sorted((d for d, n in lengths.items() if n > 0), key=angle_key):
        cur = _add(cur, (d[0] * lengths[d], d[1] * lengths[d]))
        verts.append(cur)
    if verts[-1] != start:
        raise AssertionError("edge sequence does not close up")
    return tuple(verts[:-1]) if len(verts) > 1 else (start,)


def _decompose(u: Point, p: MarkedPolytope, q: MarkedPolytope) -> tuple[Point, Point]:
    # any representation of a vertex of p+q as a sum of points of p and q is
    # the unique vertex decomposition, so a membership test suffices
    qs = set(q.vertices)
    for v in p.vertices:
        w = _sub(u, v)
        if w in qs:
            return v, w
    raise AssertionError(f"{u} is not a sum of vertices")


def minkowski_sum(p: MarkedPolytope, q: MarkedPolytope) -> MarkedPolytope:
    """Marked Minkowski sum: a vertex is marked iff both summands are."""
    lengths = _edge_lengths(p)
    for d, n in _edge_lengths(q).items():
        lengths[d] = lengths.get(d, 0) + n
    verts = _from_edges(_add(p.vertices[0], q.vertices[0]), lengths)
    pm, qm = p.mark_map(), q.mark_map()
    marks = []
    for u in verts:
        v, w = _decompose(u, p, q)
        marks.append(pm[v] and qm[w])
    return MarkedPolytope(verts, tuple(marks))


def minkowski_diff(n: MarkedPolytope, q: MarkedPolytope, strict: bool = True) -> MarkedPolytope:
    """The unique marked ``M`` with ``M + q == n``.

    Geometry: every edge direction of ``q`` must occur in ``n`` at least as
    long; subtracting the lengths gives the edge sequence of ``M``.  Marks:
    a vertex ``v`` of ``M`` takes the mark of ``v + w`` in ``n`` for the
    vertices ``w`` of ``q`` with ``v + w`` a vertex of ``n``.  If those
    marks disagree, ``strict`` raises :class:`MarkingInconsistent`;
    otherwise ``v`` is marked only when all of them are marked, and the
    final marking check is skipped.

    The result is verified by adding ``q`` back.
    """
    have = _edge_lengths(n)
    for d, k in _edge_lengths(q).items():
        if have.get(d, 0) < k:
            raise DifferenceDoesNotExist(
                f"polytope {n} has no edge of length >= {k} in direction {d}"
            )
        have[d] -= k
    verts = _from_edges(_sub(n.vertices[0], q.vertices[0]), have)
    nm = n.mark_map()
    marks = []
    for v in verts:
        seen = {nm[u] for u in (_add(v, w) for w in q.vertices) if u in nm}
        if not seen:
            raise DifferenceDoesNotExist(f"vertex {v} does not lift to a vertex of {n}")
        if len(seen) > 1 and strict:
            raise MarkingInconsistent(
                f"vertex {v} lifts to both marked and unmarked vertices of {n}"
            )
        marks.append(all(seen))
    m = MarkedPolytope(verts, tuple(marks))
    back = minkowski_sum(m, q)
    if back.vertices != n.vertices:
        raise DifferenceDoesNotExist(f"{m} + {q} != {n}")
    if strict and back.marked != n.marked:
        raise MarkingInconsistent(f"markings of {m} + {q} differ from {n}")
    return m


@dataclass(frozen=True)
class SliceCondition:
    """Height and end-marks of the extreme slice of ``n`` orthogonal to an axis."""

    side: int  # 0 for the minimal coordinate, 1 for the maximal one
    height: int
    low_marked: bool
    high_marked: bool

    @property
    def tall_enough(self) -> bool:
        return self.height >= 1

    @property
    def marks_agree(self) -> bool:
        return self.height != 1 or self.low_marked == self.high_marked

    @property
    def ok(self) -> bool:
        return self.tall_enough and self.marks_agree


def slice_conditions(n: MarkedPolytope, axis: int) -> tuple[SliceCondition, SliceCondition]:
    """Hypotheses for subtracting the unit segment along ``axis`` (0 = X, 1 = Y).

    For ``axis == 1`` these are the vertical slices at the least and greatest
    x-coordinate, measured between the corner points of least and greatest y.
    """
    other = 1 - axis
    marks = n.mark_map()
    coords = [v[other] for v in n.vertices]
    out = []
    for side, c in enumerate((min(coords), max(coords))):
        col = sorted((v for v in n.vertices if v[other] == c), key=lambda v: v[axis])
        lo, hi = col[0], col[-1]
        out.append(SliceCondition(side, hi[axis] - lo[axis], marks[lo], marks[hi]))
    return out[0], out[1]


def thickness(p: MarkedPolytope, phi: Sequence[int]) -> int:
    values = [dot(v, phi) for v in p.vertices]
    return max(values) - min(values)


@dataclass(frozen=True)
class Symmetrization:
    """``{(p - q)/2}``; stored as the integral polygon ``{p - q}``."""

    doubled: MarkedPolytope

    @property
    def vertices(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple((Fraction(x, 2), Fraction(y, 2)) for x, y in self.doubled.vertices)

    def width(self, phi: Sequence[int]) -> Fraction:
        return Fraction(thickness(self.doubled, phi), 2)


def symmetrize(p: MarkedPolytope) -> Symmetrization:
    diffs = {_sub(v, w) for v in p.vertices for w in p.vertices}
    hull = convex_hull(diffs)
    return Symmetrization(MarkedPolytope(hull, (False,) * len(hull)))


def pairs_maximally(p: MarkedPolytope, phi: Sequence[int]) -> Optional[Point]:
    """The vertex where ``phi`` attains a strict maximum, if there is one."""
    best = None
    best_val = None
    tie = False
    for v in p.vertices:
        val = dot(v, phi)
        if best_val is None or val > best_val:
            best, best_val, tie = v, val, False
        elif val == best_val:
            tie = True
    return None if tie else best


def normalize_translation(p: MarkedPolytope) -> MarkedPolytope:
    """Translate so the componentwise minimum over the vertices is the origin."""
    mx = min(v[0] for v in p.vertices)
    my = min(v[1] for v in p.vertices)
    return p.translate((-mx, -my))


def equal_up_to_translation(p: MarkedPolytope, q: MarkedPolytope) -> bool:
    return normalize_translation(p) == normalize_translation(q)


def outward_normal(edge: Sequence[int]) -> Point:
    """Primitive outward normal of a CCW edge vector."""
    return _primitive((edge[1], -edge[0]))[0]
