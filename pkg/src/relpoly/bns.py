"""Sigma-invariant queries read off the marked polytope.

A character ``phi`` lies in Sigma exactly when it attains its maximum on
``M_pi`` at a single vertex and that vertex is marked.  Everything here is a
thin layer over :mod:`relpoly.pipeline` and :mod:`relpoly.arcs`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .arcs import (
    AXES,
    ArcSet,
    Direction,
    edge_normals,
    intersect,
    marked_normal_arcs,
    simplest_direction,
    vertex_cones,
)
from .geometry import Point, pairs_maximally
from .pipeline import Presentation, compute, frame_direction


class Membership(NamedTuple):
    phi: Direction
    in_sigma: bool
    vertex: Optional[Point]  # the strict maximizer on M_pi, if any
    # phi in Sigma iff G is an ascending HNN extension over a finitely
    # generated base with phi as its induced character
    ascending_hnn: bool


def membership(p: Presentation, phi: Sequence[int]) -> Membership:
    phi = phi if isinstance(phi, Direction) else Direction(*phi)
    res = compute(p)
    d = frame_direction(res, phi)
    v = pairs_maximally(res.polytope, d)
    inside = v is not None and res.polytope.is_marked(v)
    return Membership(phi, inside, v, inside)


def in_sigma(p: Presentation, phi: Sequence[int]) -> bool:
    return membership(p, phi).in_sigma


@dataclass(frozen=True)
class SigmaReport:
    """Sigma as a subset of the character sphere.

    For ``b1 = 2`` the sphere is a circle and ``arcs`` lists the open arcs of
    Sigma.  For ``b1 = 1`` it is the pair ``{phi0, -phi0}``; ``points`` holds
    those lying in Sigma and ``arcs`` stays empty.
    """

    arcs: ArcSet
    marked_vertex_count: int
    full_sphere: bool
    points: tuple[Direction, ...] = ()


def sigma_arcs(p: Presentation) -> SigmaReport:
    res = compute(p)
    poly = res.polytope
    count = len(poly.marked_vertices)
    full = len(poly.vertices) == 1 and poly.marked[0]
    if res.info.b1 == 2:
        return SigmaReport(marked_normal_arcs(poly), count, full)
    f0 = res.info.phi0
    pts = tuple(d for d in (f0, -f0) if in_sigma(p, d))
    return SigmaReport(ArcSet(), count, full, pts)


def fg_kernel_certificate(p: Presentation) -> Optional[Direction]:
    """A character ``phi`` with both ``phi`` and ``-phi`` in Sigma, if any.

    Such a ``phi`` has finitely generated kernel.  The search intersects the
    open cone of each marked vertex with the negated cone of each marked
    vertex and takes the simplest direction in the first nonempty overlap.
    """
    res = compute(p)
    poly = res.polytope
    if res.info.b1 == 1:
        f0 = res.info.phi0
        return f0 if in_sigma(p, f0) and in_sigma(p, -f0) else None
    if len(poly.vertices) == 1:
        return AXES[0] if poly.marked[0] else None
    cones = [c for c, m in zip(vertex_cones(poly), poly.marked) if m]
    for cv in cones:
        for cw in cones:
            overlap = intersect(cv, cw.negate())
            if overlap is None:
                continue
            phi = simplest_direction(overlap)
            if not (in_sigma(p, phi) and in_sigma(p, -phi)):
                raise AssertionError(f"certificate {phi} failed the antipodal check")
            return phi if (phi.a, phi.b) > (0, 0) else -phi
    return None


class NonSigma(NamedTuple):
    is_z2: bool
    witness: Optional[Direction]


def exists_non_sigma(p: Presentation) -> NonSigma:
    """Either report that G is Z^2 or exhibit an integral character outside Sigma."""
    res = compute(p)
    poly = res.polytope
    if res.info.b1 == 1:
        f0 = res.info.phi0
        for d in (f0, -f0):
            if not in_sigma(p, d):
                return NonSigma(False, d)
        return NonSigma(False, None)
    if len(poly.vertices) == 1:
        if poly.marked[0] and fg_kernel_certificate(p) is not None:
            return NonSigma(True, None)
        return NonSigma(False, AXES[0])
    witness = None
    for cone, marked in zip(vertex_cones(poly), poly.marked):
        if not marked:
            witness = simplest_direction(cone)
            break
    if witness is None:
        # every vertex marked: an edge normal is maximized on a whole edge
        witness = min(edge_normals(poly), key=lambda d: (abs(d.a) + abs(d.b), -d.a, -d.b))
    if in_sigma(p, witness):
        raise AssertionError(f"witness {witness} lies in Sigma")
    return NonSigma(False, witness)
