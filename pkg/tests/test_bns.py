import math
from math import gcd

from relpoly.arcs import Direction, vertex_cones
from relpoly.bns import (
    exists_non_sigma,
    fg_kernel_certificate,
    in_sigma,
    membership,
    sigma_arcs,
)
from relpoly.checks import random_corpus
from relpoly.geometry import pairs_maximally
from relpoly.pipeline import Presentation, marked_polytope

TRI = Presentation.parse("XYxy^2XYx^2YXyXyxY")
COMM = Presentation.parse("xyXY")
BS23 = Presentation.parse("TaatA^3", ("t", "a"))
POWER = Presentation.parse("xyXYxyXY")


def sampled(n=360):
    out = []
    for k in range(n):
        t = 2 * math.pi * (k + 0.5) / n
        a, b = round(1000 * math.cos(t)), round(1000 * math.sin(t))
        g = gcd(a, b)
        out.append(Direction(a // g, b // g))
    return out


def test_triangle_membership():
    assert in_sigma(TRI, (2, 1))
    assert in_sigma(TRI, (-2, -1))
    assert not in_sigma(TRI, (0, 1))
    m = membership(TRI, (2, 1))
    assert m.ascending_hnn and m.vertex is not None


def test_commutator_everything_in_sigma():
    for d in sampled(36):
        assert in_sigma(COMM, d)
    rep = sigma_arcs(COMM)
    assert rep.full_sphere and rep.arcs.full_circle and rep.marked_vertex_count == 1
    assert fg_kernel_certificate(COMM) == Direction(1, 0)
    assert exists_non_sigma(COMM).is_z2


def test_bs23_sigma_empty():
    assert not in_sigma(BS23, (1, 0))
    assert not in_sigma(BS23, (-1, 0))
    rep = sigma_arcs(BS23)
    assert rep.points == () and not rep.full_sphere
    assert fg_kernel_certificate(BS23) is None
    assert exists_non_sigma(BS23).witness is not None


def test_triangle_arcs_and_certificates():
    rep = sigma_arcs(TRI)
    assert len(rep.arcs) == 2 and rep.marked_vertex_count == 2
    a, b = rep.arcs.arcs
    # open arcs: disjoint even where they share an endpoint
    assert not any(a.contains(d) and b.contains(d) for d in sampled())
    phi = fg_kernel_certificate(TRI)
    assert phi is not None and in_sigma(TRI, phi) and in_sigma(TRI, -phi)
    ns = exists_non_sigma(TRI)
    assert not ns.is_z2 and ns.witness == Direction(0, 1)
    m = marked_polytope(TRI)
    assert not m.is_marked(pairs_maximally(m, ns.witness))


def test_proper_power_has_empty_sigma():
    assert sigma_arcs(POWER).arcs.is_empty
    assert fg_kernel_certificate(POWER) is None
    ns = exists_non_sigma(POWER)
    assert ns.witness is not None and not in_sigma(POWER, ns.witness)


def test_sigma_and_complement_tile_circle():
    for w in random_corpus(30, 17, 24):
        p = Presentation(w)
        m = marked_polytope(p)
        rep = sigma_arcs(p)
        cones = [c for c in vertex_cones(m) if c is not None]
        for d in sampled(120):
            v = pairs_maximally(m, d)
            in_arcs = rep.arcs.contains(d)
            assert in_arcs == in_sigma(p, d)
            if not in_arcs:
                # in the complement: an unmarked cone, or a fan ray
                assert v is None or not m.is_marked(v)
            if len(m.vertices) > 1:
                assert sum(c.contains(d) for c in cones) == (0 if v is None else 1)


def test_answers_constant_along_stored_arcs():
    for w in random_corpus(30, 23, 24):
        p = Presentation(w)
        phi = fg_kernel_certificate(p)
        if phi is None:
            continue
        arc = next((a for a in sigma_arcs(p).arcs.arcs if a.contains(phi)), None)
        if arc is None:
            continue
        for d in sampled(120):
            if arc.contains(d):
                assert in_sigma(p, d)


def test_random_witnesses_lie_outside_sigma():
    for w in random_corpus(50, 29, 30):
        p = Presentation(w)
        ns = exists_non_sigma(p)
        if ns.witness is not None:
            assert not in_sigma(p, ns.witness)
        phi = fg_kernel_certificate(p)
        if phi is not None:
            assert in_sigma(p, phi) and in_sigma(p, -phi)
