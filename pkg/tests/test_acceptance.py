"""Acceptance criteria 1-12, exact arithmetic throughout.

Run under pytest, or directly (``python3 tests/test_acceptance.py``) for a
plain list of PASS/FAIL lines.
"""

import math
import random
import time
from collections import Counter
from functools import lru_cache
from math import gcd

from relpoly.arcs import marked_normal_arcs
from relpoly.bns import exists_non_sigma, fg_kernel_certificate, in_sigma, sigma_arcs
from relpoly.checks import random_corpus, random_primitive, random_relator, signed_abelian
from relpoly.errors import BaumslagSolitarExcluded
from relpoly.geometry import (
    XY,
    X,
    Y,
    MarkedPolytope,
    convex_hull,
    equal_up_to_translation,
    hull_of_multiset,
    minkowski_diff,
    minkowski_sum,
    pairs_maximally,
    thickness,
)
from relpoly.groupring import (
    FreeRingElement,
    abelian_support,
    fox_derivative,
    fundamental_formula_check,
    generator_minus_one,
)
from relpoly.pipeline import (
    Presentation,
    analyze,
    compute,
    marked_polytope,
    polytope_via_fox,
    polytope_via_walk,
    simple_form,
)
from relpoly.splitting import hnn_splitting, splitting_complexity
from relpoly.words import Word, abelianize, parse_word

SEED = 20240611
TRI = Presentation.parse("XYxy^2XYx^2YXyXyxY")
COMM = Presentation.parse("xyXY")
TA = ("t", "a")

LINES: list[str] = []

@lru_cache(maxsize=None)
def corpus():
    return tuple(random_corpus(1000, SEED, 40))

def report(n: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  ({detail})"
    LINES.append(line)
    print(line)
    assert ok, line

def test_criterion_01_triangle_fox_data():
    r = TRI.relator
    rx = fox_derivative(r, 0)
    counts = Counter(abelianize(w) for w, _ in rx.items())
    hull = hull_of_multiset(abelian_support(rx))
    ok = (
        len(rx) == 8
        and counts == {(0, 0): 1, (-1, -1): 1, (0, -1): 1, (-1, 0): 3, (-1, 1): 2}
        and set(hull.vertices) == {(0, 0), (-1, -1), (0, -1), (-1, 1)}
        and [v for v in hull.vertices if not hull.is_marked(v)] == [(-1, 1)]
    )
    report(1, "triangle relator: r_x terms, counts and marked hull", ok, f"{len(rx)} terms")

def test_criterion_02_triangle_sigma():
    cert = fg_kernel_certificate(TRI)
    ns = exists_non_sigma(TRI)
    ok = (
        in_sigma(TRI, (2, 1))
        and in_sigma(TRI, (-2, -1))
        and cert is not None
        and not ns.is_z2
        and ns.witness is not None
        and not in_sigma(TRI, ns.witness)
    )
    report(2, "triangle relator: (2,1) and (-2,-1) in Sigma, certificate, witness", ok,
           f"certificate {cert}, witness {ns.witness}")

def test_criterion_03_z2():
    m = marked_polytope(COMM)
    rep = sigma_arcs(COMM)
    ok = (
        m == MarkedPolytope.point((0, 0))
        and rep.arcs.full_circle
        and splitting_complexity(COMM, (0, 1)).c == 1
        and hnn_splitting(COMM, (0, 1)).rank == 1
    )
    report(3, "Z^2: marked point, full circle, c = 1, rank 1", ok)

def test_criterion_04_bs_exclusion():
    p = Presentation.parse("TaatA", TA)
    info = analyze(p)
    try:
        marked_polytope(p)
        rejected = False
    except BaumslagSolitarExcluded:
        rejected = True
    ra = fox_derivative(p.relator, 1)
    t_inv, t_inv_a = parse_word("T", TA), parse_word("Ta", TA)
    # r_a = t^-1 + t^-1 a - r, and r is trivial in the group
    ok = (
        info.b1 == 1
        and rejected
        and ra == FreeRingElement({t_inv: 1, t_inv_a: 1, p.relator: -1})
    )
    report(4, "B(2,1) form rejected; r_a = t^-1(1+a) - 1", ok, ra.format(TA))

def test_criterion_05_bs23():
    p = Presentation.parse("TaatA^3", TA)
    m = marked_polytope(p)
    ok = (
        m == MarkedPolytope.point((0, 0), marked=False)
        and not in_sigma(p, (1, 0))
        and not in_sigma(p, (-1, 0))
        and sigma_arcs(p).points == ()
    )
    report(5, "B(2,3) form: unmarked point, Sigma empty", ok)

def test_criterion_06_route_agreement():
    t0 = time.perf_counter()
    bad = 0
    for w in corpus():
        p = Presentation(w)
        walk = polytope_via_walk(p)
        if not (
            equal_up_to_translation(walk, polytope_via_fox(p, "r_y"))
            and equal_up_to_translation(walk, polytope_via_fox(p, "r_x"))
        ):
            bad += 1
    dt = time.perf_counter() - t0
    report(6, "route agreement on 1000 relators", bad == 0 and dt < 60,
           f"{bad} failures, {dt:.1f}s")

def test_criterion_07_cyclic_permutations():
    t0 = time.perf_counter()
    bad = 0
    for w in corpus():
        p = Presentation(w)
        ref = marked_polytope(p)
        if any(
            not equal_up_to_translation(polytope_via_walk(p.rotated(k)), ref)
            for k in range(1, len(w))
        ):
            bad += 1
    dt = time.perf_counter() - t0
    report(7, "cyclic permutations give translates", bad == 0 and dt < 60,
           f"{bad} failures, {dt:.1f}s")

def test_criterion_08_fundamental_formula():
    t0 = time.perf_counter()
    bad = 0
    for w in corpus():
        lhs = fox_derivative(w, 0) * generator_minus_one(0)
        rhs = -(fox_derivative(w, 1) * generator_minus_one(1))
        if not fundamental_formula_check(w) or signed_abelian(lhs) != signed_abelian(rhs):
            bad += 1
    dt = time.perf_counter() - t0
    report(8, "r - 1 = r_x(x-1) + r_y(y-1); abelianized identity", bad == 0 and dt < 60,
           f"{bad} failures, {dt:.1f}s")

def test_criterion_09_proper_powers():
    rng = random.Random(SEED + 9)
    bad = 0
    for _ in range(100):
        m = rng.choice((2, 3))
        s = random_relator(rng, 40 // m)
        r = Word(s.letters * m)
        poly = marked_polytope(Presentation(r))
        counts = abelian_support(fox_derivative(r, 1)).counts
        if poly.marked_vertices or min(counts.values()) < m:
            bad += 1
    report(9, "proper powers: no marks, Fox counts >= m", bad == 0, f"{bad} failures")

def test_criterion_10_rank_and_seminorm():
    t0 = time.perf_counter()
    rng = random.Random(SEED + 10)
    words = corpus()
    bad_rank = 0
    for w in words[:500]:
        p = Presentation(w)
        phi = random_primitive(rng)
        if hnn_splitting(p, phi).rank != thickness(marked_polytope(p), phi) + 1:
            bad_rank += 1
    bad_sub = 0
    for i in range(200):
        poly = marked_polytope(Presentation(words[500 + i]))
        phi, psi = random_primitive(rng), random_primitive(rng)
        both = (phi[0] + psi[0], phi[1] + psi[1])
        if thickness(poly, both) > thickness(poly, phi) + thickness(poly, psi):
            bad_sub += 1
    dt = time.perf_counter() - t0
    report(10, "rank = thickness + 1; thickness subadditive", bad_rank == 0 and bad_sub == 0 and dt < 60,
           f"{bad_rank} rank failures, {bad_sub} subadditivity failures, {dt:.1f}s")

def test_criterion_11_simple_form():
    rng = random.Random(SEED + 11)
    bad = 0
    for w in corpus()[:200]:
        p = Presentation(w)
        phi = random_primitive(rng)
        conv = simple_form(p, phi)
        mat = conv.matrix
        on_basis = tuple(phi[0] * mat[0][j] + phi[1] * mat[1][j] for j in range(2))
        sizes = [abs(a) + abs(b) for a, b in conv.trace]
        decreasing = all(s > t for s, t in zip(sizes, sizes[1:]))
        moved = compute(conv.presentation).polytope.linear_image(conv.matrix)
        same = equal_up_to_translation(moved.unmarked(), marked_polytope(p).unmarked())
        if not (decreasing and same and on_basis == (0, 1)):
            bad += 1
    report(11, "basis change terminates and keeps the polytope", bad == 0, f"{bad} failures")

def _random_polytope(rng):
    pts = {(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(rng.randint(1, 8))}
    hull = convex_hull(pts)
    return MarkedPolytope(hull, tuple(rng.random() < 0.6 for _ in hull))

def _sampled_directions():
    out = []
    for k in range(360):
        t = 2 * math.pi * (k + 0.5) / 360
        a, b = round(1000 * math.cos(t)), round(1000 * math.sin(t))
        g = gcd(a, b)
        out.append((a // g, b // g))
    return out

def test_criterion_12_geometry_kernel():
    rng = random.Random(SEED + 12)
    bad_diff = 0
    for _ in range(500):
        m = _random_polytope(rng)
        for q in (X, Y, XY):
            if minkowski_diff(minkowski_sum(m, q), q) != m:
                bad_diff += 1
    dirs = _sampled_directions()
    bad_arcs = 0
    for _ in range(200):
        p = _random_polytope(rng)
        arcs = marked_normal_arcs(p)
        for d in dirs:
            v = pairs_maximally(p, d)
            if arcs.contains(d) != (v is not None and p.is_marked(v)):
                bad_arcs += 1
    report(12, "(M+q)-q = M; arcs agree with argmax on 360 directions",
           bad_diff == 0 and bad_arcs == 0, f"{bad_diff} difference failures, {bad_arcs} arc failures")

if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
