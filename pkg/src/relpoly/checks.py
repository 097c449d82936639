"""Seeded property suites over random relators.

Every suite takes a list of relators and returns a :class:`SuiteResult`;
on failure the offending word is shrunk to a small counterexample.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import RelpolyError
from .geometry import (
    XY,
    equal_up_to_translation,
    hull_of_multiset,
    minkowski_diff,
    thickness,
)
from .groupring import (
    FreeRingElement,
    abelian_support,
    fox_derivative,
    fundamental_formula_check,
    generator_minus_one,
)
from .pipeline import (
    Presentation,
    compute,
    polytope_via_fox,
    polytope_via_walk,
    simple_form,
)
from .splitting import hnn_splitting
from .words import Word, abelianize, cyclic_reduce, prefix_images

_LETTERS = (1, -1, 2, -2)


def random_reduced_word(rng: random.Random, length: int) -> Word:
    out: list[int] = []
    while len(out) < length:
        c = rng.choice(_LETTERS)
        if out and out[-1] == -c:
            continue
        out.append(c)
    return Word(tuple(out))


def random_relator(rng: random.Random, maxlen: int = 40, minlen: int = 4) -> Word:
    """A uniformly chosen cyclically reduced word of random even length with
    trivial abelian image (rejection sampling)."""
    if maxlen < minlen:
        raise ValueError(f"maxlen must be at least {minlen}")
    lengths = range(minlen, maxlen + 1, 2)
    while True:
        w = random_reduced_word(rng, rng.choice(lengths))
        if w.is_cyclically_reduced() and abelianize(w) == (0, 0):
            return w


def random_corpus(count: int, seed: int, maxlen: int = 40) -> list[Word]:
    rng = random.Random(seed)
    return [random_relator(rng, maxlen) for _ in range(count)]


def random_primitive(rng: random.Random, bound: int = 5) -> tuple[int, int]:
    from math import gcd

    while True:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if gcd(a, b) == 1:
            return a, b


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: int = 0
    counterexample: Optional[Word] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "ok" if self.passed else "FAIL"
        s = f"{self.name}: {status} ({self.cases} cases, {self.failures} failures)"
        if self.counterexample is not None:
            s += f" counterexample {self.counterexample.format()}"
        if self.detail:
            s += f" [{self.detail}]"
        return s


def shrink(w: Word, fails: Callable[[Word], bool]) -> Word:
    """Greedily delete subwords while the result stays a valid relator
    (nonempty, cyclically reduced, trivial abelian image) and still fails."""
    best = w
    improved = True
    while improved:
        improved = False
        n = len(best)
        for size in range(n - 1, 0, -1):
            for i in range(n - size + 1):
                cand, _ = cyclic_reduce(Word(best.letters[:i] + best.letters[i + size:]))
                if not cand or abelianize(cand) != (0, 0) or len(cand) >= len(best):
                    continue
                if _safe(fails, cand):
                    best, improved = cand, True
                    break
            if improved:
                break
    return best


def _safe(pred: Callable[[Word], bool], w: Word) -> bool:
    try:
        return pred(w)
    except RelpolyError:
        return True


def _run(name: str, words: Iterable[Word], fails: Callable[[Word], bool]) -> SuiteResult:
    words = list(words)
    res = SuiteResult(name, len(words))
    first = None
    for w in words:
        if _safe(fails, w):
            res.failures += 1
            if first is None:
                first = w
    if first is not None:
        res.counterexample = shrink(first, fails)
    return res


def mutant_walk(p: Presentation):
    """The walk route with the marking rule off by one (count <= 2 marks)."""
    counts = Counter(prefix_images(p.relator))
    bent = {v: 1 if c <= 2 else c for v, c in counts.items()}
    return minkowski_diff(hull_of_multiset(bent), XY)


def route_agreement(words, walk=polytope_via_walk) -> SuiteResult:
    def fails(w):
        p = Presentation(w)
        ref = walk(p)
        return not all(
            equal_up_to_translation(ref, polytope_via_fox(p, route)) for route in ("r_y", "r_x")
        )

    return _run("route-agreement", words, fails)


def cyclic_permutation(words) -> SuiteResult:
    def fails(w):
        p = Presentation(w)
        ref = compute(p).polytope
        return any(compute(p.rotated(k)).polytope != ref for k in range(1, len(w)))

    return _run("cyclic-permutation", words, fails)


def fundamental_formula(words) -> SuiteResult:
    return _run("fundamental-formula", words, lambda w: not fundamental_formula_check(w))


def signed_abelian(f: FreeRingElement) -> dict:
    acc: dict = defaultdict(int)
    for w, c in f.items():
        acc[abelianize(w)] += c
    return {v: c for v, c in acc.items() if c}


def abelianized_identity(words) -> SuiteResult:
    """``r_x (x - 1)`` and ``-r_y (y - 1)`` have equal signed abelian images."""

    def fails(w):
        lhs = fox_derivative(w, 0) * generator_minus_one(0)
        rhs = -(fox_derivative(w, 1) * generator_minus_one(1))
        return signed_abelian(lhs) != signed_abelian(rhs)

    return _run("abelianized-identity", words, fails)


def thickness_additivity(words, seed: int = 0) -> SuiteResult:
    """Splitting rank equals width plus one; width is subadditive."""
    rng = random.Random(seed)
    phis = {w: (random_primitive(rng), random_primitive(rng)) for w in words}

    def fails(w):
        p = Presentation(w)
        poly = compute(p).polytope
        phi, psi = phis.get(w) or (random_primitive(rng), random_primitive(rng))
        if hnn_splitting(p, phi).rank != thickness(poly, phi) + 1:
            return True
        both = (phi[0] + psi[0], phi[1] + psi[1])
        return thickness(poly, both) > thickness(poly, phi) + thickness(poly, psi)

    return _run("thickness-additivity", words, fails)


def simple_form_suite(words, seed: int = 0) -> SuiteResult:
    """The basis change terminates with a strictly decreasing ``|phi(x)|+|phi(y)|``
    and carries the unmarked polytope onto the original one."""
    rng = random.Random(seed)
    phis = {w: random_primitive(rng) for w in words}

    def fails(w):
        p = Presentation(w)
        conv = simple_form(p, phis.get(w) or random_primitive(rng))
        sizes = [abs(a) + abs(b) for a, b in conv.trace]
        if any(s <= t for s, t in zip(sizes, sizes[1:])):
            return True
        moved = compute(conv.presentation).polytope.linear_image(conv.matrix)
        return not equal_up_to_translation(moved.unmarked(), compute(p).polytope.unmarked())

    return _run("simple-form", words, fails)


def proper_power(count: int, seed: int, maxlen: int = 40) -> SuiteResult:
    """``s^m`` has no marked vertices, and every Fox support count is at least ``m``."""
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        m = rng.choice((2, 3))
        s = random_relator(rng, max(4, maxlen // m))
        cases.append((s, m))
    res = SuiteResult("proper-power", len(cases))
    for s, m in cases:
        r = Word(s.letters * m)
        try:
            poly = compute(Presentation(r)).polytope
            bad = bool(poly.marked_vertices) or min(
                abelian_support(fox_derivative(r, 1)).counts.values()
            ) < m
        except RelpolyError:
            bad = True
        if bad:
            res.failures += 1
            if res.counterexample is None:
                res.counterexample = r
    return res


def run_all(count: int, seed: int, maxlen: int = 40, mutant: bool = False) -> list[SuiteResult]:
    words = random_corpus(count, seed, maxlen)
    if mutant:
        return [route_agreement(words, walk=mutant_walk)]
    return [
        route_agreement(words),
        cyclic_permutation(words),
        fundamental_formula(words),
        abelianized_identity(words),
        thickness_additivity(words, seed),
        simple_form_suite(words, seed),
        proper_power(count // 10 if count >= 10 else count, seed, maxlen),
    ]
