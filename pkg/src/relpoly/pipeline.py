"""From a two-generator one-relator presentation to its marked polytope.

For ``b1 = 2`` the polytope is computed three independent ways (the closed
walk traced by the relator, and the Fox derivatives in ``x`` and ``y``)
and the answers must agree up to translation.  For ``b1 = 1`` the
presentation is brought into simple form and the one-dimensional polytope
is read off the Fox derivative along the torsion generator.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .arcs import Direction
from .errors import (
    BaumslagSolitarExcluded,
    EmptyRelator,
    NotEpimorphism,
    NotNice,
    NotSimple,
    PowerOfGenerator,
    RouteMismatch,
)
from .geometry import (
    X,
    XY,
    Y,
    MarkedPolytope,
    equal_up_to_translation,
    hull_of_multiset,
    minkowski_diff,
    normalize_translation,
)
from .groupring import abelian_support, fox_derivative
from .words import (
    DEFAULT_NAMES,
    AbelianImage,
    Word,
    abelianize,
    cyclic_reduce,
    free_reduce,
    parse_word,
    prefix_images,
    proper_power_root,
    syllables,
)


@dataclass(frozen=True)
class Presentation:
    """``<x, y | r>`` with ``r`` stored cyclically reduced.

    The word as given is kept in ``original`` when normalization changed it.
    """

    relator: Word
    names: tuple[str, str] = DEFAULT_NAMES
    original: Optional[Word] = field(default=None, compare=False)

    def __post_init__(self):
        core, _ = cyclic_reduce(self.relator)
        if not core:
            raise EmptyRelator(f"relator {self.relator.format(self.names)} is trivial in F")
        if core != self.relator:
            if self.original is None:
                object.__setattr__(self, "original", self.relator)
            object.__setattr__(self, "relator", core)
        object.__setattr__(self, "names", tuple(self.names))

    @classmethod
    def parse(cls, text: str, names: Sequence[str] = DEFAULT_NAMES) -> "Presentation":
        w = parse_word(text, names)
        if not free_reduce(w):
            raise EmptyRelator(f"relator {text!r} is trivial in F")
        return cls(w, tuple(names), original=w)

    def rotated(self, k: int) -> "Presentation":
        r = self.relator.letters
        return Presentation(Word(r[k:] + r[:k]), self.names)

    def swapped(self) -> "Presentation":
        """Exchange the roles of the two generators (names travel along)."""
        return Presentation(_swap_letters(self.relator), (self.names[1], self.names[0]))

    def format(self) -> str:
        return f"<{self.names[0]},{self.names[1]} | {self.relator.format(self.names)}>"


def _swap_letters(w: Word) -> Word:
    return Word(tuple(c // abs(c) * (3 - abs(c)) for c in w.letters))


class Classification(str, enum.Enum):
    NICE = "Nice"
    SIMPLE = "Simple"
    SIMPLE_CONVERTIBLE = "SimpleConvertible"
    BAUMSLAG_SOLITAR_EXCLUDED = "BaumslagSolitarExcluded"
    POWER_OF_GENERATOR = "PowerOfGenerator"


@dataclass(frozen=True)
class PresentationInfo:
    abelian_image: AbelianImage
    b1: int
    classification: Classification
    is_simple: bool
    root: Word
    power: int
    # epimorphism onto Z used as the coordinate when b1 == 1
    phi0: Optional[Direction] = None

    @property
    def nice(self) -> bool:
        return self.classification is Classification.NICE


def _character(e: AbelianImage) -> Direction:
    d = Direction.reduce(e[1], -e[0])
    return d if (d.a, d.b) > (0, 0) else -d


def analyze(p: Presentation) -> PresentationInfo:
    r = p.relator
    e = abelianize(r)
    root, m = proper_power_root(r)
    if e == (0, 0):
        return PresentationInfo(e, 2, Classification.NICE, False, root, m)
    phi0 = _character(e)
    simple = e[0] == 0
    if len({abs(c) for c in r.letters}) == 1:
        cls = Classification.POWER_OF_GENERATOR
    else:
        q = p if simple else to_simple(p, phi0).presentation
        if _b1_one_data(q).excluded:
            cls = Classification.BAUMSLAG_SOLITAR_EXCLUDED
        elif simple:
            cls = Classification.SIMPLE
        else:
            cls = Classification.SIMPLE_CONVERTIBLE
    return PresentationInfo(e, 1, cls, simple, root, m, phi0)


def _require_nice(p: Presentation) -> None:
    if abelianize(p.relator) != (0, 0):
        raise NotNice(f"{p.format()} has b1 = 1")


def walk_multiset(r: Word) -> Counter:
    """Abelianized prefixes ``r_0 .. r_{l-1}`` with multiplicity."""
    return Counter(prefix_images(r))


def polytope_via_walk(p: Presentation) -> MarkedPolytope:
    """``N - (X + Y)`` where ``N`` is the marked hull of the closed walk."""
    _require_nice(p)
    n = hull_of_multiset(walk_multiset(p.relator))
    return minkowski_diff(n, XY)


def polytope_via_fox(p: Presentation, route: str = "r_y") -> MarkedPolytope:
    """``M(r_y) - X`` (``route="r_y"``) or ``M(r_x) - Y`` (``route="r_x"``)."""
    _require_nice(p)
    if route == "r_y":
        gen, seg = 1, X
    elif route == "r_x":
        gen, seg = 0, Y
    else:
        raise ValueError(f"unknown route {route!r}")
    m = hull_of_multiset(abelian_support(fox_derivative(p.relator, gen)))
    return minkowski_diff(m, seg)


@dataclass(frozen=True)
class Conversion:
    """Result of the basis change making ``phi(x) = 0`` and ``phi(y) = 1``.

    ``basis`` holds the new generators as words in the original ones, and
    ``trace`` the values ``(phi(x), phi(y))`` before each substitution.
    """

    presentation: Presentation
    basis: tuple[Word, Word]
    trace: tuple[tuple[int, int], ...]

    @property
    def substitutions(self) -> int:
        return len(self.trace) - 1

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """Columns are the abelian images of the new generators."""
        e0, e1 = abelianize(self.basis[0]), abelianize(self.basis[1])
        return ((e0[0], e1[0]), (e0[1], e1[1]))


def simple_form(p: Presentation, phi: Sequence[int]) -> Conversion:
    """Rewrite ``p`` so that ``phi`` takes the values 0 on x and 1 on y.

    Each step substitutes ``y = c x^-e`` with ``c = y x^e`` (``e = +-1``
    chosen so ``|phi(c)| < |phi(y)|``), then reduces and cyclically reduces.
    """
    fx, fy = int(phi[0]), int(phi[1])
    from math import gcd

    if gcd(fx, fy) != 1:
        raise NotEpimorphism(f"phi = ({fx},{fy}) does not map onto Z")
    e = abelianize(p.relator)
    if fx * e[0] + fy * e[1] != 0:
        raise NotEpimorphism(f"phi = ({fx},{fy}) does not vanish on the relator")
    letters = p.relator
    names = p.names
    bx, by = Word((1,)), Word((2,))
    trace = [(fx, fy)]
    while True:
        if abs(fx) > abs(fy):
            letters = _swap_letters(letters)
            names = (names[1], names[0])
            bx, by, fx, fy = by, bx, fy, fx
        if abs(fx) + abs(fy) == 1:
            break
        eps = 1 if fx * fy < 0 else -1
        out: list[int] = []
        for code in letters.letters:
            if code == 2:
                out += [2, -eps]
            elif code == -2:
                out += [eps, -2]
            else:
                out.append(code)
        letters, _ = cyclic_reduce(Word(tuple(out)))
        by = by * (bx ** eps)
        fy = fy + eps * fx
        trace.append((fx, fy))
    if fy == -1:
        letters = Word(tuple(-c if abs(c) == 2 else c for c in letters.letters))
        by = by.inverse()
        fy = 1
    return Conversion(Presentation(letters, names), (bx, by), tuple(trace))


def to_simple(p: Presentation, phi0: Direction) -> Conversion:
    """Convert a ``b1 = 1`` presentation so that x carries ``phi0`` and y is torsion."""
    conv = simple_form(p, phi0)
    q = conv.presentation.swapped()
    return Conversion(q, (conv.basis[1], conv.basis[0]), conv.trace)


@dataclass(frozen=True)
class _SimpleData:
    interval: MarkedPolytope  # M(r_y) pushed to the x-axis
    spread: int  # D = max - min of the syllable prefix sums
    exponents: tuple[tuple[int, int], ...]

    @property
    def excluded(self) -> bool:
        k = len(self.exponents)
        return self.spread == 1 and k == 2 and any(abs(n) == 1 for _, n in self.exponents)


def _b1_one_data(p: Presentation) -> _SimpleData:
    r = p.relator
    e = abelianize(r)
    if e[0] != 0 or e[1] == 0:
        raise NotSimple(f"{p.format()} is not simple (abelian image {tuple(e)})")
    if len({abs(c) for c in r.letters}) == 1:
        raise PowerOfGenerator(f"{p.format()} is a power of a single generator")
    _, pairs = syllables(r, lead=0)
    sums, acc = [], 0
    for m, _ in pairs:
        acc += m
        sums.append(acc)
    spread = max(sums) - min(sums)
    support = abelian_support(fox_derivative(r, 1)).project((1, 0))
    interval = hull_of_multiset(support)
    return _SimpleData(interval, spread, tuple(pairs))


def b1_one_polytope(p: Presentation) -> MarkedPolytope:
    """Marked polytope of a simple presentation, as a lattice interval on the x-axis.

    Its coordinate is the exponent sum in x, i.e. the epimorphism onto Z.
    """
    data = _b1_one_data(p)
    width = data.interval.vertices[-1][0] - data.interval.vertices[0][0]
    if width != data.spread:
        raise RouteMismatch(f"M(r_y) has length {width} but the syllable spread is {data.spread}")
    if data.spread >= 2:
        return minkowski_diff(data.interval, X)
    if data.excluded:
        raise BaumslagSolitarExcluded(
            f"{p.format()} has the form of a Baumslag-Solitar group B(+-1,n), "
            "which admits no marked polytope"
        )
    if any(data.interval.marked):
        raise RouteMismatch(f"expected both ends of M(r_y) = {data.interval} to be unmarked")
    return MarkedPolytope.point((data.interval.vertices[0][0], 0), marked=False)


@dataclass(frozen=True)
class PolytopeResult:
    presentation: Presentation
    info: PresentationInfo
    polytope: MarkedPolytope  # normalized to the min-corner origin
    routes: dict = field(compare=False)
    conversion: Optional[Conversion] = None


@lru_cache(maxsize=4096)
def compute(p: Presentation) -> PolytopeResult:
    """All available routes, cross-checked; raises on any disagreement."""
    info = analyze(p)
    cls = info.classification
    if cls is Classification.POWER_OF_GENERATOR:
        raise PowerOfGenerator(f"{p.format()} is a power of a single generator")
    if cls is Classification.BAUMSLAG_SOLITAR_EXCLUDED:
        raise BaumslagSolitarExcluded(
            f"{p.format()} presents a group of the form B(+-1,n) (Baumslag-Solitar); "
            "no marked polytope exists for it"
        )
    conversion = None
    if info.nice:
        routes = {
            "walk": polytope_via_walk(p),
            "r_y": polytope_via_fox(p, "r_y"),
            "r_x": polytope_via_fox(p, "r_x"),
        }
        ref = routes["walk"]
        for name, poly in routes.items():
            if not equal_up_to_translation(ref, poly):
                raise RouteMismatch(f"route {name} gives {poly}, walk gives {ref} for {p.format()}")
    else:
        q = p
        if not info.is_simple:
            conversion = to_simple(p, info.phi0)
            q = conversion.presentation
        routes = {"interval": b1_one_polytope(q)}
        ref = routes["interval"]
    return PolytopeResult(p, info, normalize_translation(ref), routes, conversion)


def marked_polytope(p: Presentation) -> MarkedPolytope:
    return compute(p).polytope


def frame_direction(result: PolytopeResult, phi: Sequence[int]) -> tuple[int, int]:
    """Express a character ``phi`` of G in the coordinates of ``result.polytope``.

    For ``b1 = 2`` this is ``phi`` itself.  For ``b1 = 1`` the only characters
    are multiples of ``phi0`` and the polytope lives on the first axis, so
    ``+-phi0`` becomes ``(+-1, 0)``.
    """
    a, b = int(phi[0]), int(phi[1])
    if (a, b) == (0, 0):
        raise NotEpimorphism("the zero character has no direction")
    if result.info.b1 == 2:
        return (a, b)
    e = result.info.abelian_image
    if a * e[0] + b * e[1] != 0:
        raise NotEpimorphism(
            f"({a},{b}) does not vanish on the relator image {tuple(e)}, so it is not a character"
        )
    f0 = result.info.phi0
    level = a * f0.a + b * f0.b
    return (1 if level > 0 else -1, 0)
