"""Integral group ring of the free group F<x, y> and Fox calculus."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .words import AbelianImage, Word, abelianize, free_reduce

EMPTY = Word(())


class FreeRingElement:
    """A finite Z-linear combination of reduced words.

    Immutable; keys are reduced words and zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Word, int], Iterable[tuple[Word, int]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, int] = defaultdict(int)
        for w, c in items:
            if not w.is_reduced():
                w = free_reduce(w)
            acc[w] += c
        self._terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    @classmethod
    def word(cls, w: Word, coefficient: int = 1) -> "FreeRingElement":
        return cls({w: coefficient})

    @classmethod
    def one(cls) -> "FreeRingElement":
        return cls({EMPTY: 1})

    @classmethod
    def zero(cls) -> "FreeRingElement":
        return cls()

    @property
    def terms(self) -> Mapping[Word, int]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, w: Word) -> int:
        return self._terms.get(free_reduce(w), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = FreeRingElement.one() * other if other else FreeRingElement()
        if not isinstance(other, FreeRingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "FreeRingElement") -> "FreeRingElement":
        if isinstance(other, int):
            other = FreeRingElement({EMPTY: other})
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return FreeRingElement(acc)

    __radd__ = __add__

    def __neg__(self) -> "FreeRingElement":
        return FreeRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "FreeRingElement") -> "FreeRingElement":
        if isinstance(other, int):
            other = FreeRingElement({EMPTY: other})
        return self + (-other)

    def __rsub__(self, other: int) -> "FreeRingElement":
        return FreeRingElement({EMPTY: other}) - self

    def __mul__(self, other) -> "FreeRingElement":
        if isinstance(other, int):
            return FreeRingElement({w: c * other for w, c in self._terms.items()})
        acc: dict[Word, int] = defaultdict(int)
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                acc[u * v] += a * b
        return FreeRingElement(acc)

    def __rmul__(self, other: int) -> "FreeRingElement":
        return self * other

    def format(self, names=("x", "y")) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0].letters)):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = w.format(names)
            if mag != 1:
                body = f"{mag}*{body}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"FreeRingElement({self.format()})"


def ring_add(f: FreeRingElement, g: FreeRingElement) -> FreeRingElement:
    return f + g


def ring_negate(f: FreeRingElement) -> FreeRingElement:
    return -f


def ring_mul(f: FreeRingElement, g: FreeRingElement) -> FreeRingElement:
    return f * g


def generator_minus_one(generator: int) -> FreeRingElement:
    """``x - 1`` (generator 0) or ``y - 1`` (generator 1)."""
    return FreeRingElement({Word((generator + 1,)): 1, EMPTY: -1})


def fox_derivative(r: Word, generator: int) -> FreeRingElement:
    """Fox derivative of ``r`` with respect to generator ``0`` (x) or ``1`` (y).

    Letter ``g_j = x_i`` contributes ``+r_{j-1}`` and ``g_j = x_i^-1``
    contributes ``-r_j``, where ``r_j`` is the product of the first ``j``
    letters.
    """
    if generator not in (0, 1):
        raise ValueError(f"generator index must be 0 or 1, got {generator!r}")
    letters = free_reduce(r).letters
    g = generator + 1
    terms: dict[Word, int] = {}
    for j, c in enumerate(letters):
        if c == g:
            w, s = Word(letters[:j]), 1
        elif c == -g:
            w, s = Word(letters[: j + 1]), -1
        else:
            continue
        terms[w] = terms.get(w, 0) + s
    return FreeRingElement(terms)


def augmentation(f: FreeRingElement) -> int:
    return sum(c for _, c in f.items())


def fundamental_formula_check(r: Word) -> bool:
    """Whether ``r - 1 == r_x (x - 1) + r_y (y - 1)`` holds in Z[F]."""
    lhs = FreeRingElement.word(r) - 1
    rhs = fox_derivative(r, 0) * generator_minus_one(0) + fox_derivative(
        r, 1
    ) * generator_minus_one(1)
    return lhs == rhs


@dataclass(frozen=True)
class LatticeMultiset:
    """Term counts and signed coefficient sums of a ring element, per point of Z^2."""

    counts: Mapping[AbelianImage, int] = field(default_factory=dict)
    signed: Mapping[AbelianImage, int] = field(default_factory=dict)

    def __post_init__(self):
        for v, n in self.counts.items():
            if n < 1 or n < abs(self.signed.get(v, 0)):
                raise ValueError(f"inconsistent multiset entry at {v}: {n}")

    def __bool__(self) -> bool:
        return bool(self.counts)

    def project(self, phi: tuple[int, int]) -> "LatticeMultiset":
        """Push forward along ``phi`` onto the first axis (used for b1 = 1)."""
        counts: dict[AbelianImage, int] = defaultdict(int)
        signed: dict[AbelianImage, int] = defaultdict(int)
        for v, n in self.counts.items():
            p = AbelianImage(phi[0] * v[0] + phi[1] * v[1], 0)
            counts[p] += n
            signed[p] += self.signed.get(v, 0)
        return LatticeMultiset(dict(counts), dict(signed))


def abelian_support(f: FreeRingElement) -> LatticeMultiset:
    """Count the terms of ``f`` lying over each point of H_1 = Z^2.

    For Fox derivatives of cyclically reduced relators every coefficient is
    +-1 and distinct terms stay distinct in the one-relator group,
    so the count at ``v`` is 1 exactly when the ``v``-component is a monomial.
    That is the marking rule used downstream.
    """
    counts: dict[AbelianImage, int] = defaultdict(int)
    signed: dict[AbelianImage, int] = defaultdict(int)
    for w, c in f.items():
        v = abelianize(w)
        counts[v] += abs(c)
        signed[v] += c
    return LatticeMultiset(dict(counts), dict(signed))
