"""Words in the free group on two generators.

Letters are stored as nonzero integers: ``1``/``-1`` for ``x``/``x^-1`` and
``2``/``-2`` for ``y``/``y^-1``.  Inversion is negation, as in most
combinatorial group theory code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    IndexOutOfRange,
    MalformedExponent,
    SyllableFormUnavailable,
    UnknownLetter,
)

DEFAULT_NAMES = ("x", "y")


class GeneratorLetter(NamedTuple):
    generator: int  # 0 for x, 1 for y
    sign: int  # +1 or -1

    @classmethod
    def from_code(cls, code: int) -> "GeneratorLetter":
        return cls(abs(code) - 1, 1 if code > 0 else -1)

    @property
    def code(self) -> int:
        return self.sign * (self.generator + 1)


class AbelianImage(NamedTuple):
    """Total exponents ``(a, b)`` of ``x`` and ``y``; a point of Z^2."""

    a: int
    b: int

    def __add__(self, other):  # type: ignore[override]
        return AbelianImage(self[0] + other[0], self[1] + other[1])

    def __sub__(self, other):
        return AbelianImage(self[0] - other[0], self[1] - other[1])

    def __neg__(self):
        return AbelianImage(-self[0], -self[1])


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for c in self.letters:
            if c not in (1, -1, 2, -2):
                raise ValueError(f"invalid letter code {c!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __mul__(self, other: "Word") -> "Word":
        """Product in F (concatenate, then freely reduce)."""
        return free_reduce(Word(self.letters + other.letters))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return free_reduce(Word(base.letters * abs(n)))

    def inverse(self) -> "Word":
        return Word(tuple(-c for c in reversed(self.letters)))

    def concat(self, other: "Word") -> "Word":
        """Concatenation without reduction."""
        return Word(self.letters + other.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def is_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))

    def is_cyclically_reduced(self) -> bool:
        if not self.is_reduced():
            return False
        return len(self.letters) <= 1 or self.letters[0] != -self.letters[-1]

    def generator_letters(self) -> list[GeneratorLetter]:
        return [GeneratorLetter.from_code(c) for c in self.letters]

    def format(self, names: Sequence[str] = DEFAULT_NAMES, compact: bool = True) -> str:
        """Render in the input grammar (``x^2Y``); the empty word is ``1``."""
        if not self.letters:
            return "1"
        out = []
        for code, run in _runs(self.letters):
            ch = names[abs(code) - 1]
            if code < 0:
                ch = ch.upper()
            if compact and run > 1:
                out.append(f"{ch}^{run}")
            else:
                out.append(ch * run)
        return "".join(out)

    def __str__(self) -> str:
        return self.format()


def _runs(letters: Sequence[int]) -> Iterable[tuple[int, int]]:
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        yield letters[i], j - i
        i = j


def parse_word(text: str, names: Sequence[str] = DEFAULT_NAMES) -> Word:
    """Parse ``text`` into a :class:`Word` exactly as written (no reduction).

    Lowercase letters are generators, uppercase their inverses, and ``^n``
    repeats (or, if negative, inverts and repeats) the preceding letter.
    Whitespace is ignored.
    """
    if len(names) != 2 or len(set(names)) != 2:
        raise ValueError(f"need two distinct generator names, got {names!r}")
    lookup = {}
    for i, name in enumerate(names):
        if len(name) != 1 or not name.isalpha() or not name.islower():
            raise ValueError(f"generator names must be lowercase letters, got {name!r}")
        lookup[name] = i + 1
        lookup[name.upper()] = -(i + 1)

    s = "".join(text.split())
    letters: list[int] = []
    pos = 0
    while pos < len(s):
        ch = s[pos]
        if ch == "^":
            raise MalformedExponent(f"exponent without a letter at offset {pos}")
        if not ch.isalpha():
            raise UnknownLetter(f"unexpected character {ch!r} at offset {pos}")
        if ch not in lookup:
            raise UnknownLetter(
                f"letter {ch!r} is not one of the generators {names[0]!r}, {names[1]!r}"
            )
        pos += 1
        exponent = 1
        if pos < len(s) and s[pos] == "^":
            m = re.match(r"\^(-?)([1-9][0-9]*)", s[pos:])
            if m is None:
                raise MalformedExponent(f"bad exponent at offset {pos} in {text!r}")
            exponent = int(m.group(2)) * (-1 if m.group(1) else 1)
            pos += m.end()
        code = lookup[ch]
        letters.extend([code if exponent > 0 else -code] * abs(exponent))
    return Word(tuple(letters))


def free_reduce(w: Word) -> Word:
    stack: list[int] = []
    for c in w.letters:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return Word(tuple(stack))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split a reduced word as ``conjugator * core * conjugator^-1``."""
    letters = free_reduce(w).letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return Word(letters[i:j]), Word(letters[:i])


def cyclic_permute(w: Word, k: int) -> Word:
    """Return ``g_{k+1} ... g_l g_1 ... g_k``."""
    if not 0 <= k < len(w):
        raise IndexOutOfRange(f"rotation {k} outside [0, {len(w)})")
    return Word(w.letters[k:] + w.letters[:k])


def abelianize(w: Word) -> AbelianImage:
    a = b = 0
    for c in w.letters:
        if c == 1:
            a += 1
        elif c == -1:
            a -= 1
        elif c == 2:
            b += 1
        else:
            b -= 1
    return AbelianImage(a, b)


def prefixes(w: Word) -> list[Word]:
    """The prefixes ``r_0, ..., r_{l-1}``; the full word is left out because
    the walk it traces is closed and its basepoint is counted once."""
    return [Word(w.letters[:i]) for i in range(len(w))]


def prefix_images(w: Word) -> list[AbelianImage]:
    """``abelianize`` of each entry of :func:`prefixes`, computed in one pass."""
    out = []
    a = b = 0
    for c in w.letters:
        out.append(AbelianImage(a, b))
        if c == 1:
            a += 1
        elif c == -1:
            a -= 1
        elif c == 2:
            b += 1
        else:
            b -= 1
    return out


def syllables(w: Word, lead: int = 0) -> tuple[Word, list[tuple[int, int]]]:
    """Rotate ``w`` into the form ``g^{m1} h^{n1} ... g^{mk} h^{nk}``.

    ``g`` is generator ``lead`` (0 for x, 1 for y) and ``h`` the other one.
    Returns the rotated word and the list of exponent pairs ``(m_i, n_i)``.
    """
    letters = w.letters
    gens = {abs(c) for c in letters}
    if gens != {1, 2}:
        raise SyllableFormUnavailable(f"{w.format()} does not involve both generators")
    g = lead + 1
    start = next(
        i for i in range(len(letters)) if abs(letters[i]) == g and abs(letters[i - 1]) != g
    )
    rotated = letters[start:] + letters[:start]
    exps: list[int] = []
    for code, run in _runs(rotated):
        exps.append(run if code > 0 else -run)
    # runs of the same letter code merge; a sign change inside a syllable
    # cannot occur in a reduced word, so consecutive runs alternate generators
    pairs = [(exps[i], exps[i + 1]) for i in range(0, len(exps), 2)]
    return Word(rotated), pairs


def proper_power_root(w: Word) -> tuple[Word, int]:
    """Return ``(s, m)`` with ``w == s^m`` and ``m`` maximal."""
    n = len(w)
    if n == 0:
        return w, 1
    letters = w.letters
    for d in range(1, n + 1):
        if n % d == 0 and letters[:d] * (n // d) == letters:
            return Word(letters[:d]), n // d
    raise AssertionError("unreachable")
