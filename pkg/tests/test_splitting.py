import random

import pytest

from relpoly.arcs import Direction
from relpoly.checks import random_corpus, random_primitive
from relpoly.errors import NotEpimorphism, NotPrimitive
from relpoly.geometry import thickness
from relpoly.pipeline import Presentation, marked_polytope
from relpoly.splitting import (
    hnn_splitting,
    phi_thickness,
    splitting_complexity,
    width_seminorm_table,
)
from relpoly.words import Word

TRI = Presentation.parse("XYxy^2XYx^2YXyXyxY")
COMM = Presentation.parse("xyXY")
WIDE = Presentation.parse("t^2aTaTA^3", ("t", "a"))


def test_complexity_examples():
    rep = splitting_complexity(TRI, (2, 1))
    assert (rep.thickness, rep.c, rep.c_f, rep.hypothesis_certified) == (2, 3, 3, True)
    assert rep.status == "exact"
    assert splitting_complexity(TRI, (0, 1)).c == 2
    assert splitting_complexity(COMM, (0, 1)).c == 1
    with pytest.raises(NotPrimitive):
        splitting_complexity(TRI, (2, 4))


def test_uncertified_status():
    p = Presentation.parse("xyXYxyXY")
    rep = splitting_complexity(p, (1, 0))
    assert not rep.hypothesis_certified
    assert "assuming" in rep.status


def test_commutator_splitting():
    s = hnn_splitting(COMM, (0, 1))
    assert s.rank == 1
    assert [m for m, _ in s.relator] == [1, 0]
    assert s.vertex_generators == (0, 1)
    assert s.edge_generators == (0,)
    assert s.mu == {0: 1}
    assert s.stable_letter == "y"


def test_wide_splitting():
    s = hnn_splitting(WIDE, (1, 0))
    assert (s.d, s.D, s.rank) == (0, 2, 2)
    assert [m for m, _ in s.relator] == [2, 1, 0]
    assert s.stable_letter == "t"
    assert s.format() == "<x_0,x_1,x_2,t | x_2 x_1 x_0^-3, t x_0 T = x_1, t x_1 T = x_2>"


def test_triangle_splitting():
    s = hnn_splitting(TRI, (2, 1))
    assert s.rank == 3
    assert all(s.d <= m <= s.D for m, _ in s.relator)
    ms = [m for m, _ in s.relator]
    assert min(ms) == s.d and max(ms) == s.D


def test_embedding_words():
    s = hnn_splitting(WIDE, (1, 0))
    assert s.embedding(2) == Word((2, 2, 1, -2, -2))
    assert s.embedding(0) == Word((1,))


def test_vertex_relator_rebuilds_relator():
    # substituting x_i = t^i a t^-i gives back the converted relator
    for w in random_corpus(40, 31, 30):
        p = Presentation(w)
        s = hnn_splitting(p, random_primitive(random.Random(len(w))))
        prod = Word(())
        for m, n in s.relator:
            prod = prod * (s.embedding(m) ** n)
        core = s.presentation.relator
        assert len(prod) >= len(core)
        from relpoly.words import cyclic_reduce

        assert cyclic_reduce(prod)[0] in {
            Word(core.letters[k:] + core.letters[:k]) for k in range(len(core))
        }


def test_b1_one_character_check():
    with pytest.raises(NotEpimorphism):
        hnn_splitting(WIDE, (0, 1))
    assert phi_thickness(WIDE, (1, 0)) == 1
    assert phi_thickness(WIDE, (-1, 0)) == 1


def test_width_table():
    t = width_seminorm_table(TRI, [(1, 0), (0, 1), (1, 1)])
    assert [w for _, w in t.rows] == [1, 1, 1]
    assert t.subadditive
    t = width_seminorm_table(COMM, [(1, 0), (0, 1), (3, -2)])
    assert all(w == 0 for _, w in t.rows)


def test_rank_matches_width_on_corpus():
    rng = random.Random(41)
    for w in random_corpus(100, 41, 40):
        p = Presentation(w)
        phi = random_primitive(rng)
        assert hnn_splitting(p, phi).rank == thickness(marked_polytope(p), phi) + 1


def test_direction_objects_accepted():
    assert splitting_complexity(TRI, Direction(2, 1)).c == 3
