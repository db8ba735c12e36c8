import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from quasikoorn import weyl
from conftest import points, words
from oracles import elements_up_to, inversion_count, subword_lower_interval

h = F(1, 2)


def tau(*lam):
    r = len(lam)
    return weyl.AffineWeylElement(tuple(lam), weyl.SignedPermutation.identity(r))


@pytest.mark.parametrize("j, y, expected", [
    (0, (F(1, 4), F(0)), (F(3, 4), F(0))),
    (2, (F(1, 4), F(1, 3)), (F(1, 4), F(-1, 3))),
    (1, (F(1, 4), F(1, 3)), (F(1, 3), F(1, 4))),
])
def test_simple_reflections(j, y, expected):
    assert weyl.reflect_point(j, y) == expected
    assert weyl.simple_reflection(j, 2).act(y) == expected


@given(st.integers(0, 3), points(3))
def test_reflections_are_involutions(j, y):
    assert weyl.reflect_point(j, weyl.reflect_point(j, y)) == y
    s = weyl.simple_reflection(j, 3)
    assert (s * s).is_identity()


def test_point_action_examples():
    y = (F(1, 4), F(1, 3))
    assert weyl.identity(2).act(y) == y
    assert tau(1, 0).act(y) == (F(5, 4), F(1, 3))
    assert weyl.simple_reflection(0, 2).act((h, F(0))) == (h, F(0))


def test_root_action_examples():
    a0 = weyl.simple_root(0, 2)
    assert a0 == weyl.AffineRoot((-2, 0), 1)
    assert weyl.identity(2).act_root(a0) == a0
    assert tau(1, 0).act_root(a0) == weyl.AffineRoot((-2, 0), 3)
    assert weyl.simple_reflection(0, 2).act_root(a0) == -a0


@given(words(3), points(3), st.integers(0, 3))
def test_root_action_is_compatible_with_point_action(word, y, j):
    # (g a)(g y) = a(y)
    g = weyl.from_word(word, 3)
    a = weyl.simple_root(j, 3)
    assert g.act_root(a)(g.act(y)) == a(y)


@given(words(2), words(2))
def test_group_laws(u, v):
    g, k = weyl.from_word(u, 2), weyl.from_word(v, 2)
    y = (F(1, 3), F(-2, 5))
    assert (g * k).act(y) == g.act(k.act(y))
    assert (g * g.inverse()).is_identity()


def test_length_examples():
    assert weyl.length(weyl.identity(2)) == 0 and weyl.reduced_word(weyl.identity(2)) == ()
    assert weyl.reduced_word(weyl.simple_reflection(0, 2)) == (0,)
    g = tau(1, 0)
    assert weyl.length(g) == 4 == inversion_count(g)


@given(words(3, max_size=10))
def test_reduced_word_round_trip(word):
    g = weyl.from_word(word, 3)
    w = weyl.reduced_word(g)
    assert weyl.from_word(w, 3) == g
    assert len(w) <= len(word) and len(w) % 2 == len(word) % 2


def test_length_matches_inversions_rank3():
    rng = random.Random(5)
    for _ in range(40):
        g = weyl.from_word([rng.randint(0, 3) for _ in range(rng.randint(0, 8))], 3)
        assert weyl.length(g) == inversion_count(g)


def test_min_alcove_rep_examples():
    y = (F(1, 4), F(1, 8))
    g, c = weyl.min_alcove_rep(y)
    assert g.is_identity() and c == y
    g, c = weyl.min_alcove_rep((F(3, 4), F(0)))
    assert c == (F(1, 4), F(0))
    assert weyl.min_alcove_word((F(3, 4), F(0))) == (0,)


@given(points(3))
def test_min_alcove_rep_properties(y):
    g, c = weyl.min_alcove_rep(y)
    assert weyl.in_closed_alcove(c)
    assert g.act(c) == y
    # minimal: no right multiplication by a stabilizer generator shortens g
    stab = [j for j in range(4) if weyl.alpha_value(j, c) == 0]
    for j in stab:
        assert weyl.length(g * weyl.simple_reflection(j, 3)) > weyl.length(g)


def test_bruhat_basic():
    e = weyl.identity(2)
    for g in elements_up_to(2, 3):
        assert weyl.bruhat_leq(e, g)
        assert weyl.bruhat_leq(g, g)


def test_bruhat_matches_subwords_rank2_len3():
    elems = elements_up_to(2, 3)
    for v in elems:
        below = subword_lower_interval(v)
        for u in elems:
            assert weyl.bruhat_leq(u, v) == (u in below)


def test_orbit_examples():
    o = weyl.orbit_of((F(0), F(0), F(0)))
    assert o.basepoint == (0, 0, 0) and o.facet == {1, 2, 3}
    assert weyl.orbit_of((F(3, 8), F(1, 8))).facet == frozenset()
    o = weyl.orbit_of((h, F(0)))
    assert o.basepoint == (h, F(0)) and o.facet == {0, 2}
    assert o.finite_facet == {2}
    assert weyl.orbit_of((F(7, 4), F(-3, 4))).denominator == 4


def test_lower_set_of_basepoint():
    c = (F(3, 8), F(1, 8))
    assert weyl.lower_set(c) == {c}


def test_lower_set_integral_matches_bruhat():
    mu = (F(1), F(0))
    g_mu, _ = weyl.min_alcove_rep(mu)
    box = [(F(a), F(b)) for a in range(-3, 4) for b in range(-3, 4)]
    expected = {z for z in box if weyl.bruhat_leq(weyl.min_alcove_rep(z)[0], g_mu)}
    got = weyl.lower_set(mu)
    assert got == expected
    for z in got:
        assert weyl.point_leq(z, mu)


@given(words(2, max_size=6))
def test_lower_set_is_downward_closed(word):
    c = (F(3, 8), F(1, 8))
    y = weyl.from_word(word, 2).act(c)
    low = weyl.lower_set(y)
    assert y in low and c in low
    for z in low:
        assert weyl.lower_set(z) <= low
        assert weyl.order_key(z) <= weyl.order_key(y)


def test_finite_weyl_group_sizes():
    for r, n in [(1, 2), (2, 8), (3, 48), (4, 384)]:
        group = list(weyl.finite_weyl_group(r))
        assert len(group) == n == len(set(group))
