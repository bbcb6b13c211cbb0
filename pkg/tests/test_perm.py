import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from gelfdual.catalog import instantiate
from gelfdual.perm import (DegreeMismatch, GroupPair, Intransitive, NonBijection, PermGroup, Permutation,
                           exponent_bound, format_pair, group_from_generators, orbit, parse_cycles,
                           parse_pair_text, product_action, stabilizer)


def perms(n):
    return st.permutations(list(range(n))).map(Permutation)


def test_symmetric_from_transposition_and_cycle():
    G = group_from_generators(4, [Permutation.from_cycles(4, [(0, 1)]), Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    assert G.order() == 24


def test_trivial_group():
    assert group_from_generators(3, []).order() == 1


def test_non_bijection_rejected():
    with pytest.raises(NonBijection):
        Permutation([0, 0, 1])


def test_m11_order_and_four_transitivity():
    G = instantiate("sporadic m11").group
    assert G.order() == 7920
    chain = G
    for p in range(4):
        assert len(chain.orbit(p)) == 11 - p
        chain = chain.stabilizer(p)
    assert chain.order() == 7920 // (11 * 10 * 9 * 8)


def test_other_embedded_groups():
    assert instantiate("sporadic psl32").group.order() == 168
    assert instantiate("sporadic m12").group.order() == 95040
    # PSL2(11) is the point stabilizer of M12 on 144 points
    assert instantiate("sporadic m12_144").stabilizer.order() == 660


def test_stabilizers():
    s4 = group_from_generators(4, [Permutation.from_cycles(4, [(0, 1)]), Permutation.from_cycles(4, [(0, 1, 2, 3)])])
    st3 = stabilizer(s4, 3)
    assert st3.order() == 6 and all(g(3) == 3 for g in st3.generators)
    m11 = instantiate("sporadic m11").group
    assert stabilizer(m11, 5).order() == 720
    assert stabilizer(group_from_generators(2, []), 0).order() == 1


def test_suborbits_of_standard_pairs():
    for n in range(3, 8):
        pair = instantiate(f"symmetric {n}")
        assert sorted(map(len, pair.stabilizer.orbits())) == [1, n - 1]
    faces = instantiate("file transitive/cube_faces.pair")
    assert sorted(map(len, faces.stabilizer.orbits())) == [1, 1, 4]
    assert faces.stabilizer.order() == 4
    assert sorted(orbit(faces.group, 0)) == list(range(6))


def test_product_action():
    m11 = instantiate("sporadic m11")
    sq = product_action(m11, m11, twist=True)
    assert sq.degree == 22 and sq.group.order() == 2 * 7920**2
    s2 = instantiate("symmetric 2")
    with pytest.raises(Intransitive) as exc:
        product_action(s2, s2)
    assert exc.value.group.order() == 4
    s3 = instantiate("symmetric 3")
    assert product_action(s3, s3, twist=True).group.order() == 72
    with pytest.raises(DegreeMismatch):
        product_action(s2, s3, twist=True)


def test_exponent_bound():
    assert exponent_bound(instantiate("symmetric 4").group) == 12
    assert exponent_bound(instantiate("cyclic 6").group) == 6
    assert exponent_bound(instantiate("diagonal sym 3").group) == 6


def test_order_matches_enumeration():
    for recipe in ["symmetric 4", "wreath 2 3", "alt 5", "semidirect 7 ; 3", "diagonal sym 3"]:
        G = instantiate(recipe).group
        elems = list(G.elements())
        assert len(elems) == len(set(elems)) == G.order()
        assert all(g in G for g in G.generators)


def test_orbit_stabilizer_chain():
    for recipe in ["wreath 4 2", "young 2 6", "sporadic m11_22", "twisted_square symmetric 3"]:
        pair = instantiate(recipe)
        G = pair.group
        prod, chain = 1, G
        for p in range(G.degree):
            prod *= len(chain.orbit(p))
            chain = chain.stabilizer(p)
        assert prod == G.order()
        assert G.order() == pair.degree * pair.stabilizer.order()


def test_pair_text_round_trip():
    pair = instantiate("wreath 2 3")
    again = parse_pair_text(format_pair(pair, comment="test"))
    assert again.group.order() == pair.group.order()
    assert again.base_point == pair.base_point


def test_pair_text_subgroup_lines():
    text = "degree 4\n(1 2 3 4)\n(1 2)\nsubgroup (1 2)\nsubgroup (3 4)\n"
    pair = parse_pair_text(text)
    assert pair.degree == 6 and pair.stabilizer.order() == 4


def test_parse_cycles_one_based():
    assert parse_cycles("(1 2)(3 4)", 4).images == (1, 0, 3, 2)
    assert parse_cycles("()", 3).is_identity()


@given(perms(6), perms(6), perms(6))
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Permutation.identity(6)
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert (a * b)(3) == a(b(3))


@given(st.lists(perms(5), min_size=1, max_size=3))
def test_membership_of_random_products(gens):
    G = PermGroup(5, gens)
    rng = random.Random(0)
    g = Permutation.identity(5)
    for _ in range(10):
        g = g * rng.choice(gens)
        assert g in G
    assert G.order() <= math.factorial(5)
    assert math.factorial(5) % G.order() == 0


def test_membership_rejects_outsiders():
    a5 = instantiate("alt 5").group
    assert Permutation.from_cycles(5, [(0, 1)]) not in a5
    assert all((p in a5) == (sum(1 for c in p.cycles() if len(c) % 2 == 0) % 2 == 0)
               for p in map(Permutation, itertools.permutations(range(5))))
