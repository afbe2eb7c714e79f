"""Cartan matrices, reflections, orbits, and positive roots in convex order.

Expected values for the conductor-10 rank-2 case are frozen from hand
derivations on the bicharacter q_11 = zeta_5, q_12 q_21 = zeta_5^2,
q_22 = -1.
"""

from __future__ import annotations

import pytest

from conftest import make_bichar
from nicholsrm.errors import OrbitBoundExceeded
from nicholsrm.weylgpd import (cartan_matrix, is_convex, orbit,
                               positive_roots, reflect)

EXAMPLE_ROOTS = ((1, 0), (3, 1), (2, 1), (5, 3), (3, 2), (4, 3), (1, 1),
                 (0, 1))
EXAMPLE_N = (5, 2, 10, 2, 5, 2, 10, 2)
EXAMPLE_WORD = (0, 1, 0, 1, 0, 1, 0, 1)


def test_example_cartan():
    chi = make_bichar("example_zeta10")
    assert cartan_matrix(chi) == ((2, -3), (-1, 2))


def test_example_roots_convex_order():
    rd = positive_roots(make_bichar("example_zeta10"))
    assert rd.roots == EXAMPLE_ROOTS
    assert rd.word == EXAMPLE_WORD
    assert rd.n_beta == EXAMPLE_N


def test_example_roots_are_convex():
    rd = positive_roots(make_bichar("example_zeta10"))
    assert is_convex(rd.roots)


def test_non_convex_order_rejected():
    rd = positive_roots(make_bichar("example_zeta10"))
    scrambled = (rd.roots[0], rd.roots[6]) + tuple(
        r for r in rd.roots[1:] if r != rd.roots[6])
    assert not is_convex(scrambled)


def test_a2_roots():
    rd = positive_roots(make_bichar("a2_zeta3"))
    assert rd.roots == ((1, 0), (1, 1), (0, 1))
    assert rd.n_beta == (3, 3, 3)


def test_super_roots():
    rd = positive_roots(make_bichar("super_zeta6"))
    assert rd.roots == ((1, 0), (1, 1), (0, 1))
    assert rd.n_beta == (2, 3, 2)


def test_rank1_root():
    rd = positive_roots(make_bichar("rank1_zeta3"))
    assert rd.roots == ((1,),)
    assert rd.n_beta == (3,)


def test_reflection_involution():
    chi = make_bichar("a2_zeta3")
    assert reflect(reflect(chi, 0), 0).entries == chi.entries


def test_orbit_closure():
    objs = orbit(make_bichar("example_zeta10"))
    assert len(objs) == 4
    cartans = {o.cartan for o in objs}
    assert ((2, -3), (-1, 2)) in cartans


def test_orbit_bound():
    with pytest.raises(OrbitBoundExceeded):
        orbit(make_bichar("example_zeta10"), max_objects=1)


def test_roots_count_matches_word_length():
    for name in ("a2_zeta3", "super_zeta6", "example_zeta10"):
        rd = positive_roots(make_bichar(name))
        assert len(rd.roots) == len(rd.word)
        assert len(set(rd.roots)) == len(rd.roots)
