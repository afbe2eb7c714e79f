"""Nichols algebra quotients: dimensions, PBW bases, Hilbert-series oracle."""

from __future__ import annotations

import pytest

from conftest import FULL_SMALL, make_algebra, make_bichar
from nicholsrm.nichols import roots_from_hilbert
from nicholsrm.weylgpd import positive_roots


def test_dimensions():
    assert make_algebra("rank1_zeta3").total_dimension() == 3
    assert make_algebra("a2_zeta3").total_dimension() == 27
    assert make_algebra("super_zeta6").total_dimension() == 12


def test_rank1_nilpotency():
    B = make_algebra("rank1_zeta3")
    assert B.reduce_word((0, 0)) != {}
    assert B.reduce_word((0, 0, 0)) == {}


def test_a2_graded_dimensions():
    B = make_algebra("a2_zeta3")
    dims = B.graded_dimensions()
    assert dims[(1, 0)] == 1
    assert dims[(0, 1)] == 1
    assert dims[(1, 1)] == 2
    assert dims[(2, 2)] == 3
    assert max(sum(b) for b in dims) == 8
    assert dims[(4, 4)] == 1                       # top PBW monomial (2,2,2)


@pytest.mark.parametrize("name", FULL_SMALL + ("example_zeta10",))
def test_hilbert_check(name):
    assert make_algebra(name).hilbert_check()["ok"]


@pytest.mark.parametrize("name", FULL_SMALL)
def test_pbw_basis_counts(name):
    B = make_algebra(name)
    pbw = B.pbw_basis()
    for beta, entry in pbw.items():
        if sum(beta) == 0:
            continue
        assert len(entry["monomials"]) == B.dimension_of(beta)
    total = sum(len(e["monomials"]) for e in pbw.values())
    assert total == B.total_dimension()


def test_pbw_top_monomial_a2():
    pbw = make_algebra("a2_zeta3").pbw_basis()
    assert pbw[(4, 4)]["monomials"] == [(2, 2, 2)]


@pytest.mark.parametrize("name", ("a2_zeta3", "a2_zeta3_sym", "super_zeta6"))
def test_roots_from_hilbert_matches_groupoid(name):
    B = make_algebra(name)
    rd = positive_roots(make_bichar(name))
    oracle = roots_from_hilbert(B)
    assert oracle["defects"] == []
    expected = sorted(zip(rd.roots, rd.n_beta),
                      key=lambda r: (sum(r[0]), r[0]))
    assert oracle["roots"] == expected


@pytest.mark.parametrize("name", FULL_SMALL)
def test_coideal_filtration(name):
    report = make_algebra(name).coideal_filtration_check()
    assert report["ok"], report


def test_multiply_associative_spot():
    B = make_algebra("super_zeta6")
    a = B.reduce_word((0,))
    b = B.reduce_word((1,))
    c = B.reduce_word((0, 1))
    assert B.multiply(B.multiply(a, b), c) == B.multiply(a, B.multiply(b, c))
