"""Skew-Hopf pairing: diagonality on PBW pairs, canonical elements."""

from __future__ import annotations

import pytest

from conftest import FULL_SMALL, make_algebra
from nicholsrm.pairing import (canonical_coproduct_check, canonical_element,
                               cc_inverse_check, eta_beta, eta_words,
                               pbw_duality_check, reproducing_check)


def test_eta_on_letters():
    B = make_algebra("a2_zeta3")
    chi = B.chi
    field = B.field
    assert eta_words((0,), (0,), chi) == -field.one
    assert eta_words((1,), (1,), chi) == -field.one
    assert eta_words((0,), (1,), chi).is_zero()
    assert eta_words((1,), (0,), chi).is_zero()


def test_eta_beta_values_a2():
    B = make_algebra("a2_zeta3")
    field = B.field
    pairs = B.root_vector_pairs()
    values = [eta_beta(B, e, f) for e, f in pairs]
    assert values[0] == -field.one
    assert values[2] == -field.one
    assert values[1] == field.element([2, 1])     # 2 + z3, not a sign


@pytest.mark.parametrize("name", FULL_SMALL)
def test_pbw_duality(name):
    report = pbw_duality_check(make_algebra(name))
    assert report["ok"]
    assert report["pairs_checked"] >= 4


def test_canonical_element_reproduces():
    B = make_algebra("super_zeta6")
    for beta, piv in B.pivots.items():
        if piv:
            assert reproducing_check(B, beta)


def test_canonical_element_rank1_shape():
    B = make_algebra("rank1_zeta3")
    terms = canonical_element(B, (1,))
    assert len(terms) == 1
    (x, y, c) = terms[0]
    assert x == (0,) and y == (0,)
    assert c == -B.field.one                      # inverse of the sign-twisted Gram


@pytest.mark.parametrize("name", ("rank1_zeta3", "super_zeta6"))
def test_cc_inverse(name):
    B = make_algebra(name)
    report = cc_inverse_check(B, 4)
    assert report["ok"], report
    assert report["degrees_checked"]


@pytest.mark.parametrize("name", ("rank1_zeta3", "super_zeta6"))
def test_canonical_coproduct(name):
    B = make_algebra(name)
    report = canonical_coproduct_check(B, 4)
    assert report["ok"], report
