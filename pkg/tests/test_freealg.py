"""Free braided algebra: Lyndon words, Shirshov splits, braided coproduct."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import make_bichar
from nicholsrm.errors import NotLyndon
from nicholsrm.freealg import (FreeElem, braided_commutator,
                               braided_coproduct, hyperletter, is_lyndon,
                               lyndon_words, multidegree, shirshov_split)

words = st.lists(st.integers(0, 1), min_size=1, max_size=7).map(tuple)


@given(words)
@settings(max_examples=100, deadline=None)
def test_lyndon_characterization(w):
    assert is_lyndon(w) == all(w < w[k:] for k in range(1, len(w)))


@given(st.integers(0, 4), st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_lyndon_words_complete(a, b):
    if a + b == 0 or a + b > 7:
        return
    out = lyndon_words((a, b), 2)
    assert all(is_lyndon(w) for w in out)
    assert all(multidegree(w, 2) == (a, b) for w in out)
    assert out == sorted(out, reverse=True)
    assert len(set(out)) == len(out)


@given(words.filter(lambda w: len(w) >= 2 and is_lyndon(w)))
@settings(max_examples=60, deadline=None)
def test_shirshov_split_parts_are_lyndon(w):
    u, v = shirshov_split(w)
    assert u + v == w
    assert is_lyndon(u) and is_lyndon(v)
    assert u < v


def test_hyperletter_requires_lyndon():
    chi = make_bichar("a2_zeta3")
    with pytest.raises(NotLyndon):
        hyperletter((1, 0), chi)


def test_hyperletter_is_iterated_commutator():
    chi = make_bichar("example_zeta10")
    field = chi.field
    x1 = FreeElem.letter(field, 0)
    x2 = FreeElem.letter(field, 1)
    expected = x2
    for k in (1, 2, 3):
        expected = braided_commutator(x1, expected, chi)
        word = (0,) * k + (1,)
        assert hyperletter(word, chi).terms == expected.terms


def test_braided_coproduct_counit():
    chi = make_bichar("a2_zeta3")
    field = chi.field
    elem = hyperletter((0, 1), chi)
    cop = braided_coproduct(elem, chi)
    left = FreeElem.zero(field)
    right = FreeElem.zero(field)
    for (w1, w2), c in cop.items():
        if not w1:
            right = right + FreeElem(field, {w2: c})
        if not w2:
            left = left + FreeElem(field, {w1: c})
    assert left.terms == elem.terms
    assert right.terms == elem.terms


def test_braided_coproduct_primitive_letters():
    chi = make_bichar("super_zeta6")
    field = chi.field
    for i in range(2):
        cop = braided_coproduct(FreeElem.letter(field, i), chi)
        assert cop == {((i,), ()): field.one, ((), (i,)): field.one}
