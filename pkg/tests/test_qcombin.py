"""q-integers, q-factorials, q-binomials and q-exponential coefficients."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nicholsrm.cyclotomic import root_of_unity, rational
from nicholsrm.errors import NonInvertibleFactorial
from nicholsrm.qcombin import qbinom, qexp_coeffs, qfact, qint

ROOTS = [(2, 1), (3, 1), (3, 2), (5, 1), (6, 1), (10, 3)]


@given(st.sampled_from(ROOTS), st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_qint_geometric_sum(root, n):
    q = root_of_unity(*root)
    field = q.field
    total = field.zero
    for k in range(n):
        total = total + q ** k
    assert qint(n, q) == total


@given(st.sampled_from(ROOTS), st.integers(0, 6), st.integers(0, 6))
@settings(max_examples=60, deadline=None)
def test_pascal_rule(root, n, k):
    q = root_of_unity(*root)
    if k > n:
        return
    order = root[0]
    if n >= order:   # factorials vanish at and beyond the order
        return
    lhs = qbinom(n + 1, k, q) if k <= n + 1 else None
    rhs = qbinom(n, k, q) if k <= n else q.field.zero
    if 1 <= k:
        rhs = rhs * q ** k + qbinom(n, k - 1, q)
    else:
        rhs = rhs
    if k >= 1 and n + 1 < order:
        assert lhs == rhs


@pytest.mark.parametrize("root", ROOTS)
def test_qfact_vanishes_at_order(root):
    q = root_of_unity(*root)
    n = root[0] if root[1] == 1 else None
    if n is None:
        return
    assert qint(n, q).is_zero()
    assert qfact(n, q).is_zero()
    assert not qfact(n - 1, q).is_zero()


def test_qexp_coeffs_truncation():
    q = root_of_unity(3)
    coeffs = qexp_coeffs(q, 3)
    vals = list(coeffs.coeffs)
    assert len(vals) == 3
    assert vals[0] == q.field.one
    assert vals[1] == qfact(1, q).inverse()
    assert vals[2] == qfact(2, q).inverse()


def test_qexp_rejects_vanishing_factorial():
    q = root_of_unity(3)
    with pytest.raises(NonInvertibleFactorial):
        qexp_coeffs(q, 4)


def test_classical_limit():
    one = rational(1, 1)
    assert qint(4, one) == rational(4, 1)
    assert qfact(4, one) == rational(24, 1)
    assert qbinom(4, 2, one) == rational(6, 1)
