"""Factorized universal R-matrix and its quasi-triangularity checks."""

from __future__ import annotations

import pytest

from conftest import make_algebra, make_bichar
from nicholsrm.double import DoubleContext
from nicholsrm.errors import InvalidGroup, SizeBoundExceeded
from nicholsrm.hwmod import WeightSpec, verma
from nicholsrm.rmatrix import (FiniteAbelianGroup, GroupAssignment,
                               compare_module_r, expand_and_verify, expand_r,
                               factor_inverse_check, group_duality_check,
                               minimal_assignment, r_one, r_one_hexagon_check,
                               universal_r, validate_group)


def build_r(name):
    B = make_algebra(name)
    ma = minimal_assignment(B.chi)
    return universal_r(B, ma["group"], ma["assignment"])


def test_r_one_z2_terms():
    group = FiniteAbelianGroup.of((2,))
    field = group.field
    half = field.from_rational(__import__("gmpy2").mpq(1, 2))
    terms = dict(r_one(group))
    assert len(terms) == 4
    for gamma in ((0,), (1,)):
        for g in ((0,), (1,)):
            sign = -field.one if gamma[0] * g[0] else field.one
            assert terms[(gamma, g)] == sign * half


@pytest.mark.parametrize("divisors", [(2,), (3,), (2, 3)])
def test_group_duality(divisors):
    assert group_duality_check(FiniteAbelianGroup.of(divisors))["ok"]


@pytest.mark.parametrize("divisors", [(2,), (3,)])
def test_r_one_hexagon(divisors):
    assert r_one_hexagon_check(FiniteAbelianGroup.of(divisors))["ok"]


def test_factorization_shape_super():
    R = build_r("super_zeta6")
    assert tuple(f.beta for f in R.factors) == ((0, 1), (1, 1), (1, 0))
    assert tuple(f.n_beta for f in R.factors) == (2, 3, 2)
    for f in R.factors:
        assert len(f.coefficients) == f.n_beta
        assert f.coefficients[0] == R.ctx.field.one


@pytest.mark.parametrize("name,terms", [("rank1_minus", 8),
                                        ("rank1_zeta3", 27)])
def test_quasi_triangularity_rank1(name, terms):
    report = expand_and_verify(build_r(name))
    assert report["ok"], report
    assert report["terms"] == terms
    assert report["intertwiner"]["ok"]
    assert report["delta_ox_id"]
    assert report["id_ox_delta"]
    assert report["invertible"]
    assert report["counit"]


def test_factor_inverses_super():
    assert factor_inverse_check(build_r("super_zeta6"))["ok"]


def test_size_guard():
    with pytest.raises(SizeBoundExceeded):
        expand_r(build_r("rank1_zeta3"), bound=10)


def test_invalid_group_rejected():
    B = make_algebra("rank1_zeta3")
    group = FiniteAbelianGroup.of((2,), conductor=6)
    bad = GroupAssignment(group=group, g=((1,),), gamma=((1,),))
    # the (2,) assignment realizes only signs, never q_11 = zeta_3
    report = validate_group(group, bad, B.chi)
    assert not report["ok"] and report["suggestion"]
    with pytest.raises(InvalidGroup):
        universal_r(B, group, GroupAssignment(group=group, g=((1,),),
                                              gamma=((1,),)))


def test_module_comparison_rank1():
    R = build_r("rank1_zeta3")
    ctx = R.ctx
    group = R.group
    wx = WeightSpec(k_values=(), l_values=(),
                    group_char=(1,), group_elt=(1,))
    wy = WeightSpec(k_values=(), l_values=(),
                    group_char=(2,), group_elt=(1,))
    vx, vy = verma(ctx, wx), verma(ctx, wy)
    report = compare_module_r(R, vx, vy)
    assert report["ok"], report
    predicted = group.evaluate(wx.group_char, wy.group_elt)
    assert report["predicted_scalar"] == repr(predicted)
