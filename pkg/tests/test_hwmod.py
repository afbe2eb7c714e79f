"""Highest-weight modules and the module-level braiding operators."""

from __future__ import annotations

import pytest

from conftest import make_algebra
from nicholsrm.double import DoubleContext
from nicholsrm.errors import ZeroScalar
from nicholsrm.hwmod import (WeightSpec, c_xy, c_xy_inverse,
                             commutation_lemma_check, f_xy, f_xy_inverse,
                             grading_check, hexagon_check, intertwiner_check,
                             op_apply, op_compose, op_equal, op_identity,
                             premapp_check, qybe_check, r_xy, r_xy_inverse,
                             representation_check, verma)


def modules(name, shifts):
    B = make_algebra(name)
    ctx = DoubleContext(B)
    q = [B.chi.entries[i][i] for i in range(B.theta)]
    out = []
    for s in shifts:
        w = WeightSpec(k_values=tuple(qi ** (s + 1) for qi in q),
                       l_values=tuple(qi ** s for qi in q))
        out.append(verma(ctx, w))
    return ctx, out


def test_weight_must_be_nonzero():
    B = make_algebra("rank1_zeta3")
    with pytest.raises(ZeroScalar):
        WeightSpec(k_values=(B.field.zero,), l_values=(B.field.one,))


def test_verma_dimension_and_highest_weight():
    ctx, (v,) = modules("rank1_zeta3", [1])
    assert v.dimension == 3
    field = v.field
    v0 = {(): field.one}
    lam = v.eval_weight(((1,), (0,)))
    mu = v.eval_weight(((0,), (1,)))
    ef = op_apply(v.rho(ctx.multiply(ctx.e_gen(0), ctx.f_gen(0))), v0, field)
    assert ef == {(): lam - mu}
    # K_1 F_1 v0 = q^{-1} lambda F_1 v0
    q = v.B.chi.entries[0][0]
    kf = op_apply(v.rho(ctx.multiply(ctx.k_elem((1,)), ctx.f_gen(0))),
                  v0, field)
    assert kf == {(0,): q.inverse() * lam}


@pytest.mark.parametrize("name", ("rank1_zeta3", "super_zeta6"))
def test_representation_and_grading(name):
    _, (v,) = modules(name, [2])
    assert representation_check(v)["ok"]
    assert grading_check(v)["ok"]


def test_pairing_operator_invertible():
    _, (vx, vy) = modules("super_zeta6", [1, 2])
    ident = op_identity([(px, py) for px in vx.basis for py in vy.basis],
                        vx.field)
    assert op_equal(op_compose(f_xy(vx, vy), f_xy_inverse(vx, vy), vx.field),
                    ident)
    assert op_equal(op_compose(c_xy(vx, vy), c_xy_inverse(vx, vy), vx.field),
                    ident)
    assert op_equal(op_compose(r_xy(vx, vy), r_xy_inverse(vx, vy), vx.field),
                    ident)


def test_rank1_canonical_operator_support():
    _, (vx, vy) = modules("rank1_zeta3", [1, 2])
    op = c_xy(vx, vy)
    # C = sum_k coeff_k E^k (x) F^k: columns map to rows with the x-degree
    # dropping exactly as much as the y-degree rises
    for (px, py), rows in op.items():
        for (rx, ry) in rows:
            drop = len(px) - len(rx)
            assert drop >= 0 and len(ry) - len(py) == drop
    assert op[((), ())] == {((), ()): vx.field.one}


@pytest.mark.parametrize("name,shifts", [("rank1_zeta3", (1, 2)),
                                         ("super_zeta6", (0, 1))])
def test_premapp_intertwiner_commutation(name, shifts):
    _, (vx, vy) = modules(name, shifts)
    assert premapp_check(vx, vy)["ok"]
    assert intertwiner_check(vx, vy)["ok"]
    assert commutation_lemma_check(vx, vy)["ok"]


def test_hexagon_and_qybe_rank1():
    _, (v1, v2, v3) = modules("rank1_zeta3", [0, 1, 2])
    assert hexagon_check(v1, v2, v3)["ok"]
    rep = qybe_check(v1, v2, v3)
    assert rep["ok"] and rep["dimension"] == 27
    assert "first_discrepancy" not in rep


def test_hexagon_and_qybe_super():
    _, (v1, v2, v3) = modules("super_zeta6", [0, 1, 2])
    assert hexagon_check(v1, v2, v3)["ok"]
    rep = qybe_check(v1, v2, v3)
    assert rep["ok"] and rep["dimension"] == 1728
