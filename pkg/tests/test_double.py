"""Double of the Nichols algebra: normal form, Hopf axioms, commutators."""

from __future__ import annotations

import pytest

from conftest import FULL_SMALL, make_algebra
from nicholsrm.double import DoubleContext


def ctx_for(name):
    return DoubleContext(make_algebra(name))


def test_simple_commutator_rank1():
    ctx = ctx_for("rank1_zeta3")
    e, f = ctx.e_gen(0), ctx.f_gen(0)
    comm = ctx.sub(ctx.multiply(e, f), ctx.multiply(f, e))
    expected = ctx.sub(ctx.k_elem((1,)), ctx.l_elem((1,)))
    assert comm == expected


def test_cross_commutator_vanishes():
    ctx = ctx_for("a2_zeta3")
    e, f = ctx.e_gen(0), ctx.f_gen(1)
    assert ctx.is_zero(ctx.sub(ctx.multiply(e, f), ctx.multiply(f, e)))


def test_middle_straightening():
    ctx = ctx_for("a2_zeta3")
    chi = ctx.B.chi
    k = ctx.k_elem((1, 0))
    e = ctx.e_gen(1)
    left = ctx.multiply(k, e)
    right = ctx.scale(ctx.multiply(e, k), chi.entries[0][1])
    assert left == right


@pytest.mark.parametrize("name", FULL_SMALL)
def test_root_commutators(name):
    report = ctx_for(name).root_commutator_check()
    assert report["ok"], report
    for entry in report["roots"]:
        deg = sum(entry["beta"])
        if deg % 2:
            assert entry["alternating_sign_matches"]


def test_even_root_breaks_alternating_sign():
    report = ctx_for("super_zeta6").root_commutator_check()
    even = [r for r in report["roots"] if sum(r["beta"]) % 2 == 0]
    assert even and all(not r["alternating_sign_matches"] for r in even)


@pytest.mark.parametrize("name", ("rank1_zeta3", "super_zeta6", "a2_zeta3"))
def test_hopf_axioms(name):
    report = ctx_for(name).hopf_axioms_check()
    assert report["ok"], report


def test_multiply_associative():
    ctx = ctx_for("super_zeta6")
    xs = [ctx.e_gen(0), ctx.f_gen(1), ctx.k_elem((1, 0)),
          ctx.multiply(ctx.f_gen(0), ctx.e_gen(1))]
    for a in xs:
        for b in xs:
            for c in xs:
                assert ctx.multiply(ctx.multiply(a, b), c) == \
                    ctx.multiply(a, ctx.multiply(b, c))


def test_omega_is_involutive_antimap():
    ctx = ctx_for("a2_zeta3")
    a = ctx.multiply(ctx.e_gen(0), ctx.f_gen(1))
    b = ctx.multiply(ctx.f_gen(0), ctx.e_gen(1))
    assert ctx.apply_omega(ctx.apply_omega(a)) == a
    assert ctx.apply_omega(ctx.multiply(a, b)) == \
        ctx.multiply(ctx.apply_omega(b), ctx.apply_omega(a))


def test_phi_rescales_halves():
    ctx = ctx_for("rank1_zeta3")
    field = ctx.field
    s = field.element([0, 1])          # a primitive root, invertible
    a = ctx.multiply(ctx.e_gen(0), ctx.f_gen(0))
    out = ctx.apply_phi(a, [s])
    for (u, mid, p), c in a.items():
        want = c
        for _ in u:
            want = want * s
        for _ in p:
            want = want * s.inverse()
        assert out[(u, mid, p)] == want
