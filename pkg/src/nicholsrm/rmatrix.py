"""The finite-group layer and the factorized universal R-matrix.

R = [product over positive roots beta, in decreasing convex order, of
Sum_{i<N_beta} eta_beta^{-i}/(i)_{q_beta}! e_beta^i (x) f_beta^i] * R_1,
with R_1 = |Gamma|^{-1} Sum_{g,gamma} gamma(g^{-1}) g (x) gamma.  Expansion
and quasi-triangularity checks run inside the finite-group double.

Leg order.  With this double's coproduct (Delta E = E(x)1 + K(x)E,
Delta F = F(x)L + 1(x)F), the quasi-triangular element carries the E-side in
the FIRST tensor leg; the mirrored form (F-side first) is tau(R) and
intertwines the coproducts in the opposite direction.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .cyclotomic import Cyclotomic, multiplicative_order
from .double import DoubleContext
from .errors import InfiniteOrder, InvalidGroup, SizeBoundExceeded
from .groups import (FiniteAbelianGroup, GroupAssignment, minimal_assignment,
                     validate_group)
from .nichols import NicholsAlgebra
from .pairing import PairingMode, eta_beta
from .qcombin import qfact

__all__ = [
    "FiniteAbelianGroup", "GroupAssignment", "validate_group",
    "minimal_assignment", "RFactor", "RFactorization", "r_one",
    "dual_idempotent", "group_duality_check", "universal_r",
    "expand_r", "expand_and_verify", "factor_inverse_check",
    "r_one_hexagon_check", "compare_module_r",
]


# -- R_1 ---------------------------------------------------------------------


def r_one(group: FiniteAbelianGroup) -> list:
    """R_1 as a list of ((character, group element), coefficient)."""
    field = group.field
    inv_order = field.from_rational(mpq(1, group.order))
    out = []
    for gamma in group.elements():
        for g in group.elements():
            c = group.evaluate(gamma, group.negate(g)) * inv_order
            out.append(((gamma, g), c))
    return out


def dual_idempotent(group: FiniteAbelianGroup, g: tuple) -> dict:
    """delta_g = |Gamma|^{-1} Sum_gamma gamma(g^{-1}) gamma."""
    field = group.field
    inv_order = field.from_rational(mpq(1, group.order))
    return {gamma: group.evaluate(gamma, group.negate(g)) * inv_order
            for gamma in group.elements()}


def group_duality_check(group: FiniteAbelianGroup) -> dict:
    """eta(g, delta_h) = delta_{g,h} — orthogonality of characters."""
    field = group.field
    failures = []
    for g in group.elements():
        for h in group.elements():
            val = field.zero
            for gamma, c in dual_idempotent(group, h).items():
                val = val + c * group.evaluate(gamma, g)
            want = field.one if g == h else field.zero
            if val != want:
                failures.append({"g": g, "h": h})
    return {"ok": not failures, "failures": failures}


# -- the factorization -------------------------------------------------------


@dataclass(frozen=True)
class RFactor:
    beta: tuple
    q_beta: Cyclotomic
    n_beta: int
    eta_beta: Cyclotomic
    e_coords: dict
    f_coords: dict
    coefficients: tuple   # c_i = eta^{-i}/(i)_q! for i < N_beta


@dataclass(frozen=True)
class RFactorization:
    """Ordered factor list (decreasing convex order) plus the R_1 data and
    the ambient finite-group double."""

    factors: tuple
    group: FiniteAbelianGroup
    assignment: GroupAssignment
    ctx: DoubleContext


def universal_r(B: NicholsAlgebra, group: FiniteAbelianGroup,
                assignment: GroupAssignment) -> RFactorization:
    rd = B.root_datum
    report = validate_group(group, assignment, B.chi)
    if not report["ok"]:
        raise InvalidGroup(f"assignment does not realize the braiding: {report}")
    field = B.field
    factors = []
    pairs = B.root_vector_pairs()
    for beta, n, q, (e_vec, f_vec) in zip(rd.roots, rd.n_beta, rd.q_beta,
                                          pairs):
        if n is None:
            raise InfiniteOrder(f"root {beta} has infinite truncation order")
        eta = eta_beta(B, e_vec, f_vec)
        coeffs = tuple((eta ** (-i)) / qfact(i, q) for i in range(n))
        factors.append(RFactor(tuple(beta), q, n, eta, dict(e_vec),
                               dict(f_vec), coeffs))
    factors.reverse()   # decreasing convex order
    ctx = DoubleContext(B, mode=PairingMode.FINITE_GROUP, group=group,
                        assignment=assignment)
    return RFactorization(tuple(factors), group, assignment, ctx)


# -- expansion ---------------------------------------------------------------


def _tensor_scale(t: dict, s: Cyclotomic) -> dict:
    return {} if s.is_zero() else {k: s * c for k, c in t.items()}


def factor_tensor(ctx: DoubleContext, factor: RFactor) -> dict:
    """Sum_i c_i e_beta^i (x) f_beta^i as a double-tensor."""
    e_pow = ctx.unit()
    f_pow = ctx.unit()
    out: dict = {}
    for i, c in enumerate(factor.coefficients):
        if i:
            e_pow = ctx.multiply(e_pow, ctx.from_e_coords(factor.e_coords))
            f_pow = ctx.multiply(f_pow, ctx.from_f_coords(factor.f_coords))
        for kf, cf in f_pow.items():
            for ke, ce in e_pow.items():
                k = (ke, kf)
                new = out.get(k, ctx.field.zero) + c * cf * ce
                if new.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = new
    return out


def factor_tensor_inverse(ctx: DoubleContext, factor: RFactor) -> dict:
    """The exp_{q^{-1}}-type series: Sum_i (-1)^i q^{i(i-1)/2} eta^{-i}
    /(i)_q! F^i (x) E^i; certified against the nilpotent Neumann inverse in
    factor_inverse_check."""
    q = factor.q_beta
    coeffs = []
    for i in range(factor.n_beta):
        c = (factor.eta_beta ** (-i)) / qfact(i, q)
        c = c * q ** (i * (i - 1) // 2)
        if i % 2:
            c = -c
        coeffs.append(c)
    inv = RFactor(factor.beta, q, factor.n_beta, factor.eta_beta,
                  factor.e_coords, factor.f_coords, tuple(coeffs))
    return factor_tensor(ctx, inv)


def r_one_tensor(ctx: DoubleContext) -> dict:
    group = ctx.group
    ident = group.identity()
    out = {}
    for (gamma, g), c in r_one(group):
        k1 = ((), (g, ident), ())
        k2 = ((), (ident, gamma), ())
        out[(k1, k2)] = c
    return out


def r_one_tensor_inverse(ctx: DoubleContext) -> dict:
    group = ctx.group
    field = group.field
    ident = group.identity()
    inv_order = field.from_rational(mpq(1, group.order))
    out = {}
    for gamma in group.elements():
        for g in group.elements():
            k1 = ((), (g, ident), ())
            k2 = ((), (ident, gamma), ())
            out[(k1, k2)] = group.evaluate(gamma, g) * inv_order
    return out


def _size_guard(B: NicholsAlgebra, group: FiniteAbelianGroup, bound: int):
    dim = B.total_dimension()
    est = dim * dim * group.order * group.order
    if est > bound:
        raise SizeBoundExceeded(f"tensor entry estimate {est} exceeds "
                                f"bound {bound}")


def expand_r(R: RFactorization, bound: int = 10 ** 7,
             factor_order: tuple | None = None) -> dict:
    """The full tensor; factor_order permutes the factor list (used by the
    negative tests)."""
    ctx = R.ctx
    _size_guard(ctx.B, R.group, bound)
    factors = R.factors if factor_order is None else tuple(
        R.factors[i] for i in factor_order)
    total = None
    for f in factors:
        t = factor_tensor(ctx, f)
        total = t if total is None else ctx.tensor_multiply(total, t)
    rone = r_one_tensor(ctx)
    return rone if total is None else ctx.tensor_multiply(total, rone)


def expand_r_inverse(R: RFactorization, bound: int = 10 ** 7) -> dict:
    ctx = R.ctx
    _size_guard(ctx.B, R.group, bound)
    total = r_one_tensor_inverse(ctx)
    for f in reversed(R.factors):
        total = ctx.tensor_multiply(total, factor_tensor_inverse(ctx, f))
    return total


def _coproduct_tensor(ctx: DoubleContext, elem: dict, flip: bool = False) -> dict:
    cop = ctx.coproduct(elem)
    if flip:
        return {(k2, k1): c for (k1, k2), c in cop.items()}
    return dict(cop)


def _tensor_equal(ctx, t1: dict, t2: dict) -> bool:
    keys = set(t1) | set(t2)
    return all(t1.get(k, ctx.field.zero) == t2.get(k, ctx.field.zero)
               for k in keys)


def _middle_generators(ctx: DoubleContext) -> list:
    gens = []
    for i in range(ctx.theta):
        alpha = tuple(1 if t == i else 0 for t in range(ctx.theta))
        gens.append(("E%d" % (i + 1), ctx.e_gen(i)))
        gens.append(("F%d" % (i + 1), ctx.f_gen(i)))
        gens.append(("K%d" % (i + 1), ctx.k_elem(alpha)))
        gens.append(("L%d" % (i + 1), ctx.l_elem(alpha)))
    group = ctx.group
    ident = group.identity()
    for k in range(len(group.divisors)):
        unit_vec = tuple(1 if t == k else 0 for t in range(len(group.divisors)))
        gens.append(("g_%d" % (k + 1), ctx.middle_elem((unit_vec, ident))))
        gens.append(("chr_%d" % (k + 1), ctx.middle_elem((ident, unit_vec))))
    return gens


def expand_and_verify(R: RFactorization, bound: int = 10 ** 7,
                      checks: tuple = ("a", "b", "c", "d", "e"),
                      factor_order: tuple | None = None) -> dict:
    """Quasi-triangularity of the expanded tensor: (a) R Delta(x) =
    Delta^cop(x) R on all generators; (b) (Delta (x) id)R = R13 R23;
    (c) (id (x) Delta)R = R13 R12; (d) R invertible; (e) (eps (x) id)R = 1."""
    ctx = R.ctx
    field = ctx.field
    rt = expand_r(R, bound, factor_order=factor_order)
    report: dict = {"terms": len(rt)}
    if "a" in checks:
        failures = []
        for label, g in _middle_generators(ctx):
            lhs = ctx.tensor_multiply(rt, _coproduct_tensor(ctx, g))
            rhs = ctx.tensor_multiply(_coproduct_tensor(ctx, g, flip=True), rt)
            if not _tensor_equal(ctx, lhs, rhs):
                failures.append(label)
        report["intertwiner"] = {"ok": not failures, "failures": failures}
    if "b" in checks or "c" in checks:
        unit_k = ((), ctx.unit_middle, ())
        t13 = {(k1, unit_k, k2): c for (k1, k2), c in rt.items()}
        if "b" in checks:
            lhs = {}
            for (k1, k2), c in rt.items():
                for (a1, a2), d in ctx.coproduct({k1: field.one}).items():
                    k = (a1, a2, k2)
                    new = lhs.get(k, field.zero) + c * d
                    if new.is_zero():
                        lhs.pop(k, None)
                    else:
                        lhs[k] = new
            t23 = {(unit_k, k1, k2): c for (k1, k2), c in rt.items()}
            report["delta_ox_id"] = ctx.triple_equal(
                lhs, ctx._triple_product(t13, t23))
        if "c" in checks:
            lhs = {}
            for (k1, k2), c in rt.items():
                for (a1, a2), d in ctx.coproduct({k2: field.one}).items():
                    k = (k1, a1, a2)
                    new = lhs.get(k, field.zero) + c * d
                    if new.is_zero():
                        lhs.pop(k, None)
                    else:
                        lhs[k] = new
            t12 = {(k1, k2, unit_k): c for (k1, k2), c in rt.items()}
            report["id_ox_delta"] = ctx.triple_equal(
                lhs, ctx._triple_product(t13, t12))
    if "d" in checks:
        rinv = expand_r_inverse(R, bound)
        unit = ctx.tensor_unit()
        report["invertible"] = (
            _tensor_equal(ctx, ctx.tensor_multiply(rt, rinv), unit)
            and _tensor_equal(ctx, ctx.tensor_multiply(rinv, rt), unit))
    if "e" in checks:
        left_counit = {}
        for (k1, k2), c in rt.items():
            s = ctx.counit({k1: c})
            if not s.is_zero():
                new = left_counit.get(k2, field.zero) + s
                if new.is_zero():
                    left_counit.pop(k2, None)
                else:
                    left_counit[k2] = new
        report["counit"] = left_counit == ctx.unit()
    flags = [v["ok"] if isinstance(v, dict) else v
             for k, v in report.items() if k != "terms"]
    report["ok"] = all(flags)
    return report


def factor_inverse_check(R: RFactorization) -> dict:
    """Each factor times its exp_{q^{-1}}-type series is the unit tensor."""
    ctx = R.ctx
    unit = ctx.tensor_unit()
    failures = []
    for f in R.factors:
        prod = ctx.tensor_multiply(factor_tensor(ctx, f),
                                   factor_tensor_inverse(ctx, f))
        if not _tensor_equal(ctx, prod, unit):
            failures.append(f.beta)
    return {"ok": not failures, "failures": failures}


def r_one_hexagon_check(group: FiniteAbelianGroup) -> dict:
    """(Delta (x) id)R_1 = R_1^(13) R_1^(23) on the group block alone, with
    Delta(gamma) = gamma (x) gamma on characters."""
    field = group.field
    terms = r_one(group)
    lhs: dict = {}
    for (gamma, g), c in terms:
        k = (gamma, gamma, g)
        new = lhs.get(k, field.zero) + c
        if new.is_zero():
            lhs.pop(k, None)
        else:
            lhs[k] = new
    rhs: dict = {}
    ident = group.identity()
    for (g1, h1), c1 in terms:
        for (g2, h2), c2 in terms:
            k = (group.add(g1, ident), group.add(ident, g2),
                 group.add(h1, h2))
            new = rhs.get(k, field.zero) + c1 * c2
            if new.is_zero():
                rhs.pop(k, None)
            else:
                rhs[k] = new
    keys = set(lhs) | set(rhs)
    ok = all(lhs.get(k, field.zero) == rhs.get(k, field.zero) for k in keys)
    return {"ok": ok}


# -- bridge to the module braiding ------------------------------------------


def compare_module_r(R: RFactorization, vx, vy, bound: int = 10 ** 7) -> dict:
    """(rho_x (x) rho_y)(R) against the module operator R_xy = C_xy f_xy^{-1}.
    The factor part represents as C_xy (PBW duality: the factors expand to
    the dual-bases sum), and the represented R_1 is the weight-diagonal
    f_xy^{-1} times the single global scalar char_x(elt_y) — the pairing of
    the two weights; the report lists the per-block scalars."""
    from . import hwmod as H
    ctx = R.ctx
    field = ctx.field
    rt = expand_r(R, bound)
    total = None
    for (k1, k2), c in rt.items():
        term = H.op_scale(H.op_tensor(vx.rho({k1: field.one}),
                                      vy.rho({k2: field.one})), c)
        total = term if total is None else H.op_add(total, term, field)
    module_r = H.r_xy(vx, vy)
    blocks: dict = {}
    mismatch = []
    for col in set(total) | set(module_r):
        rows_a = total.get(col, {})
        rows_b = module_r.get(col, {})
        for row in set(rows_a) | set(rows_b):
            a = rows_a.get(row, field.zero)
            b = rows_b.get(row, field.zero)
            if a.is_zero() != b.is_zero():
                mismatch.append({"col": col, "row": row, "universal": repr(a),
                                 "module": repr(b)})
                continue
            if a.is_zero():
                continue
            block = (vx.degree(col[0]), vy.degree(col[1]))
            ratio = a / b
            prev = blocks.get(block)
            if prev is None:
                blocks[block] = ratio
            elif prev != ratio:
                mismatch.append({"col": col, "row": row,
                                 "ratio": repr(ratio), "block": block})
    ratios = set(repr(v) for v in blocks.values())
    predicted = ctx.group.evaluate(vx.weight.group_char, vy.weight.group_elt)
    ok = (not mismatch and len(ratios) <= 1
          and all(v == predicted for v in blocks.values()))
    return {"ok": ok, "mismatches": mismatch,
            "block_scalars": {str(k): repr(v) for k, v in blocks.items()},
            "predicted_scalar": repr(predicted)}
