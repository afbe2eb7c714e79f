"""Finite-dimensional highest-weight modules over the quantum double, the
operators f_xy, C_xy, R_xy on tensor products, and the module-level braiding
checks (intertwiner, hexagon-type identities, Yang-Baxter).

Modules are Verma-type: free of rank one over the negative half, with basis
the pivot words; all operators are exact sparse matrices over the cyclotomic
field, stored column-wise as {column_key: {row_key: coeff}}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import Cyclotomic
from .double import DoubleContext
from .errors import DimensionBound, ZeroScalar
from .freealg import multidegree
from .pairing import canonical_element


# -- sparse column-major operators ------------------------------------------


def op_identity(keys, field) -> dict:
    return {k: {k: field.one} for k in keys}

def op_compose(a: dict, b: dict, field) -> dict:
    """a after b."""
    out: dict = {}
    for col, mids in b.items():
        acc: dict = {}
        for mid, c1 in mids.items():
            for row, c2 in a.get(mid, {}).items():
                new = acc.get(row, field.zero) + c1 * c2
                if new.is_zero():
                    acc.pop(row, None)
                else:
                    acc[row] = new
        if acc:
            out[col] = acc
    return out

def op_add(a: dict, b: dict, field) -> dict:
    out = {col: dict(rows) for col, rows in a.items()}
    for col, rows in b.items():
        acc = out.setdefault(col, {})
        for row, c in rows.items():
            new = acc.get(row, field.zero) + c
            if new.is_zero():
                acc.pop(row, None)
            else:
                acc[row] = new
        if not acc:
            out.pop(col, None)
    return out

def op_scale(a: dict, s: Cyclotomic) -> dict:
    if s.is_zero():
        return {}
    return {col: {row: s * c for row, c in rows.items()}
            for col, rows in a.items()}

def op_sub(a: dict, b: dict, field) -> dict:
    return op_add(a, op_scale(b, -field.one), field)

def op_equal(a: dict, b: dict) -> bool:
    return {c: r for c, r in a.items() if r} == {c: r for c, r in b.items() if r}

def op_apply(a: dict, vec: dict, field) -> dict:
    out: dict = {}
    for col, c in vec.items():
        for row, c2 in a.get(col, {}).items():
            new = out.get(row, field.zero) + c * c2
            if new.is_zero():
                out.pop(row, None)
            else:
                out[row] = new
    return out

def op_tensor(a: dict, b: dict) -> dict:
    """Kronecker product; keys become tuples (key_a, key_b) flattened one
    level when the inputs already use flat keys."""
    out: dict = {}
    for ca, ra in a.items():
        for cb, rb in b.items():
            col = _pair(ca, cb)
            rows = {}
            for wa, va in ra.items():
                for wb, vb in rb.items():
                    rows[_pair(wa, wb)] = va * vb
            out[col] = rows
    return out

def _pair(a, b):
    a = a if isinstance(a, tuple) and a and isinstance(a[0], tuple) else (a,)
    b = b if isinstance(b, tuple) and b and isinstance(b[0], tuple) else (b,)
    return a + b


def op_embed(op: dict, slots, positions, bases, field) -> dict:
    """Embed a tensor operator acting on the given positions of a product of
    modules, identity elsewhere.  `bases` lists the basis keys per slot."""
    out: dict = {}
    others = [s for s in range(slots) if s not in positions]

    def expand(partial_cols, partial_rows, coeff, idx):
        if idx == len(others):
            col = tuple(partial_cols[s] for s in range(slots))
            rows = out.setdefault(col, {})
            row = tuple(partial_rows[s] for s in range(slots))
            new = rows.get(row, field.zero) + coeff
            if new.is_zero():
                rows.pop(row, None)
            else:
                rows[row] = new
            return
        s = others[idx]
        for k in bases[s]:
            partial_cols[s] = k
            partial_rows[s] = k
            expand(partial_cols, partial_rows, coeff, idx + 1)

    for col, rowsd in op.items():
        colparts = col if isinstance(col[0], tuple) else (col,)
        for row, c in rowsd.items():
            rowparts = row if isinstance(row[0], tuple) else (row,)
            pc = [None] * slots
            pr = [None] * slots
            for p, cp, rp in zip(positions, colparts, rowparts):
                pc[p] = cp
                pr[p] = rp
            expand(pc, pr, c, 0)
    return out


# -- modules -----------------------------------------------------------------


@dataclass(frozen=True)
class WeightSpec:
    """The character Lambda of the middle subalgebra: values on the K- and
    L-generators.  In group mode the character of Gamma x hat-Gamma is given
    instead by a dual character (for the Gamma part) and a group element (on
    which the hat-Gamma part evaluates)."""

    k_values: tuple
    l_values: tuple
    group_char: tuple | None = None
    group_elt: tuple | None = None

    def __post_init__(self):
        for v in self.k_values + self.l_values:
            if v.is_zero():
                raise ZeroScalar("weights must be nonzero")

    def eval_torus(self, field, middle) -> Cyclotomic:
        mu, nu = middle
        out = field.one
        for v, e in zip(self.k_values, mu):
            out = out * v ** e
        for v, e in zip(self.l_values, nu):
            out = out * v ** e
        return out

    def eval_group(self, group, middle) -> Cyclotomic:
        g, gamma = middle
        return (group.evaluate(self.group_char, g)
                * group.evaluate(gamma, self.group_elt))


class VermaModule:
    """The Verma-type module of highest weight Lambda: basis F_p v0 over the
    pivot words p, with exact actions of the whole double."""

    def __init__(self, ctx: DoubleContext, weight: WeightSpec,
                 dimension_cap: int = 20000):
        self.ctx = ctx
        self.B = ctx.B
        self.field = ctx.field
        self.theta = ctx.theta
        self.weight = weight
        total = self.B.total_dimension()
        if total is None:
            raise DimensionBound("module needs a fully built Nichols algebra")
        if total > dimension_cap:
            raise DimensionBound(f"dimension {total} exceeds cap {dimension_cap}")
        self.basis = [p for beta in sorted(self.B.pivots)
                      for p in self.B.pivots[beta]]
        self.index = {p: k for k, p in enumerate(self.basis)}
        self.dimension = len(self.basis)
        self._e_memo: dict = {}

    def eval_weight(self, middle) -> Cyclotomic:
        from .pairing import PairingMode
        if self.ctx.mode is PairingMode.TORUS:
            return self.weight.eval_torus(self.field, middle)
        return self.weight.eval_group(self.ctx.group, middle)

    def degree(self, p: tuple) -> tuple:
        return multidegree(p, self.theta)

    # single-generator actions as vectors of coordinates (word -> coeff)

    def _apply_f(self, i: int, vec: dict) -> dict:
        out: dict = {}
        for q, c in vec.items():
            for r, c2 in self.B.reduce_word(q + (i,)).items():
                new = out.get(r, self.field.zero) + c * c2
                if new.is_zero():
                    out.pop(r, None)
                else:
                    out[r] = new
        return out

    def _apply_middle(self, middle, vec: dict) -> dict:
        out: dict = {}
        lam = self.eval_weight(middle)
        for q, c in vec.items():
            s = self.ctx.comm_f(middle, self.degree(q)) * lam
            out[q] = c * s
        return out

    def _apply_e(self, i: int, vec: dict) -> dict:
        out: dict = {}
        for q, c in vec.items():
            for r, c2 in self._e_on_word(i, q).items():
                new = out.get(r, self.field.zero) + c * c2
                if new.is_zero():
                    out.pop(r, None)
                else:
                    out[r] = new
        return out

    def _e_on_word(self, i: int, p: tuple) -> dict:
        """E_i (F_p v0) through E_i F_j = F_j E_i + delta_ij (K_i - L_i)."""
        if not p:
            return {}
        key = (i, p)
        memo = self._e_memo.get(key)
        if memo is not None:
            return memo
        j = p[-1]
        m = self.B.reduce_word(p[:-1])
        out = self._apply_f(j, self._apply_e(i, m))
        if i == j:
            alpha = tuple(1 if t == i else 0 for t in range(self.theta))
            km = self._apply_middle(self.ctx.embed_k(alpha), m)
            lm = self._apply_middle(self.ctx.embed_l(alpha), m)
            for q, c in km.items():
                new = out.get(q, self.field.zero) + c
                if new.is_zero():
                    out.pop(q, None)
                else:
                    out[q] = new
            for q, c in lm.items():
                new = out.get(q, self.field.zero) - c
                if new.is_zero():
                    out.pop(q, None)
                else:
                    out[q] = new
        self._e_memo[key] = out
        return out

    # operators

    def rho(self, elem: dict) -> dict:
        """The representing operator of a double element, column-major."""
        out: dict = {}
        for (u, middle, p), coeff in elem.items():
            for q in self.basis:
                vec = {q: coeff}
                for letter in p:
                    vec = self._apply_f(letter, vec)
                vec = self._apply_middle(middle, vec)
                for letter in reversed(u):
                    vec = self._apply_e(letter, vec)
                if not vec:
                    continue
                acc = out.setdefault(q, {})
                for r, c in vec.items():
                    new = acc.get(r, self.field.zero) + c
                    if new.is_zero():
                        acc.pop(r, None)
                    else:
                        acc[r] = new
        return {col: rows for col, rows in out.items() if rows}

    def rho_generator(self, kind: str, i: int) -> dict:
        if kind == "E":
            return self.rho(self.ctx.e_gen(i))
        if kind == "F":
            return self.rho(self.ctx.f_gen(i))
        alpha = tuple(1 if t == i else 0 for t in range(self.theta))
        if kind == "K":
            return self.rho(self.ctx.k_elem(alpha))
        if kind == "L":
            return self.rho(self.ctx.l_elem(alpha))
        raise ValueError(kind)


def verma(ctx: DoubleContext, weight: WeightSpec, **kw) -> VermaModule:
    return VermaModule(ctx, weight, **kw)


def representation_check(v: VermaModule) -> dict:
    """rho(a b) = rho(a) rho(b) on all pairs of algebra generators — i.e. the
    defining relations of the double hold as module operators."""
    ctx = v.ctx
    gens = []
    for i in range(v.theta):
        alpha = tuple(1 if t == i else 0 for t in range(v.theta))
        gens += [("E%d" % (i + 1), ctx.e_gen(i)),
                 ("F%d" % (i + 1), ctx.f_gen(i)),
                 ("K%d" % (i + 1), ctx.k_elem(alpha)),
                 ("L%d" % (i + 1), ctx.l_elem(alpha))]
    failures = []
    ops = {la: v.rho(g) for la, g in gens}
    for la, a in gens:
        for lb, b in gens:
            lhs = v.rho(ctx.multiply(a, b))
            rhs = op_compose(ops[la], ops[lb], v.field)
            if not op_equal(lhs, rhs):
                failures.append((la, lb))
    return {"ok": not failures, "failures": failures}


def grading_check(v: VermaModule) -> dict:
    """E_i raises and F_i lowers the multidegree by alpha_i; middles are
    diagonal."""
    failures = []
    for i in range(v.theta):
        for kind, sign in (("E", -1), ("F", 1)):
            op = v.rho_generator(kind, i)
            for col, rows in op.items():
                dc = v.degree(col)
                for row in rows:
                    dr = v.degree(row)
                    diff = tuple(a - b for a, b in zip(dr, dc))
                    want = tuple(sign if t == i else 0 for t in range(v.theta))
                    if diff != want:
                        failures.append({"gen": kind + str(i + 1),
                                         "col": col, "row": row})
    return {"ok": not failures, "failures": failures}


# -- pair operators ----------------------------------------------------------


def f_xy(vx: VermaModule, vy: VermaModule) -> dict:
    """The diagonal twist: on (X v_x ox Y v_y) with X of degree -alpha and
    Y of degree -beta, the scalar chi(beta, alpha) Lambda_x(K^{-beta})
    Lambda_y(L^{alpha})."""
    ctx = vx.ctx
    field = vx.field
    out = {}
    for px in vx.basis:
        alpha = vx.degree(px)
        for py in vy.basis:
            beta = vy.degree(py)
            s = ctx.chi.chi(beta, alpha)
            s = s * vx.eval_weight(ctx.embed_k(tuple(-b for b in beta)))
            s = s * vy.eval_weight(ctx.embed_l(alpha))
            out[(px, py)] = {(px, py): s}
    return out


def f_xy_inverse(vx: VermaModule, vy: VermaModule) -> dict:
    return {col: {row: c.inverse() for row, c in rows.items()}
            for col, rows in f_xy(vx, vy).items()}


def _canonical_degrees(B):
    return [beta for beta in sorted(B.pivots) if B.pivots[beta]]


def c_xy(vx: VermaModule, vy: VermaModule) -> dict:
    """C_xy = sum over degrees of (rho_x ox rho_y)(C_beta)."""
    B = vx.B
    field = vx.field
    total = None
    for beta in _canonical_degrees(B):
        for x, y, c in canonical_element(B, beta):
            term = op_tensor(vx.rho(vx.ctx.from_e_coords({x: c})),
                             vy.rho(vy.ctx.from_f_coords({y: field.one})))
            total = term if total is None else op_add(total, term, field)
    return total


def c_xy_inverse(vx: VermaModule, vy: VermaModule) -> dict:
    """Sum of (rho ox rho)((K^beta ox 1)(S ox id) C_beta)."""
    B = vx.B
    ctx = vx.ctx
    field = vx.field
    total = None
    for beta in _canonical_degrees(B):
        for x, y, c in canonical_element(B, beta):
            left = ctx.multiply(
                ctx.k_elem(beta),
                ctx.antipode(ctx.from_e_coords({x: c})))
            term = op_tensor(vx.rho(left),
                             vy.rho(ctx.from_f_coords({y: field.one})))
            total = term if total is None else op_add(total, term, field)
    return total


def r_xy(vx: VermaModule, vy: VermaModule) -> dict:
    return op_compose(c_xy(vx, vy), f_xy_inverse(vx, vy), vx.field)


def r_xy_inverse(vx: VermaModule, vy: VermaModule) -> dict:
    return op_compose(f_xy(vx, vy), c_xy_inverse(vx, vy), vx.field)


# -- checks ------------------------------------------------------------------


def premapp_check(vx: VermaModule, vy: VermaModule) -> dict:
    """The four twist displays: f_xy conjugates E_i ox 1, 1 ox E_i, F_i ox 1,
    1 ox F_i into E_i ox L_i^{-1}, K_i ox E_i, F_i ox L_i, K_i^{-1} ox F_i."""
    field = vx.field
    f = f_xy(vx, vy)
    failures = []
    for i in range(vx.theta):
        alpha = tuple(1 if t == i else 0 for t in range(vx.theta))
        ex, fx = vx.rho_generator("E", i), vx.rho_generator("F", i)
        ey, fy = vy.rho_generator("E", i), vy.rho_generator("F", i)
        kx = vx.rho_generator("K", i)
        kxi = vx.rho(vx.ctx.middle_elem(
            vx.ctx.invert_middle(vx.ctx.embed_k(alpha))))
        ly = vy.rho_generator("L", i)
        lyi = vy.rho(vy.ctx.middle_elem(
            vy.ctx.invert_middle(vy.ctx.embed_l(alpha))))
        iden_x = op_identity(vx.basis, field)
        iden_y = op_identity(vy.basis, field)
        cases = [
            ("E ox 1", op_tensor(ex, iden_y), op_tensor(ex, lyi)),
            ("1 ox E", op_tensor(iden_x, ey), op_tensor(kx, ey)),
            ("F ox 1", op_tensor(fx, iden_y), op_tensor(fx, ly)),
            ("1 ox F", op_tensor(iden_x, fy), op_tensor(kxi, fy)),
        ]
        for label, inner, outer in cases:
            lhs = op_compose(f, inner, field)
            rhs = op_compose(outer, f, field)
            if not op_equal(lhs, rhs):
                failures.append({"i": i, "display": label})
    return {"ok": not failures, "failures": failures}


def intertwiner_check(vx: VermaModule, vy: VermaModule) -> dict:
    """R_xy (rho ox rho)(Delta(X)) = (rho ox rho)(tau Delta(X)) R_xy for all
    generators X."""
    ctx = vx.ctx
    field = vx.field
    r = r_xy(vx, vy)
    failures = []
    gens = []
    for i in range(vx.theta):
        alpha = tuple(1 if t == i else 0 for t in range(vx.theta))
        gens.append(("E%d" % (i + 1), ctx.e_gen(i)))
        gens.append(("F%d" % (i + 1), ctx.f_gen(i)))
        gens.append(("K%d" % (i + 1), ctx.k_elem(alpha)))
        gens.append(("L%d" % (i + 1), ctx.l_elem(alpha)))
    for label, g in gens:
        cop = ctx.coproduct(g)
        direct = None
        flipped = None
        for (k1, k2), c in cop.items():
            term = op_scale(op_tensor(vx.rho({k1: field.one}),
                                      vy.rho({k2: field.one})), c)
            direct = term if direct is None else op_add(direct, term, field)
            term_f = op_scale(op_tensor(vx.rho({k2: field.one}),
                                        vy.rho({k1: field.one})), c)
            flipped = term_f if flipped is None else op_add(flipped, term_f, field)
        lhs = op_compose(r, direct, field)
        rhs = op_compose(flipped, r, field)
        if not op_equal(lhs, rhs):
            failures.append(label)
    return {"ok": not failures, "failures": failures}


def hexagon_check(v1: VermaModule, v2: VermaModule, v3: VermaModule) -> dict:
    """The two coproduct identities on canonical elements, as operators on
    V1 ox V2 ox V3."""
    ctx = v1.ctx
    field = v1.field
    B = v1.B
    bases = [v1.basis, v2.basis, v3.basis]
    mods = [v1, v2, v3]

    def triple(elem_triple):
        ops = [m.rho(e) for m, e in zip(mods, elem_triple)]
        return op_tensor(op_tensor(ops[0], ops[1]), ops[2])

    # left sides: Delta ox id resp. id ox Delta applied to C_beta
    lhs_d = None
    lhs_i = None
    for beta in _canonical_degrees(B):
        for x, y, c in canonical_element(B, beta):
            ex = ctx.from_e_coords({x: c})
            fy = ctx.from_f_coords({y: field.one})
            for (k1, k2), cc in ctx.coproduct(ex).items():
                term = triple([{k1: field.one}, {k2: cc}, fy])
                lhs_d = term if lhs_d is None else op_add(lhs_d, term, field)
            for (k1, k2), cc in ctx.coproduct(fy).items():
                term = triple([ex, {k1: cc}, {k2: field.one}])
                lhs_i = term if lhs_i is None else op_add(lhs_i, term, field)

    f13 = op_embed(f_xy(v1, v3), 3, (0, 2), bases, field)
    f13i = op_embed(f_xy_inverse(v1, v3), 3, (0, 2), bases, field)
    c13 = op_embed(c_xy(v1, v3), 3, (0, 2), bases, field)
    c23 = op_embed(c_xy(v2, v3), 3, (1, 2), bases, field)
    c12 = op_embed(c_xy(v1, v2), 3, (0, 1), bases, field)
    rhs_d = op_compose(c13, op_compose(f13i, op_compose(c23, f13, field),
                                       field), field)
    rhs_i = op_compose(c13, op_compose(f13i, op_compose(c12, f13, field),
                                       field), field)
    out = {"delta_ox_id": op_equal(lhs_d, rhs_d),
           "id_ox_delta": op_equal(lhs_i, rhs_i)}
    out["ok"] = out["delta_ox_id"] and out["id_ox_delta"]
    return out


def qybe_check(v1: VermaModule, v2: VermaModule, v3: VermaModule) -> dict:
    """R12 R13 R23 = R23 R13 R12 on V1 ox V2 ox V3."""
    field = v1.field
    bases = [v1.basis, v2.basis, v3.basis]
    r12 = op_embed(r_xy(v1, v2), 3, (0, 1), bases, field)
    r13 = op_embed(r_xy(v1, v3), 3, (0, 2), bases, field)
    r23 = op_embed(r_xy(v2, v3), 3, (1, 2), bases, field)
    lhs = op_compose(r12, op_compose(r13, r23, field), field)
    rhs = op_compose(r23, op_compose(r13, r12, field), field)
    ok = op_equal(lhs, rhs)
    report = {"ok": ok, "dimension": len(bases[0]) * len(bases[1]) * len(bases[2])}
    if not ok:
        diff = op_sub(lhs, rhs, field)
        for col, rows in diff.items():
            for row, c in rows.items():
                report["first_discrepancy"] = {
                    "column": col, "row": row, "value": repr(c)}
                return report
    return report


def commutation_lemma_check(vx: VermaModule, vy: VermaModule) -> dict:
    """[1 ox E_i, C_{beta+alpha_i}] = C_beta (E_i ox L_i) - (E_i ox K_i) C_beta
    and [C_{beta+alpha_i}, F_i ox 1] = (L_i ox F_i) C_beta - C_beta (K_i ox F_i)
    as operators, per degree beta."""
    ctx = vx.ctx
    field = vx.field
    B = vx.B
    degrees = _canonical_degrees(B)

    def c_op(beta):
        total = {}
        for x, y, c in canonical_element(B, beta):
            term = op_tensor(vx.rho(ctx.from_e_coords({x: c})),
                             vy.rho(ctx.from_f_coords({y: field.one})))
            total = op_add(total, term, field)
        return total

    cops = {beta: c_op(beta) for beta in degrees}
    failures = []
    for beta in degrees:
        for i in range(vx.theta):
            alpha = tuple(1 if t == i else 0 for t in range(vx.theta))
            up = tuple(b + a for b, a in zip(beta, alpha))
            cup = cops.get(up)
            if cup is None:
                cup = c_op(up)
                cops[up] = cup
            ex, fx = vx.rho_generator("E", i), vx.rho_generator("F", i)
            ey, fy = vy.rho_generator("E", i), vy.rho_generator("F", i)
            kx, lx = vx.rho_generator("K", i), vx.rho_generator("L", i)
            ky, ly = vy.rho_generator("K", i), vy.rho_generator("L", i)
            idx = op_identity(vx.basis, field)
            idy = op_identity(vy.basis, field)
            one_e = op_tensor(idx, ey)
            cb = cops[beta]
            lhs = op_sub(op_compose(one_e, cup, field),
                         op_compose(cup, one_e, field), field)
            rhs = op_sub(op_compose(cb, op_tensor(ex, ly), field),
                         op_compose(op_tensor(ex, ky), cb, field), field)
            if not op_equal(lhs, rhs):
                failures.append({"beta": beta, "i": i, "display": "ECCE"})
            f_one = op_tensor(fx, idy)
            lhs2 = op_sub(op_compose(cup, f_one, field),
                          op_compose(f_one, cup, field), field)
            rhs2 = op_sub(op_compose(op_tensor(lx, fy), cb, field),
                          op_compose(cb, op_tensor(kx, fy), field), field)
            if not op_equal(lhs2, rhs2):
                failures.append({"beta": beta, "i": i, "display": "FCCF"})
    return {"ok": not failures, "failures": failures}
