"""The skew-Hopf pairing eta between the positive and negative halves, PBW
duality, the root scalars eta_beta, and canonical elements C_beta.

Conventions.  E-side basis elements are pivot words of the Nichols algebra;
the F-side basis is indexed by the same words via the mirror map Omega
(F_p is the reversed word in y-letters with coefficient 1).  On words,
eta(u, v) = (-1)^len * (derivation form with base delta_ij), so that
eta(E_i, F_j) = -delta_ij and eta(K^mu, L^nu) = chi(mu, nu).
"""

from __future__ import annotations

from enum import Enum
from dataclasses import dataclass

from .cyclotomic import Cyclotomic
from .errors import DualityDefect, ModeMismatch
from .freealg import multidegree
from .linalg import mat_inverse
from .nichols import NicholsAlgebra
from .weylgpd import BicharMatrix


class PairingMode(Enum):
    TORUS = "torus"
    FINITE_GROUP = "finite_group"


@dataclass
class PairingContext:
    chi: BicharMatrix
    mode: PairingMode = PairingMode.TORUS
    group: object = None          # FiniteAbelianGroup in FINITE_GROUP mode
    assignment: object = None     # GroupAssignment in FINITE_GROUP mode

    def __post_init__(self):
        if self.mode is PairingMode.FINITE_GROUP:
            from .groups import validate_group
            if self.group is None or self.assignment is None:
                raise ModeMismatch("finite-group mode needs group and assignment")
            report = validate_group(self.group, self.assignment, self.chi)
            if not report["ok"]:
                raise ModeMismatch(f"invalid assignment: {report}")

    def eta_grouplike(self, mu, nu) -> Cyclotomic:
        """eta(K^mu, L^nu) resp. eta(g, gamma) for exponent data."""
        if self.mode is PairingMode.TORUS:
            return self.chi.chi(mu, nu)
        return self.assignment.evaluate(nu, mu)


def eta_plus(u: tuple, v: tuple, chi: BicharMatrix) -> Cyclotomic:
    """The unsigned dual form on words with base case delta_ij.

    Recursion peels the last y-letter of v as a right skew derivation of u.
    The memo table lives on the bicharacter so distinct braidings never
    share entries.
    """
    field = chi.field
    if not v:
        return field.one if not u else field.zero
    if len(u) != len(v):
        return field.zero
    table = getattr(chi, "_eta_memo", None)
    if table is None:
        table = {}
        object.__setattr__(chi, "_eta_memo", table)
    key = (u, v)
    memo = table.get(key)
    if memo is not None:
        return memo
    j = v[-1]
    out = field.zero
    tail = field.one
    for pos in range(len(u) - 1, -1, -1):
        if u[pos] == j:
            out = out + tail * eta_plus(u[:pos] + u[pos + 1:], v[:-1], chi)
        tail = tail * chi.chi_letters(j, u[pos])
    table[key] = out
    return out


def eta_words(u: tuple, v: tuple, chi: BicharMatrix) -> Cyclotomic:
    """eta on an E-word u and an F-word v (actual y-letter sequences)."""
    val = eta_plus(tuple(u), tuple(v), chi)
    return -val if len(u) % 2 else val


def eta_reduced(B: NicholsAlgebra, e_coords: dict, f_coords: dict) -> Cyclotomic:
    """eta on reduced elements; f_coords is keyed by E-pivot words p meaning
    the mirrored basis vector F_p."""
    field = B.field
    out = field.zero
    for x, cx in e_coords.items():
        beta = multidegree(x, B.theta)
        gram = B.gram.get(beta)
        if gram is None:
            continue
        piv = B.pivots[beta]
        row = gram[piv.index(x)]
        sign = -field.one if len(x) % 2 else field.one
        for y, cy in f_coords.items():
            if multidegree(y, B.theta) != beta:
                continue
            out = out + sign * cx * cy * row[piv.index(y)]
    return out


def eta_full(ctx: PairingContext, B: NicholsAlgebra,
             e_coords: dict, mu, f_coords: dict, nu) -> Cyclotomic:
    """eta(E K^mu, F L^nu) = eta(E, F) eta(K^mu, L^nu)."""
    return eta_reduced(B, e_coords, f_coords) * ctx.eta_grouplike(mu, nu)


def eta_beta(B: NicholsAlgebra, e_vec: dict, f_vec: dict) -> Cyclotomic:
    """eta(e_beta, f_beta) on a matched root-vector pair."""
    return eta_reduced(B, e_vec, f_vec)


def pbw_duality_check(B: NicholsAlgebra, bound: int | None = None) -> dict:
    """Exact diagonality of eta on PBW monomial pairs.

    Monomials are taken in decreasing convex order on both sides, built from
    the matched root-vector pairs;
    eta(E-mon_a, F-mon_b) = delta_ab * prod_i (a_i)_{q_i}! eta_i^{a_i}.
    """
    from itertools import product as iproduct

    from .qcombin import qfact
    rd = B.root_datum
    pairs = B.root_vector_pairs()
    etas = [eta_beta(B, e, f) for e, f in pairs]
    level = bound if bound is not None else B._built_level
    field = B.field
    caps = []
    for beta, n in zip(rd.roots, rd.n_beta):
        limit = level // max(1, sum(beta)) + 1
        caps.append(min(n if n is not None else limit, limit))
    exps_list = [a for a in iproduct(*[range(c) for c in caps])
                 if sum(e * sum(b) for e, b in zip(a, rd.roots)) <= level]
    emons = {}
    fmons = {}
    for a in exps_list:
        ev = {(): field.one}
        fv = {(): field.one}
        for exp, (e, f) in reversed(list(zip(a, pairs))):
            for _ in range(exp):
                ev = B.multiply(ev, e)
                fv = B.f_multiply(fv, f)
        emons[a] = ev
        fmons[a] = fv
    mismatches = []
    checked = 0
    for a in exps_list:
        expect_diag = field.one
        for exp, q, eta in zip(a, rd.q_beta, etas):
            if exp:
                expect_diag = expect_diag * qfact(exp, q) * eta ** exp
        for b in exps_list:
            got = eta_reduced(B, emons[a], fmons[b])
            want = expect_diag if a == b else field.zero
            checked += 1
            if got != want:
                mismatches.append({"a": a, "b": b, "got": repr(got),
                                   "want": repr(want)})
    if mismatches:
        raise DualityDefect(f"{len(mismatches)} PBW pairs off-diagonal or "
                            f"wrong: {mismatches[:3]}")
    return {"ok": True, "pairs_checked": checked,
            "eta_beta": etas, "roots": list(rd.roots)}


def canonical_element(B: NicholsAlgebra, beta) -> list:
    """C_beta as a list of (x, y, coeff) meaning coeff * E_x (x) F_y,
    the canonical element of the nondegenerate pairing at degree beta."""
    beta = tuple(beta)
    field = B.field
    if sum(beta) == 0:
        return [((), (), field.one)]
    piv = B.pivots.get(beta, [])
    if not piv:
        return []
    sign = -field.one if sum(beta) % 2 else field.one
    m = [[sign * v for v in row] for row in B.gram[beta]]
    minv = mat_inverse(m, field)
    out = []
    for kx, x in enumerate(piv):
        for ky, y in enumerate(piv):
            c = minv[ky][kx]
            if not c.is_zero():
                out.append((x, y, c))
    return out


def canonical_elements_up_to(B: NicholsAlgebra, level: int) -> dict:
    out = {}
    for beta, piv in B.pivots.items():
        if piv and sum(beta) <= level:
            out[beta] = canonical_element(B, beta)
    return out


def reproducing_check(B: NicholsAlgebra, beta) -> bool:
    """(id (x) eta(z, .))(C_beta) = z for every basis vector z at beta."""
    beta = tuple(beta)
    piv = B.pivots.get(beta, [])
    terms = canonical_element(B, beta)
    field = B.field
    for z in piv:
        image = {}
        for x, y, c in terms:
            val = c * eta_reduced(B, {z: field.one}, {y: field.one})
            if not val.is_zero():
                new = image.get(x, field.zero) + val
                if new.is_zero():
                    image.pop(x, None)
                else:
                    image[x] = new
        if image != {z: field.one}:
            return False
    return True


def cc_inverse_check(B: NicholsAlgebra, bound: int) -> dict:
    """Sum_{beta+gamma=alpha} C_beta C'_gamma = delta_{alpha,0} 1(x)1 and the
    flipped product, inside the double; C'_gamma = (K^gamma (x) 1)(S (x) id)C_gamma."""
    from .double import DoubleContext
    ctx = DoubleContext(B)
    failures = []
    degrees = sorted(b for b, p in B.pivots.items()
                     if p and 0 < sum(b) <= bound)
    cans = {b: ctx.canonical_tensor(b) for b in degrees}
    cans[(0,) * B.theta] = ctx.canonical_tensor((0,) * B.theta)
    primed = {b: ctx.canonical_primed_tensor(b) for b in cans}
    unit = ctx.tensor_unit()
    for alpha in degrees:
        total = None
        total_flip = None
        for beta in cans:
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            if any(g < 0 for g in gamma) or gamma not in cans:
                continue
            term = ctx.tensor_multiply(cans[beta], primed[gamma])
            term_f = ctx.tensor_multiply(primed[beta], cans[gamma])
            total = term if total is None else ctx.tensor_add(total, term)
            total_flip = (term_f if total_flip is None
                          else ctx.tensor_add(total_flip, term_f))
        if total and any(total.values()):
            failures.append({"alpha": alpha, "side": "C C'"})
        if total_flip and any(total_flip.values()):
            failures.append({"alpha": alpha, "side": "C' C"})
    return {"ok": not failures, "failures": failures,
            "degrees_checked": degrees}


def canonical_coproduct_check(B: NicholsAlgebra, bound: int) -> dict:
    """(id (x) Delta)(C_alpha) = Sum C_beta^(13) C_gamma^(12) (1(x)1(x)L^gamma)
    and (Delta (x) id)(C_alpha) = Sum C_beta^(13) C_gamma^(23) (K^gamma(x)1(x)1)."""
    from .double import DoubleContext
    ctx = DoubleContext(B)
    failures = []
    zero_deg = (0,) * B.theta
    degrees = [b for b, p in B.pivots.items() if p and 0 < sum(b) <= bound]
    all_degs = sorted(degrees) + [zero_deg]
    cans = {b: canonical_element(B, b) for b in all_degs}
    for alpha in sorted(degrees):
        lhs_r = ctx.canonical_id_coproduct(alpha)
        lhs_l = ctx.canonical_coproduct_id(alpha)
        rhs_r = {}
        rhs_l = {}
        for beta in all_degs:
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            if any(g < 0 for g in gamma) or gamma not in cans:
                continue
            ctx.accumulate_triple_r(rhs_r, cans[beta], cans[gamma], gamma)
            ctx.accumulate_triple_l(rhs_l, cans[beta], cans[gamma], gamma)
        if not ctx.triple_equal(lhs_r, rhs_r):
            failures.append({"alpha": alpha, "identity": "id x Delta"})
        if not ctx.triple_equal(lhs_l, rhs_l):
            failures.append({"alpha": alpha, "identity": "Delta x id"})
    return {"ok": not failures, "failures": failures,
            "degrees_checked": sorted(degrees)}
