"""The quantum double u(chi) in triangular normal form.

Elements are linear combinations of keys (e_word, middle, f_word): e_word and
f_word are pivot words of the Nichols algebra (f_word p stands for the mirror
basis vector F_p = Omega(e_p)), and middle is either a torus pair
(mu, nu) in Z^theta x Z^theta meaning K^mu L^nu, or a finite-group pair
(g, gamma) of exponent tuples.  Multiplication straightens F-parts past
E-parts through the double cross-relation with the threefold coproduct.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic
from .errors import ModeMismatch, ZeroScalar
from .freealg import multidegree, slot_unshuffle
from .groups import FiniteAbelianGroup, GroupAssignment
from .nichols import NicholsAlgebra
from .pairing import PairingMode, eta_words, canonical_element


class DoubleContext:
    """Immutable tables and operations for u(chi) over a Nichols algebra."""

    def __init__(self, nichols: NicholsAlgebra,
                 mode: PairingMode = PairingMode.TORUS,
                 group: FiniteAbelianGroup | None = None,
                 assignment: GroupAssignment | None = None):
        self.B = nichols
        self.chi = nichols.chi
        self.field = nichols.field
        self.theta = nichols.theta
        self.mode = mode
        self.group = group
        self.assignment = assignment
        if mode is PairingMode.FINITE_GROUP and (group is None or assignment is None):
            raise ModeMismatch("finite-group mode needs group and assignment")
        self._straighten_memo: dict = {}
        self._key_product_memo: dict = {}
        self._zero_alpha = (0,) * self.theta

    # -- middles -----------------------------------------------------------

    @property
    def unit_middle(self):
        if self.mode is PairingMode.TORUS:
            return (self._zero_alpha, self._zero_alpha)
        ident = self.group.identity()
        return (ident, ident)

    def compose_middle(self, m1, m2):
        if self.mode is PairingMode.TORUS:
            return (tuple(a + b for a, b in zip(m1[0], m2[0])),
                    tuple(a + b for a, b in zip(m1[1], m2[1])))
        return (self.group.add(m1[0], m2[0]), self.group.add(m1[1], m2[1]))

    def invert_middle(self, m):
        if self.mode is PairingMode.TORUS:
            return (tuple(-a for a in m[0]), tuple(-a for a in m[1]))
        return (self.group.negate(m[0]), self.group.negate(m[1]))

    def embed_k(self, alpha):
        """The middle of K^alpha (resp. the group element for alpha)."""
        if self.mode is PairingMode.TORUS:
            return (tuple(alpha), self._zero_alpha)
        return (self.assignment.g_combo(alpha), self.group.identity())

    def embed_l(self, alpha):
        if self.mode is PairingMode.TORUS:
            return (self._zero_alpha, tuple(alpha))
        return (self.group.identity(), self.assignment.gamma_combo(alpha))

    def comm_e(self, middle, eps) -> Cyclotomic:
        """Scalar s with middle * E = s * E * middle for E of degree eps."""
        if self.mode is PairingMode.TORUS:
            mu, nu = middle
            return self.chi.chi(mu, eps) * self.chi.chi(eps, nu).inverse()
        g, gamma = middle
        out = self.field.one
        for j, e in enumerate(eps):
            if e:
                out = out * self.assignment.evaluate(
                    self.assignment.gamma[j], g) ** e
                out = out * self.assignment.evaluate(
                    gamma, self.assignment.g[j]) ** (-e)
        return out

    def comm_f(self, middle, phi) -> Cyclotomic:
        """Scalar s with middle * F = s * F * middle for F of degree phi."""
        if self.mode is PairingMode.TORUS:
            mu, nu = middle
            return self.chi.chi(mu, phi).inverse() * self.chi.chi(phi, nu)
        g, gamma = middle
        out = self.field.one
        for j, e in enumerate(phi):
            if e:
                out = out * self.assignment.evaluate(
                    self.assignment.gamma[j], g) ** (-e)
                out = out * self.assignment.evaluate(
                    gamma, self.assignment.g[j]) ** e
        return out

    # -- element constructors (plain dicts key -> coeff) --------------------

    def unit(self) -> dict:
        return {((), self.unit_middle, ()): self.field.one}

    def zero(self) -> dict:
        return {}

    def e_gen(self, i: int) -> dict:
        return {(((i,)), self.unit_middle, ()): self.field.one}

    def f_gen(self, i: int) -> dict:
        return {((), self.unit_middle, (i,)): self.field.one}

    def k_elem(self, alpha) -> dict:
        return {((), self.embed_k(alpha), ()): self.field.one}

    def l_elem(self, alpha) -> dict:
        return {((), self.embed_l(alpha), ()): self.field.one}

    def middle_elem(self, middle) -> dict:
        return {((), middle, ()): self.field.one}

    def from_e_coords(self, coords: dict) -> dict:
        return {(x, self.unit_middle, ()): c for x, c in coords.items()}

    def from_f_coords(self, coords: dict) -> dict:
        return {((), self.unit_middle, y): c for y, c in coords.items()}

    def scale(self, d: dict, s: Cyclotomic) -> dict:
        if s.is_zero():
            return {}
        return {k: s * c for k, c in d.items()}

    def add(self, d1: dict, d2: dict) -> dict:
        out = dict(d1)
        for k, c in d2.items():
            new = out.get(k, self.field.zero) + c
            if new.is_zero():
                out.pop(k, None)
            else:
                out[k] = new
        return out

    def sub(self, d1: dict, d2: dict) -> dict:
        return self.add(d1, self.scale(d2, -self.field.one))

    def is_zero(self, d: dict) -> bool:
        return not d

    # -- multiplication -----------------------------------------------------

    def straighten(self, p: tuple, x: tuple) -> dict:
        """Normal form of F_p * E_x via the double cross-relation."""
        key = (p, x)
        memo = self._straighten_memo.get(key)
        if memo is not None:
            return memo
        field = self.field
        chi = self.chi
        B = self.B
        m = tuple(reversed(p))        # y-letter sequence of F_p
        out: dict = {}
        e_parts = slot_unshuffle(x, chi, 3, "E")
        f_parts = slot_unshuffle(m, chi, 3, "F")
        for (u1, u2, u3), ce in e_parts:
            for (m1, m2, m3), cf in f_parts:
                if len(u1) != len(m1) or len(u3) != len(m3):
                    continue
                # eta(X1, S(Y1)): S(m1) = sign * prodchi^-1 * rev(m1) L^{-phi1}
                g_word = tuple(reversed(m1))
                eta1 = eta_words(u1, g_word, chi)
                if eta1.is_zero():
                    continue
                eta3 = eta_words(u3, m3, chi)
                if eta3.is_zero():
                    continue
                s_scalar = field.one
                for a in range(len(m1)):
                    for b in range(a + 1, len(m1)):
                        s_scalar = s_scalar * chi.chi_letters(m1[a], m1[b]).inverse()
                if len(m1) % 2:
                    s_scalar = -s_scalar
                eps23 = multidegree(u2 + u3, self.theta)
                phi1 = multidegree(m1, self.theta)
                phi2 = multidegree(m2, self.theta)
                coeff = (ce * cf * s_scalar * eta1 * eta3
                         * chi.chi(eps23, phi1).inverse()
                         * chi.chi(phi2, phi1).inverse())
                eps3 = multidegree(u3, self.theta)
                middle = self.compose_middle(self.embed_k(eps3),
                                             self.embed_l(phi1))
                e_red = B.reduce_word(u2)
                f_red = B.reduce_word(tuple(reversed(m2)))
                for xe, a in e_red.items():
                    for yf, b in f_red.items():
                        k = (xe, middle, yf)
                        new = out.get(k, field.zero) + coeff * a * b
                        if new.is_zero():
                            out.pop(k, None)
                        else:
                            out[k] = new
        self._straighten_memo[key] = out
        return out

    def multiply_keys(self, k1, k2) -> dict:
        """Memoized product of two normal-form basis keys."""
        key = (k1, k2)
        memo = self._key_product_memo.get(key)
        if memo is None:
            memo = self.multiply({k1: self.field.one}, {k2: self.field.one})
            self._key_product_memo[key] = memo
        return memo

    def multiply(self, d1: dict, d2: dict) -> dict:
        field = self.field
        out: dict = {}
        for (u1, mid1, p1), c1 in d1.items():
            for (u2, mid2, p2), c2 in d2.items():
                base = c1 * c2
                for (up, midp, pp), cs in self.straighten(p1, u2).items():
                    eps = multidegree(up, self.theta)
                    phi = multidegree(pp, self.theta)
                    coeff = (base * cs * self.comm_e(mid1, eps)
                             * self.comm_f(mid2, phi).inverse())
                    middle = self.compose_middle(
                        self.compose_middle(mid1, midp), mid2)
                    e_red = self.B.reduce_word(u1 + up)
                    f_red = self.B.reduce_word(p2 + pp)
                    for xe, a in e_red.items():
                        for yf, b in f_red.items():
                            k = (xe, middle, yf)
                            new = out.get(k, field.zero) + coeff * a * b
                            if new.is_zero():
                                out.pop(k, None)
                            else:
                                out[k] = new
        return out

    # -- Hopf structure ------------------------------------------------------

    def coproduct(self, d: dict) -> dict:
        """Delta as a dict (key1, key2) -> coeff."""
        chi = self.chi
        field = self.field
        out: dict = {}
        for (u, mid, p), c in d.items():
            m = tuple(reversed(p))
            for (u1, u2), ce in _two_slots(u, chi, "E"):
                eps2 = multidegree(u2, self.theta)
                left_mid = self.compose_middle(self.embed_k(eps2), mid)
                e1 = self.B.reduce_word(u1)
                e2 = self.B.reduce_word(u2)
                for (m1, m2), cf in _two_slots(m, chi, "F"):
                    phi1 = multidegree(m1, self.theta)
                    phi2 = multidegree(m2, self.theta)
                    twist = chi.chi(phi2, phi1).inverse()
                    right_mid = self.compose_middle(mid, self.embed_l(phi1))
                    f1 = self.B.reduce_word(tuple(reversed(m1)))
                    f2 = self.B.reduce_word(tuple(reversed(m2)))
                    coeff = c * ce * cf * twist
                    for x1, a1 in e1.items():
                        for y1, b1 in f1.items():
                            key1 = (x1, left_mid, y1)
                            for x2, a2 in e2.items():
                                for y2, b2 in f2.items():
                                    key2 = (x2, right_mid, y2)
                                    k = (key1, key2)
                                    new = (out.get(k, field.zero)
                                           + coeff * a1 * b1 * a2 * b2)
                                    if new.is_zero():
                                        out.pop(k, None)
                                    else:
                                        out[k] = new
        return out

    def counit(self, d: dict) -> Cyclotomic:
        out = self.field.zero
        for (u, mid, p), c in d.items():
            if not u and not p:
                out = out + c
        return out

    def antipode(self, d: dict) -> dict:
        """S(E M F) = S(F) S(M) S(E) with the closed word formulas."""
        chi = self.chi
        field = self.field
        out: dict = {}
        for (u, mid, p), c in d.items():
            # S(F_p)
            m = tuple(reversed(p))
            phi = multidegree(m, self.theta)
            s_f_scalar = field.one
            for a in range(len(m)):
                for b in range(a + 1, len(m)):
                    s_f_scalar = s_f_scalar * chi.chi_letters(m[a], m[b]).inverse()
            if len(m) % 2:
                s_f_scalar = -s_f_scalar
            s_f_scalar = s_f_scalar * chi.chi(phi, phi)
            neg_phi = tuple(-a for a in phi)
            # the y-word of S(F_p) is rev(m) = p; its F-coordinates are
            # reduce(rev(p))
            sf = {}
            for y, cy in self.B.reduce_word(tuple(reversed(p))).items():
                sf[((), self.embed_l(neg_phi), y)] = s_f_scalar * cy
            # S(M)
            sm = self.middle_elem(self.invert_middle(mid))
            # S(E_u)
            eps = multidegree(u, self.theta)
            s_e_scalar = field.one
            for a in range(len(u)):
                for b in range(a + 1, len(u)):
                    s_e_scalar = s_e_scalar * chi.chi_letters(u[a], u[b])
            if len(u) % 2:
                s_e_scalar = -s_e_scalar
            s_e_scalar = s_e_scalar * chi.chi(eps, eps).inverse()
            neg_eps = tuple(-a for a in eps)
            se = {}
            for xw, cx in self.B.reduce_word(tuple(reversed(u))).items():
                se[(xw, self.embed_k(neg_eps), ())] = s_e_scalar * cx
            term = self.multiply(self.multiply(sf, sm), se)
            out = self.add(out, self.scale(term, c))
        return out

    def apply_phi(self, d: dict, scalars) -> dict:
        for s in scalars:
            if s.is_zero():
                raise ZeroScalar("phi_a needs nonzero scalars")
        out = {}
        for (u, mid, p), c in d.items():
            factor = self.field.one
            for letter in u:
                factor = factor * scalars[letter]
            for letter in p:
                factor = factor * scalars[letter].inverse()
            out[(u, mid, p)] = c * factor
        return out

    def apply_omega(self, d: dict) -> dict:
        """Omega swaps E_i <-> F_i, fixes the middle, reverses products; on a
        normal-form key it exchanges the E- and F-words."""
        return {(p, mid, u): c for (u, mid, p), c in d.items()}

    # -- rendering -----------------------------------------------------------

    def render(self, d: dict) -> str:
        if not d:
            return "0"
        parts = []
        for (u, mid, p), c in sorted(d.items()):
            bits = []
            if u:
                bits.append("E[%s]" % ",".join(str(i + 1) for i in u))
            if self.mode is PairingMode.TORUS:
                mu, nu = mid
                if any(mu):
                    bits.append("K^%s" % (tuple(mu),))
                if any(nu):
                    bits.append("L^%s" % (tuple(nu),))
            else:
                g, gamma = mid
                if any(g):
                    bits.append("g%s" % (tuple(g),))
                if any(gamma):
                    bits.append("chr%s" % (tuple(gamma),))
            if p:
                bits.append("F[%s]" % ",".join(str(i + 1) for i in p))
            if not bits:
                bits.append("1")
            parts.append("(%r)*%s" % (c, " ".join(bits)))
        return " + ".join(parts)

    # -- checks ---------------------------------------------------------------

    def root_commutator_check(self) -> dict:
        """[e_beta, f_beta] = t_beta (K^beta - L^beta) with t_beta =
        -eta_beta, per positive root, on the matched root-vector pairs.

        The scalar law is exact in these conventions at every degree; the
        report also records the alternating-sign variant
        (-1)^{d(beta)} eta_beta, which agrees only in odd degree.
        """
        from .pairing import eta_beta
        B = self.B
        rd = B.root_datum
        results = []
        ok = True
        for beta, (e_vec, f_vec) in zip(rd.roots, B.root_vector_pairs()):
            e = self.from_e_coords(e_vec)
            f = self.from_f_coords(f_vec)
            comm = self.sub(self.multiply(e, f), self.multiply(f, e))
            eta = eta_beta(B, e_vec, f_vec)
            t = -eta
            expected = self.sub(self.scale(self.k_elem(beta), t),
                                self.scale(self.l_elem(beta), t))
            good = comm == expected
            ok = ok and good
            sign = -self.field.one if sum(beta) % 2 else self.field.one
            results.append({"beta": beta, "eta_beta": repr(eta),
                            "t_beta": repr(t), "ok": good,
                            "alternating_sign_matches": t == sign * eta})
        return {"ok": ok, "roots": results}

    def generator_elements(self) -> list:
        gens = []
        for i in range(self.theta):
            alpha = tuple(1 if t == i else 0 for t in range(self.theta))
            gens.append(("E%d" % (i + 1), self.e_gen(i)))
            gens.append(("F%d" % (i + 1), self.f_gen(i)))
            gens.append(("K%d" % (i + 1), self.k_elem(alpha)))
            gens.append(("L%d" % (i + 1), self.l_elem(alpha)))
        return gens

    def hopf_axioms_check(self) -> dict:
        """Coassociativity, counit and antipode axioms, and the (anti)
        homomorphism properties of Delta and S, on all generators and all
        generator pairs."""
        field = self.field
        gens = self.generator_elements()
        failures = []

        def cop_left(d):
            out = {}
            for (k1, k2), c in self.coproduct(d).items():
                for (a1, a2), e in self.coproduct({k1: field.one}).items():
                    k = (a1, a2, k2)
                    new = out.get(k, field.zero) + c * e
                    if new.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = new
            return out

        def cop_right(d):
            out = {}
            for (k1, k2), c in self.coproduct(d).items():
                for (a1, a2), e in self.coproduct({k2: field.one}).items():
                    k = (k1, a1, a2)
                    new = out.get(k, field.zero) + c * e
                    if new.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = new
            return out

        def antipode_convolve(d, s_first):
            out = self.zero()
            for (k1, k2), c in self.coproduct(d).items():
                left = {k1: field.one}
                right = {k2: field.one}
                if s_first:
                    left = self.antipode(left)
                else:
                    right = self.antipode(right)
                out = self.add(out, self.scale(self.multiply(left, right), c))
            return out

        for label, g in gens:
            if not self.triple_equal(cop_left(g), cop_right(g)):
                failures.append(("coassociativity", label))
            eps = self.counit(g)
            left = self.zero()
            right = self.zero()
            for (k1, k2), c in self.coproduct(g).items():
                left = self.add(left, self.scale(
                    {k2: field.one}, c * self.counit({k1: field.one})))
                right = self.add(right, self.scale(
                    {k1: field.one}, c * self.counit({k2: field.one})))
            if left != g or right != g:
                failures.append(("counit", label))
            want = self.scale(self.unit(), eps)
            if antipode_convolve(g, True) != want:
                failures.append(("antipode left", label))
            if antipode_convolve(g, False) != want:
                failures.append(("antipode right", label))
        for la, a in gens:
            for lb, b in gens:
                ab = self.multiply(a, b)
                lhs = self.coproduct(ab)
                rhs = self.tensor_multiply(self.coproduct(a),
                                           self.coproduct(b))
                if not self._tensor_eq(lhs, rhs):
                    failures.append(("Delta multiplicative", la, lb))
                if self.antipode(ab) != self.multiply(self.antipode(b),
                                                      self.antipode(a)):
                    failures.append(("S anti-multiplicative", la, lb))
        return {"ok": not failures, "failures": failures}

    def _tensor_eq(self, t1: dict, t2: dict) -> bool:
        keys = set(t1) | set(t2)
        return all(t1.get(k, self.field.zero) == t2.get(k, self.field.zero)
                   for k in keys)

    # -- tensor helpers (for canonical-element lemmas) -----------------------

    def tensor_unit(self) -> dict:
        k = ((), self.unit_middle, ())
        return {(k, k): self.field.one}

    def tensor_add(self, t1: dict, t2: dict) -> dict:
        out = dict(t1)
        for k, c in t2.items():
            new = out.get(k, self.field.zero) + c
            if new.is_zero():
                out.pop(k, None)
            else:
                out[k] = new
        return out

    def tensor_multiply(self, t1: dict, t2: dict) -> dict:
        out: dict = {}
        for (a1, a2), c1 in t1.items():
            for (b1, b2), c2 in t2.items():
                left = self.multiply_keys(a1, b1)
                right = self.multiply_keys(a2, b2)
                coeff = c1 * c2
                for k1, d1 in left.items():
                    for k2, d2 in right.items():
                        k = (k1, k2)
                        new = out.get(k, self.field.zero) + coeff * d1 * d2
                        if new.is_zero():
                            out.pop(k, None)
                        else:
                            out[k] = new
        return out

    def canonical_tensor(self, beta) -> dict:
        out = {}
        for x, y, c in canonical_element(self.B, beta):
            k1 = (x, self.unit_middle, ())
            k2 = ((), self.unit_middle, y)
            out[(k1, k2)] = c
        return out

    def canonical_primed_tensor(self, beta) -> dict:
        """C'_beta = (K^beta (x) 1)(S (x) id)(C_beta)."""
        beta = tuple(beta)
        kb = self.k_elem(beta)
        out: dict = {}
        for x, y, c in canonical_element(self.B, beta):
            s_ex = self.antipode({(x, self.unit_middle, ()): self.field.one})
            left = self.multiply(kb, s_ex)
            k2 = ((), self.unit_middle, y)
            for k1, d in left.items():
                k = (k1, k2)
                new = out.get(k, self.field.zero) + c * d
                if new.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = new
        return out

    # triples: dict (key1, key2, key3) -> coeff

    def canonical_id_coproduct(self, alpha) -> dict:
        out: dict = {}
        for x, y, c in canonical_element(self.B, alpha):
            cop = self.coproduct({((), self.unit_middle, y): self.field.one})
            k1 = (x, self.unit_middle, ())
            for (k2, k3), d in cop.items():
                k = (k1, k2, k3)
                new = out.get(k, self.field.zero) + c * d
                if new.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = new
        return out

    def canonical_coproduct_id(self, alpha) -> dict:
        out: dict = {}
        for x, y, c in canonical_element(self.B, alpha):
            cop = self.coproduct({(x, self.unit_middle, ()): self.field.one})
            k3 = ((), self.unit_middle, y)
            for (k1, k2), d in cop.items():
                k = (k1, k2, k3)
                new = out.get(k, self.field.zero) + c * d
                if new.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = new
        return out

    def _triple_product(self, t1: dict, t2: dict) -> dict:
        out: dict = {}
        for (a1, a2, a3), c1 in t1.items():
            for (b1, b2, b3), c2 in t2.items():
                p1 = self.multiply_keys(a1, b1)
                p2 = self.multiply_keys(a2, b2)
                p3 = self.multiply_keys(a3, b3)
                coeff = c1 * c2
                for k1, d1 in p1.items():
                    for k2, d2 in p2.items():
                        for k3, d3 in p3.items():
                            k = (k1, k2, k3)
                            new = (out.get(k, self.field.zero)
                                   + coeff * d1 * d2 * d3)
                            if new.is_zero():
                                out.pop(k, None)
                            else:
                                out[k] = new
        return out

    def accumulate_triple_r(self, acc: dict, cb, cg, gamma) -> None:
        """acc += C_beta^(13) C_gamma^(12) (1 x 1 x L^gamma)."""
        unit_k = ((), self.unit_middle, ())
        t_b = {(  (x, self.unit_middle, ()), unit_k,
                  ((), self.unit_middle, y)): c for x, y, c in cb}
        t_g = {(  (x, self.unit_middle, ()),
                  ((), self.unit_middle, y), unit_k): c for x, y, c in cg}
        t_l = {(unit_k, unit_k, ((), self.embed_l(gamma), ())): self.field.one}
        prod = self._triple_product(self._triple_product(t_b, t_g), t_l)
        for k, c in prod.items():
            new = acc.get(k, self.field.zero) + c
            if new.is_zero():
                acc.pop(k, None)
            else:
                acc[k] = new

    def accumulate_triple_l(self, acc: dict, cb, cg, gamma) -> None:
        """acc += C_beta^(13) C_gamma^(23) (K^gamma x 1 x 1)."""
        unit_k = ((), self.unit_middle, ())
        t_b = {(  (x, self.unit_middle, ()), unit_k,
                  ((), self.unit_middle, y)): c for x, y, c in cb}
        t_g = {(unit_k, (x, self.unit_middle, ()),
                ((), self.unit_middle, y)): c for x, y, c in cg}
        t_k = {(((), self.embed_k(gamma), ()), unit_k, unit_k): self.field.one}
        prod = self._triple_product(self._triple_product(t_b, t_g), t_k)
        for k, c in prod.items():
            new = acc.get(k, self.field.zero) + c
            if new.is_zero():
                acc.pop(k, None)
            else:
                acc[k] = new

    def triple_equal(self, t1: dict, t2: dict) -> bool:
        keys = set(t1) | set(t2)
        for k in keys:
            a = t1.get(k, self.field.zero)
            b = t2.get(k, self.field.zero)
            if a != b:
                return False
        return True


def _two_slots(word: tuple, chi, side: str):
    return [((parts[0], parts[1]), c)
            for parts, c in slot_unshuffle(word, chi, 2, side)]
