"""The Nichols algebra of a diagonal braiding, built degree by degree as the
quotient of the free braided algebra by the radical of the standard pairing.

At each multidegree the candidate words x_i * (pivot of smaller degree) are
pairing-tested against the mirrored candidates on the dual side; candidates
with independent pairing rows become the stored basis ("pivots"), dependent
candidates get an expression over the pivots.  The square Gram matrix on
pivots is kept per degree; its invertibility certifies that the mirrored
pivots are a dual basis modulo radical.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .cyclotomic import Cyclotomic, CyclotomicField
from .errors import (DegreeBoundExceeded, NoNonzeroCandidate, PBWDefect,
                     SingularGram)
from .freealg import (FreeElem, braided_commutator, braided_coproduct,
                      hyperletter, is_lyndon, lyndon_words, multidegree,
                      shirshov_split, word_str)
from .linalg import RowSpace, mat_inverse
from .weylgpd import BicharMatrix, RootDatum

DEFAULT_DEGREE_BOUND = 12
DEFAULT_FULL_DIMENSION_CAP = 5000


@dataclass
class NicholsConfig:
    degree_bound: int = DEFAULT_DEGREE_BOUND
    full_dimension_cap: int = DEFAULT_FULL_DIMENSION_CAP


class NicholsAlgebra:
    """Graded basis, reduction map and Gram data of B(V)."""

    def __init__(self, chi: BicharMatrix, config: NicholsConfig | None = None,
                 root_datum: RootDatum | None = None):
        self.chi = chi
        self.field: CyclotomicField = chi.field
        self.theta = chi.rank
        self.config = config or NicholsConfig()
        self.root_datum = root_datum

        zero_deg = (0,) * self.theta
        self.pivots: dict[tuple, list] = {zero_deg: [()]}
        self.gram: dict[tuple, list] = {zero_deg: [[self.field.one]]}
        self._gram_inv: dict[tuple, list] = {}
        self._expr: dict[tuple, dict] = {(): {(): self.field.one}}
        self._reduce_memo: dict[tuple, dict] = {(): {(): self.field.one}}
        self._built_level = 0
        self.finite: bool | None = None   # None = undecided within the bound
        self.truncated = False

        self._effective_bound = self.config.degree_bound
        if root_datum is not None and all(n is not None for n in root_datum.n_beta):
            total = 1
            for n in root_datum.n_beta:
                total *= n
            if total <= self.config.full_dimension_cap:
                top = sum((n - 1) * sum(b)
                          for n, b in zip(root_datum.n_beta, root_datum.roots))
                self._effective_bound = max(self._effective_bound, top)
        self.build(self._effective_bound)
        if self.finite is None:
            self.truncated = True

    # -- construction ------------------------------------------------------

    def build(self, level: int) -> None:
        while self._built_level < level:
            if self.finite:
                return
            self._built_level += 1
            if not self._build_level(self._built_level):
                self.finite = True
                return

    def _build_level(self, d: int) -> bool:
        """Construct all multidegrees of total degree d; True if any pivot."""
        degrees = set()
        for beta, piv in self.pivots.items():
            if sum(beta) == d - 1 and piv:
                for i in range(self.theta):
                    degrees.add(tuple(b + (1 if k == i else 0)
                                      for k, b in enumerate(beta)))
        any_pivot = False
        for beta in sorted(degrees):
            if self._build_degree(beta):
                any_pivot = True
        return any_pivot

    def _build_degree(self, beta: tuple) -> bool:
        field = self.field
        candidates = []
        segments = []       # (letter j, previous degree, offset) for columns
        offset = 0
        for i in range(self.theta):
            if beta[i] == 0:
                continue
            prev = tuple(b - (1 if k == i else 0) for k, b in enumerate(beta))
            piv_prev = self.pivots.get(prev, [])
            if piv_prev:
                segments.append((i, prev, offset))
                offset += len(piv_prev)
                candidates.extend((i,) + p for p in piv_prev)
        if not candidates:
            self.pivots[beta] = []
            self.gram[beta] = []
            return False

        width = offset
        rows = []
        for cand in candidates:
            row = [field.zero] * width
            for j, prev, off in segments:
                vec = self._derivative_reduced(cand, j, prev)
                if not vec:
                    continue
                gram_prev = self.gram[prev]
                piv_prev = self.pivots[prev]
                index = {p: k for k, p in enumerate(piv_prev)}
                for p, c in vec.items():
                    gr = gram_prev[index[p]]
                    for l in range(len(piv_prev)):
                        if not gr[l].is_zero():
                            row[off + l] = row[off + l] + c * gr[l]
            rows.append(row)

        space = RowSpace(field, width)
        piv_words = []
        piv_rows = []
        piv_positions = []
        for k, (cand, row) in enumerate(zip(candidates, rows)):
            coeffs = space.insert(row)
            if coeffs is None:
                piv_words.append(cand)
                piv_rows.append(row)
                piv_positions.append(k)
                self._expr[cand] = {cand: field.one}
            else:
                expr = {}
                for c, p in zip(coeffs, piv_words):
                    if not c.is_zero():
                        expr[p] = c
                self._expr[cand] = expr
        self.pivots[beta] = piv_words
        self.gram[beta] = [[row[pos] for pos in piv_positions] for row in piv_rows]
        return bool(piv_words)

    def _derivative_reduced(self, word: tuple, j: int, prev: tuple) -> dict:
        """The j-th right skew derivation of a word, in pivot coordinates."""
        out = {}
        field = self.field
        chi = self.chi
        tail = field.one
        for pos in range(len(word) - 1, -1, -1):
            letter = word[pos]
            if letter == j:
                sub = word[:pos] + word[pos + 1:]
                for p, c in self.reduce_word(sub).items():
                    new = out.get(p, field.zero) + tail * c
                    if new.is_zero():
                        out.pop(p, None)
                    else:
                        out[p] = new
            tail = tail * chi.chi_letters(j, letter)
        return out

    # -- reduction ---------------------------------------------------------

    def reduce_word(self, word: tuple) -> dict:
        """Express a free word in the pivot basis of its multidegree.

        Returns a map pivot-word -> coefficient; an empty map means the word
        is zero in the quotient.
        """
        word = tuple(word)
        memo = self._reduce_memo.get(word)
        if memo is not None:
            return memo
        beta = multidegree(word, self.theta)
        if sum(beta) > self._built_level:
            if self.finite:
                # the algebra is known finite with top degree at the built
                # level, so anything beyond it vanishes
                self._reduce_memo[word] = {}
                return {}
            raise DegreeBoundExceeded(
                f"degree {beta} beyond constructed level {self._built_level}"
            )
        if not self.pivots.get(beta):
            self._reduce_memo[word] = {}
            return {}
        head, rest = word[0], word[1:]
        out = {}
        field = self.field
        for p, c in self.reduce_word(rest).items():
            expr = self._expr.get((head,) + p)
            if expr is None:
                # (head,) + p had no pairing row because its degree was
                # pivotless on that branch; it reduces to zero
                continue
            for q, e in expr.items():
                new = out.get(q, field.zero) + c * e
                if new.is_zero():
                    out.pop(q, None)
                else:
                    out[q] = new
        self._reduce_memo[word] = out
        return out

    def reduce_elem(self, elem: FreeElem) -> dict:
        out = {}
        field = self.field
        for w, c in elem.terms.items():
            for p, e in self.reduce_word(w).items():
                new = out.get(p, field.zero) + c * e
                if new.is_zero():
                    out.pop(p, None)
                else:
                    out[p] = new
        return out

    def multiply(self, a: dict, b: dict) -> dict:
        """Product of two reduced elements, reduced again."""
        out = {}
        field = self.field
        for w1, c1 in a.items():
            for w2, c2 in b.items():
                for p, e in self.reduce_word(w1 + w2).items():
                    new = out.get(p, field.zero) + c1 * c2 * e
                    if new.is_zero():
                        out.pop(p, None)
                    else:
                        out[p] = new
        return out

    # -- queries -----------------------------------------------------------

    def component_basis(self, beta) -> list:
        beta = tuple(beta)
        if sum(beta) > self._built_level:
            if self.finite:
                return []
            raise DegreeBoundExceeded(f"degree {beta} beyond bound")
        return list(self.pivots.get(beta, []))

    def dimension_of(self, beta) -> int:
        return len(self.component_basis(beta))

    def total_dimension(self) -> int | None:
        if not self.finite:
            return None
        return sum(len(p) for p in self.pivots.values())

    def graded_dimensions(self) -> dict:
        return {beta: len(p) for beta, p in self.pivots.items() if p}

    def gram_matrix(self, beta):
        return self.gram[tuple(beta)]

    def gram_inverse(self, beta):
        beta = tuple(beta)
        inv = self._gram_inv.get(beta)
        if inv is None:
            try:
                inv = mat_inverse(self.gram[beta], self.field)
            except SingularGram:
                raise SingularGram(f"Gram matrix singular at degree {beta}")
            self._gram_inv[beta] = inv
        return inv

    def hilbert_check(self) -> dict:
        """Compare graded dimensions with the root-datum product formula.

        Returns {"ok": bool, "mismatches": [...]}, comparing every multidegree
        up to the constructed level.
        """
        if self.root_datum is None:
            raise ValueError("no root datum attached")
        expected = _pbw_graded_dimensions(self.root_datum, self._built_level,
                                          self.theta)
        mism = []
        degrees = set(expected) | {b for b, p in self.pivots.items() if p}
        for beta in sorted(degrees):
            if sum(beta) > self._built_level:
                continue
            got = len(self.pivots.get(beta, []))
            want = expected.get(beta, 0)
            if got != want:
                mism.append({"degree": beta, "dim": got, "expected": want})
        return {"ok": not mism, "mismatches": mism}

    # -- root vectors and PBW ----------------------------------------------

    def root_vectors(self) -> list:
        """One reduced element per positive root, in convex order.

        Convex-commutator construction with hyperletter fallback; normalized
        so the lex-smallest pivot word in the support has coefficient 1.
        """
        rd = self.root_datum
        if rd is None:
            raise ValueError("no root datum attached")
        vectors = {}
        out = []
        for k, beta in enumerate(rd.roots):
            if sum(beta) == 1:
                letter = beta.index(1)
                red = self.reduce_word((letter,))
                vectors[beta] = red
                out.append(self._normalize(red))
                continue
            found = None
            # convex splits beta = gamma + delta, gamma earlier, delta later
            for a in range(k):
                gamma = rd.roots[a]
                delta = tuple(b - g for b, g in zip(beta, gamma))
                pos = rd.roots.index(delta) if delta in rd.roots else -1
                if pos <= k:
                    continue
                eg, ed = vectors.get(gamma), vectors.get(delta)
                if eg is None or ed is None:
                    continue
                cand = self._commutator(eg, gamma, ed, delta)
                if cand:
                    found = cand
                    break
            if found is None:
                for w in lyndon_words(beta, self.theta):
                    cand = self.reduce_elem(hyperletter(w, self.chi))
                    if cand:
                        found = cand
                        break
            if found is None:
                raise NoNonzeroCandidate(f"no root vector at degree {beta}")
            vectors[beta] = found
            out.append(self._normalize(found))
        # replace stored vectors by the normalized ones for the return value
        return [self._normalize(vectors[b]) for b in rd.roots]

    def f_multiply(self, f1: dict, f2: dict) -> dict:
        """Product on the negative half in mirrored coordinates.

        F-side basis vectors are keyed by the same pivot words as the E-side;
        their product reverses the concatenation order relative to the E-side
        (F_p F_q has the coordinates of reduce(q + p)).
        """
        return self.multiply(f2, f1)

    def root_vector_pairs(self) -> list:
        """Matched (e_beta, f_beta) coordinate pairs per positive root, in
        convex order.

        Both sides are built by the same convex-split recursion: for a split
        beta = gamma + delta with gamma < beta < delta in the convex order,
        e_beta = e_gamma e_delta - chi(gamma, delta) e_delta e_gamma and
        f_beta = f_gamma f_delta - chi(delta, gamma) f_delta f_gamma, the
        latter with the mirrored product; simple roots start as single
        letters on both sides.  These pairs diagonalize the mixed commutator
        in the double: [e_beta, f_beta] is proportional to K^beta - L^beta.
        """
        rd = self.root_datum
        if rd is None:
            raise ValueError("no root datum attached")
        order = list(rd.roots)
        evecs: dict = {}
        fvecs: dict = {}
        for beta in order:
            if sum(beta) == 1:
                letter = beta.index(1)
                red = self.reduce_word((letter,))
                evecs[beta] = red
                fvecs[beta] = dict(red)
        for beta in sorted(order, key=sum):
            if beta in evecs:
                continue
            k = order.index(beta)
            found = None
            for a in range(k):
                gamma = order[a]
                delta = tuple(b - g for b, g in zip(beta, gamma))
                pos = order.index(delta) if delta in order else -1
                if pos <= k:
                    continue
                eg, ed = evecs.get(gamma), evecs.get(delta)
                if eg is None or ed is None:
                    continue
                ev = self._commutator(eg, gamma, ed, delta)
                fv = self._f_commutator(fvecs[gamma], gamma,
                                        fvecs[delta], delta)
                if ev and fv:
                    found = (ev, fv)
                    break
            if found is None:
                for w in lyndon_words(beta, self.theta):
                    ev = self.reduce_elem(hyperletter(w, self.chi))
                    fv = self._mirror_hyperletter(w)
                    if ev and fv:
                        found = (ev, fv)
                        break
            if found is None:
                raise NoNonzeroCandidate(f"no root-vector pair at {beta}")
            evecs[beta], fvecs[beta] = found
        return [(evecs[b], fvecs[b]) for b in order]

    def _f_commutator(self, a: dict, da: tuple, b: dict, db: tuple) -> dict:
        q = self.chi.chi(db, da)
        ab = self.f_multiply(a, b)
        ba = self.f_multiply(b, a)
        out = dict(ab)
        field = self.field
        for p, c in ba.items():
            new = out.get(p, field.zero) - q * c
            if new.is_zero():
                out.pop(p, None)
            else:
                out[p] = new
        return out

    def _mirror_hyperletter(self, word: tuple) -> dict:
        """The hyperletter recursion transported to the mirrored side."""
        if len(word) == 1:
            return self.reduce_word(word)
        u, v = shirshov_split(word)
        fu = self._mirror_hyperletter(u)
        fv = self._mirror_hyperletter(v)
        return self._f_commutator(fu, multidegree(u, self.theta),
                                  fv, multidegree(v, self.theta))

    def _commutator(self, a: dict, da: tuple, b: dict, db: tuple) -> dict:
        q = self.chi.chi(da, db)
        ab = self.multiply(a, b)
        ba = self.multiply(b, a)
        out = dict(ab)
        field = self.field
        for p, c in ba.items():
            new = out.get(p, field.zero) - q * c
            if new.is_zero():
                out.pop(p, None)
            else:
                out[p] = new
        return out

    def _normalize(self, red: dict) -> dict:
        lead = min(red)
        inv = red[lead].inverse()
        return {p: c * inv for p, c in red.items()}

    def power(self, a: dict, n: int) -> dict:
        out = {(): self.field.one}
        for _ in range(n):
            out = self.multiply(out, a)
        return out

    def pbw_basis(self) -> dict:
        """PBW monomials per multidegree with their pivot coordinates.

        Returns {beta: {"monomials": [exponent tuples], "coords": [dicts]}}
        and raises PBWDefect when the monomials of some constructed degree do
        not form a basis.
        """
        rd = self.root_datum
        if rd is None:
            raise ValueError("no root datum attached")
        vectors = self.root_vectors()
        powers = []
        for vec, beta, n in zip(vectors, rd.roots, rd.n_beta):
            limit_deg = self._built_level // max(1, sum(beta))
            cap = (n - 1) if n is not None else limit_deg
            cap = min(cap, limit_deg)
            cache = [{(): self.field.one}]
            for _ in range(cap):
                cache.append(self.multiply(cache[-1], vec))
            powers.append(cache)

        per_degree: dict[tuple, dict] = {}

        def recurse(idx, exps, degree):
            if idx == len(powers):
                key = tuple(degree)
                if not self.pivots.get(key):
                    if any(exps):
                        raise PBWDefect(
                            f"monomial {exps} lands in zero component {key}")
                    if key != (0,) * self.theta:
                        return
                coord = {(): self.field.one}
                for cache, e in zip(powers, exps):
                    if e:
                        coord = self.multiply(coord, cache[e])
                entry = per_degree.setdefault(key, {"monomials": [], "coords": []})
                entry["monomials"].append(tuple(exps))
                entry["coords"].append(coord)
                return
            cache = powers[idx]
            beta = rd.roots[idx]
            for e in range(len(cache)):
                new_degree = [d + e * b for d, b in zip(degree, beta)]
                if sum(new_degree) > self._built_level:
                    break
                recurse(idx + 1, exps + [e], new_degree)

        recurse(0, [], [0] * self.theta)

        for beta, entry in per_degree.items():
            piv = self.pivots.get(beta, [])
            if len(entry["monomials"]) != len(piv):
                raise PBWDefect(
                    f"degree {beta}: {len(entry['monomials'])} monomials vs "
                    f"dimension {len(piv)}")
            space = RowSpace(self.field, len(piv))
            index = {p: k for k, p in enumerate(piv)}
            for coord in entry["coords"]:
                row = [self.field.zero] * len(piv)
                for p, c in coord.items():
                    row[index[p]] = c
                if space.insert(row) is not None:
                    raise PBWDefect(f"degree {beta}: monomials are dependent")
        return per_degree

    # -- coideal filtration ------------------------------------------------

    def coideal_filtration_check(self, max_degree: int | None = None) -> dict:
        """The subalgebras generated by tails of the convex root-vector list
        are right coideals: Delta(K_k) sits inside B ox K_k.

        Checks every PBW monomial of total degree <= max_degree.
        """
        rd = self.root_datum
        if rd is None:
            raise ValueError("no root datum attached")
        bound = max_degree if max_degree is not None else min(self._built_level, 6)
        vectors = self.root_vectors()
        reps = [self._representative(v) for v in vectors]
        failures = []
        num = len(rd.roots)
        for k in range(num):
            # span of reduced tail monomials per multidegree
            spans: dict[tuple, tuple] = {}
            monomials = [[]]
            elems = [FreeElem.unit(self.field)]
            degrees = [(0,) * self.theta]
            # enumerate tail monomials of degree <= bound
            def extend(idx, elem, degree, store):
                store.append((elem, degree))
                for j in range(idx, num):
                    nd = tuple(d + b for d, b in zip(degree, rd.roots[j]))
                    if sum(nd) > bound:
                        continue
                    extend(j, elem * reps[j], nd, store)
            store: list = []
            extend(k, FreeElem.unit(self.field), (0,) * self.theta, store)
            # build membership row spaces per degree
            member: dict[tuple, RowSpace] = {}
            for elem, degree in store:
                red = self.reduce_elem(elem)
                piv = self.pivots.get(degree, [])
                if not piv:
                    continue
                rs = member.get(degree)
                if rs is None:
                    rs = member[degree] = RowSpace(self.field, len(piv))
                index = {p: i for i, p in enumerate(piv)}
                row = [self.field.zero] * len(piv)
                for p, c in red.items():
                    row[index[p]] = c
                rs.insert(row)
            # check coproducts of the tail generators' monomials
            for elem, degree in store:
                if sum(degree) == 0:
                    continue
                cop = braided_coproduct(elem, self.chi, "E")
                right_parts: dict[tuple, dict] = {}
                for (lw, rw), c in cop.items():
                    rdg = multidegree(rw, self.theta)
                    if rdg == degree or sum(rdg) == 0:
                        continue
                    acc = right_parts.setdefault((lw, rdg), {})
                    for p, e in self.reduce_word(rw).items():
                        new = acc.get(p, self.field.zero) + c * e
                        if new.is_zero():
                            acc.pop(p, None)
                        else:
                            acc[p] = new
                for (lw, rdg), comp in right_parts.items():
                    if not comp:
                        continue
                    piv = self.pivots[rdg]
                    rs = member.get(rdg)
                    index = {p: i for i, p in enumerate(piv)}
                    row = [self.field.zero] * len(piv)
                    for p, c in comp.items():
                        row[index[p]] = c
                    probe = RowSpace(self.field, len(piv))
                    if rs is not None:
                        for erow in rs.echelon:
                            probe.insert(list(erow))
                    if probe.insert(row) is None:
                        failures.append({"tail": k, "degree": degree,
                                         "right_degree": rdg})
                        break
        return {"ok": not failures, "failures": failures}

    def _representative(self, red: dict) -> FreeElem:
        return FreeElem(self.field, dict(red))


def _pbw_graded_dimensions(rd: RootDatum, level: int, theta: int) -> dict:
    """Graded dimensions of the PBW product formula up to total degree."""
    dims = {(0,) * theta: 1}
    for beta, n in zip(rd.roots, rd.n_beta):
        new = {}
        step = sum(beta)
        cap = (n - 1) if n is not None else (level // max(1, step))
        for deg, d in dims.items():
            for e in range(cap + 1):
                nd = tuple(x + e * b for x, b in zip(deg, beta))
                if sum(nd) > level:
                    break
                new[nd] = new.get(nd, 0) + d
        dims = new
    return {k: v for k, v in dims.items() if v}


def roots_from_hilbert(B: NicholsAlgebra) -> dict:
    """Recover the positive roots (with truncations) from the graded
    dimensions alone, by greedy factorization of the Hilbert series.

    Processes multidegrees in increasing (total degree, lex) order; whenever
    the actual dimension exceeds the running product model, a new root is
    introduced at that degree with truncation ord chi(beta, beta).  Serves as
    an independent oracle for the Weyl-groupoid root list.
    """
    from .cyclotomic import multiplicative_order

    level = B._built_level
    graded = B.graded_dimensions()
    theta = B.theta
    model = {(0,) * theta: 1}
    roots = []
    defects = []
    degrees = sorted((b for b in graded if 0 < sum(b) <= level),
                     key=lambda b: (sum(b), b))
    all_degs = sorted({b for b in list(graded) + list(model)
                       if sum(b) <= level} |
                      set(degrees), key=lambda b: (sum(b), b))
    for beta in all_degs:
        if sum(beta) == 0:
            continue
        expected = model.get(beta, 0)
        actual = graded.get(beta, 0)
        diff = actual - expected
        if diff < 0:
            defects.append({"degree": beta, "dim": actual,
                            "model": expected})
            continue
        for _ in range(diff):
            n = multiplicative_order(B.chi.chi(beta, beta))
            roots.append((beta, n))
            step = sum(beta)
            cap = (n - 1) if n is not None else level // step
            new = {}
            for deg, d in model.items():
                for e in range(cap + 1):
                    nd = tuple(x + e * b for x, b in zip(deg, beta))
                    if sum(nd) > level:
                        break
                    new[nd] = new.get(nd, 0) + d
            model = new
    # degrees reachable by the model but absent from the basis
    for beta, d in model.items():
        if 0 < sum(beta) <= level and graded.get(beta, 0) != d:
            entry = {"degree": beta, "dim": graded.get(beta, 0), "model": d}
            if entry not in defects:
                defects.append(entry)
    return {"roots": sorted(roots, key=lambda r: (sum(r[0]), r[0])),
            "defects": defects}
