"""The graded free braided algebra on letters 0..theta-1: words, braided
coproduct, braided commutators, Lyndon words and hyperletters, the mirror
antiautomorphism.

Words are tuples of 0-based letters.  Elements are finitely supported maps
word -> Cyclotomic with no stored zeros.
"""

from __future__ import annotations

from itertools import combinations, product

from .cyclotomic import Cyclotomic, CyclotomicField
from .errors import NonHomogeneous, NotLyndon
from .weylgpd import BicharMatrix

Word = tuple


def multidegree(word: Word, theta: int) -> tuple:
    deg = [0] * theta
    for letter in word:
        deg[letter] += 1
    return tuple(deg)


def word_str(word: Word) -> str:
    """Rendering such as "x1^3 x2" with 1-based letters."""
    if not word:
        return "1"
    parts = []
    k = 0
    while k < len(word):
        j = k
        while j < len(word) and word[j] == word[k]:
            j += 1
        run = j - k
        parts.append(f"x{word[k] + 1}" + (f"^{run}" if run > 1 else ""))
        k = j
    return " ".join(parts)


class FreeElem:
    """Element of the free algebra in the word basis."""

    __slots__ = ("field", "terms")

    def __init__(self, field: CyclotomicField, terms: dict | None = None):
        self.field = field
        self.terms = terms or {}

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def unit(cls, field):
        return cls(field, {(): field.one})

    @classmethod
    def letter(cls, field, i: int):
        return cls(field, {(i,): field.one})

    @classmethod
    def from_word(cls, field, word: Word, coeff=None):
        return cls(field, {tuple(word): coeff if coeff is not None else field.one})

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, word: Word, coeff: Cyclotomic) -> None:
        new = self.terms.get(word, self.field.zero) + coeff
        if new.is_zero():
            self.terms.pop(word, None)
        else:
            self.terms[word] = new

    def __add__(self, other: "FreeElem") -> "FreeElem":
        out = FreeElem(self.field, dict(self.terms))
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def __sub__(self, other: "FreeElem") -> "FreeElem":
        out = FreeElem(self.field, dict(self.terms))
        for w, c in other.terms.items():
            out.add_term(w, -c)
        return out

    def __neg__(self) -> "FreeElem":
        return FreeElem(self.field, {w: -c for w, c in self.terms.items()})

    def scale(self, s: Cyclotomic) -> "FreeElem":
        if s.is_zero():
            return FreeElem.zero(self.field)
        return FreeElem(self.field, {w: s * c for w, c in self.terms.items()})

    def __mul__(self, other: "FreeElem") -> "FreeElem":
        out = FreeElem(self.field)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.add_term(w1 + w2, c1 * c2)
        return out

    def __eq__(self, other) -> bool:
        return self.terms == other.terms

    def homogeneous_degree(self, theta: int):
        """The common multidegree, or raise NonHomogeneous."""
        degs = {multidegree(w, theta) for w in self.terms}
        if len(degs) != 1:
            raise NonHomogeneous(f"degrees {sorted(degs)}")
        return degs.pop()

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{word_str(w)}" for w, c in sorted(self.terms.items()))


# -- braided structure -----------------------------------------------------


def unshuffle_word(word: Word, chi: BicharMatrix, side: str = "E"):
    """All splittings of the braided coproduct of a word.

    Returns a list of (left_word, right_word, coeff).  Side "E" uses the
    braided square rule (u ox v)(u' ox v') = chi(|v|, |u'|) uu' ox vv'; side
    "F" uses the mirror twist chi(|v'|, |u|).
    """
    n = len(word)
    out = []
    for k in range(n + 1):
        for left_pos in combinations(range(n), k):
            left_set = set(left_pos)
            coeff = chi.field.one
            if side == "E":
                # inversions: p < k', p right, k' left
                for kp in left_pos:
                    for p in range(kp):
                        if p not in left_set:
                            coeff = coeff * chi.chi_letters(word[p], word[kp])
            else:
                # same inversions, mirrored pairing
                for kp in left_pos:
                    for p in range(kp):
                        if p not in left_set:
                            coeff = coeff * chi.chi_letters(word[kp], word[p])
            left = tuple(word[p] for p in left_pos)
            right = tuple(word[p] for p in range(n) if p not in left_set)
            out.append((left, right, coeff))
    return out


def slot_unshuffle(word: Word, chi: BicharMatrix, slots: int, side: str = "E"):
    """All assignments of the positions of a word to `slots` ordered tensor
    slots, with the braided twist coefficient (iterated coproduct components).

    The coefficients are those of the bosonized coproduct iterates after
    normalizing group-likes: side "E" (expanding E_i ox 1 + K_i ox E_i and
    moving K's right within each slot word) gives chi(w_p, w_k) for pairs
    p < k with slot(p) > slot(k); side "F" (expanding F_i ox L_i + 1 ox F_i
    and moving L's right) gives chi(w_k, w_p) for pairs p < k with
    slot(p) < slot(k).
    """
    n = len(word)
    out = []
    for assign in product(range(slots), repeat=n):
        coeff = chi.field.one
        for k in range(n):
            for p in range(k):
                if side == "E":
                    if assign[p] > assign[k]:
                        coeff = coeff * chi.chi_letters(word[p], word[k])
                elif assign[p] < assign[k]:
                    coeff = coeff * chi.chi_letters(word[k], word[p])
        parts = tuple(
            tuple(word[p] for p in range(n) if assign[p] == s)
            for s in range(slots)
        )
        out.append((parts, coeff))
    return out


def braided_coproduct(elem: FreeElem, chi: BicharMatrix, side: str = "E") -> dict:
    """Map (left_word, right_word) -> coefficient."""
    out = {}
    zero = elem.field.zero
    for w, c in elem.terms.items():
        for left, right, coeff in unshuffle_word(w, chi, side):
            key = (left, right)
            new = out.get(key, zero) + c * coeff
            if new.is_zero():
                out.pop(key, None)
            else:
                out[key] = new
    return out


def braided_coproduct_component(elem: FreeElem, chi: BicharMatrix,
                                right_degree, theta: int, side: str = "E"):
    """The component of the braided coproduct with prescribed right degree,
    as a map (left_word, right_word) -> coefficient."""
    full = braided_coproduct(elem, chi, side)
    return {
        key: c for key, c in full.items()
        if multidegree(key[1], theta) == tuple(right_degree)
    }


def braided_commutator(a: FreeElem, b: FreeElem, chi: BicharMatrix) -> FreeElem:
    """[a, b]_c = ab - chi(deg a, deg b) ba for homogeneous a, b."""
    theta = chi.rank
    da = a.homogeneous_degree(theta)
    db = b.homogeneous_degree(theta)
    return a * b - (b * a).scale(chi.chi(da, db))


def omega_mirror(elem: FreeElem) -> FreeElem:
    """Word reversal with identity coefficients (E-letters <-> F-letters)."""
    return FreeElem(elem.field, {tuple(reversed(w)): c for w, c in elem.terms.items()})


# -- Lyndon machinery ------------------------------------------------------


def is_lyndon(word: Word) -> bool:
    """Strictly smaller than every proper suffix (letters ordered 0 < 1 < ...)."""
    if not word:
        return False
    return all(word < word[k:] for k in range(1, len(word)))


def lyndon_words(multideg, theta: int):
    """All Lyndon words of the given multidegree, in decreasing lex order."""
    letters = []
    for i, m in enumerate(multideg):
        letters.extend([i] * m)
    seen = set()
    out = []

    def backtrack(prefix, remaining):
        if not remaining:
            w = tuple(prefix)
            if w not in seen and is_lyndon(w):
                seen.add(w)
                out.append(w)
            return
        tried = set()
        for k, letter in enumerate(remaining):
            if letter in tried:
                continue
            tried.add(letter)
            backtrack(prefix + [letter], remaining[:k] + remaining[k + 1:])

    backtrack([], letters)
    out.sort(reverse=True)
    return out


def shirshov_split(word: Word):
    """Standard factorization (u, v): v the longest proper Lyndon suffix."""
    if not is_lyndon(word) or len(word) < 2:
        raise NotLyndon(f"{word} is not a Lyndon word of length >= 2")
    for k in range(1, len(word)):
        if is_lyndon(word[k:]):
            return word[:k], word[k:]
    raise NotLyndon(f"{word} has no Lyndon proper suffix")  # pragma: no cover


def hyperletter(word: Word, chi: BicharMatrix) -> FreeElem:
    """Iterated braided commutator attached to a Lyndon word."""
    if not is_lyndon(word):
        raise NotLyndon(f"{word} is not Lyndon")
    field = chi.field
    if len(word) == 1:
        return FreeElem.letter(field, word[0])
    u, v = shirshov_split(word)
    return braided_commutator(hyperletter(u, chi), hyperletter(v, chi), chi)
