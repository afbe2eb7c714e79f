"""Weyl groupoid of a diagonal braiding: Cartan matrices, reflections,
orbits, positive roots in convex order."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .cyclotomic import Cyclotomic, CyclotomicField, multiplicative_order
from .errors import NotFinite, NotIFinite, OrbitBoundExceeded
from .qcombin import qint

DEFAULT_CARTAN_BOUND = 8
DEFAULT_MAX_OBJECTS = 10000
DEFAULT_MAX_LENGTH = 1000


@dataclass(frozen=True)
class BicharMatrix:
    """The braiding matrix q_ij; evaluates the bicharacter on Z^theta."""

    entries: tuple  # theta x theta tuple of tuples of Cyclotomic

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def field(self) -> CyclotomicField:
        return self.entries[0][0].field

    def q(self, i: int, j: int) -> Cyclotomic:
        """q_ij with 0-based indices."""
        return self.entries[i][j]

    def chi(self, alpha, beta) -> Cyclotomic:
        """chi(alpha, beta) = prod q_ij^(a_i b_j)."""
        out = self.field.one
        for i, a in enumerate(alpha):
            if a:
                for j, b in enumerate(beta):
                    if b:
                        out = out * self.entries[i][j] ** (a * b)
        return out

    def chi_letters(self, i: int, j: int) -> Cyclotomic:
        return self.entries[i][j]


def bichar_from_entries(rows) -> BicharMatrix:
    return BicharMatrix(entries=tuple(tuple(r) for r in rows))


def cartan_entry(chi: BicharMatrix, i: int, j: int,
                 bound: int = DEFAULT_CARTAN_BOUND) -> int:
    """a_ij = -min{m >= 0 : (m+1)_{q_ii} = 0 or q_ii^m q_ij q_ji = 1}.

    The exponent on q_ii is m, matching the Cartan matrices of the known
    finite root systems.
    """
    if i == j:
        return 2
    qii = chi.q(i, i)
    qq = chi.q(i, j) * chi.q(j, i)
    one = chi.field.one
    power = one
    for m in range(bound + 1):
        if qint(m + 1, qii).is_zero() or power * qq == one:
            return -m
        power = power * qii
    raise NotIFinite(f"no m <= {bound} for entry ({i}, {j})")


def cartan_matrix(chi: BicharMatrix, bound: int = DEFAULT_CARTAN_BOUND):
    theta = chi.rank
    return tuple(
        tuple(cartan_entry(chi, i, j, bound) for j in range(theta))
        for i in range(theta)
    )


@dataclass(frozen=True)
class GroupoidObject:
    bichar: BicharMatrix
    cartan: tuple


def groupoid_object(chi: BicharMatrix,
                    bound: int = DEFAULT_CARTAN_BOUND) -> GroupoidObject:
    return GroupoidObject(bichar=chi, cartan=cartan_matrix(chi, bound))


def reflection_matrix(cartan, i: int):
    """Matrix of s_i, columns s_i(alpha_j) = alpha_j - a_ij alpha_i."""
    theta = len(cartan)
    cols = []
    for j in range(theta):
        col = [0] * theta
        col[j] += 1
        col[i] -= cartan[i][j]
        cols.append(col)
    # row-major matrix with columns as above
    return tuple(tuple(cols[j][r] for j in range(theta)) for r in range(theta))


def _mat_vec(m, v):
    return tuple(sum(m[r][c] * v[c] for c in range(len(v))) for r in range(len(m)))


def _mat_mat(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
        for r in range(n)
    )


def reflect(chi: BicharMatrix, i: int,
            bound: int = DEFAULT_CARTAN_BOUND) -> BicharMatrix:
    """r_i(chi): entries chi(s_i(alpha_k), s_i(alpha_l))."""
    cartan = cartan_matrix(chi, bound)
    s = reflection_matrix(cartan, i)
    theta = chi.rank
    basis = [tuple(1 if r == j else 0 for r in range(theta)) for j in range(theta)]
    images = [_mat_vec(s, b) for b in basis]
    rows = [
        [chi.chi(images[k], images[l]) for l in range(theta)]
        for k in range(theta)
    ]
    return bichar_from_entries(rows)


def orbit(chi: BicharMatrix, max_objects: int = DEFAULT_MAX_OBJECTS,
          bound: int = DEFAULT_CARTAN_BOUND):
    """Closure of chi under all reflections; the Cartan scheme data."""
    seen = {}
    frontier = [chi]
    seen[chi.entries] = groupoid_object(chi, bound)
    while frontier:
        current = frontier.pop()
        for i in range(chi.rank):
            new = reflect(current, i, bound)
            if new.entries not in seen:
                if len(seen) >= max_objects:
                    raise OrbitBoundExceeded(f"orbit exceeds {max_objects} objects")
                seen[new.entries] = groupoid_object(new, bound)
                frontier.append(new)
    return list(seen.values())


@dataclass(frozen=True)
class RootDatum:
    """Positive roots of chi in the convex order of a longest reduced word."""

    bichar: BicharMatrix
    word: tuple                     # letters, 0-based
    roots: tuple                    # tuples in N0^theta, convex order
    q_beta: tuple                   # chi(beta, beta) per root
    n_beta: tuple                   # multiplicative order of q_beta (None = infinite)

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    def degree(self, k: int) -> int:
        return sum(self.roots[k])


def positive_roots(chi: BicharMatrix,
                   max_length: int = DEFAULT_MAX_LENGTH,
                   bound: int = DEFAULT_CARTAN_BOUND,
                   first_letter: int | None = None) -> RootDatum:
    """Greedy reduced word for the longest element, smallest-index tie-break.

    Appending letter i is admissible when the new root
    beta = s_{i_1}...s_{i_k}(alpha_i) is a positive vector not yet produced;
    the run stops when no letter extends the word.
    """
    theta = chi.rank
    identity = tuple(tuple(1 if r == c else 0 for c in range(theta)) for r in range(theta))
    w = identity
    current = chi
    word = []
    roots = []
    produced = set()
    while True:
        if len(word) > max_length:
            raise NotFinite(f"longest word exceeds {max_length}")
        cartan = cartan_matrix(current, bound)
        order = list(range(theta))
        if not word and first_letter is not None:
            order = [first_letter] + [i for i in order if i != first_letter]
        step = None
        for i in order:
            beta = tuple(w[r][i] for r in range(theta))
            if all(b >= 0 for b in beta) and beta not in produced:
                step = (i, beta)
                break
        if step is None:
            break
        i, beta = step
        word.append(i)
        roots.append(beta)
        produced.add(beta)
        w = _mat_mat(w, reflection_matrix(cartan, i))
        current = reflect(current, i, bound)
    qs = tuple(chi.chi(b, b) for b in roots)
    ns = tuple(multiplicative_order(q) for q in qs)
    return RootDatum(bichar=chi, word=tuple(word), roots=tuple(roots),
                     q_beta=qs, n_beta=ns)


def is_convex(roots) -> bool:
    """Convexity of an ordered listing of Delta_+, including the strong form
    on multisubsets of size <= 4."""
    pos = {r: k for k, r in enumerate(roots)}
    root_set = set(roots)
    for size in range(2, 5):
        for combo in combinations_with_replacement(range(len(roots)), size):
            total = tuple(sum(roots[k][c] for k in combo) for c in range(len(roots[0])))
            if total in root_set:
                if not (combo[0] < pos[total] and pos[total] < combo[-1]):
                    return False
    return True
