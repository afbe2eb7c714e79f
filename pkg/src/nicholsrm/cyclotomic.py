"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are residues modulo the N-th cyclotomic polynomial Phi_N, stored as
tuples of exact rationals of length phi(N).  All scalars taking part in one
computation must live in a single field; use :meth:`Cyclotomic.to_conductor`
to embed into a larger conductor (the new conductor must be a multiple of the
old one).
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from gmpy2 import mpq

from .errors import ConductorMismatch, DivisionByZero

_Q0 = mpq(0)
_Q1 = mpq(1)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Integer coefficient tuple of Phi_n, constant term first."""
    if n == 1:
        return (-1, 1)
    # (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact polynomial division
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv_exact(num, cyclotomic_poly(d))
    return tuple(num)


def _polydiv_exact(num, den):
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            for j, dj in enumerate(den):
                num[k - dd + j] -= c * dj
    assert all(c == 0 for c in num[:dd])
    return out


def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


class CyclotomicField:
    """Shared per-conductor data: reduction rows for x^k, k >= phi(N)."""

    _cache: dict[int, "CyclotomicField"] = {}

    def __new__(cls, conductor: int):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        f = cls._cache.get(conductor)
        if f is None:
            f = super().__new__(cls)
            f._init(conductor)
            cls._cache[conductor] = f
        return f

    def _init(self, conductor: int) -> None:
        self.conductor = conductor
        poly = cyclotomic_poly(conductor)
        self.degree = len(poly) - 1
        d = self.degree
        # x^d = -sum_i poly[i] x^i (Phi_N is monic), then climb to 2d-2.
        rows = []
        row = [mpq(-c) for c in poly[:d]]
        rows.append(tuple(row))
        for _ in range(d - 2):
            top = row[d - 1]
            row = [_Q0] + row[: d - 1]
            if top:
                row = [row[i] + top * rows[0][i] for i in range(d)]
            rows.append(tuple(row))
        self.reduction_rows = rows  # rows[k] represents x^(d+k)
        self.zero = Cyclotomic(self, (_Q0,) * d)
        one = [_Q0] * d
        one[0] = _Q1
        self.one = Cyclotomic(self, tuple(one))

    def element(self, coeffs) -> "Cyclotomic":
        """Build an element from <= phi(N) rational coefficients."""
        c = [mpq(x) for x in coeffs]
        if len(c) > self.degree:
            raise ValueError("too many coefficients")
        c += [_Q0] * (self.degree - len(c))
        return Cyclotomic(self, tuple(c))

    def from_rational(self, x) -> "Cyclotomic":
        return self.element([x])

    def generator_power(self, e: int) -> "Cyclotomic":
        """zeta_N^e, reduced mod Phi_N."""
        e %= self.conductor
        d = self.degree
        if e < d:
            coeffs = [_Q0] * d
            coeffs[e] = _Q1
            return Cyclotomic(self, tuple(coeffs))
        g = self.element([0, 1]) if d > 1 else self.element([1])
        if d == 1:
            # conductor 1 or 2: zeta is 1 or -1
            base = self.element([1]) if self.conductor == 1 else self.element([-1])
            return base ** e
        return g ** e

    def __repr__(self):
        return f"CyclotomicField({self.conductor})"


class Cyclotomic:
    """Immutable element of Q(zeta_N); equality is coefficient-wise."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # -- helpers -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is not self.field:
                raise ConductorMismatch(
                    f"conductor {other.field.conductor} vs {self.field.conductor}"
                )
            return other
        if isinstance(other, (int, type(_Q1))):
            return self.field.from_rational(other)
        return NotImplemented

    @property
    def conductor(self) -> int:
        return self.field.conductor

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self == self.field.one

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyclotomic(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        d = self.field.degree
        if d == 1:
            return Cyclotomic(self.field, (a[0] * b[0],))
        prod = [_Q0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        rows = self.field.reduction_rows
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                row = rows[k - d]
                out = [out[i] + c * row[i] for i in range(d)]
        return Cyclotomic(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Field inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise DivisionByZero("cannot invert 0")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        phi = [mpq(c) for c in cyclotomic_poly(self.conductor)]
        a = list(self.coeffs)
        # extended gcd of a and Phi_N; Phi_N irreducible => gcd is a unit
        r0, r1 = phi, _trim(a)
        s0, s1 = [_Q0], [_Q1]
        while len(r1) > 1:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        assert r1 and r1[0] != 0
        inv_lead = 1 / r1[0]
        coeffs = [c * inv_lead for c in s1]
        return self.field.element(coeffs[: self.field.degree] + [])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is not self.field:
                raise ConductorMismatch(
                    f"conductor {other.field.conductor} vs {self.field.conductor}"
                )
            return self.coeffs == other.coeffs
        if isinstance(other, (int, type(_Q1))):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = self._hash = hash((self.field.conductor, self.coeffs))
        return h

    # -- conversions -------------------------------------------------------

    def to_conductor(self, conductor: int) -> "Cyclotomic":
        """Embed into Q(zeta_M) for a multiple M of the conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise ConductorMismatch(
                f"{conductor} is not a multiple of {self.conductor}"
            )
        target = CyclotomicField(conductor)
        step = conductor // self.conductor
        zeta = target.generator_power(step)
        out = target.zero
        power = target.one
        for c in self.coeffs:
            if c:
                out = out + power * target.from_rational(c)
            power = power * zeta
        return out

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[int(c.numerator), int(c.denominator)] for c in self.coeffs],
        }

    def __repr__(self):
        d = self.field.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                z = f"z{self.conductor}" + (f"^{i}" if i > 1 else "")
                parts.append(z if c == 1 else f"({c})*{z}")
        return " + ".join(parts) if parts else "0"


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _polymul(a, b):
    out = [_Q0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _polysub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else _Q0) - (b[i] if i < len(b) else _Q0) for i in range(n)]
    return _trim(out)


def _polydivmod(a, b):
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [_Q0], _trim(a)
    q = [_Q0] * (len(a) - db)
    inv = 1 / b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv
        if c:
            q[k - db] = c
            for j, bj in enumerate(b):
                a[k - db + j] -= c * bj
    return _trim(q), _trim(a[:db] if db else [_Q0])


# -- public constructors and queries --------------------------------------


def root_of_unity(n: int, e: int = 1) -> Cyclotomic:
    """zeta_n^e as an element of Q(zeta_n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return CyclotomicField(n).generator_power(e)


def rational(x, conductor: int = 1) -> Cyclotomic:
    return CyclotomicField(conductor).from_rational(x)


def multiplicative_order(a: Cyclotomic):
    """Smallest n with a^n = 1, or None when a is not a root of unity.

    A root of unity in Q(zeta_N) has order dividing 2N, so 2N bounds the
    search.
    """
    if a.is_zero():
        raise DivisionByZero("0 has no multiplicative order")
    one = a.field.one
    power = a
    bound = 2 * a.conductor
    for n in range(1, bound + 1):
        if power == one:
            return n
        power = power * a
    return None


def common_field(*elements: Cyclotomic) -> CyclotomicField:
    conductors = {e.conductor for e in elements}
    if len(conductors) != 1:
        raise ConductorMismatch(f"mixed conductors {sorted(conductors)}")
    return elements[0].field
