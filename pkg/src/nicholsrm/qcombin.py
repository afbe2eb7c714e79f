"""q-integers, q-factorials, q-binomials and truncated q-exponential data."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import Cyclotomic, multiplicative_order
from .errors import NonInvertibleFactorial


def qint(n: int, q: Cyclotomic) -> Cyclotomic:
    """(n)_q = 1 + q + ... + q^(n-1)."""
    out = q.field.zero
    power = q.field.one
    for _ in range(n):
        out = out + power
        power = power * q
    return out


def qfact(n: int, q: Cyclotomic) -> Cyclotomic:
    out = q.field.one
    for k in range(2, n + 1):
        out = out * qint(k, q)
    return out


def qbinom(n: int, k: int, q: Cyclotomic) -> Cyclotomic:
    """Gaussian binomial via the q-Pascal recursion, total at roots of unity."""
    if k < 0 or k > n:
        return q.field.zero
    row = [q.field.one]
    for m in range(1, n + 1):
        new = [q.field.one]
        for j in range(1, m):
            new.append(row[j - 1] + (q ** j) * row[j])
        new.append(q.field.one)
        row = new
    return row[k]


def qbinom_quotient(n: int, k: int, q: Cyclotomic) -> Cyclotomic:
    """(n)_q! / ((k)_q! (n-k)_q!); only defined when the denominator is nonzero."""
    return qfact(n, q) / (qfact(k, q) * qfact(n - k, q))


@dataclass(frozen=True)
class QExpCoeffs:
    """Coefficients 1/(i)_q! of the q-exponential, truncated at T terms."""

    q: Cyclotomic
    truncation: int
    coeffs: tuple


def qexp_coeffs(q: Cyclotomic, truncation: int) -> QExpCoeffs:
    if truncation < 1:
        raise ValueError("truncation must be positive")
    order = multiplicative_order(q) if not q.is_zero() else None
    if order is not None and not q.is_one() and truncation > order:
        raise NonInvertibleFactorial(
            f"({order})_q = 0 for q of order {order}; truncation {truncation} too large"
        )
    coeffs = []
    fact = q.field.one
    for i in range(truncation):
        if i >= 2:
            fact = fact * qint(i, q)
        if fact.is_zero():
            raise NonInvertibleFactorial(f"({i})_q! = 0")
        coeffs.append(fact.inverse())
    return QExpCoeffs(q=q, truncation=truncation, coeffs=tuple(coeffs))
