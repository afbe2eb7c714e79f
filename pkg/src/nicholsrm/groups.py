"""Finite abelian groups, their character groups, and the generator
assignments realizing a braiding matrix over a group algebra."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .cyclotomic import Cyclotomic, CyclotomicField
from .errors import InvalidGroup
from .weylgpd import BicharMatrix


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Gamma = Z/m_1 x ... x Z/m_r; elements and characters are exponent
    tuples; evaluation lands in a cyclotomic field containing all zeta_{m_k}."""

    divisors: tuple
    conductor: int

    @classmethod
    def of(cls, divisors, conductor: int | None = None) -> "FiniteAbelianGroup":
        divisors = tuple(int(d) for d in divisors)
        if any(d < 1 for d in divisors):
            raise InvalidGroup("divisors must be positive")
        need = lcm(*divisors) if divisors else 1
        if conductor is None:
            conductor = need
        elif conductor % need != 0:
            raise InvalidGroup(
                f"conductor {conductor} does not contain zeta_{need}")
        return cls(divisors=divisors, conductor=conductor)

    @property
    def field(self) -> CyclotomicField:
        return CyclotomicField(self.conductor)

    @property
    def order(self) -> int:
        n = 1
        for d in self.divisors:
            n *= d
        return n

    def normalize(self, exps) -> tuple:
        return tuple(e % d for e, d in zip(exps, self.divisors))

    def identity(self) -> tuple:
        return (0,) * len(self.divisors)

    def add(self, a, b) -> tuple:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.divisors))

    def negate(self, a) -> tuple:
        return tuple((-x) % d for x, d in zip(a, self.divisors))

    def elements(self):
        out = [()]
        for d in self.divisors:
            out = [t + (k,) for t in out for k in range(d)]
        return out

    def evaluate(self, char, elem) -> Cyclotomic:
        """chi_char(elem) = prod zeta_{m_k}^{char_k * elem_k}."""
        e = 0
        for c, g, d in zip(char, elem, self.divisors):
            e += (c * g % d) * (self.conductor // d)
        return self.field.generator_power(e)


@dataclass(frozen=True)
class GroupAssignment:
    """g_1..g_theta in Gamma and gamma_1..gamma_theta in the dual, with
    gamma_j(g_i) = q_ij."""

    group: FiniteAbelianGroup
    g: tuple          # theta group elements (exponent tuples)
    gamma: tuple      # theta characters (exponent tuples)

    def evaluate(self, char, elem) -> Cyclotomic:
        return self.group.evaluate(char, elem)

    def g_combo(self, alpha) -> tuple:
        """The group element sum_i alpha_i g_i."""
        out = self.group.identity()
        for a, gi in zip(alpha, self.g):
            if a:
                step = self.group.normalize(tuple(a * x for x in gi))
                out = self.group.add(out, step)
        return out

    def gamma_combo(self, alpha) -> tuple:
        out = self.group.identity()
        for a, ci in zip(alpha, self.gamma):
            if a:
                step = self.group.normalize(tuple(a * x for x in ci))
                out = self.group.add(out, step)
        return out


def validate_group(group: FiniteAbelianGroup, assignment: GroupAssignment,
                   chi: BicharMatrix) -> dict:
    """Check gamma_j(g_i) = q_ij for all i, j; on failure suggest the product
    of cyclic groups of order equal to the braiding conductor."""
    theta = chi.rank
    mismatches = []
    conductor = chi.field.conductor
    for i in range(theta):
        for j in range(theta):
            got = group.evaluate(assignment.gamma[j], assignment.g[i])
            want = chi.q(i, j)
            if got.to_conductor(lcm(conductor, group.conductor)) != \
                    want.to_conductor(lcm(conductor, group.conductor)):
                mismatches.append({"i": i, "j": j})
    report = {"ok": not mismatches, "mismatches": mismatches}
    if mismatches:
        report["suggestion"] = minimal_assignment(chi)
    return report


def minimal_assignment(chi: BicharMatrix) -> dict:
    """A canonical valid pair (Gamma, assignment): Gamma = (Z/N)^theta with
    g_i the standard generators and gamma_j read off the exponent matrix."""
    theta = chi.rank
    n = chi.field.conductor
    exps = []
    for j in range(theta):
        col = []
        for i in range(theta):
            q = chi.q(i, j)
            e = next(k for k in range(n)
                     if chi.field.generator_power(k) == q)
            col.append(e)
        exps.append(tuple(col))
    group = FiniteAbelianGroup.of([n] * theta, conductor=n)
    g = tuple(tuple(1 if k == i else 0 for k in range(theta))
              for i in range(theta))
    assignment = GroupAssignment(group=group, g=g, gamma=tuple(exps))
    return {"divisors": [n] * theta, "g": list(g), "gamma": list(exps),
            "group": group, "assignment": assignment}
