"""Shared fixtures: the standard braiding cases, built once per session."""

from __future__ import annotations

import pytest

from nicholsrm.cyclotomic import CyclotomicField
from nicholsrm.nichols import NicholsAlgebra, NicholsConfig
from nicholsrm.weylgpd import bichar_from_entries, positive_roots

# name -> (conductor, exponent matrix, degree bound)
CASES = {
    "rank1_minus": (2, [[1]], 8),
    "rank1_zeta3": (3, [[1]], 8),
    "a2_zeta3": (3, [[1, 2], [0, 1]], 9),
    "a2_zeta3_sym": (3, [[1, 1], [1, 1]], 9),
    "super_zeta6": (6, [[3, 2], [0, 3]], 10),
    "example_zeta10": (10, [[2, 4], [0, 5]], 12),
}

FULL_SMALL = ("rank1_zeta3", "a2_zeta3", "super_zeta6")


def make_bichar(name):
    conductor, exps, _ = CASES[name]
    field = CyclotomicField(conductor)
    rows = [[field.generator_power(e) for e in row] for row in exps]
    return bichar_from_entries(rows)


_algebras: dict = {}


def make_algebra(name):
    if name not in _algebras:
        chi = make_bichar(name)
        rd = positive_roots(chi)
        bound = CASES[name][2]
        _algebras[name] = NicholsAlgebra(
            chi, config=NicholsConfig(degree_bound=bound), root_datum=rd)
    return _algebras[name]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance-criterion verdicts after the run, outside capture."""
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def rank1_zeta3():
    return make_algebra("rank1_zeta3")


@pytest.fixture(scope="session")
def rank1_minus():
    return make_algebra("rank1_minus")


@pytest.fixture(scope="session")
def a2_zeta3():
    return make_algebra("a2_zeta3")


@pytest.fixture(scope="session")
def super_zeta6():
    return make_algebra("super_zeta6")


@pytest.fixture(scope="session")
def example_zeta10():
    return make_algebra("example_zeta10")
