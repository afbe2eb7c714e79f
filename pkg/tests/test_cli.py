"""Command-line interface: reports, JSON output, and exit codes."""

from __future__ import annotations

import json
import os
import pathlib

import pytest

from nicholsrm.cli import main

JOBS = pathlib.Path(__file__).resolve().parent.parent / "jobs"
RANK2 = str(JOBS / "example_rank2_zeta10.json")
RANK1 = str(JOBS / "rank1_zeta3.json")
SUPER = str(JOBS / "super_zeta6.json")


def test_roots_golden(capsys, tmp_path):
    out = tmp_path / "roots.json"
    assert main(["roots", RANK2, "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["roots"] == [[1, 0], [3, 1], [2, 1], [5, 3], [3, 2],
                               [4, 3], [1, 1], [0, 1]]
    assert report["n_beta"] == [5, 2, 10, 2, 5, 2, 10, 2]
    text = capsys.readouterr().out
    assert "convex" in text.lower() or "root" in text.lower()


def test_cartan(capsys):
    assert main(["cartan", RANK2]) == 0
    assert "-3" in capsys.readouterr().out


def test_orbit_bound_exit_code():
    assert main(["orbit", RANK2, "--max-objects", "1"]) == 3


def test_pbw_and_hilbert(capsys):
    assert main(["pbw", RANK1]) == 0
    assert main(["hilbert", SUPER]) == 0


def test_pairing_check(capsys):
    assert main(["pairing-check", RANK1]) == 0


def test_rmatrix_factorized_and_expanded(capsys):
    assert main(["rmatrix", RANK1]) == 0
    assert main(["rmatrix", RANK1, "--expand"]) == 0
    assert main(["rmatrix", RANK1, "--module"]) == 0


def test_rmatrix_bound_exceeded():
    assert main(["rmatrix", RANK1, "--expand", "--bound", "5"]) == 3


@pytest.mark.parametrize("prop", ["hopf", "duality", "canonical", "coideal",
                                  "qybe"])
def test_verify_properties(prop):
    assert main(["verify", prop, RANK1]) == 0


def test_bad_json_is_input_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["roots", str(bad)]) == 2
    missing = tmp_path / "nope.json"
    assert main(["roots", str(missing)]) == 2
    nonsquare = tmp_path / "ns.json"
    nonsquare.write_text(json.dumps({"conductor": 3,
                                     "exponents": [[1, 2]]}))
    assert main(["roots", str(nonsquare)]) == 2


def test_max_degree_env(tmp_path, monkeypatch):
    monkeypatch.setenv("NICHOLS_MAX_DEGREE", "0")
    assert main(["roots", RANK1]) == 2
    monkeypatch.setenv("NICHOLS_MAX_DEGREE", "6")
    assert main(["pbw", RANK1]) == 0
