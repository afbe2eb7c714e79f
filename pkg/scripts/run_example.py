#!/usr/bin/env python3
"""Reproduce the worked rank-2 example at conductor 10: roots in convex
order, truncations, Lyndon words, hyperletters, and the Hilbert check.

Usage: python scripts/run_example.py
"""

from __future__ import annotations

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from nicholsrm.cyclotomic import CyclotomicField
from nicholsrm.freealg import hyperletter, lyndon_words, word_str
from nicholsrm.nichols import NicholsAlgebra, NicholsConfig
from nicholsrm.weylgpd import bichar_from_entries, cartan_matrix, positive_roots


def main() -> int:
    field = CyclotomicField(10)
    exps = [[2, 4], [0, 5]]
    chi = bichar_from_entries(
        [[field.generator_power(e) for e in row] for row in exps])
    print("Cartan matrix:", cartan_matrix(chi))
    rd = positive_roots(chi)
    print("reduced word:", " ".join(f"s{i + 1}" for i in rd.word))
    B = NicholsAlgebra(chi, config=NicholsConfig(degree_bound=12),
                       root_datum=rd)
    print(f"{'root':>8}  {'q_beta order':>12}  Lyndon word")
    for beta, n in zip(rd.roots, rd.n_beta):
        lw = next(w for w in lyndon_words(beta, 2)
                  if B.reduce_elem(hyperletter(w, chi)))
        print(f"{str(beta):>8}  {n:>12}  {word_str(lw)}")
    hc = B.hilbert_check()
    print("Hilbert factorization up to degree 12:",
          "ok" if hc["ok"] else hc["mismatches"])
    return 0 if hc["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
