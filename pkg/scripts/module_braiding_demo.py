#!/usr/bin/env python3
"""Module-level braiding demo on the rank-2 super case: build two Verma
modules, form R_xy = C_xy f_xy^{-1}, and verify the intertwiner and
Yang-Baxter identities on the triple tensor product.

Usage: python scripts/module_braiding_demo.py
"""

from __future__ import annotations

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from nicholsrm.cyclotomic import CyclotomicField
from nicholsrm.double import DoubleContext
from nicholsrm import hwmod as H
from nicholsrm.nichols import NicholsAlgebra, NicholsConfig
from nicholsrm.weylgpd import bichar_from_entries, positive_roots


def main() -> int:
    field = CyclotomicField(6)
    exps = [[3, 2], [0, 3]]
    chi = bichar_from_entries(
        [[field.generator_power(e) for e in row] for row in exps])
    rd = positive_roots(chi)
    B = NicholsAlgebra(chi, config=NicholsConfig(degree_bound=10),
                       root_datum=rd)
    ctx = DoubleContext(B)
    q = [chi.entries[i][i] for i in range(2)]
    mods = []
    for s in (0, 1, 2):
        w = H.WeightSpec(k_values=tuple(x ** (s + 1) for x in q),
                         l_values=tuple(x ** s for x in q))
        mods.append(H.verma(ctx, w))
    v1, v2, v3 = mods
    print("module dimension:", v1.dimension)
    t0 = time.time()
    results = {
        "representation": H.representation_check(v1)["ok"],
        "pairing identities": H.premapp_check(v1, v2)["ok"],
        "intertwiner": H.intertwiner_check(v1, v2)["ok"],
        "commutation lemma": H.commutation_lemma_check(v1, v2)["ok"],
        "hexagons": H.hexagon_check(v1, v2, v3)["ok"],
    }
    qybe = H.qybe_check(v1, v2, v3)
    results[f"QYBE on {qybe['dimension']}-dim triple"] = qybe["ok"]
    for label, ok in results.items():
        print(f"  {label}: {'ok' if ok else 'FAILED'}")
    print(f"  elapsed: {time.time() - t0:.2f}s")
    return 0 if all(results.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
