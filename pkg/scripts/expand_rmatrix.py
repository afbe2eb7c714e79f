#!/usr/bin/env python3
"""Expand the factorized universal R-matrix of a small rank-1 double and
run the full quasi-triangularity suite.

Usage: python scripts/expand_rmatrix.py [conductor] (default 3)
"""

from __future__ import annotations

import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from nicholsrm.cyclotomic import CyclotomicField
from nicholsrm.nichols import NicholsAlgebra
from nicholsrm.rmatrix import expand_and_verify, minimal_assignment, universal_r
from nicholsrm.weylgpd import bichar_from_entries, positive_roots


def main() -> int:
    conductor = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    field = CyclotomicField(conductor)
    chi = bichar_from_entries([[field.generator_power(1)]])
    rd = positive_roots(chi)
    B = NicholsAlgebra(chi, root_datum=rd)
    ma = minimal_assignment(chi)
    R = universal_r(B, ma["group"], ma["assignment"])
    t0 = time.time()
    report = expand_and_verify(R)
    print(f"conductor {conductor}: dim u = "
          f"{B.total_dimension() ** 2 * ma['group'].order ** 2}")
    for key in ("terms", "intertwiner", "delta_ox_id", "id_ox_delta",
                "invertible", "counit", "ok"):
        print(f"  {key}: {report[key]}")
    print(f"  elapsed: {time.time() - t0:.2f}s")
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
