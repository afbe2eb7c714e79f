"""Command-line front end.

Input is a single JSON job file: the braiding as a conductor N with a
theta x theta exponent matrix (q_ij = zeta_N^{e_ij}), optionally a finite
group with generator assignments, module weights, and bounds.  Every command
prints a deterministic human-readable report and can also write JSON.

Exit codes: 0 = pass, 1 = verification failure, 2 = input error,
3 = bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field as dc_field

from .cyclotomic import CyclotomicField
from .errors import (DegreeBoundExceeded, DimensionBound, InfiniteOrder,
                     InvalidGroup, NicholsError, OrbitBoundExceeded,
                     SizeBoundExceeded)
from .groups import FiniteAbelianGroup, GroupAssignment
from .nichols import NicholsAlgebra, NicholsConfig, roots_from_hilbert
from .weylgpd import bichar_from_entries, cartan_matrix, orbit, positive_roots

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BOUND = 3

DEFAULT_MAX_DEGREE = 12


@dataclass
class JobSpec:
    conductor: int
    exponents: list
    group: dict | None = None
    weights: list | None = None
    max_degree: int = DEFAULT_MAX_DEGREE
    options: dict = dc_field(default_factory=dict)

    @classmethod
    def load(cls, path: str) -> "JobSpec":
        with open(path) as fh:
            data = json.load(fh)
        if "conductor" not in data or "exponents" not in data:
            raise ValueError("job file needs 'conductor' and 'exponents'")
        exps = data["exponents"]
        theta = len(exps)
        if any(len(row) != theta for row in exps):
            raise ValueError("exponent matrix must be square")
        env = os.environ.get("NICHOLS_MAX_DEGREE")
        max_degree = int(env) if env else int(data.get("max_degree",
                                                       DEFAULT_MAX_DEGREE))
        if max_degree <= 0:
            raise ValueError("max_degree must be positive")
        return cls(conductor=int(data["conductor"]), exponents=exps,
                   group=data.get("group"), weights=data.get("weights"),
                   max_degree=max_degree, options=data)

    def bichar(self):
        field = CyclotomicField(self.conductor)
        rows = [[field.generator_power(int(e)) for e in row]
                for row in self.exponents]
        return bichar_from_entries(rows)

    def build_algebra(self):
        chi = self.bichar()
        rd = positive_roots(chi)
        B = NicholsAlgebra(chi, config=NicholsConfig(
            degree_bound=self.max_degree), root_datum=rd)
        return B

    def group_assignment(self, chi):
        if self.group is None:
            from .rmatrix import minimal_assignment
            ma = minimal_assignment(chi)
            return ma["group"], ma["assignment"]
        g = FiniteAbelianGroup.of(self.group["divisors"],
                                  conductor=self.group.get("conductor"))
        asg = GroupAssignment(group=g,
                              g=tuple(tuple(x) for x in self.group["g"]),
                              gamma=tuple(tuple(x)
                                          for x in self.group["gamma"]))
        return g, asg

    def module_weights(self, chi, count: int) -> list:
        """Weight specs; defaults Lambda(K_i) = q_ii, Lambda(L_i) = 1,
        varied per module by powers of q_ii."""
        from .hwmod import WeightSpec
        field = chi.field
        out = []
        if self.weights:
            for w in self.weights[:count]:
                kv = tuple(field.generator_power(int(e)) for e in w["k"])
                lv = tuple(field.generator_power(int(e)) for e in w["l"])
                out.append(WeightSpec(kv, lv))
        while len(out) < count:
            shift = len(out)
            kv = tuple(chi.q(i, i) ** (1 + shift) for i in range(chi.rank))
            lv = tuple(chi.q(i, i) ** shift for i in range(chi.rank))
            out.append(WeightSpec(kv, lv))
        return out


def _emit(report: dict, args) -> None:
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True, default=str)
            fh.write("\n")


def _verdict(ok: bool) -> int:
    print("PASS" if ok else "FAIL")
    return EXIT_PASS if ok else EXIT_FAIL


# -- commands ----------------------------------------------------------------


def cmd_roots(spec: JobSpec, args) -> int:
    rd = positive_roots(spec.bichar())
    report = {"word": [i + 1 for i in rd.word],
              "roots": [list(b) for b in rd.roots],
              "q_beta": [repr(q) for q in rd.q_beta],
              "n_beta": list(rd.n_beta)}
    print("reduced word:", " ".join("s%d" % i for i in report["word"]))
    for beta, q, n in zip(rd.roots, rd.q_beta, rd.n_beta):
        print("root %-12s q_beta=%-14s N_beta=%s" % (tuple(beta), repr(q), n))
    _emit(report, args)
    return EXIT_PASS


def cmd_cartan(spec: JobSpec, args) -> int:
    cm = cartan_matrix(spec.bichar())
    for row in cm:
        print(" ".join("%3d" % a for a in row))
    _emit({"cartan": [list(r) for r in cm]}, args)
    return EXIT_PASS


def cmd_orbit(spec: JobSpec, args) -> int:
    objs = orbit(spec.bichar(), max_objects=args.max_objects)
    report = {"objects": len(objs),
              "cartans": sorted([list(r) for r in o.cartan] for o in objs)}
    print("orbit size:", len(objs))
    for cm in report["cartans"]:
        print("  cartan", cm)
    _emit(report, args)
    return EXIT_PASS


def cmd_pbw(spec: JobSpec, args) -> int:
    B = spec.build_algebra()
    rd = B.root_datum
    basis = B.pbw_basis()
    report = {
        "finite": bool(B.finite),
        "total_dimension": B.total_dimension(),
        "graded_dimensions": {str(tuple(k)): v
                              for k, v in sorted(B.graded_dimensions().items())},
        "roots": [list(b) for b in rd.roots],
        "pbw_monomials": {str(tuple(k)): len(v)
                          for k, v in sorted(basis.items())},
    }
    print("finite:", report["finite"], " total dim:",
          report["total_dimension"])
    for k, v in sorted(B.graded_dimensions().items()):
        print("  degree %-10s dim %d" % (tuple(k), v))
    _emit(report, args)
    return EXIT_PASS


def cmd_hilbert(spec: JobSpec, args) -> int:
    B = spec.build_algebra()
    report = B.hilbert_check()
    report["oracle_roots"] = [[list(b), n]
                              for b, n in roots_from_hilbert(B)["roots"]]
    _emit(report, args)
    print("hilbert factorization:", "ok" if report["ok"] else report)
    return _verdict(report["ok"])


def cmd_pairing_check(spec: JobSpec, args) -> int:
    from .pairing import pbw_duality_check, reproducing_check
    from .errors import DualityDefect
    B = spec.build_algebra()
    try:
        rep = pbw_duality_check(B)
    except DualityDefect as exc:
        print("duality defect:", exc)
        return EXIT_FAIL
    repro = all(reproducing_check(B, beta)
                for beta, p in B.pivots.items() if p)
    report = {"duality_pairs": rep["pairs_checked"],
              "eta_beta": [repr(e) for e in rep["eta_beta"]],
              "reproducing": repro, "ok": rep["ok"] and repro}
    print("PBW duality pairs checked:", rep["pairs_checked"])
    print("canonical reproducing property:", repro)
    _emit(report, args)
    return _verdict(report["ok"])


def cmd_rmatrix(spec: JobSpec, args) -> int:
    from . import rmatrix as RM
    B = spec.build_algebra()
    chi = B.chi
    if args.module:
        from . import hwmod as H
        from .double import DoubleContext
        ctx = DoubleContext(B)
        wx, wy = spec.module_weights(chi, 2)
        vx = H.VermaModule(ctx, wx)
        vy = H.VermaModule(ctx, wy)
        op = H.r_xy(vx, vy)
        report = {
            "dimension": vx.dimension * vy.dimension,
            "basis_x": [list(p) for p in vx.basis],
            "basis_y": [list(p) for p in vy.basis],
            "entries": {
                str(col): {str(row): repr(c) for row, c in sorted(rows.items())}
                for col, rows in sorted(op.items())},
        }
        print("R_xy on %d x %d basis: %d nonzero columns" %
              (vx.dimension, vy.dimension, len(op)))
        _emit(report, args)
        return EXIT_PASS
    group, asg = spec.group_assignment(chi)
    R = RM.universal_r(B, group, asg)
    factors = []
    for f in R.factors:
        factors.append({"beta": list(f.beta), "q_beta": repr(f.q_beta),
                        "N_beta": f.n_beta, "eta_beta": repr(f.eta_beta),
                        "coefficients": [repr(c) for c in f.coefficients]})
    report = {"factors": factors, "group_divisors": list(group.divisors)}
    print("factorized R: %d q-exponential factors (decreasing convex order),"
          " then R_1 over Gamma %s" % (len(factors), tuple(group.divisors)))
    for f in factors:
        print("  [sum_{i<%d} c_i e^i (x) f^i at beta=%s, c =" %
              (f["N_beta"], tuple(f["beta"])), f["coefficients"], "]")
    if args.expand:
        rt = RM.expand_r(R, bound=args.bound)
        ctx = R.ctx
        report["tensor_terms"] = len(rt)
        report["tensor"] = {
            "%s | %s" % (ctx.render({k1: ctx.field.one}),
                         ctx.render({k2: ctx.field.one})): repr(c)
            for (k1, k2), c in sorted(rt.items())}
        print("expanded tensor terms:", len(rt))
    _emit(report, args)
    return EXIT_PASS


def cmd_verify(spec: JobSpec, args) -> int:
    target = args.property
    B = spec.build_algebra()
    chi = B.chi
    if target == "qybe":
        from . import hwmod as H
        from .double import DoubleContext
        ctx = DoubleContext(B)
        w1, w2, w3 = spec.module_weights(chi, 3)
        mods = [H.VermaModule(ctx, w) for w in (w1, w2, w3)]
        report = H.qybe_check(*mods)
        print("QYBE on V1(x)V2(x)V3, dimension", report["dimension"])
        if not report["ok"] and "first_discrepancy" in report:
            print("first discrepancy:", report["first_discrepancy"])
    elif target == "hopf":
        from .double import DoubleContext
        report = DoubleContext(B).hopf_axioms_check()
        if not report["ok"]:
            print("failures:", report["failures"])
    elif target == "coideal":
        report = B.coideal_filtration_check()
        if not report["ok"]:
            print("failures:", report.get("failures"))
    elif target == "duality":
        from .pairing import pbw_duality_check
        from .errors import DualityDefect
        try:
            report = pbw_duality_check(B)
        except DualityDefect as exc:
            print("duality defect:", exc)
            return EXIT_FAIL
    elif target == "canonical":
        from .pairing import (canonical_coproduct_check, cc_inverse_check,
                              reproducing_check)
        bound = min(4, B._built_level)
        rep1 = cc_inverse_check(B, bound)
        rep2 = canonical_coproduct_check(B, bound)
        repro = all(reproducing_check(B, beta)
                    for beta, p in B.pivots.items() if p)
        report = {"cc_inverse": rep1, "coproduct": rep2,
                  "reproducing": repro,
                  "ok": rep1["ok"] and rep2["ok"] and repro}
        if not report["ok"]:
            print("details:", report)
    else:
        raise ValueError(f"unknown property {target}")
    _emit(report, args)
    return _verdict(report["ok"])


# -- entry point -------------------------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nicholsrm",
        description="Exact computations with Nichols algebras of diagonal "
                    "type, their doubles, and R-matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("spec", help="path to the JSON job file")
        p.add_argument("--json", help="write the JSON report to this path")
        p.set_defaults(fn=fn)
        return p

    add("roots", cmd_roots, help="positive roots in convex order")
    add("cartan", cmd_cartan, help="generalized Cartan matrix")
    p = add("orbit", cmd_orbit, help="Weyl groupoid orbit")
    p.add_argument("--max-objects", type=int, default=64)
    add("pbw", cmd_pbw, help="PBW basis and graded dimensions")
    add("hilbert", cmd_hilbert, help="Hilbert series factorization check")
    add("pairing-check", cmd_pairing_check,
        help="PBW duality and canonical pairing checks")
    p = add("rmatrix", cmd_rmatrix, help="the factorized universal R-matrix")
    p.add_argument("--factorized", action="store_true", default=True)
    p.add_argument("--module", action="store_true",
                   help="emit the module operator R_xy instead")
    p.add_argument("--expand", action="store_true",
                   help="expand the full tensor (small cases)")
    p.add_argument("--bound", type=int, default=10 ** 7)
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("property",
                   choices=["qybe", "hopf", "coideal", "duality", "canonical"])
    p.add_argument("spec", help="path to the JSON job file")
    p.add_argument("--json", help="write the JSON report to this path")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        spec = JobSpec.load(args.spec)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print("input error:", exc, file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.fn(spec, args)
    except (DegreeBoundExceeded, OrbitBoundExceeded, SizeBoundExceeded,
            DimensionBound) as exc:
        print("bound exceeded:", exc, file=sys.stderr)
        return EXIT_BOUND
    except (InvalidGroup, InfiniteOrder) as exc:
        print("input error:", exc, file=sys.stderr)
        return EXIT_INPUT
    except NicholsError as exc:
        print("verification error:", exc, file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
