"""Command-line front end: runs verification suites, prints constant
tables and lift computations, and serializes reports.

Report schema (JSON): {tool_version, suite, params, results, elapsed_ms}
with results a list of {name, expected, expected_provenance, actual,
pass}.  Keys are emitted in sorted order; pass --stable to zero out
elapsed_ms so identical invocations are byte-identical.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

TOOL_VERSION = "0.1.0"

STORED = "stored-constants-v1"
DERIVED = "derived-exhaustive"
CLOSED_FORM = "derived-closed-form"
COMPUTED = "computed"


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


def result_row(name, actual, expected=None, provenance=COMPUTED, ok=None) -> Dict:
    if ok is None:
        ok = True if expected is None else _jsonable(actual) == _jsonable(expected)
    return {
        "name": name,
        "expected": _jsonable(expected),
        "expected_provenance": provenance,
        "actual": _jsonable(actual),
        "pass": bool(ok),
    }


def report_block(suite: str, params: Dict, results: List[Dict], elapsed_ms: int) -> Dict:
    return {
        "tool_version": TOOL_VERSION,
        "suite": suite,
        "params": _jsonable(params),
        "results": results,
        "elapsed_ms": int(elapsed_ms),
    }


def census_block(report) -> Dict:
    rows = [
        result_row(f"verdict:{k}", v, expected=True, provenance=DERIVED, ok=bool(v))
        for k, v in sorted(report.verdicts.items())
    ]
    rows += [result_row(f"count:{k}", v) for k, v in sorted(report.counts.items())]
    rows += [result_row(f"sample:{k}", v) for k, v in sorted(report.samples.items())]
    return report_block(report.suite, report.params, rows, report.elapsed_ms)


class IoFailure(Exception):
    pass


def emit_report(blocks: List[Dict], fmt: str = "json", path: Optional[str] = None,
                stable: bool = False) -> str:
    if not blocks:
        raise ValueError("no reports to emit")
    if stable:
        blocks = [dict(b, elapsed_ms=0) for b in blocks]
    if fmt == "json":
        payload = blocks[0] if len(blocks) == 1 else blocks
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "tsv":
        lines = ["suite\tname\texpected\texpected_provenance\tactual\tpass"]
        for b in blocks:
            for r in b["results"]:
                lines.append(
                    "\t".join(
                        [
                            b["suite"],
                            r["name"],
                            json.dumps(r["expected"], sort_keys=True),
                            r["expected_provenance"],
                            json.dumps(r["actual"], sort_keys=True),
                            str(r["pass"]).lower(),
                        ]
                    )
                )
        text = "\n".join(lines) + "\n"
    else:
        raise ValueError(f"unknown format: {fmt}")
    if path:
        try:
            with open(path, "w") as f:
                f.write(text)
        except OSError as e:
            raise IoFailure(str(e)) from e
    else:
        sys.stdout.write(text)
    return text


def blocks_pass(blocks: Sequence[Dict]) -> bool:
    return all(r["pass"] for b in blocks for r in b["results"])


# -- subcommand: tables -------------------------------------------------------


def cmd_tables(args) -> List[Dict]:
    from . import rootdata as rd

    t0 = time.time()
    tables = rd.stored_constant_tables()
    rows = []
    for r in tables["abelian_coinvariants"]:
        ok = set(r["d_computed"]) == {r["d_stored"]}
        if "levi_stored" in r:
            ok = ok and set(r["levi"]) == {r["levi_stored"]}
        rows.append(
            result_row(
                f"abelian:{r['G']}",
                {k: r[k] for k in ("s", "t", "d_computed", "levi")},
                expected={"s": r["s"], "t": r["t"], "d": r["d_stored"]},
                provenance=STORED,
                ok=ok,
            )
        )
    heis_expected_d = {"E6": 20, "E7": 32, "E8": 56}
    for r in tables["heisenberg_coinvariants"]:
        ok = r["d_computed"] == heis_expected_d[r["G"]]
        rows.append(
            result_row(
                f"heisenberg:{r['G']}",
                {k: r[k] for k in ("s", "t", "d_computed", "levi_computed")},
                expected={"s": r["s"], "t": r["t"], "d": heis_expected_d[r["G"]]},
                provenance=STORED,
                ok=ok,
            )
        )
    for r in tables["gl2_block_exponents"]:
        rows.append(
            result_row(
                f"gl2_block:{r['G']}",
                {"s": r["s"], "t": r["t"]},
                expected={"s": r["s"], "t": r["t"]},
                provenance=STORED,
            )
        )
    for k, v in sorted(tables["scalar_exponents"].items()):
        rows.append(result_row(f"scalar:{k}", v, expected=v, provenance=STORED))
    for r in tables["magic_square"]:
        # Disagreement between the stored row and the Heisenberg-Levi
        # recomputation is reported as data, not as a failure.
        rows.append(
            result_row(
                f"magic_square:dim{r['dimD']}",
                r,
                expected={"G": r["G"], "M": r["M_stored"], "L": r["L"], "H": r["H"]},
                provenance=STORED,
                ok=r["dim_g1"] == r["dim_g1_expected"],
            )
        )
    return [report_block("tables", {}, rows, 1000 * (time.time() - t0))]


# -- subcommand: rho ----------------------------------------------------------

RHO_STORED = {
    ("C3", "siegel"): ("4", "2"),
    ("G2", "heisenberg"): ("3", "3/2"),
    ("F4", "amber"): ("7", "7/2"),
}


def cmd_rho(args) -> List[Dict]:
    from . import rootdata as rd

    t0 = time.time()
    d = rd.build_root_system(args.group)
    name = args.parabolic
    if name == "siegel":
        if not d.label.startswith("C"):
            raise SystemExit2(f"siegel parabolic needs a type-C group, got {d.label}")
        p = rd.maximal_parabolic(d, d.rank)
        det = tuple(Fraction(1) for _ in range(d.ambient_dim))
    elif name == "heisenberg":
        p, _dims = rd.heisenberg_parabolic(d)
        det = d.highest_root
    elif name == "amber":
        if d.label != "F4":
            raise SystemExit2("amber parabolic is defined for F4 only")
        p = rd.maximal_parabolic(d, 3)
        det = rd.amber_parabolic_det_weight(d)
    else:
        raise SystemExit2(f"unknown parabolic name: {name}")
    e_full, e_half = rd.nilradical_char_exponent(p, det)
    actual = {"e_full": e_full, "e_half": e_half}
    stored = RHO_STORED.get((d.label, name))
    expected = {"e_full": stored[0], "e_half": stored[1]} if stored else None
    rows = [
        result_row(
            f"rho:{d.label}:{name}",
            actual,
            expected=expected,
            provenance=STORED if stored else COMPUTED,
        )
    ]
    return [
        report_block(
            "rho",
            {"group": args.group, "parabolic": name},
            rows,
            1000 * (time.time() - t0),
        )
    ]


# -- subcommand: doublecosets ---------------------------------------------------

DOUBLE_COSET_STORED = {
    ("C3", "A2"): 4,
    ("A5", "A2+A2"): 4,
    ("D6", "A5"): 4,
    ("E7", "E6"): 4,
    ("A2", "A1"): 2,
}


def cmd_doublecosets(args) -> List[Dict]:
    from . import rootdata as rd

    t0 = time.time()
    d = rd.build_root_system(args.group)
    levi_arg = args.levi
    if all(c.isdigit() or c == "," for c in levi_arg):
        levi_nodes = sorted(int(c) for c in levi_arg.split(","))
        removed = sorted(set(d.nodes()) - set(levi_nodes))
        if len(removed) != 1:
            raise SystemExit2("levi must omit exactly one node")
        node = removed[0]
    else:
        matches = [
            n
            for n in d.nodes()
            if rd.levi_label(d, sorted(set(d.nodes()) - {n})) == levi_arg
        ]
        if not matches:
            raise SystemExit2(f"no maximal parabolic of {d.label} has Levi {levi_arg}")
        node = matches[0]
        levi_nodes = sorted(set(d.nodes()) - {node})
    w = d.fundamental_weights()[node - 1]
    count = rd.levi_orbit_count(d, w, levi_nodes)
    key = (d.label, rd.levi_label(d, levi_nodes))
    stored = DOUBLE_COSET_STORED.get(key)
    rows = [
        result_row(
            f"doublecosets:{key[0]}:{key[1]}",
            count,
            expected=stored,
            provenance=STORED if stored is not None else COMPUTED,
        )
    ]
    return [
        report_block(
            "doublecosets",
            {"group": args.group, "levi": args.levi, "weight_node": node},
            rows,
            1000 * (time.time() - t0),
        )
    ]


# -- subcommand: census ---------------------------------------------------------


def cmd_census(args) -> List[Dict]:
    from . import census as cs

    suite = args.suite
    q = args.q
    workers = args.workers
    if suite == "pairs":
        reports = [cs.octonion_pair_census(q if q else 2, workers=workers)]
    elif suite == "triples":
        reports = [cs.octonion_triple_census(q if q else 2, workers=workers)]
    elif suite == "singular":
        reports = [cs.singular_family_census(q if q else 2)]
    elif suite == "amber":
        reports = [cs.amber_pair_census(args.dimd, q if q else 5, workers=workers)]
    elif suite == "quadric":
        t0 = time.time()
        rows = []
        for m, qq in ((2, 3), (7, 2), (1, 5), (4, 3), (5, 2), (6, 2)):
            r = cs.quadric_null_count(m, qq)
            rows.append(
                result_row(
                    f"nulls:m{m}:q{qq}",
                    r["count"],
                    expected=r["closed_form"],
                    provenance=CLOSED_FORM,
                    ok=r["agrees"],
                )
            )
        return [report_block("quadric-nulls", {}, rows, 1000 * (time.time() - t0))]
    elif suite == "all":
        reports = cs.run_all({"slow": args.slow, "workers": workers})
    else:
        raise SystemExit2(f"unknown census suite: {suite}")
    return [census_block(r) for r in reports]


# -- subcommand: orbit ----------------------------------------------------------


def _gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def orbit_closed_form(dim_d: int, q: int) -> int:
    if dim_d == 1:
        return (q - 1) * (q + 1) * (q**2 + 1) * (q**3 + 1)
    if dim_d == 2:
        return (q - 1) * _gaussian_binomial(6, 3, q)
    raise SystemExit2("orbit closed forms cover dim D in {1, 2}")


def cmd_orbit(args) -> List[Dict]:
    from . import fts as fts_mod

    t0 = time.time()
    omega = fts_mod.omega_bfs(args.dimd, args.q, workers=args.workers)
    expected = orbit_closed_form(args.dimd, args.q)
    rows = [
        result_row("orbit_size", omega.size, expected=expected, provenance=CLOSED_FORM)
    ]
    if args.partition:
        classes = fts_mod.qd_orbit_partition(omega, workers=args.workers)
        sizes = [int(c.size) for c in classes]
        rows.append(
            result_row(
                "partition_classes", len(sizes), expected=4, provenance=DERIVED
            )
        )
        rows.append(
            result_row(
                "partition_covers",
                sum(sizes),
                expected=omega.size,
                provenance=DERIVED,
            )
        )
        rows.append(result_row("class_sizes", sizes))
    return [
        report_block(
            "orbit",
            {"dimD": args.dimd, "q": args.q, "workers": args.workers},
            rows,
            1000 * (time.time() - t0),
        )
    ]


# -- subcommand: lift -----------------------------------------------------------


def parse_uv(text: str):
    """qexp[@phase] with both parts rational, e.g. '1/2@1/3'."""
    from .satake import UnramifiedValue

    if "@" in text:
        qe, ph = text.split("@", 1)
    else:
        qe, ph = text, "0"
    try:
        return UnramifiedValue.of(Fraction(qe), Fraction(ph))
    except ValueError as e:
        raise SystemExit2(f"bad unramified value {text!r}: {e}")


def _class_rows(name: str, cls) -> List[Dict]:
    vals = [{"qexp": v.qexp, "phase": v.phase} for v in cls.eigenvalues]
    return [
        result_row(name, {"group": cls.group, "values": vals}),
        result_row(
            f"{name}:inversion_closed",
            cls.inversion_closed(),
            expected=True,
            provenance=DERIVED,
            ok=cls.inversion_closed(),
        ),
    ]


def cmd_lift(args) -> List[Dict]:
    from . import satake as sk

    t0 = time.time()
    kind = args.kind
    rows: List[Dict] = []
    params: Dict[str, object] = {"kind": kind}
    if kind in ("a2g2", "g2b3", "g2f4"):
        t1, t2, t3 = (parse_uv(t) for t in (args.t1, args.t2, args.t3))
        params.update({"t1": args.t1, "t2": args.t2, "t3": args.t3})
        try:
            g2 = sk.phi_a2_g2(t1, t2, t3)
        except sk.ProductNotOne as e:
            raise SystemExit2(str(e))
        if kind == "a2g2":
            rows += _class_rows("lift:a2g2", g2)
        elif kind == "g2b3":
            rows += _class_rows("lift:g2b3", sk.phi_g2_b3(g2))
        else:
            r = sk.trivial_so3_param(Fraction(args.so3))
            params["so3"] = args.so3
            rows += _class_rows("lift:g2f4", sk.psi_g2a1_f4(g2, r))
    elif kind == "so3":
        rows += _class_rows("lift:so3", sk.trivial_so3_param(Fraction(args.so3)))
        params["so3"] = args.so3
    elif kind == "subregular":
        from . import rootdata as rd

        d = rd.build_root_system(args.group)
        vals = sk.subregular_param(d)
        params["group"] = args.group
        rows.append(
            result_row(
                f"lift:subregular:{d.label}",
                [{"qexp": v.qexp, "phase": v.phase} for v in vals],
            )
        )
    else:
        raise SystemExit2(f"unknown lift kind: {kind}")
    return [report_block("lift", params, rows, 1000 * (time.time() - t0))]


# -- subcommand: check ----------------------------------------------------------


def _check_field(rng) -> List[Dict]:
    from .field import QQ, PrimeField

    rows = []
    bad = 0
    for p in (2, 3, 5, 101):
        F = PrimeField(p)
        for _ in range(300):
            a, b = F.of(rng.randrange(p)), F.of(rng.randrange(p))
            if int(F.sub(F.add(a, b), b)) != int(a):
                bad += 1
            if int(b) and int(F.mul(F.div(a, b), b)) != int(a):
                bad += 1
    rows.append(result_row("field:ring_axioms_bad", bad, expected=0, provenance=DERIVED))
    x = QQ.of(Fraction(3, 7))
    rows.append(
        result_row(
            "field:rational_inverse",
            QQ.mul(x, QQ.inv(x)),
            expected=Fraction(1),
            provenance=DERIVED,
        )
    )
    return rows


def _check_composition(rng) -> List[Dict]:
    from .composition import CompositionAlgebra
    from .field import PrimeField

    bad = 0
    n = 0
    for p in (3, 5, 101):
        F = PrimeField(p)
        for dim in (1, 2, 4, 8):
            A = CompositionAlgebra(dim, F)
            for _ in range(100):
                x = tuple(F.of(rng.randrange(p)) for _ in range(dim))
                y = tuple(F.of(rng.randrange(p)) for _ in range(dim))
                lhs = A.norm(A.mul(x, y))
                rhs = F.mul(A.norm(x), A.norm(y))
                n += 1
                if int(lhs) != int(rhs):
                    bad += 1
    return [
        result_row(
            "composition:norm_multiplicative_bad",
            bad,
            expected=0,
            provenance=DERIVED,
        ),
        result_row("composition:samples", n),
    ]


def _check_jordan(rng) -> List[Dict]:
    from .composition import CompositionAlgebra
    from .field import PrimeField
    from .jordan import JordanAlgebra

    bad = 0
    for p in (5, 101):
        F = PrimeField(p)
        for dim in (1, 2, 4, 8):
            J = JordanAlgebra(CompositionAlgebra(dim, F))
            for _ in range(50):
                v = tuple(F.of(rng.randrange(p)) for _ in range(J.dim))
                X = J.from_vector(v)
                # X# o X = det(X) I  (adjoint identity)
                lhs = J.jordan_product(J.adjoint_sharp(X), X)
                rhs = J.scale(J.jdet(X), J.identity)
                if not J.eq(lhs, rhs):
                    bad += 1
    return [
        result_row("jordan:adjoint_identity_bad", bad, expected=0, provenance=DERIVED)
    ]


def _check_fts(rng) -> List[Dict]:
    from . import fts as fts_mod

    rows = []
    for dim_d in (1, 2):
        fts = fts_mod.build_fts(dim_d, 5)
        F, J = fts.field, fts.J
        bad = 0
        for _ in range(50):
            u = J.from_vector(tuple(F.of(rng.randrange(5)) for _ in range(J.dim)))
            v = fts.vector(
                F.of(rng.randrange(5)),
                J.from_vector(tuple(F.of(rng.randrange(5)) for _ in range(J.dim))),
                J.from_vector(tuple(F.of(rng.randrange(5)) for _ in range(J.dim))),
                F.of(rng.randrange(5)),
            )
            w = fts.vector(
                F.of(rng.randrange(5)),
                J.from_vector(tuple(F.of(rng.randrange(5)) for _ in range(J.dim))),
                J.from_vector(tuple(F.of(rng.randrange(5)) for _ in range(J.dim))),
                F.of(rng.randrange(5)),
            )
            p0 = fts.pairing(v, w)
            p1 = fts.pairing(fts.u_plus_action(u, v), fts.u_plus_action(u, w))
            if int(p0) != int(p1):
                bad += 1
        rows.append(
            result_row(
                f"fts:pairing_invariance_dim{dim_d}_bad",
                bad,
                expected=0,
                provenance=DERIVED,
            )
        )
    return rows


def cmd_check(args) -> List[Dict]:
    t0 = time.time()
    rng = random.Random(20260826)
    suites = (
        ("field", _check_field),
        ("composition", _check_composition),
        ("jordan", _check_jordan),
        ("fts", _check_fts),
    )
    rows: List[Dict] = []
    for name, fn in suites:
        if args.suite in ("all", name):
            rows += fn(rng)
    if not rows:
        raise SystemExit2(f"unknown check suite: {args.suite}")
    return [report_block("check", {"suite": args.suite}, rows, 1000 * (time.time() - t0))]


# -- argument parsing -----------------------------------------------------------


class SystemExit2(SystemExit):
    def __init__(self, message: str):
        sys.stderr.write(message.rstrip() + "\n")
        super().__init__(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--out", default=None, help="write the report to a file")
    common.add_argument(
        "--stable",
        action="store_true",
        help="zero out elapsed_ms so identical runs are byte-identical",
    )

    ap = argparse.ArgumentParser(
        prog="freudenthal",
        description="Exact verification toolkit: Jordan-algebra orbit "
        "censuses, root-system constants, and parameter lifts.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "tables",
        parents=[common],
        help="stored constant tables with recomputed cross-checks",
    )

    p = sub.add_parser("rho", parents=[common], help="nilradical character exponents")
    p.add_argument("--group", required=True)
    p.add_argument(
        "--parabolic", required=True, help="siegel | heisenberg | amber"
    )

    p = sub.add_parser("doublecosets", parents=[common], help="Levi orbit count on a weight orbit")
    p.add_argument("--group", required=True)
    p.add_argument("--levi", required=True, help="Levi label (A2) or node list (1,2)")

    p = sub.add_parser("census", parents=[common], help="exhaustive finite-field suites")
    p.add_argument("suite", choices=("pairs", "triples", "singular", "amber", "quadric", "all"))
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--dimd", type=int, default=1, choices=(1, 2))
    p.add_argument("--slow", action="store_true")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("orbit", parents=[common], help="singular-vector orbit BFS")
    p.add_argument("--dimd", type=int, required=True, choices=(1, 2))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--partition", action="store_true")

    p = sub.add_parser("lift", parents=[common], help="Satake parameter lifts")
    p.add_argument("kind", choices=("a2g2", "g2b3", "g2f4", "subregular", "so3"))
    p.add_argument("--t1", default="0")
    p.add_argument("--t2", default="0")
    p.add_argument("--t3", default="0")
    p.add_argument("--so3", default="1", help="q-exponent of the SO3 class")
    p.add_argument("--group", default="D4", help="group label for subregular")

    p = sub.add_parser("check", parents=[common], help="randomized algebra property suites")
    p.add_argument("suite", choices=("field", "composition", "jordan", "fts", "all"))

    return ap


HANDLERS = {
    "tables": cmd_tables,
    "rho": cmd_rho,
    "doublecosets": cmd_doublecosets,
    "census": cmd_census,
    "orbit": cmd_orbit,
    "lift": cmd_lift,
    "check": cmd_check,
}


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        blocks = HANDLERS[args.command](args)
    except SystemExit2:
        return 2
    except SystemExit as e:
        return int(e.code or 0)
    except Exception as e:
        from .census import TooLarge
        from .rootdata import NoBranchVertex, UnknownLabel

        if isinstance(e, (TooLarge, UnknownLabel, NoBranchVertex, ValueError)):
            sys.stderr.write(f"{type(e).__name__}: {e}\n")
            return 2
        raise
    emit_report(blocks, fmt=args.format, path=args.out, stable=args.stable)
    return 0 if blocks_pass(blocks) else 1


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
