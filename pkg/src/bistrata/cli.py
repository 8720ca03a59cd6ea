"""Command line front end.

Verbs:
  degree   degree of the stratum of one or two singularity types
  class    the lifted stratum class itself, as JSON or text
  table    numeric degree tables over parameter ranges, CSV by default
  verify   run the identity suites and print PASS/FAIL lines
  collide  merge two ordinary points: diagram and residual multiplicity

Type specs are "kind:ints", e.g. omp:4 (ordinary point of multiplicity 4),
cusp:3, kbranch:2,1, diagram:0,4,2,1,3,0 (vertex pairs).  Exit codes:
0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .collide import NewtonDiagram, SingularitySpec, collide_omp, is_linear, residual_multiplicity
from .degrees import DegreeResult, gysin_degree, pair_degree, single_point_degree
from .strata import (
    StratumClass,
    cusp_stratum,
    diagram_stratum,
    kbranch_stratum,
    node_pair_stratum,
    omp_stratum,
    two_omp_stratum,
)
from .verify import run_suite


class SpecError(ValueError):
    """A malformed type spec string (usage error, exit code 2)."""


def parse_type_spec(text: str) -> SingularitySpec:
    kind, sep, rest = text.partition(":")
    if not sep:
        raise SpecError(f"type spec {text!r} needs 'kind:ints'")
    try:
        numbers = [int(tok) for tok in rest.split(",") if tok != ""]
    except ValueError:
        raise SpecError(f"type spec {text!r} carries non-integer parameters")
    try:
        if kind == "omp":
            if len(numbers) != 1:
                raise SpecError("omp takes exactly one multiplicity, e.g. omp:4")
            return SingularitySpec.omp(numbers[0])
        if kind == "cusp":
            if len(numbers) != 1:
                raise SpecError("cusp takes exactly one multiplicity, e.g. cusp:3")
            return SingularitySpec.cusp(numbers[0])
        if kind == "kbranch":
            return SingularitySpec.kbranch(*numbers)
        if kind == "diagram":
            if len(numbers) < 4 or len(numbers) % 2:
                raise SpecError("diagram takes vertex pairs, e.g. diagram:0,4,2,1,3,0")
            pairs = list(zip(numbers[0::2], numbers[1::2]))
            return SingularitySpec.from_diagram(NewtonDiagram.from_points(pairs))
    except ValueError as exc:
        raise SpecError(f"bad type spec {text!r}: {exc}")
    raise SpecError(f"unknown singularity kind {kind!r} in {text!r}")


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise SpecError(f"range {text!r} needs the form a..b")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise SpecError(f"range {text!r} carries non-integer bounds")
    if a > b:
        raise SpecError(f"empty range {text!r}")
    return a, b


def _thread_count() -> int:
    raw = os.environ.get("STRATA_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _stratum_for(sx: SingularitySpec, sy: SingularitySpec | None) -> StratumClass:
    if sy is None:
        if sx.kind == "omp":
            return omp_stratum(sx.mults[0] - 1)
        if sx.kind == "cusp":
            return cusp_stratum(sx.mults[0])
        if sx.kind == "kbranch":
            return kbranch_stratum(*sx.mults)
        if sx.kind == "diagram":
            return diagram_stratum(sx.diagram)
        raise ValueError(f"unsupported kind {sx.kind!r}")
    if sx.kind == "omp" and sy.kind == "omp":
        m_hi, m_lo = sorted((sx.mults[0], sy.mults[0]), reverse=True)
        return two_omp_stratum(m_hi - 1, m_lo - 1)
    if sx.kind == "omp":
        sx, sy = sy, sx
    if sy.kind == "omp" and sy.mults[0] == 2 and sx.kind in ("cusp", "kbranch"):
        return node_pair_stratum(sx)
    raise ValueError(f"unsupported pair ({sx.describe()}, {sy.describe()})")


def _degree_for(sx: SingularitySpec, sy: SingularitySpec | None) -> DegreeResult:
    if sy is None:
        return single_point_degree(sx)
    return pair_degree(sx, sy)


def _family_label(args) -> str:
    label = args.x
    if args.y:
        label += "+" + args.y
    return label


def cmd_degree(args, out, err) -> int:
    sx = parse_type_spec(args.x)
    sy = parse_type_spec(args.y) if args.y else None
    result = _degree_for(sx, sy)
    d_numeric = args.d
    below = d_numeric is not None and d_numeric < result.valid_from_d
    if below:
        print(f"warning: d={d_numeric} is below the validity bound "
              f"d >= {result.valid_from_d}; the value is formal", file=err)
    if args.format == "json":
        payload = {"family": _family_label(args)}
        payload.update(result.to_json())
        payload["d"] = d_numeric if d_numeric is not None else "symbolic"
        if d_numeric is not None:
            payload["value"] = result.value_at(d_numeric)
            payload["below_validity"] = below
        print(json.dumps(payload, indent=2), file=out)
    elif args.format == "csv":
        value = result.value_at(d_numeric) if d_numeric is not None else str(result)
        d_col = d_numeric if d_numeric is not None else "symbolic"
        print("family,p,q,d,degree", file=out)
        print(f"{_family_label(args)},,,{d_col},{value}", file=out)
    else:
        print(f"degree: {result}", file=out)
        if d_numeric is not None:
            print(f"value at d={d_numeric}: {result.value_at(d_numeric)}", file=out)
        print(f"valid for d >= {result.valid_from_d}   (route: {result.route})", file=out)
    return 0


def cmd_class(args, out, err) -> int:
    sx = parse_type_spec(args.x)
    sy = parse_type_spec(args.y) if args.y else None
    stratum = _stratum_for(sx, sy)
    if args.format == "json":
        payload = stratum.cls.to_json()
        payload["aut"] = stratum.aut_order
        payload["valid_from_d"] = stratum.valid_from_d
        payload["route"] = stratum.route
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(f"class ({_family_label(args)}), total degree "
              f"{stratum.cls.total_degree}, aut {stratum.aut_order}:", file=out)
        print(str(stratum.cls), file=out)
    return 0


def _table_rows(args) -> list[tuple[str, object, object, int, int]]:
    p_lo, p_hi = parse_range(args.p_range)
    q_lo, q_hi = parse_range(args.q_range) if args.q_range else (1, 1)
    d0 = args.d
    family = args.family
    cells: list[tuple[int, int | None]] = []
    if family == "two-omp":
        for p in range(p_lo, p_hi + 1):
            for q in range(q_lo, q_hi + 1):
                if q <= p:
                    cells.append((p, q))
    elif family in ("omp", "cusp", "cusp-node"):
        lo = max(p_lo, 2 if family != "omp" else 1)
        cells.extend((p, None) for p in range(lo, p_hi + 1))
    else:
        raise SpecError(f"unknown table family {family!r}")

    def evaluate(cell):
        p, q = cell
        if family == "two-omp":
            res = gysin_degree(two_omp_stratum(p, q))
        elif family == "omp":
            res = single_point_degree(SingularitySpec.omp(p + 1))
        elif family == "cusp":
            res = single_point_degree(SingularitySpec.cusp(p))
        else:
            res = pair_degree(SingularitySpec.cusp(p), SingularitySpec.omp(2))
        return res.value_at(d0)

    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(evaluate, cells))
    else:
        values = [evaluate(cell) for cell in cells]
    rows = []
    for (p, q), value in zip(cells, values):
        rows.append((family, p, q if q is not None else "", d0, value))
    rows.sort(key=lambda r: (r[0], r[1], r[2] if r[2] != "" else -1, r[3]))
    return rows


def cmd_table(args, out, err) -> int:
    rows = _table_rows(args)
    if args.format == "json":
        payload = [{"family": f, "p": p, "q": q if q != "" else None,
                    "d": d, "degree": v} for f, p, q, d, v in rows]
        print(json.dumps(payload, indent=2), file=out)
    else:
        print("family,p,q,d,degree", file=out)
        for f, p, q, d, v in rows:
            print(f"{f},{p},{q},{d},{v}", file=out)
    return 0


def cmd_verify(args, out, err) -> int:
    checks = run_suite(args.suite)
    failures = 0
    for name, ok, detail in checks:
        if ok:
            print(f"PASS {name}", file=out)
        else:
            failures += 1
            suffix = f" ({detail})" if detail else ""
            print(f"FAIL {name}{suffix}", file=out)
    print(f"{len(checks) - failures}/{len(checks)} identities hold", file=out)
    return 1 if failures else 0


def cmd_collide(args, out, err) -> int:
    sx = parse_type_spec(args.x)
    sy = parse_type_spec(args.y)
    if sx.kind != "omp" or sy.kind != "omp":
        raise ValueError("collision results are available for ordinary points only")
    m_hi, m_lo = sorted((sx.mults[0], sy.mults[0]), reverse=True)
    p, q = m_hi - 1, m_lo - 1
    diagram = collide_omp(p, q)
    payload = {
        "vertices": [[a, b] for a, b in diagram.vertices],
        "multiplicity": diagram.multiplicity,
        "residual_multiplicity": residual_multiplicity(p, q),
        "linear": is_linear(diagram),
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(f"collision of omp:{m_hi} and omp:{m_lo}", file=out)
        print(f"  vertices: {payload['vertices']}", file=out)
        print(f"  multiplicity: {payload['multiplicity']}", file=out)
        print(f"  residual multiplicity: {payload['residual_multiplicity']}", file=out)
        print(f"  linear: {payload['linear']}", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bistrata",
        description="Exact degrees and cohomology classes of equisingular "
                    "strata of plane curves with one or two singular points.")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, formats=("text", "json", "csv")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", metavar="FILE", help="write output to FILE")

    p_degree = sub.add_parser("degree", help="degree of a stratum")
    p_degree.add_argument("--x", required=True, metavar="SPEC")
    p_degree.add_argument("--y", metavar="SPEC")
    group = p_degree.add_mutually_exclusive_group()
    group.add_argument("--d", type=int, help="numeric curve degree")
    group.add_argument("--symbolic-d", action="store_true",
                       help="keep d symbolic (default)")
    add_common(p_degree)

    p_class = sub.add_parser("class", help="lifted stratum class")
    p_class.add_argument("--x", required=True, metavar="SPEC")
    p_class.add_argument("--y", metavar="SPEC")
    add_common(p_class, formats=("text", "json"))

    p_table = sub.add_parser("table", help="numeric degree tables")
    p_table.add_argument("--family", required=True,
                         choices=("two-omp", "omp", "cusp", "cusp-node"))
    p_table.add_argument("--p-range", required=True, metavar="A..B")
    p_table.add_argument("--q-range", metavar="A..B")
    p_table.add_argument("--d", type=int, required=True,
                         help="numeric curve degree (table sizes depend on it)")
    add_common(p_table, formats=("csv", "json"))

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument("--suite", default="all",
                          choices=("ring", "corollary", "appendix",
                                   "recursion", "interpolation", "all"))
    add_common(p_verify, formats=("text",))

    p_collide = sub.add_parser("collide", help="merge two ordinary points")
    p_collide.add_argument("--x", required=True, metavar="SPEC")
    p_collide.add_argument("--y", required=True, metavar="SPEC")
    add_common(p_collide, formats=("text", "json"))
    return parser


COMMANDS = {
    "degree": cmd_degree,
    "class": cmd_class,
    "table": cmd_table,
    "verify": cmd_verify,
    "collide": cmd_collide,
}


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors carry code 2
        return int(exc.code or 0)
    try:
        if getattr(args, "out", None):
            import io
            buffer = io.StringIO()
            code = COMMANDS[args.verb](args, buffer, err)
            with open(args.out, "w") as handle:
                handle.write(buffer.getvalue())
            return code
        return COMMANDS[args.verb](args, out, err)
    except SpecError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(f"error: {exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
