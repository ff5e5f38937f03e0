"""Command-line surface.

Subcommands:

* ``solve``    -- build a verified factorization and write it out.
* ``verify``   -- independently re-check a previously exported file.
* ``selftest`` -- solve and verify every admissible instance up to a bound.
* ``tables``   -- audit (``--check``) or export (``--dump``) the embedded
  construction tables.

Exit codes: 0 success, 2 proven nonexistence, 1 domain or internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize, tables
from .caps import AdmissibleDecomposition
from .checker import (
    Nonexistent,
    verify_admissible_decomposition,
    verify_cap_complementarity,
    verify_factorization,
)
from .core import CycleType, parse_cycle_type
from .hosts import complete_symmetric, h_star, w_star
from .solver import DomainError, SearchTimeout, solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NONEXISTENT = 2


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        ftype = parse_cycle_type(args.factor)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        result = solve(args.n, ftype, seed=args.seed, timeout_ms=args.timeout_ms)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except SearchTimeout as exc:
        print(f"error: timeout: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if isinstance(result, Nonexistent):
        print(
            f"nonexistent: no {ftype.text()}-factorization of the order-{args.n} "
            f"complete symmetric digraph ({result.reason})",
            file=sys.stderr,
        )
        return EXIT_NONEXISTENT
    doc = serialize.document_for_solution(result)
    _write(serialize.render(doc, args.format), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            doc = serialize.from_json(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_ERROR
    kind = doc.host.kind
    if kind == "JStar":
        dec = AdmissibleDecomposition(doc.host.m_or_n, doc.factors)
        report = verify_admissible_decomposition(doc.host.m_or_n, dec)
        types_ok = all(
            t.lengths == doc.ftype.lengths for t in dec.cycle_types()
        )
        report.add("cycle_type", types_ok, f"expected {doc.ftype.text()}")
    else:
        builders = {
            "CompleteSymmetric": complete_symmetric,
            "HStar": h_star,
            "WStar": w_star,
        }
        if kind not in builders:
            print(f"error: unknown host kind {kind!r}", file=sys.stderr)
            return EXIT_ERROR
        host = builders[kind](doc.host.m_or_n)
        report = verify_factorization(host, doc.factors, doc.ftype)
    print(json.dumps(report.to_json(), indent=2))
    return EXIT_OK if report.passed else EXIT_ERROR


def _even_types(n: int) -> list:
    def parts(total: int, mx: int):
        if total == 0:
            yield ()
            return
        for p in range(min(mx, total), 1, -2):
            for rest in parts(total - p, p):
                yield (p,) + rest

    return [CycleType(t) for t in parts(n, n)]


def cmd_selftest(args: argparse.Namespace) -> int:
    failures = 0
    for n in range(6, args.max_n + 1, 4):
        types = _even_types(n)
        solved = nonexistent = failed = 0
        for ftype in types:
            try:
                result = solve(n, ftype, seed=args.seed)
            except Exception as exc:  # report, keep going
                print(f"n={n} {ftype.text()}: ERROR {exc}")
                failed += 1
                continue
            if isinstance(result, Nonexistent):
                if (n, ftype.lengths) == (6, (6,)):
                    nonexistent += 1
                else:
                    print(f"n={n} {ftype.text()}: unexpected nonexistence")
                    failed += 1
            elif result.report.passed:
                solved += 1
            else:
                print(f"n={n} {ftype.text()}: verification failed")
                failed += 1
        failures += failed
        print(
            f"n={n}: {len(types)} types, {solved} solved, "
            f"{nonexistent} nonexistent, {failed} failed"
        )
    return EXIT_OK if failures == 0 else EXIT_ERROR


def cmd_tables(args: argparse.Namespace) -> int:
    if args.dump:
        print(json.dumps(tables_dump(), indent=2))
        return EXIT_OK
    failures = 0
    left = tables.left_cap()
    centre = tables.centre_piece()
    from .caps import left_cap_patterns

    pattern_ok = left_cap_patterns(left) == tables.X_PATTERN
    if not pattern_ok:
        failures += 1
    print(f"left cap pattern: {'ok' if pattern_ok else 'FAIL'}")
    cap_rows = 0
    for family, anchor in sorted(tables.RIGHT_CAPS):
        report = verify_cap_complementarity(
            left, tables.right_cap(family, anchor), centre
        )
        cap_rows += 1
        status = "ok" if report.passed else "FAIL"
        print(f"cap {family} anchor {anchor}: {status}")
        if not report.passed:
            failures += 1
            for name, detail in report.failures():
                print(f"    {name}: {detail}")
    dec_rows = 0
    named = [(key, tables.small_decomposition(key)) for key in tables.small_types()]
    named.append(("figure [4,8]", tables.figure_4_8_decomposition()))
    for key, dec in named:
        report = verify_admissible_decomposition(dec.m, dec, tables.X_PATTERN)
        dec_rows += 1
        label = CycleType(key).text() if isinstance(key, tuple) else key
        status = "ok" if report.passed else "FAIL"
        print(f"decomposition {label}: {status}")
        if not report.passed:
            failures += 1
            for name, detail in report.failures():
                print(f"    {name}: {detail}")
    supp = tables.supplemental_2_4_4()
    report = verify_admissible_decomposition(supp.m, supp, tables.X_PATTERN)
    print(f"supplemental [2,4^2]: {'ok' if report.passed else 'FAIL'}")
    if not report.passed:
        failures += 1
    print(f"{cap_rows} cap rows + {dec_rows} decomposition rows + 1 supplemental")
    return EXIT_OK if failures == 0 else EXIT_ERROR


def tables_dump() -> dict:
    """All embedded tables in the core text forms, for external audit."""
    data: dict = {
        "pattern": [sorted(v.text() for v in p) for p in tables.X_PATTERN],
        "left_cap": list(tables.LEFT_CAP_PATHS),
        "centre": [list(pair) for pair in tables.CENTRE_PAIRS],
        "right_caps": {
            f"{family}:{anchor}": [list(row) for row in rows]
            for (family, anchor), (_, _, rows) in sorted(tables.RIGHT_CAPS.items())
        },
        "small_decompositions": {
            CycleType(key).text(): [list(row) for row in rows]
            for key, rows in sorted(tables.SMALL_DECOMPS.items())
        },
        "figure_4_8": [list(row) for row in tables.FIGURE_4_8],
        "supplemental_2_4_4": [list(row) for row in tables.SUPPLEMENTAL_2_4_4],
    }
    return data


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oberwolfach",
        description=(
            "Construct and certify directed 2-factorizations of complete "
            "symmetric digraphs with even cycle lengths (order 2 mod 4)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="construct a verified factorization")
    p_solve.add_argument("--n", type=int, required=True, help="number of vertices")
    p_solve.add_argument(
        "--factor", required=True, help='cycle type, e.g. "[2^3,4]" or "[2,2,2,4]"'
    )
    p_solve.add_argument(
        "--format", default="json", choices=sorted(serialize.FORMATS)
    )
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--timeout-ms", type=int, default=None)
    p_solve.add_argument("--out", default=None, help="output file (default stdout)")
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser("verify", help="re-check an exported JSON file")
    p_verify.add_argument("input")
    p_verify.set_defaults(func=cmd_verify)

    p_self = sub.add_parser("selftest", help="solve+verify all types up to --max-n")
    p_self.add_argument("--max-n", type=int, default=14)
    p_self.add_argument("--seed", type=int, default=0)
    p_self.set_defaults(func=cmd_selftest)

    p_tables = sub.add_parser("tables", help="audit or export the embedded tables")
    group = p_tables.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", action="store_true")
    group.add_argument("--dump", action="store_true")
    p_tables.set_defaults(func=cmd_tables)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
