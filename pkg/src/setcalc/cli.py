"""Command-line front end.

Commands: check, normalize, solve, structures, corpus.  Exit codes: 0 for
success/valid, 1 for an expected failure (invalid verdict, failed corpus
entry, unsolvable system), 2 for usage, parse, or limit errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from . import structures as st
from .concrete import ConcreteSet, TupleSet, Universe, Verdict
from .decider import SolutionTable, check_conditional, check_identity, solve
from .errors import ArityError, LimitError, ParseError, SetCalcError
from .expr import Identity, SolveRequest, arity, parse, parse_expr, unparse, unparse_statement
from .indicator import DEFAULT_GUARD, format_poly, poly_from_expr

USAGE_ERROR = 2
EXPECTED_FAILURE = 1


def _value_json(value):
    if value is None:
        return None
    if isinstance(value, ConcreteSet):
        return list(value.members())
    if isinstance(value, TupleSet):
        return [list(t) for t in value.labeled()]
    return value


def _verdict_json(statement_text: str, verdict: Verdict) -> dict:
    witness = verdict.witness
    return {
        "statement": statement_text,
        "verdict": verdict.kind,
        "pattern": None
        if verdict.pattern is None
        else {str(v): bit for v, bit in sorted(verdict.pattern.items())},
        "witness": None
        if witness is None
        else {
            "universe": list(witness.universe),
            "sets": {name: list(s.members()) for name, s in sorted(witness.assignment.items())},
        },
        "lhs_value": _value_json(witness.lhs_value if witness else None),
        "rhs_value": _value_json(witness.rhs_value if witness else None),
    }


def _pattern_text(pattern) -> str:
    return " ".join(f"{v}={bit}" for v, bit in sorted(pattern.items()))


def cmd_check(args) -> int:
    stmt = parse(args.statement)
    if isinstance(stmt, SolveRequest):
        print("check expects an identity statement; use `setcalc solve`", file=sys.stderr)
        return USAGE_ERROR
    verdict = (
        check_conditional(stmt, args.guard)
        if stmt.hypotheses
        else check_identity(stmt, args.guard)
    )
    if args.json:
        print(json.dumps(_verdict_json(unparse_statement(stmt), verdict), indent=2))
    else:
        print(verdict.kind)
        if not verdict.valid:
            print(f"pattern: {_pattern_text(verdict.pattern)}")
            if args.witness:
                print(verdict.witness.render())
    return 0 if verdict.valid else EXPECTED_FAILURE


def cmd_normalize(args) -> int:
    e = parse_expr(args.expression)
    poly = poly_from_expr(e, args.guard)
    text = format_poly(poly, show_coords=arity(e) > 1)
    if args.json:
        print(json.dumps({"expression": unparse(e), "polynomial": text}, indent=2))
    else:
        print(text)
    return 0


def _solution_rows_text(table: SolutionTable) -> list[str]:
    lines = []
    params = table.parameters
    lines.append("parameters: " + (", ".join(str(v) for v in params) or "(none)"))
    lines.append("unknowns: " + ", ".join(table.unknowns))
    for key, options in table.rows.items():
        left = " ".join(f"{v}={b}" for v, b in zip(params, key)) or "(empty)"
        if not options:
            right = "(none)"
        else:
            right = " | ".join(
                " ".join(f"{u}={b}" for u, b in zip(table.unknowns, bits)) for bits in options
            )
        lines.append(f"pattern {left}: {right}")
    return lines


def cmd_solve(args) -> int:
    stmt = parse(args.statement)
    if isinstance(stmt, Identity):
        print("solve expects a `solve ...` statement; use `setcalc check`", file=sys.stderr)
        return USAGE_ERROR
    table = solve(stmt, args.guard)
    if args.json:
        payload = {
            "statement": unparse_statement(stmt),
            "parameters": [str(v) for v in table.parameters],
            "unknowns": list(table.unknowns),
            "rows": [
                {"pattern": {str(v): b for v, b in zip(table.parameters, key)},
                 "allowed": [list(bits) for bits in options]}
                for key, options in table.rows.items()
            ],
            "solvable": table.solvable,
            "unique_solution": None
            if not table.unique_polys
            else {
                name: {
                    "polynomial": format_poly(table.unique_polys[name]),
                    "expression": None
                    if table.unique_exprs[name] is None
                    else unparse(table.unique_exprs[name]),
                }
                for name in table.unknowns
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        for line in _solution_rows_text(table):
            print(line)
        if not table.solvable:
            print("unsolvable")
        elif table.unique_polys:
            print("unique solution:")
            for name in table.unknowns:
                e = table.unique_exprs[name]
                shown = unparse(e) if e is not None else format_poly(table.unique_polys[name])
                print(f"  {name} = {shown}")
    return 0 if table.solvable else EXPECTED_FAILURE


SUITES = {
    "monoid-union": lambda u, seed: st.check_monoid("union", u),
    "monoid-intersect": lambda u, seed: st.check_monoid("intersect", u),
    "group": lambda u, seed: st.check_group_symdiff(u),
    "boolean-ring": lambda u, seed: st.check_boolean_ring(u),
    "isomorphism": lambda u, seed: st.check_isomorphism(u),
    "metric": lambda u, seed: st.check_metric_space(u, seed=seed),
}


def cmd_structures(args) -> int:
    u = Universe.of_size(args.universe_size)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [SUITES[name](u, args.seed) for name in names]
    if args.json:
        print(json.dumps([st.report_json(r) for r in reports], indent=2))
    else:
        print("\n\n".join(st.render_report(r) for r in reports))
    return 0 if all(r.passed for r in reports) else EXPECTED_FAILURE


_CORPUS_LINE = re.compile(
    r"^\[(?P<id>[^\]]+)\]\s*(?P<statement>.*?)\s*::\s*expect\s+(?P<expect>\S+)\s*$"
)
EXPECTATIONS = ("valid", "invalid", "solvable", "report")


@dataclass
class CorpusEntry:
    entry_id: str
    line_number: int
    statement: Identity | SolveRequest
    expectation: str


class CorpusFormatError(SetCalcError):
    def __init__(self, path, line_number, reason):
        self.line_number = line_number
        super().__init__(f"{path}:{line_number}: {reason}")


def read_corpus(path: str) -> list[CorpusEntry]:
    """Parse a corpus file: one `[id] statement :: expect <verdict>` per
    line, with `#` comments and blank lines ignored."""
    entries = []
    seen = set()
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            m = _CORPUS_LINE.match(line)
            if not m:
                raise CorpusFormatError(path, lineno, "malformed corpus line")
            entry_id = m.group("id")
            if entry_id in seen:
                raise CorpusFormatError(path, lineno, f"duplicate id [{entry_id}]")
            seen.add(entry_id)
            expect = m.group("expect")
            if expect not in EXPECTATIONS:
                raise CorpusFormatError(path, lineno, f"unknown expectation {expect!r}")
            try:
                stmt = parse(m.group("statement"))
            except (ParseError, ArityError) as err:
                raise CorpusFormatError(path, lineno, f"bad statement: {err}") from err
            entries.append(CorpusEntry(entry_id, lineno, stmt, expect))
    return entries


def run_corpus_entry(entry: CorpusEntry, guard: int = DEFAULT_GUARD):
    """Run one entry; returns (outcome string, verdict-or-table)."""
    stmt = entry.statement
    if isinstance(stmt, SolveRequest):
        table = solve(stmt, guard)
        return ("solvable" if table.solvable else "unsolvable"), table
    verdict = check_conditional(stmt, guard) if stmt.hypotheses else check_identity(stmt, guard)
    return ("valid" if verdict.valid else "invalid"), verdict


def cmd_corpus(args) -> int:
    try:
        entries = read_corpus(args.path)
    except OSError as err:
        print(err, file=sys.stderr)
        return USAGE_ERROR
    passed = failed = 0
    for entry in entries:
        outcome, _ = run_corpus_entry(entry, args.guard)
        ok = entry.expectation == "report" or outcome == entry.expectation
        if ok:
            passed += 1
            print(f"[{entry.entry_id}] PASS ({outcome})")
        else:
            failed += 1
            print(f"[{entry.entry_id}] FAIL (expected {entry.expectation}, got {outcome})")
    print(f"{passed} passed, {failed} failed")
    return 0 if failed == 0 else EXPECTED_FAILURE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="setcalc",
        description="Decide set identities exactly via multilinear indicator polynomials.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_guard(p):
        p.add_argument(
            "--guard",
            type=int,
            default=DEFAULT_GUARD,
            help=f"variable-count limit (default {DEFAULT_GUARD})",
        )

    p = sub.add_parser("check", help="decide an identity or conditional identity")
    p.add_argument("statement")
    p.add_argument("--witness", action="store_true", help="print a refuting model when invalid")
    p.add_argument("--json", action="store_true")
    add_guard(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("normalize", help="print an expression's polynomial normal form")
    p.add_argument("expression")
    p.add_argument("--json", action="store_true")
    add_guard(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("solve", help="solve a system of set equations for unknowns")
    p.add_argument("statement")
    p.add_argument("--json", action="store_true")
    add_guard(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("structures", help="run an algebraic structure suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("-k", "--universe-size", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_structures)

    p = sub.add_parser("corpus", help="run every entry of a corpus file")
    p.add_argument("path")
    add_guard(p)
    p.set_defaults(func=cmd_corpus)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except (ArityError, LimitError, CorpusFormatError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
