"""Exact decision procedures for set statements.

Validity over *every* universe reduces to agreement on membership patterns:
an element only matters through the vector of bits saying which named sets
it belongs to, so an identity holds everywhere iff both sides agree on all
2^k patterns, iff the two indicator polynomials are equal.  Both routes are
computed here and asserted to agree on every call; the pattern route also
yields the least refuting pattern, from which a concrete witness is built.

Conditional identities restrict the admissible patterns to those satisfying
every hypothesis equation.  Equation systems are solved pointwise: for each
parameter pattern, the admissible unknown-bit combinations are enumerated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from . import expr as ex
from .concrete import Verdict, Witness, witness_from_pattern
from .errors import LimitError
from .indicator import (
    DEFAULT_GUARD,
    IndicatorPoly,
    Var,
    evaluate,
    expr_from_poly,
    poly_from_expr,
    poly_from_values,
    variables_of,
)

Pattern = dict  # dict[Var, int]


def statement_variables(stmt: ex.Identity) -> list[Var]:
    """Sorted membership variables of the statement, hypotheses included."""
    vs = variables_of(stmt.lhs) | variables_of(stmt.rhs)
    for l, r in stmt.hypotheses:
        vs |= variables_of(l) | variables_of(r)
    return sorted(vs)


def enumerate_patterns(variables: Sequence[Var], guard: int = DEFAULT_GUARD) -> Iterator[Pattern]:
    """All 2^n assignments of {0,1} to the variables, exactly once.

    Patterns arrive in binary-counter order with the first variable as the
    least significant bit; reported counterexamples are always the first
    refuting pattern in this order.
    """
    vs = tuple(variables)
    if len(set(vs)) != len(vs):
        raise ValueError("duplicate variables")
    if len(vs) > guard:
        raise LimitError(f"{len(vs)} variables exceed the guard of {guard}")
    return _pattern_stream(vs)


def _pattern_stream(vs: tuple[Var, ...]) -> Iterator[Pattern]:
    for idx in range(1 << len(vs)):
        yield {v: (idx >> j) & 1 for j, v in enumerate(vs)}


def truth_value(e: ex.SetExpr, pt: Mapping[Var, int], offset: int = 0) -> int:
    """Direct 0/1 evaluation of an expression at a membership pattern.

    Independent of the polynomial route on purpose — this is the oracle the
    deciders cross-check against.
    """
    if isinstance(e, ex.Atom):
        return pt[Var(e.name, offset + 1)]
    if isinstance(e, ex.Empty):
        return 0
    if isinstance(e, ex.Universal):
        return 1
    if isinstance(e, ex.Complement):
        return 1 - truth_value(e.e, pt, offset)
    if isinstance(e, ex.Product):
        return truth_value(e.left, pt, offset) & truth_value(
            e.right, pt, offset + ex.arity(e.left)
        )
    a = truth_value(e.left, pt, offset)
    b = truth_value(e.right, pt, offset)
    if isinstance(e, ex.Union):
        return a | b
    if isinstance(e, ex.Intersect):
        return a & b
    if isinstance(e, ex.Difference):
        return a & (1 - b)
    if isinstance(e, ex.SymDiff):
        return a ^ b
    raise TypeError(f"not a SetExpr: {e!r}")


def check_identity(stmt: ex.Identity, guard: int = DEFAULT_GUARD) -> Verdict:
    """Decide an unconditional identity exactly.

    Primary method: equality of the two multilinear normal forms.  The full
    pattern enumeration runs as well, and the two verdicts are asserted to
    coincide; an Invalid verdict carries the least refuting pattern and a
    one-point-per-coordinate witness.
    """
    if stmt.hypotheses:
        raise ValueError("statement has hypotheses; use check_conditional")
    vs = statement_variables(stmt)
    if len(vs) > guard:
        raise LimitError(f"{len(vs)} variables exceed the guard of {guard}")
    normal_form_valid = poly_from_expr(stmt.lhs, guard) == poly_from_expr(stmt.rhs, guard)
    bad = None
    for pt in _pattern_stream(tuple(vs)):
        if truth_value(stmt.lhs, pt) != truth_value(stmt.rhs, pt):
            bad = pt
            break
    assert normal_form_valid == (bad is None), (
        "normal-form and pattern-enumeration verdicts disagree on "
        + ex.unparse_statement(stmt)
    )
    if bad is None:
        return Verdict(True)
    return Verdict(False, pattern=bad, witness=witness_from_pattern(bad, stmt))


def check_conditional(stmt: ex.Identity, guard: int = DEFAULT_GUARD) -> Verdict:
    """Decide `hypotheses |- lhs = rhs`.

    A pattern is admissible when every hypothesis equation's two sides
    evaluate equal at it; the conclusion must hold on all admissible
    patterns.  When no pattern is admissible the verdict is valid but
    flagged vacuous.  Polynomial evaluation and the direct truth-value
    oracle are both run per pattern and asserted to agree.
    """
    if not stmt.hypotheses:
        return check_identity(stmt, guard)
    vs = statement_variables(stmt)
    if len(vs) > guard:
        raise LimitError(f"{len(vs)} variables exceed the guard of {guard}")
    lhs_poly = poly_from_expr(stmt.lhs, guard)
    rhs_poly = poly_from_expr(stmt.rhs, guard)
    hyp_polys = [
        (poly_from_expr(l, guard), poly_from_expr(r, guard)) for l, r in stmt.hypotheses
    ]
    admissible_seen = False
    for pt in _pattern_stream(tuple(vs)):
        sat = all(evaluate(pl, pt) == evaluate(pr, pt) for pl, pr in hyp_polys)
        sat_oracle = all(
            truth_value(l, pt) == truth_value(r, pt) for l, r in stmt.hypotheses
        )
        assert sat == sat_oracle, "hypothesis satisfaction methods disagree"
        if not sat:
            continue
        admissible_seen = True
        agree = evaluate(lhs_poly, pt) == evaluate(rhs_poly, pt)
        agree_oracle = truth_value(stmt.lhs, pt) == truth_value(stmt.rhs, pt)
        assert agree == agree_oracle, "conclusion evaluation methods disagree"
        if not agree:
            return Verdict(False, pattern=pt, witness=witness_from_pattern(pt, stmt))
    if not admissible_seen:
        return Verdict(True, vacuous=True)
    return Verdict(True)


@dataclass
class SolutionTable:
    """Pointwise solution of an equation system.

    For every assignment of the parameter variables, `rows` lists the
    unknown bit-vectors (aligned with `unknowns`) under which all equations
    hold.  The system is solvable over every universe iff no row is empty;
    when every row is a singleton, each unknown is a function of the
    parameters and `unique_polys`/`unique_exprs` carry its closed form.
    """

    parameters: tuple[Var, ...]
    unknowns: tuple[str, ...]
    rows: dict  # dict[tuple[int, ...], tuple[tuple[int, ...], ...]]
    unique_polys: dict | None = None  # dict[str, IndicatorPoly]
    unique_exprs: dict | None = None  # dict[str, SetExpr | None]

    @property
    def solvable(self) -> bool:
        return all(self.rows.values())

    @property
    def unique(self) -> bool:
        return all(len(opts) == 1 for opts in self.rows.values())


def solve(req: ex.SolveRequest, guard: int = DEFAULT_GUARD) -> SolutionTable:
    """Solve a system of arity-1 set equations for the unknown sets.

    Works pointwise over membership patterns: element by element, an
    unknown's bit may be chosen freely as long as every equation holds, so
    solvability and the full solution space are captured by one table of
    admissible unknown-bit combinations per parameter pattern.
    """
    unknown_names = set(req.unknowns)
    mentioned = set()
    for l, r in req.equations:
        mentioned |= ex.atoms(l) | ex.atoms(r)
    parameters = tuple(sorted(Var(name) for name in mentioned - unknown_names))
    unknown_vars = tuple(Var(name) for name in req.unknowns)
    if len(parameters) + len(unknown_vars) > guard:
        raise LimitError(
            f"{len(parameters) + len(unknown_vars)} variables exceed the guard of {guard}"
        )
    rows = {}
    for ppt in _pattern_stream(parameters):
        allowed = []
        for bits in itertools.product((0, 1), repeat=len(unknown_vars)):
            pt = dict(ppt)
            pt.update(zip(unknown_vars, bits))
            if all(truth_value(l, pt) == truth_value(r, pt) for l, r in req.equations):
                allowed.append(bits)
        rows[tuple(ppt[v] for v in parameters)] = tuple(sorted(allowed))
    table = SolutionTable(parameters, req.unknowns, rows)
    if table.solvable and table.unique:
        table.unique_polys = {}
        table.unique_exprs = {}
        param_names = [v.set_name for v in parameters]
        for j, name in enumerate(req.unknowns):
            values = {key: opts[0][j] for key, opts in rows.items()}
            poly = poly_from_values(parameters, values)
            table.unique_polys[name] = poly
            table.unique_exprs[name] = expr_from_poly(poly, param_names)
    return table
