"""Decision procedures: identities, conditionals, solving, enumeration."""

import itertools
import random

import pytest

from helpers import rand_identity
from setcalc.concrete import ConcreteSet, Universe, eval_expr
from setcalc.decider import (
    check_conditional,
    check_identity,
    enumerate_patterns,
    solve,
    statement_variables,
    truth_value,
)
from setcalc.errors import LimitError
from setcalc.expr import Identity, parse, parse_expr
from setcalc.indicator import Var, poly_from_expr

vA, vB, vC, vM = Var("A"), Var("B"), Var("C"), Var("M")


def test_valid_identities():
    for text in [
        "(A | B) & M = (A & M) | (B & M)",
        "(A - B) | (B - C) | (C - A) = (A | B | C) - (A & B & C)",
        "(A * B) & (B * A) = (A & B) * (A & B)",
    ]:
        assert check_identity(parse(text)).valid, text


def test_difference_asymmetry_counterexample():
    verdict = check_identity(parse("A - B = B - A"))
    assert not verdict.valid
    assert verdict.pattern == {vA: 1, vB: 0}


def test_invalid_verdict_carries_sound_witness():
    verdict = check_identity(parse("A ^ B = A | B"))
    assert verdict.pattern == {vA: 1, vB: 1}
    w = verdict.witness
    assert w.lhs_value != w.rhs_value
    assert w.assignment["A"].members() == ("p1",)
    assert w.assignment["B"].members() == ("p1",)


def test_check_identity_rejects_hypotheses():
    with pytest.raises(ValueError):
        check_identity(parse("A = 0 |- A = 0"))


def test_conditional_examples():
    assert check_conditional(parse("A & B = 0 |- A ^ B = A | B")).valid
    verdict = check_conditional(parse("A ^ B = A | B"))
    assert not verdict.valid and verdict.pattern == {vA: 1, vB: 1}
    assert check_conditional(
        parse("A | B | C = D, A | B | D = C, A | C | D = B, B | C | D = A |- A = B")
    ).valid
    assert check_conditional(parse("M = 0 |- (A ^ B) | M = (A | M) ^ (B | M)")).valid
    assert not check_identity(parse("(A ^ B) | M = (A | M) ^ (B | M)")).valid


def test_vacuous_hypotheses_flagged():
    verdict = check_conditional(parse("U = 0 |- A = B"))
    assert verdict.valid and verdict.vacuous
    assert verdict.kind == "vacuous"


def test_hypothesis_monotonicity():
    # a valid identity stays valid under any added hypotheses
    rng = random.Random(23)
    texts = ["A | B = B | A", "A & (B | C) = (A & B) | (A & C)", "A ^ A = 0"]
    hyps = ["A & B = 0", "A = B", "C = U", "A | B = C"]
    for text in texts:
        base = parse(text)
        assert check_identity(base).valid
        for _ in range(5):
            chosen = tuple(
                parse(h).lhs_rhs if False else (parse(h).lhs, parse(h).rhs)
                for h in rng.sample(hyps, rng.randrange(1, len(hyps)))
            )
            stmt = Identity(chosen, base.lhs, base.rhs)
            assert check_conditional(stmt).valid


def test_enumerate_patterns_order_and_counts():
    assert list(enumerate_patterns([])) == [{}]
    pats = list(enumerate_patterns([vA, vB]))
    assert pats == [
        {vA: 0, vB: 0},
        {vA: 1, vB: 0},
        {vA: 0, vB: 1},
        {vA: 1, vB: 1},
    ]


def test_enumerate_patterns_guard_boundary():
    vs24 = [Var(f"A{k}") for k in range(24)]
    stream = enumerate_patterns(vs24)  # 24 itself is allowed
    assert next(iter(stream)) == {v: 0 for v in vs24}
    with pytest.raises(LimitError):
        enumerate_patterns([Var(f"A{k}") for k in range(25)])


def test_statement_variables_include_hypotheses():
    stmt = parse("M = 0 |- A = B")
    assert statement_variables(stmt) == [vA, vB, vM]


def test_truth_value_matches_polynomial_on_products():
    e = parse_expr("(A * B) & ~(C * M)")
    poly = poly_from_expr(e)
    vs = sorted(poly.variables())
    from setcalc.indicator import evaluate

    for bits in itertools.product((0, 1), repeat=len(vs)):
        pt = dict(zip(vs, bits))
        assert truth_value(e, pt) == evaluate(poly, pt)


def test_dual_method_agreement_random():
    rng = random.Random(4242)
    for _ in range(300):
        stmt = rand_identity(rng)
        nf্equal = poly_from_expr(stmt.lhs) == poly_from_expr(stmt.rhs)
        vs = statement_variables(stmt)
        oracle_valid = all(
            truth_value(stmt.lhs, pt) == truth_value(stmt.rhs, pt)
            for pt in enumerate_patterns(vs)
        )
        assert nf_equal == oracle_valid
        assert check_identity(stmt).valid == nf_equal


def test_invalid_patterns_confirmed_by_one_point_models():
    # completeness at desk scale: the reported pattern matches a refuting
    # one-point model found by exhaustive search
    rng = random.Random(555)
    u = Universe.of_size(1)
    subsets = list(
        ConcreteSet(u, (b,)) for b in (0, 1)
    )
    checked = 0
    while checked < 60:
        stmt = rand_identity(rng, atom_names=("A", "B", "C"), depth=4)
        verdict = check_identity(stmt)
        if verdict.valid:
            continue
        checked += 1
        names = sorted({v.set_name for v in statement_variables(stmt)})
        refuting = set()
        for combo in itertools.product(subsets, repeat=len(names)):
            env = dict(zip(names, combo))
            if eval_expr(stmt.lhs, env, u) != eval_expr(stmt.rhs, env, u):
                refuting.add(tuple(env[n].bits[0] for n in names))
        reported = tuple(verdict.pattern[Var(n)] for n in names)
        assert reported in refuting


def test_solve_symdiff_cancellation():
    # brute-force oracle: x must equal b and y must equal a on every pattern
    for a, b, x in itertools.product((0, 1), repeat=3):
        assert ((a ^ x ^ b) == a) == (x == b)
    table = solve(parse("solve X, Y : A ^ X ^ B = A ; A ^ Y ^ B = B"))
    assert table.solvable and table.unique
    assert str(table.unique_exprs["X"]) == "B"
    assert str(table.unique_exprs["Y"]) == "A"


def test_solve_equality_constrained_pair():
    # brute-force oracle: for each a, admissible (x, y) are exactly x == y
    for a in (0, 1):
        allowed = {
            (x, y)
            for x, y in itertools.product((0, 1), repeat=2)
            if (a | x | y) == ((a | x) & (a | y)) and (a & x & y) == ((a & x) | (a & y))
        }
        assert allowed == {(0, 0), (1, 1)}
    table = solve(
        parse("solve X, Y : A | X | Y = (A | X) & (A | Y) ; A & X & Y = (A & X) | (A & Y)")
    )
    assert table.solvable and not table.unique
    assert all(opts == ((0, 0), (1, 1)) for opts in table.rows.values())


def test_solve_contradiction():
    table = solve(parse("solve X : X & ~X = U"))
    assert not table.solvable
    assert all(opts == () for opts in table.rows.values())


def test_solve_without_parameters():
    table = solve(parse("solve X : X = 0"))
    assert table.parameters == ()
    assert table.unique
    assert str(table.unique_exprs["X"]) == "0"


def test_solve_check_consistency():
    # substituting a unique solution satisfies every equation pointwise
    req = parse("solve X, Y : A ^ X ^ B = A ; A ^ Y ^ B = B")
    table = solve(req)
    u = Universe.of_size(1)
    for abits in itertools.product((0, 1), repeat=len(table.parameters)):
        env = {
            v.set_name: ConcreteSet(u, (bit,)) for v, bit in zip(table.parameters, abits)
        }
        for name in table.unknowns:
            env[name] = eval_expr(table.unique_exprs[name], env, u)
        for lhs, rhs in req.equations:
            assert eval_expr(lhs, env, u) == eval_expr(rhs, env, u)


def test_solve_guard():
    text = "solve X : " + " | ".join(f"A{k}" for k in range(1, 25)) + " | X = U"
    with pytest.raises(LimitError):
        solve(parse(text))
