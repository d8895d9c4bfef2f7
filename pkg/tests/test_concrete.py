"""Ground models: evaluation, metric, powerset, randomized refutation."""

import itertools
import random

import pytest

from helpers import rand_expr
from setcalc.concrete import (
    ConcreteSet,
    TupleSet,
    Universe,
    eval_expr,
    metric,
    powerset,
    random_model_check,
    witness_from_pattern,
)
from setcalc.decider import check_identity
from setcalc.errors import (
    LimitError,
    NotACounterexampleError,
    UnboundAtomError,
    UniverseMismatchError,
)
from setcalc.expr import atoms, parse, parse_expr
from setcalc.indicator import Var, evaluate, poly_from_expr

U3 = Universe(("1", "2", "3"))


def cset(universe, labels):
    return ConcreteSet.from_labels(universe, labels)


def test_eval_intersection():
    env = {"A": cset(U3, ["1", "2"]), "B": cset(U3, ["2", "3"])}
    assert eval_expr(parse_expr("A & B"), env, U3).members() == ("2",)


def test_eval_symmetric_difference():
    # (A - B) | (B - A) by hand: {1} with {3}
    env = {"A": cset(U3, ["1", "2"]), "B": cset(U3, ["2", "3"])}
    assert eval_expr(parse_expr("A ^ B"), env, U3).members() == ("1", "3")


def test_eval_product():
    env = {"A": cset(U3, ["1"]), "B": cset(U3, ["2"])}
    value = eval_expr(parse_expr("A * B"), env, U3)
    assert isinstance(value, TupleSet)
    assert value.labeled() == [("1", "2")]


def test_eval_unbound_atom():
    with pytest.raises(UnboundAtomError):
        eval_expr(parse_expr("A & B"), {"A": cset(U3, [])}, U3)


def test_eval_universe_mismatch():
    other = Universe(("x",))
    with pytest.raises(UniverseMismatchError):
        eval_expr(parse_expr("A"), {"A": ConcreteSet.empty(other)}, U3)


def test_metric_examples():
    assert metric(ConcreteSet.empty(U3), ConcreteSet.empty(U3)) == 0
    assert metric(cset(U3, ["1", "2"]), cset(U3, ["2", "3"])) == 2
    rng = random.Random(5)
    for _ in range(20):
        bits = tuple(rng.randint(0, 1) for _ in range(3))
        a = ConcreteSet(U3, bits)
        assert metric(a, a) == 0


def test_metric_cardinality_identity():
    # d(a,b) = |a| + |b| - 2|a&b| over every pair, |u| <= 4
    for size in range(5):
        u = Universe.of_size(size)
        sets = list(powerset(u))
        for a, b in itertools.product(sets, repeat=2):
            assert metric(a, b) == a.cardinality + b.cardinality - 2 * (a & b).cardinality


def test_powerset_counts_and_order():
    assert [s.members() for s in powerset(Universe(()))] == [()]
    assert len(list(powerset(Universe.of_size(3)))) == 8
    assert len(list(powerset(Universe.of_size(4)))) == 16
    first_two = list(powerset(Universe.of_size(2)))[:2]
    assert first_two[0].members() == ()
    assert first_two[1].members() == ("p1",)


def test_powerset_limit():
    with pytest.raises(LimitError):
        list(powerset(Universe.of_size(17)))


def test_union_decomposition_exhaustive():
    lhs = parse_expr("(A - B) | (B - A) | (A & B)")
    rhs = parse_expr("A | B")
    for size in range(5):
        u = Universe.of_size(size)
        for a, b in itertools.product(powerset(u), repeat=2):
            env = {"A": a, "B": b}
            assert eval_expr(lhs, env, u) == eval_expr(rhs, env, u)


def test_semantic_agreement_with_polynomials():
    # point p in eval(e)  <=>  poly(e) evaluates to 1 at p's pattern
    rng = random.Random(17)
    names = ("A", "B", "C", "D")
    for _ in range(60):
        e = rand_expr(rng, 4, names)
        size = rng.randrange(5)
        u = Universe.of_size(size)
        env = {
            name: ConcreteSet(u, tuple(rng.randint(0, 1) for _ in range(size)))
            for name in names
        }
        value = eval_expr(e, env, u)
        poly = poly_from_expr(e)
        for i, label in enumerate(u.points):
            pt = {Var(name): env[name].bits[i] for name in names}
            assert (label in value.members()) == (evaluate(poly, pt) == 1)


def test_empty_universe_is_allowed():
    u = Universe(())
    env = {"A": ConcreteSet.empty(u)}
    assert eval_expr(parse_expr("A | ~A"), env, u).members() == ()
    assert metric(ConcreteSet.empty(u), ConcreteSet.full(u)) == 0


def test_witness_from_pattern_arity_one():
    stmt = parse("A ^ B = A | B")
    w = witness_from_pattern({Var("A"): 1, Var("B"): 1}, stmt)
    assert w.universe == ("p1",)
    assert w.assignment["A"].members() == ("p1",)
    assert w.lhs_value.members() == ()
    assert w.rhs_value.members() == ("p1",)


def test_witness_from_pattern_rejects_non_counterexample():
    stmt = parse("A ^ B = A | B")
    with pytest.raises(NotACounterexampleError):
        witness_from_pattern({Var("A"): 1, Var("B"): 0}, stmt)


def test_witness_from_pattern_product_arity():
    stmt = parse("A * B = B * A")
    pt = {Var("A", 1): 1, Var("B", 2): 1, Var("B", 1): 0, Var("A", 2): 0}
    w = witness_from_pattern(pt, stmt)
    assert w.universe == ("p1", "p2")
    assert w.lhs_value != w.rhs_value


def test_random_model_check_finds_refutation_with_disjointness_structure():
    # every refuting model must overlap A and B: the only refuting pattern
    # has both bits set
    stmt = parse("A ^ B = A | B")
    verdict = random_model_check(stmt, trials=100, universe_size=4, seed=3)
    assert not verdict.valid
    overlap = verdict.witness.assignment["A"] & verdict.witness.assignment["B"]
    assert overlap.cardinality > 0


def test_random_model_check_inconclusive_on_valid_statement():
    stmt = parse("(A | B) & M = (A & M) | (B & M)")
    verdict = random_model_check(stmt, trials=100, universe_size=4, seed=3)
    assert verdict.valid and verdict.inconclusive


def test_random_model_check_zero_trials():
    verdict = random_model_check(parse("A ^ B = A | B"), trials=0, universe_size=4, seed=0)
    assert verdict.valid and verdict.inconclusive


def test_random_model_check_deterministic_in_seed():
    stmt = parse("A - B = B - A")
    v1 = random_model_check(stmt, trials=50, universe_size=3, seed=11)
    v2 = random_model_check(stmt, trials=50, universe_size=3, seed=11)
    assert v1.pattern == v2.pattern
    assert v1.witness.render() == v2.witness.render()


def test_random_model_check_respects_hypotheses():
    stmt = parse("A & B = 0 |- A ^ B = A | B")
    verdict = random_model_check(stmt, trials=200, universe_size=3, seed=1)
    assert verdict.valid


def test_random_model_check_never_refutes_valid_corpus_statements():
    # soundness of refutation across 10^4 sampled models
    texts = [
        "~(A | B | C) = ~A & ~B & ~C",
        "(A | B | C) & M = (A & M) | (B & M) | (C & M)",
        "(A ^ B) | (B ^ C) = (A | B | C) - (A & B & C)",
        "M * (A - B - C) = (M * A) - (M * B) - (M * C)",
        "A | B = (A - B) | (B - A) | (A & B)",
    ]
    for text in texts:
        stmt = parse(text)
        assert check_identity(stmt).valid
        for seed in range(4):
            verdict = random_model_check(stmt, trials=500, universe_size=3, seed=seed)
            assert verdict.valid, f"spurious refutation of {text} at seed {seed}"
