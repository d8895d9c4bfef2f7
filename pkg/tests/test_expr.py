"""Parser, printer, and arity rules."""

import random

import pytest
from hypothesis import given, strategies as st

from helpers import rand_expr
from setcalc.errors import ArityError, ParseError
from setcalc.expr import (
    Atom,
    Complement,
    Difference,
    Empty,
    Identity,
    Intersect,
    Product,
    SolveRequest,
    SymDiff,
    Union,
    Universal,
    arity,
    atoms,
    parse,
    parse_expr,
    unparse,
    unparse_statement,
)

A, B, C, M = Atom("A"), Atom("B"), Atom("C"), Atom("M")


def test_parse_identity_shape():
    stmt = parse("A & B = B & A")
    assert stmt == Identity((), Intersect(A, B), Intersect(B, A))


def test_intersect_binds_tighter_than_union():
    assert parse_expr("A | B & M") == Union(A, Intersect(B, M))


def test_parenthesized_distributivity_statement():
    stmt = parse("(A | B) & M = (A & M) | (B & M)")
    assert stmt.lhs == Intersect(Union(A, B), M)
    assert stmt.rhs == Union(Intersect(A, M), Intersect(B, M))


def test_difference_chain_left_associative():
    assert parse_expr("A - B - C") == Difference(Difference(A, B), C)


def test_symdiff_chain_left_associative():
    assert parse_expr("A ^ B ^ C") == SymDiff(SymDiff(A, B), C)


def test_mixed_difference_symdiff_left_associative():
    assert parse_expr("A - B ^ C") == SymDiff(Difference(A, B), C)


def test_complement_is_tightest():
    assert parse_expr("~A * B") == Product(Complement(A), B)
    assert parse_expr("~A & B") == Intersect(Complement(A), B)


def test_product_and_constants():
    assert parse_expr("0") == Empty()
    assert parse_expr("U") == Universal()
    assert parse_expr("A * B * C") == Product(Product(A, B), C)


def test_conditional_statement():
    stmt = parse("A & B = 0 |- A ^ B = A | B")
    assert stmt.hypotheses == ((Intersect(A, B), Empty()),)
    assert stmt.lhs == SymDiff(A, B)


def test_solve_statement():
    stmt = parse("solve X, Y : A ^ X ^ B = A ; A ^ Y ^ B = B")
    assert isinstance(stmt, SolveRequest)
    assert stmt.unknowns == ("X", "Y")
    assert len(stmt.equations) == 2


def test_solve_rejects_duplicate_unknowns():
    with pytest.raises(ParseError):
        parse("solve X, X : A ^ X = A")


def test_solve_rejects_unused_unknown():
    with pytest.raises(ParseError):
        parse("solve X, Y : A ^ X = A")


def test_arity_values():
    assert arity(A) == 1
    assert arity(Product(A, Product(B, C))) == 3
    assert arity(Intersect(Product(A, B), Product(C, M))) == 2


def test_arity_mismatch_raises():
    with pytest.raises(ArityError):
        parse("A * B = B")
    with pytest.raises(ArityError):
        arity(Union(Product(A, B), C))


def test_solve_equations_must_be_arity_one():
    with pytest.raises(ArityError):
        parse("solve X : X * A = A * X")


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse("A -")
    assert err.value.position == 3


def test_trailing_garbage_rejected():
    with pytest.raises(ParseError):
        parse_expr("A | B )")


def test_unparse_examples():
    assert unparse(Intersect(A, B)) == "A & B"
    assert unparse(Union(A, Intersect(B, M))) == "A | B & M"
    assert unparse(Difference(Difference(A, B), C)) == "A - B - C"
    assert unparse(Intersect(Union(A, B), M)) == "(A | B) & M"
    assert unparse(Complement(Union(A, B))) == "~(A | B)"
    # mixed chains at the shared level are printed disambiguated
    assert unparse(SymDiff(Difference(A, B), C)) == "(A - B) ^ C"


def test_unparse_statement_round_trip():
    for text in [
        "A & B = 0 |- A ^ B = A | B",
        "solve X, Y : A ^ X ^ B = A ; A ^ Y ^ B = B",
        "(A | B) & M = (A & M) | (B & M)",
    ]:
        stmt = parse(text)
        assert parse(unparse_statement(stmt)) == stmt


def test_round_trip_random_asts():
    rng = random.Random(20240811)
    for _ in range(600):
        e = rand_expr(rng, depth=rng.randrange(0, 9), atom_names=("A", "B", "C", "M", "A_1"),
                      arity=rng.choice((1, 1, 1, 2, 3)))
        assert parse_expr(unparse(e)) == e


@given(st.text(max_size=40))
def test_parse_is_total(text):
    # arbitrary input either parses or raises a positioned error; no crashes
    try:
        parse(text)
    except ParseError as err:
        assert 0 <= err.position <= len(text)
    except ArityError:
        pass


@given(st.text(alphabet="AB01U~*&-^|()=,;:|- ", max_size=30))
def test_parse_is_total_on_dense_operator_soup(text):
    try:
        parse(text)
    except (ParseError, ArityError):
        pass


def test_reserved_words_are_not_atoms():
    assert parse_expr("U") == Universal()
    assert atoms(parse_expr("U | 0")) == frozenset()
