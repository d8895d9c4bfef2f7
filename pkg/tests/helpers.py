"""Seeded random generators shared by the test modules."""

import random

from setcalc.expr import (
    Atom,
    Complement,
    Difference,
    Empty,
    Identity,
    Intersect,
    Product,
    SymDiff,
    Union,
    Universal,
)

BINARY_OPS = (Union, Intersect, Difference, SymDiff)


def rand_expr(rng: random.Random, depth: int, atom_names, arity: int = 1):
    """Random well-formed expression of the requested arity."""
    if arity > 1:
        # peel off one coordinate at a time; factors are arity-1 subtrees
        split = rng.randrange(1, arity)
        if depth > 0 and rng.random() < 0.25:
            op = rng.choice(BINARY_OPS)
            return op(
                rand_expr(rng, depth - 1, atom_names, arity),
                rand_expr(rng, depth - 1, atom_names, arity),
            )
        return Product(
            rand_expr(rng, max(depth - 1, 0), atom_names, split),
            rand_expr(rng, max(depth - 1, 0), atom_names, arity - split),
        )
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.84:
            return Atom(rng.choice(atom_names))
        return Empty() if roll < 0.92 else Universal()
    roll = rng.random()
    if roll < 0.2:
        return Complement(rand_expr(rng, depth - 1, atom_names))
    op = rng.choice(BINARY_OPS)
    return op(
        rand_expr(rng, depth - 1, atom_names),
        rand_expr(rng, depth - 1, atom_names),
    )


def rand_identity(rng: random.Random, atom_names=("A", "B", "C", "D"), depth: int = 6) -> Identity:
    """Random unconditional arity-1 identity."""
    return Identity(
        (),
        rand_expr(rng, rng.randrange(1, depth + 1), atom_names),
        rand_expr(rng, rng.randrange(1, depth + 1), atom_names),
    )
