"""Finite ground models: universes, concrete sets, expression evaluation,
the symmetric-difference metric, witnesses, and randomized refutation.

Everything here is explicit and small: universes are ordered label lists,
sets are bit-vectors over them, and product values are materialized tuple
sets (capped at 65536 tuples).  The empty universe is allowed; every
identity holds over it vacuously and the structure suites degenerate to
one-element carriers.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from . import expr as ex
from .errors import (
    LimitError,
    NotACounterexampleError,
    UnboundAtomError,
    UniverseMismatchError,
)
from .indicator import Var, variables_of

#: cap on materialized product values: |universe| ** arity tuples
TUPLE_LIMIT = 65536

#: powerset enumeration cap
POWERSET_LIMIT = 16


@dataclass(frozen=True)
class Universe:
    """Ordered, distinct point labels. May be empty."""

    points: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("universe labels must be distinct")

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def of_size(cls, n: int) -> "Universe":
        return cls(tuple(f"p{i + 1}" for i in range(n)))


@dataclass(frozen=True)
class ConcreteSet:
    """Subset of a universe, stored as the tabulated membership bit-vector."""

    universe: Universe
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != len(self.universe):
            raise ValueError("bit-vector length does not match the universe")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("membership bits must be 0 or 1")

    @classmethod
    def from_labels(cls, universe: Universe, labels) -> "ConcreteSet":
        wanted = set(labels)
        unknown = wanted - set(universe.points)
        if unknown:
            raise ValueError(f"labels not in universe: {sorted(unknown)}")
        return cls(universe, tuple(1 if p in wanted else 0 for p in universe.points))

    @classmethod
    def empty(cls, universe: Universe) -> "ConcreteSet":
        return cls(universe, (0,) * len(universe))

    @classmethod
    def full(cls, universe: Universe) -> "ConcreteSet":
        return cls(universe, (1,) * len(universe))

    def members(self) -> tuple[str, ...]:
        return tuple(p for p, b in zip(self.universe.points, self.bits) if b)

    @property
    def cardinality(self) -> int:
        return sum(self.bits)

    def _join(self, other: "ConcreteSet") -> None:
        if not isinstance(other, ConcreteSet):
            raise TypeError(f"expected a ConcreteSet, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatchError("sets live in different universes")

    def __or__(self, other: "ConcreteSet") -> "ConcreteSet":
        self._join(other)
        return ConcreteSet(self.universe, tuple(a | b for a, b in zip(self.bits, other.bits)))

    def __and__(self, other: "ConcreteSet") -> "ConcreteSet":
        self._join(other)
        return ConcreteSet(self.universe, tuple(a & b for a, b in zip(self.bits, other.bits)))

    def __sub__(self, other: "ConcreteSet") -> "ConcreteSet":
        self._join(other)
        return ConcreteSet(self.universe, tuple(a & (1 - b) for a, b in zip(self.bits, other.bits)))

    def __xor__(self, other: "ConcreteSet") -> "ConcreteSet":
        self._join(other)
        return ConcreteSet(self.universe, tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __invert__(self) -> "ConcreteSet":
        return ConcreteSet(self.universe, tuple(1 - b for b in self.bits))

    def is_subset(self, other: "ConcreteSet") -> bool:
        self._join(other)
        return all(a <= b for a, b in zip(self.bits, other.bits))

    def __str__(self) -> str:
        return "{" + ", ".join(self.members()) + "}"


@dataclass(frozen=True)
class TupleSet:
    """Arity-r value: a set of r-tuples of point indices."""

    universe: Universe
    arity: int
    members: frozenset

    def labeled(self) -> list[tuple[str, ...]]:
        pts = self.universe.points
        return [tuple(pts[i] for i in t) for t in sorted(self.members)]

    @property
    def cardinality(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        inner = ", ".join("(" + ", ".join(t) + ")" for t in self.labeled())
        return "{" + inner + "}"


def eval_expr(
    e: ex.SetExpr, env: Mapping[str, ConcreteSet], universe: Universe
) -> ConcreteSet | TupleSet:
    """Evaluate an expression over a concrete universe.

    `env` must bind every atom of e to a set over `universe`.  Arity-1
    results come back as ConcreteSet, higher arities as TupleSet; the value
    agrees pointwise with evaluating the expression's indicator polynomial
    on each point's membership pattern.
    """
    for name in sorted(ex.atoms(e)):
        got = env.get(name)
        if got is None:
            raise UnboundAtomError(f"atom {name!r} has no concrete set assigned")
        if got.universe != universe:
            raise UniverseMismatchError(f"set for {name!r} lives in a different universe")
    r = ex.arity(e)
    tuples = _eval_tuples(e, env, universe)
    if r == 1:
        present = {t[0] for t in tuples}
        return ConcreteSet(universe, tuple(1 if i in present else 0 for i in range(len(universe))))
    return TupleSet(universe, r, frozenset(tuples))


def _all_tuples(n_points: int, r: int) -> frozenset:
    if n_points**r > TUPLE_LIMIT:
        raise LimitError(f"{n_points}^{r} tuples exceed the cap of {TUPLE_LIMIT}")
    return frozenset(itertools.product(range(n_points), repeat=r))


def _eval_tuples(e: ex.SetExpr, env, u: Universe) -> frozenset:
    if isinstance(e, ex.Atom):
        return frozenset((i,) for i, b in enumerate(env[e.name].bits) if b)
    if isinstance(e, ex.Empty):
        return frozenset()
    if isinstance(e, ex.Universal):
        return _all_tuples(len(u), 1)
    if isinstance(e, ex.Complement):
        return _all_tuples(len(u), ex.arity(e.e)) - _eval_tuples(e.e, env, u)
    if isinstance(e, ex.Product):
        if len(u) ** ex.arity(e) > TUPLE_LIMIT:
            raise LimitError(f"product value exceeds the cap of {TUPLE_LIMIT} tuples")
        left = _eval_tuples(e.left, env, u)
        right = _eval_tuples(e.right, env, u)
        return frozenset(a + b for a in left for b in right)
    left = _eval_tuples(e.left, env, u)
    right = _eval_tuples(e.right, env, u)
    if isinstance(e, ex.Union):
        return left | right
    if isinstance(e, ex.Intersect):
        return left & right
    if isinstance(e, ex.Difference):
        return left - right
    if isinstance(e, ex.SymDiff):
        return left ^ right
    raise TypeError(f"not a SetExpr: {e!r}")


def metric(a: ConcreteSet, b: ConcreteSet) -> int:
    """Cardinality of the symmetric difference; the distance on P(E)."""
    if a.universe != b.universe:
        raise UniverseMismatchError("metric needs sets over the same universe")
    return sum(x ^ y for x, y in zip(a.bits, b.bits))


def powerset(u: Universe) -> Iterator[ConcreteSet]:
    """All 2^|u| subsets exactly once, in bit-counting order."""
    n = len(u)
    if n > POWERSET_LIMIT:
        raise LimitError(f"powerset of {n} points exceeds the cap of {POWERSET_LIMIT}")
    for mask in range(1 << n):
        yield ConcreteSet(u, tuple((mask >> i) & 1 for i in range(n)))


# --- verdicts and witnesses ---------------------------------------------------


@dataclass
class Witness:
    """Concrete refutation: a universe plus named sets on which the two
    sides of a statement evaluate to different values."""

    universe: tuple[str, ...]
    assignment: dict[str, ConcreteSet]
    lhs_value: ConcreteSet | TupleSet
    rhs_value: ConcreteSet | TupleSet

    def render(self) -> str:
        lines = ["universe: " + " ".join(self.universe)]
        for name in sorted(self.assignment):
            lines.append(f"{name} = {self.assignment[name]}")
        lines.append(f"lhs = {self.lhs_value}")
        lines.append(f"rhs = {self.rhs_value}")
        return "\n".join(lines)


@dataclass
class Verdict:
    """Outcome of a validity check.

    `vacuous` marks conditionals whose hypotheses admit no pattern at all;
    `inconclusive` marks sampling-based checks that merely failed to refute.
    """

    valid: bool
    pattern: dict | None = None  # dict[Var, int]
    witness: Witness | None = None
    vacuous: bool = False
    inconclusive: bool = False

    @property
    def kind(self) -> str:
        if self.vacuous:
            return "vacuous"
        return "valid" if self.valid else "invalid"


def witness_from_pattern(pt: Mapping[Var, int], stmt: ex.Identity) -> Witness:
    """Build the one-point-per-coordinate witness for a refuting pattern.

    The universe has one point per coordinate slot (labels p1..pr); point i
    joins set S exactly when pt maps S at coordinate i to 1.  Raises
    NotACounterexampleError if the statement's sides agree on that model.
    """
    r = ex.arity(stmt.lhs)
    u = Universe.of_size(r)
    names = sorted({v.set_name for v in pt})
    assignment = {
        name: ConcreteSet(u, tuple(1 if pt.get(Var(name, i + 1), 0) else 0 for i in range(r)))
        for name in names
    }
    lhs_value = eval_expr(stmt.lhs, assignment, u)
    rhs_value = eval_expr(stmt.rhs, assignment, u)
    if lhs_value == rhs_value:
        raise NotACounterexampleError(f"pattern {_format_pattern(pt)} does not refute the statement")
    return Witness(u.points, assignment, lhs_value, rhs_value)


def _format_pattern(pt: Mapping[Var, int]) -> str:
    return " ".join(f"{v}={pt[v]}" for v in sorted(pt))


# --- randomized refutation ----------------------------------------------------


def _sample_bit(seed: int, trial: int, name: str, index: int) -> int:
    # documented, platform-stable sampling rule: first byte of
    # SHA-256("{seed}:{trial}:{name}:{index}"), reduced mod 2
    digest = hashlib.sha256(f"{seed}:{trial}:{name}:{index}".encode()).digest()
    return digest[0] & 1


def _as_index_tuples(value: ConcreteSet | TupleSet) -> frozenset:
    if isinstance(value, ConcreteSet):
        return frozenset((i,) for i, b in enumerate(value.bits) if b)
    return value.members


def random_model_check(
    stmt: ex.Identity, trials: int, universe_size: int, seed: int = 0
) -> Verdict:
    """Refutation-only sampling: try seeded random set assignments and
    report the first discrepancy.

    Each trial assigns every atom a uniform random subset of a fresh
    universe of `universe_size` points, with membership bit
    ``sha256(f"{seed}:{trial}:{name}:{point_index}").digest()[0] & 1`` —
    deterministic across runs and platforms.  Trials violating a hypothesis
    are skipped.  On a discrepancy the least differing point (or tuple) is
    turned into a minimal one-point-per-coordinate witness; otherwise the
    returned Verdict is valid but explicitly `inconclusive`.
    """
    u = Universe.of_size(universe_size)
    names = sorted(
        set().union(
            ex.atoms(stmt.lhs),
            ex.atoms(stmt.rhs),
            *(ex.atoms(l) | ex.atoms(r) for l, r in stmt.hypotheses),
        )
    )
    stmt_vars = sorted(
        variables_of(stmt.lhs)
        | variables_of(stmt.rhs)
        | frozenset().union(*(variables_of(l) | variables_of(r) for l, r in stmt.hypotheses))
    )
    for trial in range(trials):
        env = {
            name: ConcreteSet(
                u, tuple(_sample_bit(seed, trial, name, j) for j in range(universe_size))
            )
            for name in names
        }
        if any(eval_expr(l, env, u) != eval_expr(r, env, u) for l, r in stmt.hypotheses):
            continue
        lhs_value = eval_expr(stmt.lhs, env, u)
        rhs_value = eval_expr(stmt.rhs, env, u)
        if lhs_value != rhs_value:
            diff = _as_index_tuples(lhs_value) ^ _as_index_tuples(rhs_value)
            point = min(diff)
            pt = {v: env[v.set_name].bits[point[v.coord - 1]] for v in stmt_vars}
            return Verdict(False, pattern=pt, witness=witness_from_pattern(pt, stmt))
    return Verdict(True, inconclusive=True)
