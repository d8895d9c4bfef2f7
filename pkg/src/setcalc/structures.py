"""Exhaustive verification of algebraic structure on P(E) over small universes.

Every suite quantifies over at most triples of subsets, so a universe of
four points (4096 triples over 16 subsets) already exercises each axiom on
every case it can distinguish; the symbolic corpus covers the general`n`.
Suites return StructureReport values listing each axiom with a pass/fail
flag and, on failure, the offending tuple of concrete sets.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import expr as ex
from .concrete import ConcreteSet, Universe, eval_expr, metric, powerset
from .errors import CodomainUnspecifiedError, LimitError

SUITE_LIMIT = 4
SCAN_LIMIT = 3


@dataclass
class AxiomResult:
    name: str
    passed: bool
    counterexample: tuple | None = None  # tuple of ConcreteSets


@dataclass
class StructureReport:
    structure: str
    universe_size: int
    axioms: list[AxiomResult]
    extras: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms)


def _require_small(u: Universe, limit: int = SUITE_LIMIT) -> None:
    if len(u) > limit:
        raise LimitError(f"universe of {len(u)} points exceeds the suite cap of {limit}")


def _axiom(name: str, failing: tuple | None) -> AxiomResult:
    return AxiomResult(name, failing is None, failing)


def _first_fail(tuples, pred) -> tuple | None:
    for t in tuples:
        if not pred(*t):
            return t
    return None


def check_monoid(op: str, u: Universe) -> StructureReport:
    """Commutative-monoid axioms for union or intersection on P(E).

    Neutral element: the empty set for union, the whole universe for
    intersection.
    """
    _require_small(u)
    if op == "union":
        f = lambda a, b: a | b
        neutral = ConcreteSet.empty(u)
    elif op == "intersect":
        f = lambda a, b: a & b
        neutral = ConcreteSet.full(u)
    else:
        raise ValueError(f"unknown monoid operation {op!r}")
    sets = list(powerset(u))
    pairs = list(itertools.product(sets, repeat=2))
    triples = itertools.product(sets, repeat=3)
    axioms = [
        _axiom("closure", _first_fail(pairs, lambda a, b: f(a, b) in sets)),
        _axiom("associativity", _first_fail(triples, lambda a, b, c: f(f(a, b), c) == f(a, f(b, c)))),
        _axiom("commutativity", _first_fail(pairs, lambda a, b: f(a, b) == f(b, a))),
        _axiom("neutral-element", _first_fail(((a,) for a in sets), lambda a: f(a, neutral) == a)),
    ]
    return StructureReport(
        f"monoid-{op}", len(u), axioms, extras={"neutral": str(neutral)}
    )


def check_group_symdiff(u: Universe) -> StructureReport:
    """Abelian-group axioms for symmetric difference on P(E)."""
    _require_small(u)
    sets = list(powerset(u))
    empty = ConcreteSet.empty(u)
    pairs = list(itertools.product(sets, repeat=2))
    triples = itertools.product(sets, repeat=3)
    axioms = [
        _axiom("closure", _first_fail(pairs, lambda a, b: (a ^ b) in sets)),
        _axiom("associativity", _first_fail(triples, lambda a, b, c: (a ^ b) ^ c == a ^ (b ^ c))),
        _axiom("commutativity", _first_fail(pairs, lambda a, b: a ^ b == b ^ a)),
        _axiom("neutral-element", _first_fail(((a,) for a in sets), lambda a: a ^ empty == a)),
        _axiom("self-inverse", _first_fail(((a,) for a in sets), lambda a: a ^ a == empty)),
    ]
    return StructureReport(
        "group-symdiff",
        len(u),
        axioms,
        extras={"neutral": str(empty), "every_element_self_inverse": axioms[4].passed},
    )


def check_boolean_ring(u: Universe) -> StructureReport:
    """Ring axioms with symmetric difference as + and intersection as *.

    Addition is the abelian group above; multiplication is the intersection
    monoid; intersection distributes over symmetric difference, and
    multiplication is idempotent (the Boolean-ring law).  For two or more
    points the report also exhibits a zero-divisor pair: disjoint nonempty
    sets with empty intersection.
    """
    _require_small(u)
    sets = list(powerset(u))
    empty = ConcreteSet.empty(u)
    full = ConcreteSet.full(u)
    pairs = list(itertools.product(sets, repeat=2))
    axioms = [
        _axiom(
            "additive-group",
            _first_fail(
                itertools.product(sets, repeat=3),
                lambda a, b, c: (a ^ b) ^ c == a ^ (b ^ c)
                and a ^ b == b ^ a
                and a ^ empty == a
                and a ^ a == empty,
            ),
        ),
        _axiom(
            "multiplicative-monoid",
            _first_fail(
                itertools.product(sets, repeat=3),
                lambda a, b, c: (a & b) & c == a & (b & c) and a & b == b & a and a & full == a,
            ),
        ),
        _axiom(
            "distributivity",
            _first_fail(
                itertools.product(sets, repeat=3),
                lambda a, b, c: a & (b ^ c) == (a & b) ^ (a & c),
            ),
        ),
        _axiom("multiplicative-idempotence", _first_fail(((a,) for a in sets), lambda a: a & a == a)),
    ]
    extras = {}
    if len(u) >= 2:
        zd = next(
            (
                (a, b)
                for a, b in pairs
                if a.cardinality and b.cardinality and (a & b) == empty
            ),
            None,
        )
        axioms.append(_axiom("zero-divisors-exist", None if zd else ()))
        if zd:
            extras["zero_divisor_pair"] = f"{zd[0]} and {zd[1]}"
    else:
        extras["zero_divisor_pair"] = None
        extras["note"] = "no zero divisors exist below two points"
    return StructureReport("boolean-ring", len(u), axioms, extras=extras)


def check_isomorphism(u: Universe) -> StructureReport:
    """P(E) under symmetric difference is isomorphic to the group of
    0/1-valued tables on E under pointwise a + b - 2ab.

    The map sends a set to its tabulated membership function; the suite
    checks it is a bijection onto all tables and a homomorphism on every
    pair.
    """
    _require_small(u)
    sets = list(powerset(u))
    n = len(u)
    tables = set(itertools.product((0, 1), repeat=n))
    images = {s: s.bits for s in sets}

    bijection_fail = None
    if len(set(images.values())) != len(sets) or set(images.values()) != tables:
        bijection_fail = ()
    hom_fail = _first_fail(
        itertools.product(sets, repeat=2),
        lambda a, b: images[a ^ b] == tuple(x + y - 2 * x * y for x, y in zip(a.bits, b.bits)),
    )
    axioms = [
        _axiom("bijection-onto-tables", bijection_fail),
        _axiom("homomorphism", hom_fail),
    ]
    return StructureReport(
        "isomorphism", n, axioms, extras={"table_count": len(tables)}
    )


def check_metric_space(
    u: Universe, seed: int = 0, chain_samples: int = 1000
) -> StructureReport:
    """Metric axioms for d(A,B) = |A symdiff B| over all subset triples.

    Also samples seeded random 4-set chains and checks the chain inequality
    d(A1,A4) <= d(A1,A2) + d(A2,A3) + d(A3,A4); the extras record the number
    of triangle triples checked and one nontrivial tight triangle case.
    """
    _require_small(u)
    sets = list(powerset(u))
    pairs = list(itertools.product(sets, repeat=2))
    identity_fail = _first_fail(pairs, lambda a, b: (metric(a, b) == 0) == (a == b))
    symmetry_fail = _first_fail(pairs, lambda a, b: metric(a, b) == metric(b, a))
    triangle_fail = None
    triangle_count = 0
    tight_case = None
    for a, b, c in itertools.product(sets, repeat=3):
        triangle_count += 1
        d_ac = metric(a, c)
        d_ab = metric(a, b)
        d_bc = metric(b, c)
        if d_ac > d_ab + d_bc:
            triangle_fail = triangle_fail or (a, b, c)
        if (
            tight_case is None
            and d_ac == d_ab + d_bc
            and d_ac > 0
            and b != a
            and b != c
        ):
            tight_case = f"d({a}, {c}) = d({a}, {b}) + d({b}, {c}) = {d_ac}"

    rng = random.Random(seed)
    n = len(u)
    chain_fail = None
    for _ in range(chain_samples):
        chain = [
            ConcreteSet(u, tuple((mask >> i) & 1 for i in range(n)))
            for mask in (rng.randrange(1 << n) if n else 0 for _ in range(4))
        ]
        total = sum(metric(chain[i], chain[i + 1]) for i in range(3))
        if metric(chain[0], chain[3]) > total:
            chain_fail = tuple(chain)
            break
    axioms = [
        _axiom("identity-of-indiscernibles", identity_fail),
        _axiom("symmetry", symmetry_fail),
        _axiom("triangle-inequality", triangle_fail),
        _axiom("chain-inequality-4", chain_fail),
    ]
    return StructureReport(
        "metric",
        len(u),
        axioms,
        extras={
            "triangle_triples": triangle_count,
            "triangle_equality_case": tight_case,
            "chain_samples": chain_samples,
        },
    )


# --- set-valued map scans -----------------------------------------------------


@dataclass(frozen=True)
class MapSpec:
    """A set-valued map f(X) = (component expressions) plus a predicted
    equivalent condition for one of its properties.

    - `parameters`: atom names ranged over all subset assignments.
    - `components`: arity-1 expressions over {var} and the parameters.
    - `predicts`: "injective", "surjective", or "bijective".
    - `condition`: equation over the parameters claimed equivalent to it.
    - `side_conditions`: equations filtering the parameter assignments.
    - `domain`: X ranges over subsets of this expression's value (default E).
    - `codomain`: component target sets; image must equal the product of
      their powersets for surjectivity (required for surjective/bijective).
    """

    name: str
    parameters: tuple[str, ...]
    components: tuple[ex.SetExpr, ...]
    predicts: str
    condition: tuple[ex.SetExpr, ex.SetExpr]
    side_conditions: tuple[tuple[ex.SetExpr, ex.SetExpr], ...] = ()
    domain: ex.SetExpr | None = None
    codomain: tuple[ex.SetExpr, ...] | None = None
    var: str = "X"


def map_property_scan(spec: MapSpec, u: Universe) -> StructureReport:
    """Confirm the predicted condition matches the map property exactly.

    For every assignment of parameter sets passing the side conditions the
    map is tabulated over its whole domain and the property (injectivity,
    surjectivity onto the declared codomain, or both) is determined; both
    implication directions of the biconditional are reported separately.
    """
    _require_small(u, SCAN_LIMIT)
    if len(spec.parameters) > 3:
        raise LimitError("map scans support at most 3 parameters")
    if spec.predicts not in ("injective", "surjective", "bijective"):
        raise ValueError(f"unknown property {spec.predicts!r}")
    needs_codomain = spec.predicts in ("surjective", "bijective")
    if needs_codomain and spec.codomain is None:
        raise CodomainUnspecifiedError(
            f"{spec.name}: surjectivity scan requires a declared codomain"
        )
    sets = list(powerset(u))
    full = ConcreteSet.full(u)
    cond_true_fail = None  # condition holds but property fails
    prop_true_fail = None  # property holds but condition fails
    scanned = 0
    property_count = 0
    for assignment in itertools.product(sets, repeat=len(spec.parameters)):
        env = dict(zip(spec.parameters, assignment))
        if any(eval_expr(l, env, u) != eval_expr(r, env, u) for l, r in spec.side_conditions):
            continue
        scanned += 1
        domain = eval_expr(spec.domain, env, u) if spec.domain is not None else full
        xs = [s for s in sets if s.is_subset(domain)]
        images = [
            tuple(eval_expr(comp, {**env, spec.var: x}, u) for comp in spec.components)
            for x in xs
        ]
        injective = len(set(images)) == len(images)
        if needs_codomain:
            targets = [
                [s for s in sets if s.is_subset(eval_expr(cd, env, u))]
                for cd in spec.codomain
            ]
            surjective = set(images) == set(itertools.product(*targets))
        if spec.predicts == "injective":
            actual = injective
        elif spec.predicts == "surjective":
            actual = surjective
        else:
            actual = injective and surjective
        predicted = eval_expr(spec.condition[0], env, u) == eval_expr(spec.condition[1], env, u)
        property_count += actual
        if predicted and not actual and cond_true_fail is None:
            cond_true_fail = assignment
        if actual and not predicted and prop_true_fail is None:
            prop_true_fail = assignment
    axioms = [
        _axiom(f"condition-implies-{spec.predicts}", cond_true_fail),
        _axiom(f"{spec.predicts}-implies-condition", prop_true_fail),
    ]
    return StructureReport(
        f"map-scan-{spec.name}",
        len(u),
        axioms,
        extras={"assignments_scanned": scanned, "property_holds_count": property_count},
    )


def union_components_map() -> MapSpec:
    """f(X) = (X|B, X|C) on subsets of B|C; injective exactly when B and C
    are disjoint."""
    B, C = ex.Atom("B"), ex.Atom("C")
    return MapSpec(
        name="union-components",
        parameters=("B", "C"),
        components=(ex.Union(ex.Atom("X"), B), ex.Union(ex.Atom("X"), C)),
        predicts="injective",
        condition=(ex.Intersect(B, C), ex.Empty()),
        domain=ex.Union(B, C),
    )


def intersect_components_map(names: Sequence[str] = ("A", "B")) -> MapSpec:
    """f(X) = (X&A1, ..., X&An) on P(E); injective exactly when the union
    of the component sets covers the universe."""
    atoms = [ex.Atom(n) for n in names]
    union = atoms[0]
    for a in atoms[1:]:
        union = ex.Union(union, a)
    return MapSpec(
        name="intersect-components-" + "-".join(names),
        parameters=tuple(names),
        components=tuple(ex.Intersect(ex.Atom("X"), a) for a in atoms),
        predicts="injective",
        condition=(union, ex.Universal()),
    )


def intersect_components_onto() -> MapSpec:
    """f(X) = (X&A, X&B) viewed into P(A) x P(B); surjective exactly when
    A and B are disjoint."""
    A, B = ex.Atom("A"), ex.Atom("B")
    return MapSpec(
        name="intersect-components-onto",
        parameters=("A", "B"),
        components=(ex.Intersect(ex.Atom("X"), A), ex.Intersect(ex.Atom("X"), B)),
        predicts="surjective",
        condition=(ex.Intersect(A, B), ex.Empty()),
        codomain=(A, B),
    )


def symdiff_translation_map() -> MapSpec:
    """g(X) = A^X on P(E); a bijection for every A (it is its own inverse)."""
    A = ex.Atom("A")
    return MapSpec(
        name="symdiff-translation",
        parameters=("A",),
        components=(ex.SymDiff(A, ex.Atom("X")),),
        predicts="bijective",
        condition=(ex.Empty(), ex.Empty()),
        codomain=(ex.Universal(),),
    )


def check_nested_pair_bijection(u: Universe) -> StructureReport:
    """For every A: X -> (X&A, X|A) is a bijection from P(E) onto the pairs
    (M, N) with M <= A <= N, and (N-A)|M maps each pair back to its X."""
    _require_small(u, SCAN_LIMIT)
    sets = list(powerset(u))
    bijection_fail = None
    inverse_fail = None
    for a in sets:
        nested = {
            (m, n) for m in sets for n in sets if m.is_subset(a) and a.is_subset(n)
        }
        image = {}
        for x in sets:
            image.setdefault((x & a, x | a), []).append(x)
        if set(image) != nested or any(len(v) != 1 for v in image.values()):
            bijection_fail = bijection_fail or (a,)
            continue
        for (m, n), (x,) in image.items():
            if ((n - a) | m) != x:
                inverse_fail = inverse_fail or (a, m, n)
                break
    axioms = [
        _axiom("bijection-onto-nested-pairs", bijection_fail),
        _axiom("inverse-formula", inverse_fail),
    ]
    return StructureReport("nested-pair-bijection", len(u), axioms)


def find_distinct_equal_union_quadruple(u: Universe):
    """Search for four pairwise-distinct sets whose four triple unions all
    coincide; returns the first such quadruple or None."""
    _require_small(u, SCAN_LIMIT)
    sets = list(powerset(u))
    for a, b, c, d in itertools.product(sets, repeat=4):
        if len({a, b, c, d}) != 4:
            continue
        if a | b | c == a | b | d == a | c | d == b | c | d:
            return (a, b, c, d)
    return None


# --- rendering ------------------------------------------------------------------


def _show_counterexample(cex) -> str:
    if cex is None:
        return ""
    if not cex:
        return "(global)"
    return ", ".join(str(s) for s in cex)


def render_report(report: StructureReport) -> str:
    lines = [f"structure: {report.structure}  (universe of {report.universe_size})"]
    width = max((len(a.name) for a in report.axioms), default=0)
    for a in report.axioms:
        status = "pass" if a.passed else "FAIL"
        line = f"  {a.name.ljust(width)}  {status}"
        if not a.passed:
            line += f"  {_show_counterexample(a.counterexample)}"
        lines.append(line)
    for key in sorted(report.extras):
        lines.append(f"  {key}: {report.extras[key]}")
    lines.append(f"result: {'pass' if report.passed else 'FAIL'}")
    return "\n".join(lines)


def report_json(report: StructureReport) -> dict:
    return {
        "structure": report.structure,
        "universe_size": report.universe_size,
        "passed": report.passed,
        "axioms": [
            {
                "name": a.name,
                "passed": a.passed,
                "counterexample": None
                if a.counterexample is None
                else [str(s) for s in a.counterexample],
            }
            for a in report.axioms
        ],
        "extras": {k: v for k, v in sorted(report.extras.items())},
    }
