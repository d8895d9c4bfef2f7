"""Scratch: verify planned corpus expectations with raw Python set algebra.

Independent oracle: expressions are evaluated with Python's own frozenset
operations (complement = universe difference, product via itertools) over
ALL subset assignments of small universes.  For arity-r statements with
r points this is a complete decision procedure (every membership pattern is
realized by some assignment).
"""

import itertools
import sys

sys.path.insert(0, "src")
from setcalc import expr as ex
from setcalc.expr import parse


def pyeval(e, env, universe):
    """Evaluate with Python sets; tuples represent product elements."""
    if isinstance(e, ex.Atom):
        return frozenset((x,) for x in env[e.name])
    if isinstance(e, ex.Empty):
        return frozenset()
    if isinstance(e, ex.Universal):
        return frozenset((x,) for x in universe)
    if isinstance(e, ex.Complement):
        r = ex.arity(e.e)
        allt = frozenset(itertools.product(universe, repeat=r))
        return allt - pyeval(e.e, env, universe)
    if isinstance(e, ex.Product):
        return frozenset(
            a + b
            for a in pyeval(e.left, env, universe)
            for b in pyeval(e.right, env, universe)
        )
    a, b = pyeval(e.left, env, universe), pyeval(e.right, env, universe)
    if isinstance(e, ex.Union):
        return a | b
    if isinstance(e, ex.Intersect):
        return a & b
    if isinstance(e, ex.Difference):
        return a - b
    if isinstance(e, ex.SymDiff):
        return a ^ b
    raise TypeError(e)


def all_assignments(names, universe):
    subsets = [frozenset(c) for n in range(len(universe) + 1) for c in itertools.combinations(universe, n)]
    for combo in itertools.product(subsets, repeat=len(names)):
        yield dict(zip(names, combo))


def decide(stmt_text, universe_sizes=(1, 2)):
    """valid / invalid over every assignment of every listed universe size."""
    stmt = parse(stmt_text)
    names = sorted(
        set().union(
            ex.atoms(stmt.lhs), ex.atoms(stmt.rhs),
            *(ex.atoms(l) | ex.atoms(r) for l, r in stmt.hypotheses),
        )
    )
    for size in universe_sizes:
        universe = tuple(range(size))
        for env in all_assignments(names, universe):
            if any(pyeval(l, env, universe) != pyeval(r, env, universe) for l, r in stmt.hypotheses):
                continue
            if pyeval(stmt.lhs, env, universe) != pyeval(stmt.rhs, env, universe):
                return "invalid"
    return "valid"


def decide_solve(stmt_text):
    """solvable iff over a 1-point universe every parameter assignment
    admits some unknown assignment satisfying all equations."""
    stmt = parse(stmt_text)
    names = sorted(set().union(*(ex.atoms(l) | ex.atoms(r) for l, r in stmt.equations)))
    params = [n for n in names if n not in stmt.unknowns]
    universe = (0,)
    subsets = [frozenset(), frozenset((0,))]
    for pcombo in itertools.product(subsets, repeat=len(params)):
        env0 = dict(zip(params, pcombo))
        if not any(
            all(
                pyeval(l, {**env0, **dict(zip(stmt.unknowns, ucombo))}, universe)
                == pyeval(r, {**env0, **dict(zip(stmt.unknowns, ucombo))}, universe)
                for l, r in stmt.equations
            )
            for ucombo in itertools.product(subsets, repeat=len(stmt.unknowns))
        ):
            return "unsolvable"
    return "solvable"


PLANNED = [
    ("demorgan-union", "~(A | B | C) = ~A & ~B & ~C", "valid"),
    ("demorgan-intersect", "~(A & B & C) = ~A | ~B | ~C", "valid"),
    ("intersect-over-union", "(A | B | C) & M = (A & M) | (B & M) | (C & M)", "valid"),
    ("union-over-intersect", "(A & B & C) | M = (A | M) & (B | M) & (C | M)", "valid"),
    ("intersect-over-symdiff", "(A ^ B ^ C) & M = (A & M) ^ (B & M) ^ (C & M)", "valid"),
    ("union-over-symdiff-if", "M = 0 |- (A ^ B) | M = (A | M) ^ (B | M)", "valid"),
    ("union-over-symdiff-onlyif", "(A ^ B) | M = (A | M) ^ (B | M)", "invalid"),
    ("product-over-union", "M * (A | B | C) = (M * A) | (M * B) | (M * C)", "valid"),
    ("product-over-intersect", "M * (A & B & C) = (M * A) & (M * B) & (M * C)", "valid"),
    ("product-over-difference", "M * (A - B - C) = (M * A) - (M * B) - (M * C)", "valid"),
    ("cyclic-differences", "(A - B) | (B - C) | (C - A) = (A | B | C) - (A & B & C)", "valid"),
    ("adjacent-symdiffs", "(A ^ B) | (B ^ C) = (A | B | C) - (A & B & C)", "valid"),
    ("product-intersect-swap", "(A * B) & (B * A) = (A & B) * (A & B)", "valid"),
    ("union-assoc", "(A | B) | C = A | (B | C)", "valid"),
    ("union-comm", "A | B = B | A", "valid"),
    ("union-neutral", "A | 0 = A", "valid"),
    ("intersect-assoc", "(A & B) & C = A & (B & C)", "valid"),
    ("intersect-comm", "A & B = B & A", "valid"),
    ("intersect-neutral", "A & U = A", "valid"),
    ("symdiff-assoc", "(A ^ B) ^ C = A ^ (B ^ C)", "valid"),
    ("symdiff-comm", "A ^ B = B ^ A", "valid"),
    ("symdiff-neutral", "A ^ 0 = A", "valid"),
    ("symdiff-self-inverse", "A ^ A = 0", "valid"),
    ("ring-distributivity", "A & (B ^ C) = (A & B) ^ (A & C)", "valid"),
    ("intersect-idempotent", "A & A = A", "valid"),
    ("forced-equal-unions", "A | B | C = D, A | B | D = C, A | C | D = B, B | C | D = A |- A = B", "valid"),
    ("forced-equal-unions-cd", "A | B | C = D, A | B | D = C, A | C | D = B, B | C | D = A |- C = D", "valid"),
    ("symdiff-is-union-if", "A & B = 0 |- A ^ B = A | B", "valid"),
    ("symdiff-is-union-onlyif", "A ^ B = A | B", "invalid"),
    ("symdiff-is-union-entails-disjoint", "A ^ B = A | B |- A & B = 0", "valid"),
    ("pairwise-unions", "(A | B) & (A | C) & (B | C) = (B & C) | (A & C) | (A & B)", "valid"),
    ("union-minus-intersection-a", "(A | B) - (B & C) = (A - (B & C)) | (B - C)", "valid"),
    ("union-minus-intersection-b", "(A | B) - (B & C) = (A - B) | (A - C) | (B - C)", "valid"),
    ("double-relative-difference", "A - ((A & C) - (A & B)) = (A - ~B) | (A - C)", "valid"),
    ("absorb-if", "A & B = A, A & C = A |- A | (B & C) = (A | B) & C", "valid"),
    ("absorb-if-swap", "A & B = A, A & C = A |- (A | B) & C = (A | C) & B", "valid"),
    ("absorb-onlyif", "A | (B & C) = (A | B) & C", "invalid"),
    ("difference-shield", "(A - B) - C = (A - B) - (C - B)", "valid"),
    ("union-cancel-wrong", "(A | B) - (A | C) = B - (A & C)", "invalid"),
    ("union-cancel", "(A | B) - (A | C) = B - (A | C)", "valid"),
    ("intersect-cancel", "(A & B) - (A & C) = (A & B) - C", "valid"),
    ("union-intersect-system", "solve X, Y : A | X | Y = (A | X) & (A | Y) ; A & X & Y = (A & X) | (A & Y)", "solvable"),
    ("symdiff-cancellation-system", "solve X, Y : A ^ X ^ B = A ; A ^ Y ^ B = B", "solvable"),
    ("zero-forcing-if", "X = 0, Y = 0 |- Z = (X & ~Z) | (Y & ~Z) | (~X & Z & ~Y)", "valid"),
    ("zero-forcing-onlyif", "Z = (X & ~Z) | (Y & ~Z) | (~X & Z & ~Y)", "invalid"),
    ("zero-forcing-entails-x", "Z = (X & ~Z) | (Y & ~Z) | (~X & Z & ~Y) |- X = 0", "valid"),
    ("zero-forcing-entails-y", "Z = (X & ~Z) | (Y & ~Z) | (~X & Z & ~Y) |- Y = 0", "valid"),
    ("family-union-merge", "(A1 | (B1 - C)) | (A2 | (B2 - C)) = (A1 | A2) | ((B1 | B2) - C)", "valid"),
    ("family-union-merge-wrong", "(A1 | (B1 - C)) | (A2 | (B2 - C)) = (A1 | A2) | ((A1 | A2) - C)", "invalid"),
    ("union-decomposition", "A | B = (A - B) | (B - A) | (A & B)", "valid"),
    ("symdiff3-regions", "(A ^ B) ^ C = (A & ~B & ~C) | (~A & B & ~C) | (~A & ~B & C) | (A & B & C)", "valid"),
]

bad = 0
for entry_id, text, expected in PLANNED:
    stmt = parse(text)
    if isinstance(stmt, ex.SolveRequest):
        got = decide_solve(text)
    else:
        got = decide(text)
    mark = "ok " if got == expected else "XXX"
    if got != expected:
        bad += 1
    print(f"{mark} [{entry_id}] expected {expected}, python-set oracle says {got}")
print("mismatches:", bad)
