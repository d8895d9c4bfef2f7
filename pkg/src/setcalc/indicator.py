"""Multilinear indicator polynomials over membership variables.

A set expression over named sets translates into an integer polynomial in
0/1-valued membership variables where no variable is ever squared (x^n = x
on {0,1}, so squares are folded away structurally).  That normal form is
unique: two expressions denote the same set in every universe exactly when
their polynomials are equal coefficient by coefficient.

Translation rules::

    complement   1 - p
    intersection p * q
    union        p + q - p*q
    difference   p * (1 - q)
    sym. diff.   p + q - 2*p*q
    product      p(x) * q(y)     (right factor's coordinates shifted)

Coefficients are kept inside the signed 64-bit range; crossing it raises
CoefficientOverflowError rather than wrapping.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import expr as ex
from .errors import (
    CoefficientOverflowError,
    IncompleteTableError,
    LimitError,
    MissingVarError,
)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

#: default cap on distinct membership variables per statement (2^24 patterns)
DEFAULT_GUARD = 24


class Var(NamedTuple):
    """Membership variable: `set_name` tested at 1-based coordinate `coord`."""

    set_name: str
    coord: int = 1

    def __str__(self) -> str:
        return self.set_name if self.coord == 1 else f"{self.set_name}@{self.coord}"


Monomial = frozenset  # frozenset[Var]; the empty monomial is the constant term

Pattern = dict  # dict[Var, int] with values in {0, 1}


def _check64(c: int) -> int:
    if c < INT64_MIN or c > INT64_MAX:
        raise CoefficientOverflowError(f"coefficient {c} exceeds the signed 64-bit range")
    return c


class IndicatorPoly:
    """Multilinear integer polynomial in canonical form.

    Stored as a mapping from monomial (frozenset of Var) to nonzero
    coefficient; construction drops zero coefficients and checks the
    64-bit bound, so every reachable instance is already normalized.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Iterable[Var], int] | None = None):
        clean: dict[frozenset[Var], int] = {}
        for mono, coeff in (terms or {}).items():
            if coeff:
                clean[frozenset(mono)] = _check64(coeff)
        self._terms = clean

    @classmethod
    def zero(cls) -> "IndicatorPoly":
        return cls()

    @classmethod
    def one(cls) -> "IndicatorPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, c: int) -> "IndicatorPoly":
        return cls({frozenset(): c})

    @classmethod
    def variable(cls, v: Var) -> "IndicatorPoly":
        return cls({frozenset((v,)): 1})

    @property
    def terms(self) -> dict[frozenset[Var], int]:
        return dict(self._terms)

    def coefficient(self, mono: Iterable[Var]) -> int:
        return self._terms.get(frozenset(mono), 0)

    @property
    def constant_term(self) -> int:
        return self._terms.get(frozenset(), 0)

    def variables(self) -> frozenset[Var]:
        out: set[Var] = set()
        for mono in self._terms:
            out |= mono
        return frozenset(out)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IndicatorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "IndicatorPoly") -> "IndicatorPoly":
        return poly_add(self, other)

    def __sub__(self, other: "IndicatorPoly") -> "IndicatorPoly":
        return poly_sub(self, other)

    def __mul__(self, other: "IndicatorPoly") -> "IndicatorPoly":
        return poly_mul(self, other)

    def __neg__(self) -> "IndicatorPoly":
        return IndicatorPoly({m: -c for m, c in self._terms.items()})

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"<IndicatorPoly {self}>"


def poly_add(p: IndicatorPoly, q: IndicatorPoly) -> IndicatorPoly:
    acc = dict(p._terms)
    for mono, c in q._terms.items():
        acc[mono] = _check64(acc.get(mono, 0) + c)
    return IndicatorPoly(acc)


def poly_sub(p: IndicatorPoly, q: IndicatorPoly) -> IndicatorPoly:
    acc = dict(p._terms)
    for mono, c in q._terms.items():
        acc[mono] = _check64(acc.get(mono, 0) - c)
    return IndicatorPoly(acc)


def poly_mul(p: IndicatorPoly, q: IndicatorPoly) -> IndicatorPoly:
    """Ring product with idempotent reduction.

    Monomials are variable *sets*, so multiplying terms unions them:
    repeated variables collapse instead of acquiring exponents.
    """
    acc: dict[frozenset[Var], int] = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            mono = m1 | m2
            acc[mono] = _check64(acc.get(mono, 0) + _check64(c1 * c2))
    return IndicatorPoly(acc)


def evaluate(p: IndicatorPoly, pt: Mapping[Var, int]) -> int:
    """Integer value of p at a 0/1 point. pt must assign every variable of p."""
    missing = p.variables() - pt.keys()
    if missing:
        names = ", ".join(str(v) for v in sorted(missing))
        raise MissingVarError(f"pattern lacks variable(s) {names}")
    total = 0
    for mono, c in p._terms.items():
        if all(pt[v] for v in mono):
            total += c
    return total


def variables_of(e: ex.SetExpr, offset: int = 0) -> frozenset[Var]:
    """Membership variables an expression depends on, with product
    coordinates resolved (the right factor is shifted by the left arity)."""
    if isinstance(e, ex.Atom):
        return frozenset((Var(e.name, offset + 1),))
    if isinstance(e, (ex.Empty, ex.Universal)):
        return frozenset()
    if isinstance(e, ex.Complement):
        return variables_of(e.e, offset)
    if isinstance(e, ex.Product):
        return variables_of(e.left, offset) | variables_of(e.right, offset + ex.arity(e.left))
    return variables_of(e.left, offset) | variables_of(e.right, offset)


def poly_from_expr(e: ex.SetExpr, guard: int = DEFAULT_GUARD) -> IndicatorPoly:
    """Translate an expression to its multilinear normal form.

    Raises LimitError when the expression mentions more than `guard`
    distinct membership variables.
    """
    nvars = len(variables_of(e))
    if nvars > guard:
        raise LimitError(f"{nvars} variables exceed the guard of {guard}")
    return _translate(e, 0)


def _translate(e: ex.SetExpr, offset: int) -> IndicatorPoly:
    if isinstance(e, ex.Atom):
        return IndicatorPoly.variable(Var(e.name, offset + 1))
    if isinstance(e, ex.Empty):
        return IndicatorPoly.zero()
    if isinstance(e, ex.Universal):
        return IndicatorPoly.one()
    if isinstance(e, ex.Complement):
        return poly_sub(IndicatorPoly.one(), _translate(e.e, offset))
    if isinstance(e, ex.Product):
        return poly_mul(_translate(e.left, offset), _translate(e.right, offset + ex.arity(e.left)))
    p = _translate(e.left, offset)
    q = _translate(e.right, offset)
    if isinstance(e, ex.Intersect):
        return poly_mul(p, q)
    if isinstance(e, ex.Union):
        return poly_sub(poly_add(p, q), poly_mul(p, q))
    if isinstance(e, ex.Difference):
        return poly_mul(p, poly_sub(IndicatorPoly.one(), q))
    if isinstance(e, ex.SymDiff):
        pq = poly_mul(p, q)
        return poly_sub(poly_add(p, q), poly_add(pq, pq))
    raise TypeError(f"not a SetExpr: {e!r}")


def poly_from_values(
    variables: Sequence[Var], table: Mapping[tuple[int, ...], int]
) -> IndicatorPoly:
    """The unique multilinear polynomial matching a full value table.

    `table` maps bit tuples (aligned with `variables`) to integers and must
    cover all 2^n assignments; this is the inverse of `evaluate`, computed
    with an in-place Moebius transform over the Boolean cube.
    """
    vs = list(variables)
    n = len(vs)
    if len(set(vs)) != n:
        raise ValueError("duplicate variables")
    vals = []
    for i in range(1 << n):
        key = tuple((i >> j) & 1 for j in range(n))
        if key not in table:
            raise IncompleteTableError(f"table lacks assignment {key}")
        vals.append(table[key])
    for j in range(n):
        bit = 1 << j
        for mask in range(1 << n):
            if mask & bit:
                vals[mask] -= vals[mask ^ bit]
    terms = {}
    for mask in range(1 << n):
        if vals[mask]:
            terms[frozenset(vs[j] for j in range(n) if (mask >> j) & 1)] = vals[mask]
    return IndicatorPoly(terms)


# --- n-ary closed forms -----------------------------------------------------


def _named_vars(n: int, names: Sequence[str] | None) -> list[Var]:
    if names is None:
        names = [f"A{k}" for k in range(1, n + 1)]
    if len(names) != n:
        raise ValueError(f"expected {n} names, got {len(names)}")
    return [Var(name) for name in names]


def _check_n(n: int, guard: int) -> None:
    if n < 1:
        raise LimitError(f"n must be positive, got {n}")
    if n > guard:
        raise LimitError(f"n={n} exceeds the guard of {guard}")


def union_closed_form(
    n: int, names: Sequence[str] | None = None, guard: int = DEFAULT_GUARD
) -> IndicatorPoly:
    """Inclusion-exclusion form of an n-fold union: sum of (-1)^(k-1) * e_k,
    where e_k is the k-th elementary symmetric polynomial of the variables."""
    _check_n(n, guard)
    vs = _named_vars(n, names)
    terms = {}
    for k in range(1, n + 1):
        c = (-1) ** (k - 1)
        for combo in itertools.combinations(vs, k):
            terms[frozenset(combo)] = c
    return IndicatorPoly(terms)


def symdiff_closed_form(
    n: int, names: Sequence[str] | None = None, guard: int = DEFAULT_GUARD
) -> IndicatorPoly:
    """n-fold symmetric difference: sum of (-2)^(k-1) * e_k.

    Evaluates to the parity of the number of 1-bits in the assignment.
    """
    _check_n(n, guard)
    vs = _named_vars(n, names)
    terms = {}
    for k in range(1, n + 1):
        c = (-2) ** (k - 1)
        for combo in itertools.combinations(vs, k):
            terms[frozenset(combo)] = _check64(c)
    return IndicatorPoly(terms)


def difference_chain(
    n: int, names: Sequence[str] | None = None, guard: int = DEFAULT_GUARD
) -> IndicatorPoly:
    """Left-associative difference chain A1 - A2 - ... - An, i.e.
    f_1 * (1 - f_2) * ... * (1 - f_n)."""
    _check_n(n, guard)
    vs = _named_vars(n, names)
    p = IndicatorPoly.variable(vs[0])
    one = IndicatorPoly.one()
    for v in vs[1:]:
        p = poly_mul(p, poly_sub(one, IndicatorPoly.variable(v)))
    return p


# --- text form ---------------------------------------------------------------


def format_poly(p: IndicatorPoly, show_coords: bool | None = None) -> str:
    """Canonical text form, e.g. ``A + B - 2*A*B`` or ``1 - A - B + A*B``.

    Terms are ordered by (degree, variable names); with `show_coords` unset,
    coordinates are printed (``A@1*B@2``) only when some variable sits at a
    coordinate other than 1.
    """
    if p.is_zero():
        return "0"
    if show_coords is None:
        show_coords = any(v.coord != 1 for v in p.variables())
    items = sorted(p.terms.items(), key=lambda kv: (len(kv[0]), tuple(sorted(kv[0]))))
    rendered = []
    for mono, c in items:
        names = "*".join(
            (f"{v.set_name}@{v.coord}" if show_coords else v.set_name) for v in sorted(mono)
        )
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = names
        else:
            body = f"{mag}*{names}"
        rendered.append(("-" if c < 0 else "+", body))
    sign, body = rendered[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in rendered[1:]:
        out += f" {sign} {body}"
    return out


# --- reverse translation ------------------------------------------------------


def expr_from_poly(p: IndicatorPoly, atom_names: Iterable[str]) -> ex.SetExpr | None:
    """Best-effort inverse of poly_from_expr.

    Searches expressions of depth <= 2 over the given atoms (constants,
    atoms, complements, one binary operator, complemented binaries) for one
    whose normal form equals p; returns the first hit or None.  Intended for
    rendering solved unknowns, not as a general minimizer.
    """
    for cand in _reverse_candidates(sorted(set(atom_names))):
        if poly_from_expr(cand) == p:
            return cand
    return None


def _reverse_candidates(names: list[str]):
    prims: list[ex.SetExpr] = [ex.Empty(), ex.Universal()]
    prims += [ex.Atom(n) for n in names]
    prims += [ex.Complement(ex.Atom(n)) for n in names]
    yield from prims
    pairs = [(a, b) for a in prims for b in prims]
    for op in (ex.Intersect, ex.Union, ex.Difference, ex.SymDiff):
        for a, b in pairs:
            yield op(a, b)
    for op in (ex.Intersect, ex.Union, ex.Difference, ex.SymDiff):
        for a, b in pairs:
            yield ex.Complement(op(a, b))
