"""Set-expression language: AST, parser, printer, arity rules.

Concrete syntax, tightest binding first::

    ~E          complement (relative to the universal set of E's arity)
    E * F       cartesian product (arity adds)
    E & F       intersection
    E - F, E ^ F   difference and symmetric difference (same level, left-assoc)
    E | F       union

`0` is the empty set, `U` the universal set; both are reserved words.
Atom names match ``[A-Za-z][A-Za-z0-9_]*`` and are case-sensitive.

Statements are either an identity, optionally guarded by hypothesis
equations::

    A & B = 0 |- A ^ B = A | B

or a request to solve a system for unknown sets::

    solve X, Y : A ^ X ^ B = A ; A ^ Y ^ B = B
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArityError, ParseError


class SetExpr:
    """Base class for expression nodes. Instances are immutable."""

    def __str__(self) -> str:
        return unparse(self)


@dataclass(frozen=True)
class Atom(SetExpr):
    name: str


@dataclass(frozen=True)
class Empty(SetExpr):
    pass


@dataclass(frozen=True)
class Universal(SetExpr):
    pass


@dataclass(frozen=True)
class Complement(SetExpr):
    e: SetExpr


@dataclass(frozen=True)
class Union(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Intersect(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Difference(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class SymDiff(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Product(SetExpr):
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class Identity:
    """`lhs = rhs`, restricted to patterns satisfying every hypothesis pair."""

    hypotheses: tuple[tuple[SetExpr, SetExpr], ...]
    lhs: SetExpr
    rhs: SetExpr

    def __str__(self) -> str:
        return unparse_statement(self)


@dataclass(frozen=True)
class SolveRequest:
    """`solve X, Y : eq ; eq` — find the unknown sets satisfying all equations."""

    unknowns: tuple[str, ...]
    equations: tuple[tuple[SetExpr, SetExpr], ...]

    def __str__(self) -> str:
        return unparse_statement(self)


Statement = Identity | SolveRequest

RESERVED = {"0", "U", "solve"}


def arity(e: SetExpr) -> int:
    """Tuple arity of an expression.

    Atoms and the two constants have arity 1; a product adds the arities of
    its factors; every other operator requires equal arities and keeps them.
    Raises ArityError when the equal-arity rule is violated.
    """
    if isinstance(e, (Atom, Empty, Universal)):
        return 1
    if isinstance(e, Complement):
        return arity(e.e)
    if isinstance(e, Product):
        return arity(e.left) + arity(e.right)
    if isinstance(e, (Union, Intersect, Difference, SymDiff)):
        la, ra = arity(e.left), arity(e.right)
        if la != ra:
            raise ArityError(
                f"{type(e).__name__.lower()} of arity {la} and arity {ra} operands",
                node=e,
            )
        return la
    raise TypeError(f"not a SetExpr: {e!r}")


def atoms(e: SetExpr) -> frozenset[str]:
    """Names of all atoms occurring in the expression."""
    if isinstance(e, Atom):
        return frozenset((e.name,))
    if isinstance(e, (Empty, Universal)):
        return frozenset()
    if isinstance(e, Complement):
        return atoms(e.e)
    return atoms(e.left) | atoms(e.right)


# --- lexer ---------------------------------------------------------------

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_PUNCT = "~*&-^|()=,;:"


@dataclass(frozen=True)
class _Token:
    kind: str  # one of the punctuation strings, "|-", IDENT, EMPTY, UNIV, SOLVE, EOF
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "|" and text[i + 1 : i + 2] == "-":
            # the turnstile must be written as the adjacent pair `|-`
            toks.append(_Token("|-", "|-", i))
            i += 2
            continue
        if c in _PUNCT:
            toks.append(_Token(c, c, i))
            i += 1
            continue
        if c == "0":
            toks.append(_Token("EMPTY", "0", i))
            i += 1
            continue
        m = _IDENT.match(text, i)
        if m:
            word = m.group()
            if word == "U":
                kind = "UNIV"
            elif word == "solve":
                kind = "SOLVE"
            else:
                kind = "IDENT"
            toks.append(_Token(kind, word, m.start()))
            i = m.end()
            continue
        raise ParseError(i, "an operator, identifier, '(', '0', or 'U'")
    toks.append(_Token("EOF", "", n))
    return toks


# --- parser ---------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Token:
        return self.toks[self.i]

    def advance(self) -> _Token:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str) -> _Token:
        if self.cur.kind != kind:
            raise ParseError(self.cur.pos, what)
        return self.advance()

    # stmt := solve | cond
    def statement(self) -> Statement:
        if self.cur.kind == "SOLVE":
            stmt = self.solve()
        else:
            stmt = self.conditional()
        self.expect("EOF", "end of statement")
        return stmt

    # solve := "solve" names ":" eq (";" eq)*
    def solve(self) -> SolveRequest:
        self.advance()
        names = [self.expect("IDENT", "an unknown name")]
        while self.cur.kind == ",":
            self.advance()
            names.append(self.expect("IDENT", "an unknown name"))
        self.expect(":", "':' before the equations")
        equations = [self.equation()]
        while self.cur.kind == ";":
            self.advance()
            equations.append(self.equation())
        seen = set()
        for tok in names:
            if tok.text in seen:
                raise ParseError(tok.pos, f"distinct unknown names (duplicate {tok.text!r})")
            seen.add(tok.text)
        mentioned = frozenset().union(*(atoms(l) | atoms(r) for l, r in equations))
        for tok in names:
            if tok.text not in mentioned:
                raise ParseError(tok.pos, f"unknown {tok.text!r} to appear in some equation")
        for l, r in equations:
            if arity(l) != 1 or arity(r) != 1:
                raise ArityError("solve equations must have arity 1 on both sides")
        return SolveRequest(tuple(t.text for t in names), tuple(equations))

    # cond := [ eq ("," eq)* "|-" ] eq
    def conditional(self) -> Identity:
        eqs = [self.equation()]
        while self.cur.kind == ",":
            self.advance()
            eqs.append(self.equation())
        if self.cur.kind == "|-":
            self.advance()
            hypotheses = tuple(eqs)
            lhs, rhs = self.equation()
        elif len(eqs) == 1:
            hypotheses = ()
            lhs, rhs = eqs[0]
        else:
            raise ParseError(self.cur.pos, "'|-' after the hypothesis list")
        for l, r in hypotheses:
            if arity(l) != arity(r):
                raise ArityError(
                    f"hypothesis sides have arity {arity(l)} and {arity(r)}"
                )
        if arity(lhs) != arity(rhs):
            raise ArityError(
                f"statement sides have arity {arity(lhs)} and {arity(rhs)}"
            )
        return Identity(hypotheses, lhs, rhs)

    # eq := expr "=" expr
    def equation(self) -> tuple[SetExpr, SetExpr]:
        lhs = self.expr()
        self.expect("=", "'='")
        rhs = self.expr()
        return lhs, rhs

    # expr := term ("|" term)*
    def expr(self) -> SetExpr:
        e = self.term()
        while self.cur.kind == "|":
            self.advance()
            e = Union(e, self.term())
        return e

    # term := factor (("-"|"^") factor)*
    def term(self) -> SetExpr:
        e = self.factor()
        while self.cur.kind in ("-", "^"):
            op = self.advance().kind
            rhs = self.factor()
            e = Difference(e, rhs) if op == "-" else SymDiff(e, rhs)
        return e

    # factor := item ("&" item)*
    def factor(self) -> SetExpr:
        e = self.item()
        while self.cur.kind == "&":
            self.advance()
            e = Intersect(e, self.item())
        return e

    # item := prim ("*" prim)*
    def item(self) -> SetExpr:
        e = self.prim()
        while self.cur.kind == "*":
            self.advance()
            e = Product(e, self.prim())
        return e

    # prim := "~" prim | "(" expr ")" | "0" | "U" | IDENT
    def prim(self) -> SetExpr:
        tok = self.cur
        if tok.kind == "~":
            self.advance()
            return Complement(self.prim())
        if tok.kind == "(":
            self.advance()
            e = self.expr()
            self.expect(")", "')'")
            return e
        if tok.kind == "EMPTY":
            self.advance()
            return Empty()
        if tok.kind == "UNIV":
            self.advance()
            return Universal()
        if tok.kind == "IDENT":
            self.advance()
            return Atom(tok.text)
        raise ParseError(tok.pos, "an expression")


def parse(text: str) -> Statement:
    """Parse a full statement (identity, conditional identity, or solve request).

    Raises ParseError on malformed input and ArityError when a binary set
    operator joins operands of different arity.
    """
    return _Parser(text).statement()


def parse_expr(text: str) -> SetExpr:
    """Parse a bare set expression (no '=')."""
    p = _Parser(text)
    e = p.expr()
    p.expect("EOF", "end of expression")
    arity(e)  # reject ill-typed operand combinations
    return e


# --- printer ---------------------------------------------------------------

_PREC = {
    Union: 10,
    Difference: 20,
    SymDiff: 20,
    Intersect: 30,
    Product: 40,
    Complement: 50,
    Atom: 60,
    Empty: 60,
    Universal: 60,
}
_OPTEXT = {Union: "|", Difference: "-", SymDiff: "^", Intersect: "&", Product: "*"}


def unparse(e: SetExpr) -> str:
    """Deterministic minimal-parenthesization text; parse_expr(unparse(e)) == e."""
    return _unparse(e, 0)


def _unparse(e: SetExpr, floor: int) -> str:
    p = _PREC[type(e)]
    if isinstance(e, Atom):
        s = e.name
    elif isinstance(e, Empty):
        s = "0"
    elif isinstance(e, Universal):
        s = "U"
    elif isinstance(e, Complement):
        s = "~" + _unparse(e.e, _PREC[Complement])
    else:
        lfloor = p
        # `-` and `^` share a level; a mixed chain reparses fine but is
        # printed fully parenthesized to keep the text unambiguous to humans
        if p == 20 and type(e.left) in (Difference, SymDiff) and type(e.left) is not type(e):
            lfloor = p + 1
        s = f"{_unparse(e.left, lfloor)} {_OPTEXT[type(e)]} {_unparse(e.right, p + 1)}"
    return f"({s})" if p < floor else s


def unparse_statement(stmt: Statement) -> str:
    """Statement counterpart of unparse; round-trips through parse."""
    if isinstance(stmt, SolveRequest):
        eqs = " ; ".join(f"{unparse(l)} = {unparse(r)}" for l, r in stmt.equations)
        return f"solve {', '.join(stmt.unknowns)} : {eqs}"
    conclusion = f"{unparse(stmt.lhs)} = {unparse(stmt.rhs)}"
    if not stmt.hypotheses:
        return conclusion
    hyps = ", ".join(f"{unparse(l)} = {unparse(r)}" for l, r in stmt.hypotheses)
    return f"{hyps} |- {conclusion}"
