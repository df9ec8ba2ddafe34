"""A small expression language for classes of varieties.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := primary ('^' INT)?
    primary:= leaf | 'sym' '(' leaf ',' INT ')' | '(' expr ')'
    leaf   := 'point' | 'L' | 'E' | 'A' '(' INT ')' | 'P' '(' INT ')'
            | 'curve' '(' INT ')' | 'surface' '(' INT ',' INT ')'

Expressions evaluate under mu_h (into Z[C]) or, for the handful of varieties
with known closed forms, symbolically in Z[L, E].
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import hodge
from .monoid_ring import C, RingElement
from .zeta_series import LE, curve_zeta, surface_leading_zeta


class DSLSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnsupportedExpression(ValueError):
    pass


@dataclass(frozen=True)
class Leaf:
    kind: str  # point, L, E, A, P, curve, surface
    args: tuple[int, ...] = ()


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Sym:
    leaf: Leaf
    n: int


Expr = Union[Leaf, BinOp, Pow, Sym]

_ARITY = {"point": 0, "L": 0, "E": 0, "A": 1, "P": 1, "curve": 1, "surface": 2}
SYM_LEAVES = {"curve", "surface", "P", "E"}

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(source: str):
    tokens = []
    pos = 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("INT", m.group(1), start))
        elif m.group(2):
            tokens.append(("NAME", m.group(2), start))
        else:
            tokens.append(("OP", m.group(3), start))
        pos = m.end()
    tokens.append(("EOF", "", len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.i = 0

    def error(self, message: str, offset: int | None = None):
        if offset is None:
            offset = self.tokens[self.i][2]
        line = self.source.count("\n", 0, offset) + 1
        col = offset - (self.source.rfind("\n", 0, offset) + 1) + 1
        raise DSLSyntaxError(message, line, col)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = repr(value) if value is not None else kind.lower()
            got = "end of input" if tok[0] == "EOF" else repr(tok[1])
            self.error(f"expected {want}, found {got}")
        self.i += 1
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek()[0] != "EOF":
            self.error(f"unexpected {self.peek()[1]!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[0] == "OP" and self.peek()[1] in "+-":
            op = self.take()[1]
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek()[0] == "OP" and self.peek()[1] == "*":
            self.take()
            e = BinOp("*", e, self.factor())
        return e

    def factor(self) -> Expr:
        e = self.primary()
        if self.peek()[0] == "OP" and self.peek()[1] == "^":
            self.take()
            e = Pow(e, int(self.take("INT")[1]))
        return e

    def primary(self) -> Expr:
        kind, value, offset = self.peek()
        if kind == "OP" and value == "(":
            self.take()
            e = self.expr()
            self.take("OP", ")")
            return e
        if kind == "NAME" and value == "sym":
            self.take()
            self.take("OP", "(")
            arg_offset = self.peek()[2]
            arg = self.expr()
            if not isinstance(arg, Leaf):
                self.error("sym applies only to a single leaf", arg_offset)
            if arg.kind not in SYM_LEAVES:
                self.error(f"sym is not supported for {arg.kind!r}; use curve, surface, P(n) or E", arg_offset)
            self.take("OP", ",")
            n = int(self.take("INT")[1])
            self.take("OP", ")")
            return Sym(arg, n)
        if kind == "NAME":
            return self.leaf()
        self.error("expected a variety" if kind != "EOF" else "unexpected end of input")

    def leaf(self) -> Leaf:
        _, name, offset = self.take("NAME")
        if name not in _ARITY:
            self.error(f"unknown variety {name!r}", offset)
        args = []
        if _ARITY[name]:
            self.take("OP", "(")
            for k in range(_ARITY[name]):
                if k:
                    self.take("OP", ",")
                args.append(int(self.take("INT")[1]))
            self.take("OP", ")")
        return Leaf(name, tuple(args))


def parse(source: str) -> Expr:
    return _Parser(source).parse()


_PREC = {"+": 1, "-": 1, "*": 2}


def serialize(e: Expr) -> str:
    """Canonical text; reparses to an identical tree."""
    return _ser(e, 0)


def _ser(e: Expr, ctx: int) -> str:
    if isinstance(e, Leaf):
        return e.kind + (f"({', '.join(map(str, e.args))})" if e.args else "")
    if isinstance(e, Sym):
        return f"sym({_ser(e.leaf, 0)}, {e.n})"
    if isinstance(e, Pow):
        base = _ser(e.base, 0)
        if not isinstance(e.base, (Leaf, Sym)):
            base = f"({base})"
        return f"{base}^{e.exponent}"
    p = _PREC[e.op]
    # left-associative: the right operand needs parentheses at equal precedence
    text = f"{_ser(e.left, p)} {e.op} {_ser(e.right, p + 1)}"
    return f"({text})" if p < ctx else text


def leaf_hodge(leaf: Leaf) -> hodge.HodgeVector:
    if leaf.kind == "point":
        return hodge.point()
    if leaf.kind == "P":
        return hodge.projective(leaf.args[0])
    if leaf.kind == "E":
        return hodge.E
    if leaf.kind == "curve":
        return hodge.curve(leaf.args[0])
    if leaf.kind == "surface":
        return hodge.surface(*leaf.args)
    raise UnsupportedExpression(f"{leaf.kind} is not a smooth projective leaf")


def eval_mu_h(e: Expr) -> RingElement:
    """Image of the class under mu_h, as an element of Z[C]."""
    if isinstance(e, Leaf):
        if e.kind == "L":
            return RingElement.zero(C)
        if e.kind == "A":
            return RingElement.one(C) if e.args[0] == 0 else RingElement.zero(C)
        return RingElement.basis(leaf_hodge(e).polynomial())
    if isinstance(e, BinOp):
        a, b = eval_mu_h(e.left), eval_mu_h(e.right)
        return a + b if e.op == "+" else a - b if e.op == "-" else a * b
    if isinstance(e, Pow):
        return eval_mu_h(e.base) ** e.exponent
    if isinstance(e, Sym):
        leaf = e.leaf
        if leaf.kind in ("curve", "E"):
            g = 1 if leaf.kind == "E" else leaf.args[0]
            return curve_zeta(g, e.n)[e.n]
        if leaf.kind == "surface":
            return surface_leading_zeta(*leaf.args, e.n)[e.n]
        if leaf.kind == "P":
            return RingElement.basis(hodge.sym_power(leaf_hodge(leaf), e.n).polynomial())
        raise UnsupportedExpression(f"sym of {leaf.kind} is not supported")
    raise TypeError(f"not an expression: {e!r}")


def uses_leading_term_model(e: Expr) -> bool:
    """Whether evaluation involves a surface symmetric power (leading-term model only)."""
    if isinstance(e, Sym):
        return e.leaf.kind == "surface" and e.n >= 2
    if isinstance(e, BinOp):
        return uses_leading_term_model(e.left) or uses_leading_term_model(e.right)
    if isinstance(e, Pow):
        return uses_leading_term_model(e.base)
    return False


def _projective_LE(n: int) -> RingElement:
    L = RingElement.symbol("L", LE)
    return sum((L ** i for i in range(n + 1)), RingElement.zero(LE))


def eval_id_symbolic(e: Expr) -> RingElement:
    """Class in Z[L, E] for expressions built from point, L, A(n), P(n), E and their closed-form sym powers."""
    L = RingElement.symbol("L", LE)
    if isinstance(e, Leaf):
        if e.kind == "point":
            return RingElement.one(LE)
        if e.kind == "L":
            return L
        if e.kind == "A":
            return L ** e.args[0]
        if e.kind == "P":
            return _projective_LE(e.args[0])
        if e.kind == "E" or (e.kind == "curve" and e.args == (1,)):
            return RingElement.symbol("E", LE)
        if e.kind == "curve" and e.args == (0,):
            return _projective_LE(1)
        raise UnsupportedExpression(f"{serialize(e)} has no class in Z[L, E]")
    if isinstance(e, BinOp):
        a, b = eval_id_symbolic(e.left), eval_id_symbolic(e.right)
        return a + b if e.op == "+" else a - b if e.op == "-" else a * b
    if isinstance(e, Pow):
        return eval_id_symbolic(e.base) ** e.exponent
    if isinstance(e, Sym):
        from .zeta_series import id_measure_series

        name = id_variety_name(e.leaf)
        return id_measure_series(name, e.n)[e.n]
    raise TypeError(f"not an expression: {e!r}")


def id_variety_name(leaf: Leaf) -> str:
    """Map a leaf onto one of the closed-form universal examples (P1, P2, elliptic)."""
    if leaf.kind == "P" and leaf.args[0] in (1, 2):
        return f"P{leaf.args[0]}"
    if leaf.kind == "curve" and leaf.args == (0,):
        return "P1"
    if leaf.kind == "E" or (leaf.kind == "curve" and leaf.args == (1,)):
        return "elliptic"
    raise UnsupportedExpression(
        f"id-symbolic zeta series are available only for P(1), P(2) and E, not {serialize(leaf)}"
    )
