"""A small arithmetic expression language for coordinate maps.

Grammar (standard precedence, left associative):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' uint)?
    atom   := number | variable | '(' expr ')'

Numbers are decimal literals; variables are x1..xn for the declared
dimension; '^' takes a literal non-negative integer exponent and binds
tighter than unary minus, so "-x1^2" means -(x1^2). Evaluation is IEEE
double; exactness lives elsewhere (linear-variant pieces), not here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    BadExponent,
    DimensionMismatch,
    DivisionByZero,
    ExprSyntaxError,
    UnknownVariable,
)

FD_STEP = 2.0 ** -20


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Var, Neg, BinOp, Pow]


@dataclass(frozen=True)
class Expr:
    """A parsed expression together with its declared variable dimension."""

    root: Node
    dim: int

    def __str__(self) -> str:
        return _to_source(self.root, 1)


# ---------------------------------------------------------------- tokenizer

_OPS = set("+-*/^()")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch in " \t":
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            if j < n and src[j] == ".":
                j += 1
                if j == n or not src[j].isdigit():
                    raise ExprSyntaxError("digits required after decimal point", j)
                while j < n and src[j].isdigit():
                    j += 1
            tokens.append(("num", src[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("ident", src[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


# ---------------------------------------------------------------- parser

class _Parser:
    def __init__(self, src: str, dim: int):
        self.tokens = _tokenize(src)
        self.pos = 0
        self.dim = dim

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, value, offset = self.next()
        if kind != "op" or value != op:
            raise ExprSyntaxError(f"expected {op!r}", offset)

    def parse(self) -> Node:
        node = self.expr()
        kind, value, offset = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {value!r}", offset)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.next()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.next()[1]
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek()[:2] == ("op", "-"):
            self.next()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.next()
            kind, value, offset = self.next()
            if kind != "num" or "." in value:
                raise BadExponent(
                    f"exponent must be a literal non-negative integer (offset {offset})"
                )
            return Pow(base, int(value))
        return base

    def atom(self) -> Node:
        kind, value, offset = self.next()
        if kind == "num":
            return Num(float(value))
        if kind == "ident":
            if value.startswith("x") and value[1:].isdigit():
                index = int(value[1:])
                if 1 <= index <= self.dim:
                    return Var(index)
            raise UnknownVariable(
                f"unknown variable {value!r}; expected x1..x{self.dim}"
            )
        if kind == "op" and value == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ExprSyntaxError(f"unexpected {value!r}", offset)


def parse(src: str, dim: int) -> Expr:
    """Parse an expression over variables x1..x<dim>."""
    if dim < 0:
        raise ValueError("dimension must be non-negative")
    return Expr(root=_Parser(src, dim).parse(), dim=dim)


# ---------------------------------------------------------------- printing

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_NEG, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _node_level(node: Node) -> int:
    if isinstance(node, BinOp):
        return _LEVEL_ADD if node.op in "+-" else _LEVEL_MUL
    if isinstance(node, Neg):
        return _LEVEL_NEG
    if isinstance(node, Pow):
        return _LEVEL_POW
    return _LEVEL_ATOM


def _to_source(node: Node, min_level: int) -> str:
    if isinstance(node, Num):
        text = str(int(node.value)) if node.value.is_integer() else repr(node.value)
    elif isinstance(node, Var):
        text = f"x{node.index}"
    elif isinstance(node, Neg):
        text = "-" + _to_source(node.operand, _LEVEL_NEG)
    elif isinstance(node, Pow):
        text = f"{_to_source(node.base, _LEVEL_ATOM)}^{node.exponent}"
    else:
        level = _node_level(node)
        text = (
            f"{_to_source(node.left, level)} {node.op} "
            f"{_to_source(node.right, level + 1)}"
        )
    return f"({text})" if _node_level(node) < min_level else text


def to_source(e: Expr) -> str:
    """Print an expression; parse(to_source(e), e.dim) rebuilds the same tree."""
    return str(e)


# ---------------------------------------------------------------- evaluation

def _ev(node: Node, point: Sequence[float]) -> float:
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Var):
        return point[node.index - 1]
    if isinstance(node, Neg):
        return -_ev(node.operand, point)
    if isinstance(node, Pow):
        return _ev(node.base, point) ** node.exponent
    left = _ev(node.left, point)
    right = _ev(node.right, point)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right == 0.0:
        raise DivisionByZero("division by zero during evaluation")
    return left / right


def evaluate(e: Expr, point: Sequence[float]) -> float:
    """Evaluate at a point in IEEE double arithmetic."""
    if len(point) != e.dim:
        raise DimensionMismatch(f"point has {len(point)} coordinates, expected {e.dim}")
    return _ev(e.root, point)


def jacobian_fd(exprs: Sequence[Expr], point: Sequence[float]) -> list[list[float]]:
    """Central-difference Jacobian of a square expression system."""
    n = len(point)
    if len(exprs) != n or any(e.dim != n for e in exprs):
        raise DimensionMismatch("jacobian_fd needs a square system")
    h = FD_STEP
    rows: list[list[float]] = [[0.0] * n for _ in exprs]
    base = [float(x) for x in point]
    for j in range(n):
        plus = list(base)
        minus = list(base)
        plus[j] += h
        minus[j] -= h
        for i, e in enumerate(exprs):
            rows[i][j] = (_ev(e.root, plus) - _ev(e.root, minus)) / (2.0 * h)
    return rows
