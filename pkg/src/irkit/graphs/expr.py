"""Graph expression DSL.

Grammar (binding from loose to tight; all binary operators left-associative):

    expr   := term  (('+' | '|') term)*      disjoint union / OR product
    term   := unary (('*' | 'x') unary)*     strong product / tensor product
    unary  := '~' unary | power
    power  := atom ('^' INT)*
    atom   := NAME '(' args ')' | 'schlafli' | 'g6:TEXT' | '@path' | '(' expr ')'

`g6:` and `@` consume characters up to the next whitespace or end of input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from . import core
from .build import make_named
from .core import DEFAULT_SIZE_LIMIT, Graph, GraphError
from .g6 import from_graph6


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Named:
    name: str
    params: tuple[int, ...]

    def __str__(self):
        if not self.params:
            return self.name
        return f"{self.name}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class Myc:
    arg: "Expr"

    def __str__(self):
        return f"M({self.arg})"


@dataclass(frozen=True)
class Complement:
    arg: "Expr"

    def __str__(self):
        return f"~({self.arg})"


@dataclass(frozen=True)
class Power:
    arg: "Expr"
    exp: int

    def __str__(self):
        return f"({self.arg})^{self.exp}"


@dataclass(frozen=True)
class Binary:
    op: str  # strong | tensor | union | or
    left: "Expr"
    right: "Expr"

    def __str__(self):
        sym = {"strong": "*", "tensor": "x", "union": "+", "or": "|"}[self.op]
        return f"({self.left} {sym} {self.right})"


@dataclass(frozen=True)
class Literal:
    text: str  # graph6

    def __str__(self):
        return f"g6:{self.text}"


@dataclass(frozen=True)
class FileRef:
    path: str

    def __str__(self):
        return f"@{self.path}"


Expr = Union[Named, Myc, Complement, Power, Binary, Literal, FileRef]

_TOKEN = re.compile(
    r"\s*(?:(?P<g6>g6:\S+)|(?P<file>@\S+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<int>\d+)|(?P<sym>[()+*|^~,]))"
)

_GENERATOR_ARITY = {"K": 1, "Kbar": 1, "C": 1, "W": 1, "KG": 2}


def tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"cannot tokenize at: {text[pos:]!r}")
            break
        pos = m.end()
        tokens.append(next(v for v in m.groupdict().values() if v is not None))
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.toks = tokens
        self.i = 0

    def peek(self) -> Optional[str]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> str:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of expression")
        self.i += 1
        return t

    def expect(self, t: str) -> None:
        got = self.take()
        if got != t:
            raise ParseError(f"expected {t!r}, got {got!r}")

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input: {self.toks[self.i:]}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek() in ("+", "|"):
            op = "union" if self.take() == "+" else "or"
            e = Binary(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.peek() in ("*", "x"):
            op = "strong" if self.take() == "*" else "tensor"
            e = Binary(op, e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.peek() == "~":
            self.take()
            return Complement(self.unary())
        return self.power()

    def power(self) -> Expr:
        e = self.atom()
        while self.peek() == "^":
            self.take()
            k = self.take()
            if not k.isdigit() or int(k) < 1:
                raise ParseError(f"power exponent must be a positive integer, got {k!r}")
            e = Power(e, int(k))
        return e

    def atom(self) -> Expr:
        t = self.take()
        if t == "(":
            e = self.expr()
            self.expect(")")
            return e
        if t.startswith("g6:"):
            return Literal(t[3:])
        if t.startswith("@"):
            return FileRef(t[1:])
        if t == "schlafli":
            return Named("schlafli", ())
        if t == "M":
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Myc(inner)
        if t in _GENERATOR_ARITY:
            self.expect("(")
            params = [self._int()]
            for _ in range(_GENERATOR_ARITY[t] - 1):
                self.expect(",")
                params.append(self._int())
            self.expect(")")
            return Named(t, tuple(params))
        raise ParseError(f"unknown generator or token {t!r}")

    def _int(self) -> int:
        t = self.take()
        if not t.isdigit():
            raise ParseError(f"expected integer, got {t!r}")
        return int(t)


def parse(text: str) -> Expr:
    return _Parser(tokenize(text)).parse()


def evaluate(e: Expr, size_limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    if isinstance(e, Named):
        return make_named(e.name, *e.params)
    if isinstance(e, Myc):
        from .build import mycielski

        g = evaluate(e.arg, size_limit)
        return _with_name(mycielski(g), str(e))
    if isinstance(e, Complement):
        return _with_name(evaluate(e.arg, size_limit).complement(), str(e))
    if isinstance(e, Power):
        g = evaluate(e.arg, size_limit)
        return _with_name(core.strong_power(g, e.exp, size_limit), str(e))
    if isinstance(e, Binary):
        a = evaluate(e.left, size_limit)
        b = evaluate(e.right, size_limit)
        fn = {
            "strong": lambda: core.strong_product(a, b, size_limit),
            "tensor": lambda: core.tensor_product(a, b, size_limit),
            "or": lambda: core.or_product(a, b, size_limit),
            "union": lambda: core.disjoint_union(a, b),
        }[e.op]
        return _with_name(fn(), str(e))
    if isinstance(e, Literal):
        return _with_name(from_graph6(e.text), str(e))
    if isinstance(e, FileRef):
        try:
            text = Path(e.path).read_text().strip()
        except OSError as exc:
            raise GraphError(f"cannot read graph file {e.path!r}: {exc}") from exc
        return _with_name(from_graph6(text), str(e))
    raise TypeError(f"not an expression: {e!r}")


def _with_name(g: Graph, name: str) -> Graph:
    return Graph(g.n, g.rows, name)


def eval_text(text: str, size_limit: int = DEFAULT_SIZE_LIMIT) -> Graph:
    return evaluate(parse(text), size_limit)


def split_power(e: Expr) -> tuple[Expr, int]:
    """Unwrap nested strong powers: ((b^2)^3) -> (b, 6)."""
    k = 1
    while isinstance(e, Power):
        k *= e.exp
        e = e.arg
    return e, k


def strong_factors(e: Expr) -> list[Expr]:
    """Flatten a tree of strong products into its factor list."""
    if isinstance(e, Binary) and e.op == "strong":
        return strong_factors(e.left) + strong_factors(e.right)
    return [e]


def union_parts(e: Expr) -> list[Expr]:
    if isinstance(e, Binary) and e.op == "union":
        return union_parts(e.left) + union_parts(e.right)
    return [e]
