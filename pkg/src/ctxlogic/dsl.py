"""A small scripting language for composite-logic experiments.

Example::

    matrix G = 4x4 [2, 1, 3, 4];
    let A = [3/8, 1/8, 1/8, 3/8];   # context 1/8
    show proj2(apply(G, A));

``not``/``and``/``or`` pick the 4-valued or the 2-valued connectives from
the operand length.  Every error raised here carries a 1-based
``(line, column)`` position.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import composite as cp
from .admissible import AdmissibleMatrix, apply
from .connectives import and2, conjunction4, disjunction4, negation4, not2, or2
from .errors import LogicError
from .prob_core import Proposition, distance, format_scalar

KEYWORDS = frozenset(
    "let matrix show not and or tensor proj1 proj2 context dist apply decompose".split()
)
UNARY_CALLS = ("proj1", "proj2", "context", "decompose")
BINARY_CALLS = ("tensor", "dist")
PUNCT = {"[": "LBRACK", "]": "RBRACK", "(": "LPAREN", ")": "RPAREN", ",": "COMMA",
         ";": "SEMI", "=": "EQ", "/": "SLASH"}


class DslError(Exception):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column

    @property
    def position(self) -> tuple[int, int]:
        return self.line, self.column


class LexError(DslError):
    pass


class ParseError(DslError):
    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        if expected:
            message = f"{message}; expected one of {', '.join(sorted(expected))}"
        super().__init__(message, line, column)
        self.expected = expected


class EvalError(DslError):
    pass


class UndefinedName(EvalError):
    pass


class DuplicateName(EvalError):
    pass


class ShapeError(EvalError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # keyword name upper-cased, IDENT, INT, X, punctuation name, EOF
    text: str
    line: int
    column: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            i, line, col = i + 1, line + 1, 1
        elif ch.isspace():
            i, col = i + 1, col + 1
        elif ch == "#":
            while i < n and source[i] != "\n":
                i += 1
        elif ch.isdigit():
            start = i
            while i < n and source[i].isdigit():
                i += 1
            tokens.append(Token("INT", source[start:i], line, col))
            col += i - start
            # "4x4" in matrix headers
            if i + 1 < n and source[i] == "x" and source[i + 1].isdigit():
                tokens.append(Token("X", "x", line, col))
                i, col = i + 1, col + 1
        elif ch.isalpha() or ch == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            word = source[start:i]
            kind = word.upper() if word in KEYWORDS else ("X" if word == "x" else "IDENT")
            tokens.append(Token(kind, word, line, col))
            col += i - start
        elif ch in PUNCT:
            tokens.append(Token(PUNCT[ch], ch, line, col))
            i, col = i + 1, col + 1
        else:
            raise LexError(f"illegal character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# --- syntax tree -----------------------------------------------------------

@dataclass(frozen=True)
class Literal:
    values: tuple[Fraction, ...]
    pos: tuple[int, int]


@dataclass(frozen=True)
class Name:
    name: str
    pos: tuple[int, int]


@dataclass(frozen=True)
class Not:
    operand: "Expr"
    pos: tuple[int, int]


@dataclass(frozen=True)
class And:
    left: "Expr"
    right: "Expr"
    pos: tuple[int, int]


@dataclass(frozen=True)
class Or:
    left: "Expr"
    right: "Expr"
    pos: tuple[int, int]


@dataclass(frozen=True)
class Call:
    """``tensor``, ``dist``, ``proj1``, ``proj2``, ``context`` or ``decompose``."""

    func: str
    args: tuple["Expr", ...]
    pos: tuple[int, int]


@dataclass(frozen=True)
class Apply:
    matrix: Name
    operand: "Expr"
    pos: tuple[int, int]


Expr = Union[Literal, Name, Not, And, Or, Call, Apply]


@dataclass(frozen=True)
class LetProposition:
    name: str
    expr: Expr
    pos: tuple[int, int]


@dataclass(frozen=True)
class LetMatrix:
    name: str
    rows: int
    cols: int
    col_map: tuple[int, ...]
    pos: tuple[int, int]


@dataclass(frozen=True)
class Show:
    expr: Expr
    pos: tuple[int, int]


Statement = Union[LetProposition, LetMatrix, Show]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]


# --- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        return ParseError(f"unexpected {found}", t.line, t.column, frozenset(expected))

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            raise self.fail({kind})
        t = self.tok
        self.i += 1
        return t

    def accept(self, kind: str) -> Optional[Token]:
        if self.tok.kind == kind:
            t = self.tok
            self.i += 1
            return t
        return None

    def script(self) -> Script:
        stmts = []
        while self.tok.kind != "EOF":
            stmts.append(self.statement())
        return Script(tuple(stmts))

    def statement(self) -> Statement:
        t = self.tok
        pos = (t.line, t.column)
        if self.accept("LET"):
            name = self.expect("IDENT").text
            self.expect("EQ")
            expr = self.expr()
            self.expect("SEMI")
            return LetProposition(name, expr, pos)
        if self.accept("MATRIX"):
            name = self.expect("IDENT").text
            self.expect("EQ")
            rows = self.positive_int()
            self.expect("X")
            cols_tok = self.tok
            cols = self.positive_int()
            self.expect("LBRACK")
            col_map = [self.positive_int()]
            while self.accept("COMMA"):
                col_map.append(self.positive_int())
            self.expect("RBRACK")
            self.expect("SEMI")
            if len(col_map) != cols:
                raise ParseError(
                    f"matrix {name} declares {cols} columns but lists {len(col_map)}",
                    cols_tok.line, cols_tok.column,
                )
            for r in col_map:
                if r > rows:
                    raise ParseError(f"row {r} outside 1..{rows} in matrix {name}", *pos)
            return LetMatrix(name, rows, cols, tuple(col_map), pos)
        if self.accept("SHOW"):
            expr = self.expr()
            self.expect("SEMI")
            return Show(expr, pos)
        raise self.fail({"LET", "MATRIX", "SHOW"})

    def positive_int(self) -> int:
        t = self.expect("INT")
        if int(t.text) < 1:
            raise ParseError("expected a positive integer", t.line, t.column)
        return int(t.text)

    def expr(self) -> Expr:
        left = self.and_expr()
        while (t := self.accept("OR")) is not None:
            left = Or(left, self.and_expr(), (t.line, t.column))
        return left

    def and_expr(self) -> Expr:
        left = self.unary()
        while (t := self.accept("AND")) is not None:
            left = And(left, self.unary(), (t.line, t.column))
        return left

    def unary(self) -> Expr:
        t = self.accept("NOT")
        if t is not None:
            return Not(self.unary(), (t.line, t.column))
        return self.atom()

    def atom(self) -> Expr:
        t = self.tok
        pos = (t.line, t.column)
        if t.kind == "LBRACK":
            return self.literal()
        if self.accept("IDENT"):
            return Name(t.text, pos)
        if self.accept("LPAREN"):
            inner = self.expr()
            self.expect("RPAREN")
            return inner
        func = t.text
        if t.kind in ("TENSOR", "DIST"):
            self.i += 1
            self.expect("LPAREN")
            a = self.expr()
            self.expect("COMMA")
            b = self.expr()
            self.expect("RPAREN")
            return Call(func, (a, b), pos)
        if t.kind in ("PROJ1", "PROJ2", "CONTEXT", "DECOMPOSE"):
            self.i += 1
            self.expect("LPAREN")
            a = self.expr()
            self.expect("RPAREN")
            return Call(func, (a,), pos)
        if self.accept("APPLY"):
            self.expect("LPAREN")
            m = self.expect("IDENT")
            self.expect("COMMA")
            a = self.expr()
            self.expect("RPAREN")
            return Apply(Name(m.text, (m.line, m.column)), a, pos)
        raise self.fail({"LBRACK", "IDENT", "LPAREN", "NOT", "TENSOR", "DIST", "PROJ1",
                         "PROJ2", "CONTEXT", "DECOMPOSE", "APPLY"})

    def literal(self) -> Literal:
        start = self.expect("LBRACK")
        values = [self.rational()]
        while self.accept("COMMA"):
            values.append(self.rational())
        self.expect("RBRACK")
        return Literal(tuple(values), (start.line, start.column))

    def rational(self) -> Fraction:
        num = self.expect("INT")
        if self.accept("SLASH"):
            den = self.expect("INT")
            if int(den.text) == 0:
                raise ParseError("zero denominator", den.line, den.column)
            return Fraction(int(num.text), int(den.text))
        return Fraction(int(num.text))


def parse(source_or_tokens: Union[str, list[Token]]) -> Script:
    tokens = tokenize(source_or_tokens) if isinstance(source_or_tokens, str) else source_or_tokens
    return _Parser(tokens).script()


# --- pretty printer --------------------------------------------------------

def _fmt_expr(e: Expr, prec: int = 0) -> str:
    # precedence: or 1, and 2, not 3, atoms 4
    if isinstance(e, Literal):
        return "[" + ", ".join(format_scalar(v) for v in e.values) + "]"
    if isinstance(e, Name):
        return e.name
    if isinstance(e, Not):
        text = "not " + _fmt_expr(e.operand, 3)
        return f"({text})" if prec > 3 else text
    if isinstance(e, (And, Or)):
        level, word = (2, "and") if isinstance(e, And) else (1, "or")
        text = f"{_fmt_expr(e.left, level)} {word} {_fmt_expr(e.right, level + 1)}"
        return f"({text})" if prec > level else text
    if isinstance(e, Call):
        return f"{e.func}(" + ", ".join(_fmt_expr(a) for a in e.args) + ")"
    if isinstance(e, Apply):
        return f"apply({e.matrix.name}, {_fmt_expr(e.operand)})"
    raise TypeError(e)


def pretty(script: Script) -> str:
    lines = []
    for s in script.statements:
        if isinstance(s, LetProposition):
            lines.append(f"let {s.name} = {_fmt_expr(s.expr)};")
        elif isinstance(s, LetMatrix):
            lines.append(f"matrix {s.name} = {s.rows}x{s.cols} [{', '.join(map(str, s.col_map))}];")
        else:
            lines.append(f"show {_fmt_expr(s.expr)};")
    return "\n".join(lines) + ("\n" if lines else "")


def strip_positions(node):
    """Structural view of a tree with positions erased (for round-trip comparisons)."""
    if isinstance(node, (Script, tuple, list)):
        items = node.statements if isinstance(node, Script) else node
        return tuple(strip_positions(x) for x in items)
    if hasattr(node, "__dataclass_fields__"):
        return (type(node).__name__,) + tuple(
            strip_positions(getattr(node, f)) for f in node.__dataclass_fields__ if f != "pos"
        )
    return node


# --- evaluation ------------------------------------------------------------

Value = Union[Proposition, Fraction, tuple]


def format_value(value: Value) -> str:
    if isinstance(value, Proposition):
        return str(value)
    if isinstance(value, Fraction):
        return format_scalar(value)
    return "(" + ", ".join(format_value(v) for v in value) + ")"


def value_to_json(value: Value):
    if isinstance(value, Proposition):
        return value.to_json()
    if isinstance(value, Fraction):
        return format_scalar(value)
    return [value_to_json(v) for v in value]


class _Evaluator:
    def __init__(self):
        self.env: dict[str, Union[Proposition, AdmissibleMatrix]] = {}

    def define(self, name: str, value, pos) -> None:
        if name in self.env:
            raise DuplicateName(f"{name} is already defined", *pos)
        self.env[name] = value

    def run(self, script: Script) -> list[Value]:
        out = []
        for s in script.statements:
            if isinstance(s, LetMatrix):
                self.define(s.name, AdmissibleMatrix(s.rows, s.col_map), s.pos)
            elif isinstance(s, LetProposition):
                self.define(s.name, self.prop(s.expr), s.pos)
            else:
                out.append(self.eval(s.expr))
        return out

    def prop(self, e: Expr) -> Proposition:
        v = self.eval(e)
        if not isinstance(v, Proposition):
            raise ShapeError(f"expected a proposition, got {format_value(v)}", *e.pos)
        return v

    def eval(self, e: Expr) -> Value:
        try:
            return self._eval(e)
        except LogicError as exc:
            raise EvalError(f"{type(exc).__name__}: {exc}", *e.pos) from exc

    def _eval(self, e: Expr) -> Value:
        if isinstance(e, Literal):
            return Proposition(e.values)
        if isinstance(e, Name):
            if e.name not in self.env:
                raise UndefinedName(f"undefined name {e.name}", *e.pos)
            v = self.env[e.name]
            if isinstance(v, AdmissibleMatrix):
                raise ShapeError(f"{e.name} is a matrix; use apply({e.name}, ...)", *e.pos)
            return v
        if isinstance(e, Not):
            a = self.prop(e.operand)
            if len(a) == 4:
                return negation4(a)
            if len(a) == 2:
                return not2(a)
            raise ShapeError(f"'not' needs a 2- or 4-valued operand, got {len(a)} outcomes", *e.pos)
        if isinstance(e, (And, Or)):
            a, b = self.prop(e.left), self.prop(e.right)
            word = "and" if isinstance(e, And) else "or"
            if len(a) != len(b) or len(a) not in (2, 4):
                raise ShapeError(
                    f"'{word}' needs two 2-valued or two 4-valued operands, got {len(a)} and {len(b)}",
                    *e.pos,
                )
            if isinstance(e, And):
                return conjunction4(a, b) if len(a) == 4 else and2(a, b)
            return disjunction4(a, b) if len(a) == 4 else or2(a, b)
        if isinstance(e, Apply):
            g = self.env.get(e.matrix.name)
            if g is None:
                raise UndefinedName(f"undefined matrix {e.matrix.name}", *e.matrix.pos)
            if not isinstance(g, AdmissibleMatrix):
                raise ShapeError(f"{e.matrix.name} is not a matrix", *e.matrix.pos)
            return apply(g, self.prop(e.operand))
        if isinstance(e, Call):
            args = [self.prop(a) for a in e.args]
            if e.func == "tensor":
                return cp.tensor(*args)
            if e.func == "dist":
                return distance(*args)
            (a,) = args
            if len(a) != 4:
                raise ShapeError(f"{e.func} needs a 4-valued proposition, got {len(a)} outcomes", *e.pos)
            if e.func == "proj1":
                return cp.marginal_first(a)
            if e.func == "proj2":
                return cp.marginal_second(a)
            if e.func == "context":
                return cp.context(a)
            return cp.decompose(a)
        raise TypeError(e)


def evaluate(script: Union[Script, str]) -> list[Value]:
    """Run a script and return the values of its ``show`` statements in order."""
    if isinstance(script, str):
        script = parse(script)
    return _Evaluator().run(script)


def run_source(source: str) -> list[str]:
    return [format_value(v) for v in evaluate(source)]
