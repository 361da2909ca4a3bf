"""Expression DSL for building series from text.

Grammar (left associative, parentheses override):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := atom | "-" factor
    atom   := INT | "t" | "L" | "(" expr ")" | FUNC "(" args ")"
    FUNC   := exp | log1p | inv | rev | pow | compose

``pow`` takes (expr, rational-literal); ``compose`` takes two expressions.
``L`` is the ASCII spelling of the lambda indeterminate.  Rational values
arise from division (``1/2``) except in pow's exponent, which is lexed as a
signed literal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import CompositionOrder, ParseError, UnboundSymbol
from .fields import QL, QQ, LAMBDA
from .series import Series, constant, t_series


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class TVar:
    pass


@dataclass(frozen=True)
class LSym:
    pass


@dataclass(frozen=True)
class Unary:
    op: str  # neg | inv | exp | log1p | rev
    arg: object


@dataclass(frozen=True)
class Binary:
    op: str  # add | sub | mul | div
    left: object
    right: object


@dataclass(frozen=True)
class PowNode:
    base: object
    exponent: Fraction


@dataclass(frozen=True)
class ComposeNode:
    outer: object
    inner: object


_FUNCS = ("exp", "log1p", "inv", "rev", "pow", "compose")

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([+\-*/(),])")


class _Tokens:
    def __init__(self, src: str):
        self.src = src
        self.items: list[tuple[str, str, int]] = []  # (kind, text, offset)
        pos = 0
        n = len(src)
        while True:
            while pos < n and src[pos].isspace():
                pos += 1
            if pos >= n:
                break
            m = _TOKEN_RE.match(src, pos)
            if not m:
                raise ParseError(f"unexpected character {src[pos]!r}", pos)
            if m.group(1):
                self.items.append(("INT", m.group(1), pos))
            elif m.group(2):
                self.items.append(("NAME", m.group(2), pos))
            else:
                self.items.append((m.group(3), m.group(3), pos))
            pos = m.end()
        self.items.append(("EOF", "", len(src)))
        self.i = 0

    def peek(self):
        return self.items[self.i]

    def next(self):
        tok = self.items[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, expected: tuple[str, ...]):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(
                f"unexpected {tok[0] or 'end of input'} {tok[1]!r}", tok[2], expected
            )
        return self.next()


def parse_expr(src: str):
    """Parse a DSL expression into an AST; ParseError carries the offset."""
    toks = _Tokens(src)
    ast = _parse_sum(toks)
    tok = toks.peek()
    if tok[0] != "EOF":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2], ("+", "-", "*", "/", "EOF"))
    return ast


def _parse_sum(toks):
    node = _parse_term(toks)
    while toks.peek()[0] in ("+", "-"):
        op = toks.next()[0]
        rhs = _parse_term(toks)
        node = Binary("add" if op == "+" else "sub", node, rhs)
    return node


def _parse_term(toks):
    node = _parse_factor(toks)
    while toks.peek()[0] in ("*", "/"):
        op = toks.next()[0]
        rhs = _parse_factor(toks)
        node = Binary("mul" if op == "*" else "div", node, rhs)
    return node


def _parse_factor(toks):
    if toks.peek()[0] == "-":
        toks.next()
        return Unary("neg", _parse_factor(toks))
    return _parse_atom(toks)


_ATOM_EXPECTED = ("INT", "t", "L", "(", *_FUNCS)


def _parse_atom(toks):
    kind, text, offset = toks.peek()
    if kind == "INT":
        toks.next()
        return Lit(Fraction(int(text)))
    if kind == "(":
        toks.next()
        node = _parse_sum(toks)
        toks.expect(")", (")",))
        return node
    if kind == "NAME":
        toks.next()
        if text == "t":
            return TVar()
        if text == "L":
            return LSym()
        if text in _FUNCS:
            toks.expect("(", ("(",))
            if text == "pow":
                base = _parse_sum(toks)
                toks.expect(",", (",",))
                expo = _parse_rational(toks)
                toks.expect(")", (")",))
                return PowNode(base, expo)
            if text == "compose":
                outer = _parse_sum(toks)
                toks.expect(",", (",",))
                inner = _parse_sum(toks)
                toks.expect(")", (")",))
                return ComposeNode(outer, inner)
            arg = _parse_sum(toks)
            toks.expect(")", (")",))
            return Unary(text, arg)
        raise ParseError(f"unknown name {text!r}", offset, _ATOM_EXPECTED)
    raise ParseError(f"unexpected {kind or 'end of input'} {text!r}", offset, _ATOM_EXPECTED)


def _parse_rational(toks) -> Fraction:
    sign = 1
    if toks.peek()[0] == "-":
        toks.next()
        sign = -1
    num = toks.expect("INT", ("INT",))
    value = Fraction(sign * int(num[1]))
    if toks.peek()[0] == "/":
        toks.next()
        den = toks.expect("INT", ("INT",))
        value = value / int(den[1])
    return value


# ---------------------------------------------------------------------------
# rendering (render . parse == identity on the AST)
# ---------------------------------------------------------------------------

_LEVEL_SUM, _LEVEL_TERM, _LEVEL_UNARY, _LEVEL_ATOM = 1, 2, 3, 4


def render(ast) -> str:
    return _render(ast, 0)


def _render(ast, parent_level: int) -> str:
    if isinstance(ast, Lit):
        if ast.value.denominator == 1 and ast.value >= 0:
            text, level = str(ast.value), _LEVEL_ATOM
        elif ast.value < 0:
            return _render(Unary("neg", Lit(-ast.value)), parent_level)
        else:
            text = f"{ast.value.numerator}/{ast.value.denominator}"
            level = _LEVEL_TERM
    elif isinstance(ast, TVar):
        text, level = "t", _LEVEL_ATOM
    elif isinstance(ast, LSym):
        text, level = "L", _LEVEL_ATOM
    elif isinstance(ast, Unary):
        if ast.op == "neg":
            text, level = "-" + _render(ast.arg, _LEVEL_UNARY), _LEVEL_UNARY
        else:
            text, level = f"{ast.op}({_render(ast.arg, 0)})", _LEVEL_ATOM
    elif isinstance(ast, Binary):
        sym = {"add": " + ", "sub": " - ", "mul": "*", "div": "/"}[ast.op]
        mine = _LEVEL_SUM if ast.op in ("add", "sub") else _LEVEL_TERM
        left = _render(ast.left, mine)
        # left associativity: the right child needs strictly tighter binding
        right = _render(ast.right, mine + 1)
        text, level = left + sym + right, mine
    elif isinstance(ast, PowNode):
        expo = ast.exponent
        es = str(expo) if expo.denominator == 1 else f"{expo.numerator}/{expo.denominator}"
        text, level = f"pow({_render(ast.base, 0)}, {es})", _LEVEL_ATOM
    elif isinstance(ast, ComposeNode):
        text, level = f"compose({_render(ast.outer, 0)}, {_render(ast.inner, 0)})", _LEVEL_ATOM
    else:
        raise TypeError(f"not an AST node: {ast!r}")
    if level < parent_level:
        return f"({text})"
    return text


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def eval_expr(ast, T: int, field=QQ, lam: Fraction | None = None) -> Series:
    """Evaluate an AST to a truncated series by structural recursion.

    ``lam`` binds the symbol L to a rational when the field is Q; with the
    Q(L) field, L evaluates to the indeterminate.
    """
    if isinstance(ast, Lit):
        return constant(field, ast.value, T)
    if isinstance(ast, TVar):
        return t_series(field, T)
    if isinstance(ast, LSym):
        if field is QL:
            return constant(field, LAMBDA, T)
        if lam is not None:
            return constant(field, lam, T)
        raise UnboundSymbol("the symbol L needs the Q(L) field or a bound value")
    if isinstance(ast, Unary):
        if ast.op == "neg":
            return -eval_expr(ast.arg, T, field, lam)
        arg = eval_expr(ast.arg, T, field, lam)
        if ast.op == "inv":
            return arg.inverse()
        if ast.op == "exp":
            return arg.exp()
        if ast.op == "log1p":
            if arg.order() == 0:
                raise CompositionOrder("log1p needs an argument with zero constant term")
            return (arg + field.one).log()
        if ast.op == "rev":
            return arg.revert()
        raise ValueError(f"unknown unary op {ast.op!r}")
    if isinstance(ast, Binary):
        left = eval_expr(ast.left, T, field, lam)
        right = eval_expr(ast.right, T, field, lam)
        if ast.op == "add":
            return left + right
        if ast.op == "sub":
            return left - right
        if ast.op == "mul":
            return left * right
        if ast.op == "div":
            return left / right
        raise ValueError(f"unknown binary op {ast.op!r}")
    if isinstance(ast, PowNode):
        base = eval_expr(ast.base, T, field, lam)
        if ast.exponent.denominator == 1:
            return base.pow_int(int(ast.exponent))
        return base.pow_field(ast.exponent)
    if isinstance(ast, ComposeNode):
        outer = eval_expr(ast.outer, T, field, lam)
        inner = eval_expr(ast.inner, T, field, lam)
        return outer.compose(inner)
    raise TypeError(f"not an AST node: {ast!r}")
