"""Concrete syntax: lexer, parser, and pretty-printer.

Formula grammar, loosest binding first::

    formula    :=  iff
    iff        :=  implies [ '<->' iff ]             right associative
    implies    :=  or [ '->' implies ]               right associative
    or         :=  and { '|' and }                   n-ary, flattened
    and        :=  unary { '&' unary }               n-ary, flattened
    unary      :=  '~' unary | quantified | atom
    quantified :=  'forall' name+ '.' iff
                |  'exists' name+ '.' iff
                |  'H' '{' 'forall' name+ ';' row { ',' row } '}' '.' iff
    row        :=  name '(' name* ')'
    atom       :=  'true' | 'false' | '(' iff ')' | name ('=' | '!=') name

Quantifier bodies extend as far right as possible.  ``v != w`` abbreviates
``~ v = w`` and the printer always prefers the abbreviation.  ``#`` starts
a comment running to end of line.  ``forall``, ``exists``, ``true`` and
``false`` are reserved words; ``H`` is special only when a ``{`` follows.
Input must be ASCII.

Presentations use a separate line-oriented format: one ``word = word``
equation per line, with the same comment convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .syntax import (
    And,
    Branch,
    ConstFalse,
    ConstTrue,
    EqualAtom,
    Exists,
    FALSE,
    ForAll,
    Formula,
    HenkinPrefix,
    Iff,
    Implies,
    InvalidPrefixError,
    Not,
    Or,
    TRUE,
    Variable,
    mk_prefix,
)
from .words import Equation, Presentation

__all__ = [
    "SourceSpan",
    "ParseError",
    "parse_formula",
    "format_formula",
    "parse_presentation",
    "parse_equation",
    "format_presentation",
    "format_equation",
]


@dataclass(frozen=True, slots=True)
class SourceSpan:
    line: int
    column: int
    length: int = 1


class ParseError(ValueError):
    """A syntax error with a 1-based line:column position."""

    def __init__(self, message: str, span: SourceSpan | None = None):
        self.bare_message = message
        self.span = span
        if span is not None:
            message = f"{span.line}:{span.column}: {message}"
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # "name", "eof", or the symbol text itself
    text: str
    line: int
    column: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.line, self.column, max(1, len(self.text)))


_NAME_TOKEN = re.compile(r"[A-Za-z][A-Za-z0-9_']*")
_MULTI = ("<->", "->", "!=")
_SINGLE = frozenset("(){};,.=&|~")
_RESERVED = frozenset({"forall", "exists", "true", "false"})


def _lex(source: str) -> list[_Token]:
    toks: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(source)
    while i < n:
        ch = source[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and source[i] != "\n":
                i += 1
                col += 1
            continue
        matched = False
        for sym in _MULTI:
            if source.startswith(sym, i):
                toks.append(_Token(sym, sym, line, col))
                i += len(sym)
                col += len(sym)
                matched = True
                break
        if matched:
            continue
        if ch in _SINGLE:
            toks.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        m = _NAME_TOKEN.match(source, i)
        if m:
            text = m.group()
            toks.append(_Token("name", text, line, col))
            i = m.end()
            col += len(text)
            continue
        span = SourceSpan(line, col)
        if ord(ch) > 127:
            raise ParseError(f"non-ASCII character {ch!r}", span)
        raise ParseError(f"unexpected character {ch!r}", span)
    toks.append(_Token("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, toks: list[_Token]):
        self.toks = toks
        self.i = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.toks[min(self.i + ahead, len(self.toks) - 1)]

    def advance(self) -> _Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    @staticmethod
    def describe(t: _Token) -> str:
        if t.kind == "eof":
            return "end of input"
        return f"'{t.text}'"

    def expect(self, kind: str) -> _Token:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected '{kind}', found {self.describe(t)}", t.span)
        return self.advance()

    def variable(self, role: str = "variable") -> Variable:
        t = self.peek()
        if t.kind != "name":
            raise ParseError(f"expected {role} name, found {self.describe(t)}", t.span)
        if t.text in _RESERVED:
            raise ParseError(f"'{t.text}' is reserved and cannot name a {role}", t.span)
        self.advance()
        return Variable(t.text)

    def binder_list(self, what: str) -> tuple[Variable, ...]:
        out: list[Variable] = []
        seen: set[str] = set()
        while self.peek().kind == "name" and self.peek().text not in _RESERVED:
            t = self.peek()
            v = self.variable("bound variable")
            if v.name in seen:
                raise ParseError(f"'{v.name}' bound twice in the same '{what}' block", t.span)
            seen.add(v.name)
            out.append(v)
        if not out:
            t = self.peek()
            raise ParseError(f"'{what}' needs at least one variable, found {self.describe(t)}", t.span)
        return tuple(out)

    def iff(self) -> Formula:
        left = self.implies()
        if self.peek().kind == "<->":
            self.advance()
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "->":
            self.advance()
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        items = [self.conjunction()]
        while self.peek().kind == "|":
            self.advance()
            items.append(self.conjunction())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def conjunction(self) -> Formula:
        items = [self.unary()]
        while self.peek().kind == "&":
            self.advance()
            items.append(self.unary())
        return items[0] if len(items) == 1 else And(tuple(items))

    def unary(self) -> Formula:
        t = self.peek()
        if t.kind == "~":
            self.advance()
            return Not(self.unary())
        if t.kind == "name" and t.text == "forall":
            self.advance()
            vs = self.binder_list("forall")
            self.expect(".")
            return ForAll(vs, self.iff())
        if t.kind == "name" and t.text == "exists":
            self.advance()
            vs = self.binder_list("exists")
            self.expect(".")
            return Exists(vs, self.iff())
        if t.kind == "name" and t.text == "H" and self.peek(1).kind == "{":
            return self.branch()
        return self.atom()

    def branch(self) -> Formula:
        opener = self.advance()  # the 'H'
        self.expect("{")
        kw = self.peek()
        if not (kw.kind == "name" and kw.text == "forall"):
            raise ParseError(
                f"branched prefix must start with 'forall', found {self.describe(kw)}", kw.span
            )
        self.advance()
        universals = self.binder_list("forall")
        self.expect(";")
        existentials: list[Variable] = []
        deps: dict[Variable, tuple[Variable, ...]] = {}
        while True:
            t = self.peek()
            e = self.variable("existential")
            if e in deps:
                raise ParseError(f"duplicate existential '{e.name}' in prefix", t.span)
            self.expect("(")
            ds: list[Variable] = []
            while self.peek().kind == "name" and self.peek().text not in _RESERVED:
                ds.append(self.variable("dependency"))
            self.expect(")")
            existentials.append(e)
            deps[e] = tuple(ds)
            if self.peek().kind == ",":
                self.advance()
                continue
            break
        self.expect("}")
        try:
            prefix = mk_prefix(universals, existentials, deps)
        except InvalidPrefixError as exc:
            raise ParseError(
                "bad branched prefix: " + "; ".join(d.message for d in exc.diagnostics),
                opener.span,
            ) from exc
        self.expect(".")
        return Branch(prefix, self.iff())

    def atom(self) -> Formula:
        t = self.peek()
        if t.kind == "(":
            self.advance()
            f = self.iff()
            self.expect(")")
            return f
        if t.kind == "name":
            if t.text == "true":
                self.advance()
                return TRUE
            if t.text == "false":
                self.advance()
                return FALSE
            left = self.variable()
            op = self.peek()
            if op.kind == "=":
                self.advance()
                return EqualAtom(left, self.variable())
            if op.kind == "!=":
                self.advance()
                return Not(EqualAtom(left, self.variable()))
            raise ParseError(
                f"expected '=' or '!=' after '{left.name}', found {self.describe(op)}", op.span
            )
        raise ParseError(f"expected a formula, found {self.describe(t)}", t.span)


def parse_formula(source: str) -> Formula:
    parser = _Parser(_lex(source))
    f = parser.iff()
    t = parser.peek()
    if t.kind != "eof":
        raise ParseError(f"unexpected input after formula: {parser.describe(t)}", t.span)
    return f


# Printer precedence: one above the parser level that may omit parentheses.
# N-ary connectives print their children one level tighter than themselves so
# a nested conjunction inside a conjunction keeps its parentheses; without
# them reparsing would flatten the two nodes into one.


def format_formula(f: Formula) -> str:
    return _fmt(f, 0)


def _fmt(f: Formula, min_prec: int) -> str:
    text, prec = _render(f)
    if prec < min_prec:
        return "(" + text + ")"
    return text


def _render(f: Formula) -> tuple[str, int]:
    if isinstance(f, ConstTrue):
        return "true", 6
    if isinstance(f, ConstFalse):
        return "false", 6
    if isinstance(f, EqualAtom):
        return f"{f.left} = {f.right}", 6
    if isinstance(f, Not):
        if isinstance(f.body, EqualAtom):
            return f"{f.body.left} != {f.body.right}", 6
        return "~" + _fmt(f.body, 5), 5
    if isinstance(f, And):
        return " & ".join(_fmt(g, 5) for g in f.items), 4
    if isinstance(f, Or):
        return " | ".join(_fmt(g, 4) for g in f.items), 3
    if isinstance(f, Implies):
        return _fmt(f.antecedent, 3) + " -> " + _fmt(f.consequent, 2), 2
    if isinstance(f, Iff):
        return _fmt(f.left, 2) + " <-> " + _fmt(f.right, 1), 1
    if isinstance(f, ForAll):
        names = " ".join(v.name for v in f.variables)
        return f"forall {names} . " + _fmt(f.body, 0), 0
    if isinstance(f, Exists):
        names = " ".join(v.name for v in f.variables)
        return f"exists {names} . " + _fmt(f.body, 0), 0
    if isinstance(f, Branch):
        uni = " ".join(v.name for v in f.prefix.universals)
        rows = ", ".join(
            e.name + "(" + " ".join(d.name for d in ds) + ")"
            for e, ds in zip(f.prefix.existentials, f.prefix.deps)
        )
        return f"H{{ forall {uni} ; {rows} }} . " + _fmt(f.body, 0), 0
    raise TypeError(f"not a formula: {f!r}")


def _word(segment: str, lineno: int, base_col: int, side: str, anchor_col: int) -> str:
    stripped = segment.strip()
    if not stripped:
        raise ParseError(f"empty {side} of equation", SourceSpan(lineno, anchor_col))
    offset = len(segment) - len(segment.lstrip())
    for k, ch in enumerate(stripped):
        if not ("a" <= ch <= "z"):
            raise ParseError(
                f"{side} contains {ch!r}; words use letters a-z only",
                SourceSpan(lineno, base_col + offset + k),
            )
    return stripped


def parse_equation_line(line: str, lineno: int = 1) -> Equation:
    bare = line.split("#", 1)[0]
    if "=" not in bare:
        col = len(bare) - len(bare.lstrip()) + 1
        raise ParseError("expected 'word = word'", SourceSpan(lineno, col, max(1, len(bare.strip()))))
    lhs_part, _, rhs_part = bare.partition("=")
    eq_col = len(lhs_part) + 1
    lhs = _word(lhs_part, lineno, 1, "left side", eq_col)
    rhs = _word(rhs_part, lineno, eq_col + 1, "right side", eq_col)
    return Equation(lhs, rhs)


def parse_equation(source: str) -> Equation:
    """Parse a single ``word = word`` equation."""
    lines = [ln for ln in source.splitlines() if ln.split("#", 1)[0].strip()]
    if not lines:
        raise ParseError("expected 'word = word'", SourceSpan(1, 1))
    if len(lines) > 1:
        raise ParseError("expected a single equation", SourceSpan(2, 1))
    return parse_equation_line(lines[0], 1)


def parse_presentation(source: str) -> Presentation:
    """Parse a presentation: one equation per line, '#' comments allowed.

    An input with no equations is the empty presentation; its alphabet is
    empty until combined with a query.
    """
    equations = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        if not raw.split("#", 1)[0].strip():
            continue
        equations.append(parse_equation_line(raw, lineno))
    return Presentation.of(equations)


def format_equation(eq: Equation) -> str:
    return f"{eq.lhs} = {eq.rhs}"


def format_presentation(p: Presentation) -> str:
    return "\n".join(format_equation(eq) for eq in p.equations)
