"""Formula syntax: AST, parser, printer, desugaring and schema matching.

Concrete syntax (loosest binding first)::

    <->   biconditional (left associative)
    ->    implication (right associative)
    |     conditional, ``a | b`` reads "a given b" (left associative)
    \\/    disjunction
    &     conjunction
    ~     negation
    0 1   the constants false and true

``1`` and the connectives ``<->`` and ``|`` are sugar; :func:`desugar` rewrites
them into the core connectives.  Schema metavariables are written ``$A``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Union

__all__ = [
    "Formula", "Atom", "Bottom", "One", "Not", "And", "Or", "Implies", "Iff",
    "Cond", "ParseError", "SchemaMismatch", "parse", "parse_schema", "unparse",
    "desugar", "is_core", "atoms", "metavariables", "subformulas", "size",
    "substitute", "match_schema", "and_key", "BOTTOM", "ONE", "TOP",
]


class Formula:
    """Base class of all formula nodes.  Nodes are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return unparse(self)

    # operator sugar for building formulas in code
    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __invert__(self) -> "Formula":
        return Not(self)

    def __rshift__(self, other: "Formula") -> "Formula":
        return Implies(self, other)


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True, slots=True)
class One(Formula):
    """Surface constant 1, defined as ``0 -> 0``."""


@dataclass(frozen=True, slots=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Cond(Formula):
    """``Cond(a, b)`` is the conditional "a given b", written ``a | b``."""

    left: Formula
    right: Formula


BOTTOM = Bottom()
ONE = One()
TOP = Implies(BOTTOM, BOTTOM)

_BINARY = (And, Or, Implies, Iff, Cond)
_CORE = (Atom, Bottom, Not, And, Or, Implies)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class SchemaMismatch(ValueError):
    pass


# ---------------------------------------------------------------- tokenizer

_TOKEN = re.compile(
    r"\s*(?:(?P<op><->|->|\\/|&|~|\||\(|\))|(?P<const>[01])(?![A-Za-z0-9_])"
    r"|(?P<meta>\$[A-Za-z_][A-Za-z0-9_]*)|(?P<atom>[A-Za-z_][A-Za-z0-9_]*))"
)
ATOM_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _tokenize(text: str, allow_meta: bool) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "meta" and not allow_meta:
            raise ParseError("metavariable outside a schema", text, start)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_meta: bool):
        self.text = text
        self.tokens = _tokenize(text, allow_meta)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def accept(self, op: str) -> bool:
        kind, value, _ = self.tokens[self.i]
        if kind == "op" and value == op:
            self.i += 1
            return True
        return False

    def fail(self, message: str):
        _, value, pos = self.peek()
        raise ParseError(message + (f", got {value!r}" if value else ", got end of input"),
                         self.text, pos)

    def parse(self) -> Formula:
        f = self.iff()
        if self.peek()[0] != "end":
            if self.peek()[1] == ")":
                self.fail("unbalanced parentheses")
            self.fail("unexpected token")
        return f

    def iff(self) -> Formula:
        f = self.imp()
        while self.accept("<->"):
            f = Iff(f, self.imp())
        return f

    def imp(self) -> Formula:
        f = self.cond()
        if self.accept("->"):
            return Implies(f, self.imp())
        return f

    def cond(self) -> Formula:
        f = self.disj()
        while self.accept("|"):
            f = Cond(f, self.disj())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.accept("\\/"):
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        kind, value, pos = self.peek()
        if self.accept("~"):
            return Not(self.unary())
        if self.accept("("):
            f = self.iff()
            if not self.accept(")"):
                if self.peek()[0] == "end":
                    raise ParseError("unbalanced parentheses", self.text, pos)
                self.fail("expected ')'")
            return f
        if kind == "const":
            self.i += 1
            return BOTTOM if value == "0" else ONE
        if kind in ("atom", "meta"):
            self.i += 1
            return Atom(value)
        self.fail("expected a formula")


def parse(text: str) -> Formula:
    """Parse formula text into an AST (sugar is kept; see :func:`desugar`)."""
    return _Parser(text, allow_meta=False).parse()


def parse_schema(text: str) -> Formula:
    """Parse schema text, where ``$A``-style metavariables are allowed."""
    return _Parser(text, allow_meta=True).parse()


# ------------------------------------------------------------------ printer

# binding strength, tightest highest
_PREC = {Iff: 0, Implies: 1, Cond: 2, Or: 3, And: 4, Not: 5}
_SYMBOL = {Iff: "<->", Implies: "->", Cond: "|", Or: "\\/", And: "&"}


def _prec(f: Formula) -> int:
    return _PREC.get(type(f), 6)


def unparse(f: Formula) -> str:
    """Print with minimal parentheses; ``parse(unparse(f)) == f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bottom):
        return "0"
    if isinstance(f, One):
        return "1"
    if isinstance(f, Not):
        inner = unparse(f.arg)
        return "~" + (f"({inner})" if _prec(f.arg) < _PREC[Not] else inner)
    level = _PREC[type(f)]
    left, right = unparse(f.left), unparse(f.right)
    if isinstance(f, Implies):
        # right associative
        wrap_left = _prec(f.left) <= level
        wrap_right = _prec(f.right) < level
    else:
        wrap_left = _prec(f.left) < level
        wrap_right = _prec(f.right) <= level
    if wrap_left:
        left = f"({left})"
    if wrap_right:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


# --------------------------------------------------------------- traversal

def desugar(f: Formula) -> Formula:
    """Rewrite ``<->``, ``|`` and ``1`` into core connectives."""
    if isinstance(f, (Atom, Bottom)):
        return f
    if isinstance(f, One):
        return TOP
    if isinstance(f, Not):
        return Not(desugar(f.arg))
    left, right = desugar(f.left), desugar(f.right)
    if isinstance(f, Iff):
        return And(Implies(left, right), Implies(right, left))
    if isinstance(f, Cond):
        return Implies(right, And(right, left))
    return type(f)(left, right)


def is_core(f: Formula) -> bool:
    return all(isinstance(g, _CORE) for g in _walk(f))


def _walk(f: Formula) -> Iterator[Formula]:
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, _BINARY):
            stack.append(g.right)
            stack.append(g.left)


def subformulas(f: Formula) -> set[Formula]:
    return set(_walk(f))


def size(f: Formula) -> int:
    return sum(1 for _ in _walk(f))


def atoms(f: Formula) -> set[str]:
    """Names of the (non-meta) atoms of ``f``."""
    return {g.name for g in _walk(f) if isinstance(g, Atom) and not g.name.startswith("$")}


def metavariables(f: Formula) -> set[str]:
    return {g.name for g in _walk(f) if isinstance(g, Atom) and g.name.startswith("$")}


def substitute(f: Formula, bindings: Mapping[str, Formula]) -> Formula:
    """Replace atoms (or metavariables) by formulas, simultaneously."""
    if isinstance(f, Atom):
        return bindings.get(f.name, f)
    if isinstance(f, (Bottom, One)):
        return f
    if isinstance(f, Not):
        return Not(substitute(f.arg, bindings))
    return type(f)(substitute(f.left, bindings), substitute(f.right, bindings))


def match_schema(schema: Formula, f: Formula,
                 bindings: Optional[dict[str, Formula]] = None) -> dict[str, Formula]:
    """Return the unique substitution taking ``schema`` to ``f``.

    Both sides are compared as given, so callers normally pass desugared
    formulas.  Raises :class:`SchemaMismatch` when no substitution exists.
    """
    sigma = dict(bindings or {})
    stack = [(schema, f)]
    while stack:
        s, g = stack.pop()
        if isinstance(s, Atom) and s.name.startswith("$"):
            bound = sigma.get(s.name)
            if bound is None:
                sigma[s.name] = g
            elif bound != g:
                raise SchemaMismatch(f"{s.name} bound to both {bound} and {g}")
            continue
        if type(s) is not type(g):
            raise SchemaMismatch(f"{unparse(s)} does not match {unparse(g)}")
        if isinstance(s, Atom):
            if s.name != g.name:
                raise SchemaMismatch(f"atom {s.name} does not match {g.name}")
        elif isinstance(s, Not):
            stack.append((s.arg, g.arg))
        elif isinstance(s, _BINARY):
            stack.append((s.right, g.right))
            stack.append((s.left, g.left))
    return sigma


def and_key(left: Formula, right: Formula) -> tuple[Formula, Formula]:
    """Canonical unordered pair used to key conjunction values."""
    a, b = unparse(left), unparse(right)
    return (left, right) if a <= b else (right, left)


def coerce(f: Union[str, Formula]) -> Formula:
    return parse(f) if isinstance(f, str) else f
