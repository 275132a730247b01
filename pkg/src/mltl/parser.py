"""Concrete syntax for formulas and the line-oriented trace format.

Formula grammar (whitespace insensitive)::

    formula  := or_expr
    or_expr  := and_expr { "|" and_expr }
    and_expr := bin_temp { "&" bin_temp }
    bin_temp := unary [ ("U" | "R") interval bin_temp ]
    unary    := "!" unary | ("F" | "G") interval unary | atom
    atom     := "true" | "false" | ident | "(" formula ")"
    interval := "[" nat "," nat "]"
    ident    := letter { letter | digit | "_" }     (keywords excluded)

``U``/``R`` bind tighter than ``&`` and associate to the right.

Trace files hold one state per line; a state is a comma-separated list of
proposition names, and a blank line or a lone ``-`` is the empty state.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from mltl.errors import ParseError
from mltl.syntax import (
    And,
    FalseLit,
    Formula,
    Future,
    Global,
    Interval,
    Not,
    Or,
    Prop,
    Release,
    TrueLit,
    Until,
    as_trace,
)

KEYWORDS = frozenset({"true", "false", "F", "G", "U", "R"})

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<word>[A-Za-z][A-Za-z0-9_]*)
  | (?P<nat>[0-9]+)
  | (?P<punct>[!&|()\[\],])
    """,
    re.VERBOSE,
)
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_TRACE_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


def _span(text: str, start: int, end: int) -> SourceSpan:
    """Convert character offsets into UTF-8 byte offsets."""
    head = len(text[:start].encode())
    return SourceSpan(head, head + len(text[start:end].encode()))


@dataclass(frozen=True)
class _Tok:
    kind: str  # "kw", "ident", "nat", "punct", "eof"
    text: str
    start: int
    end: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", _span(text, pos, pos + 1), text)
        kind = m.lastgroup
        if kind != "ws":
            word = m.group()
            if kind == "word":
                kind = "kw" if word in KEYWORDS else "ident"
            toks.append(_Tok(kind, word, m.start(), m.end()))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text), len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def error(self, expected: str):
        tok = self.cur
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"expected {expected}, found {found}", _span(self.text, tok.start, tok.end), self.text)

    def accept(self, text: str) -> bool:
        if self.cur.kind in ("kw", "punct") and self.cur.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            raise self.error(repr(text))

    def nat(self) -> int:
        if self.cur.kind != "nat":
            raise self.error("a natural number")
        value = int(self.cur.text)
        self.i += 1
        return value

    def interval(self) -> Interval:
        self.expect("[")
        lo = self.nat()
        self.expect(",")
        hi = self.nat()
        self.expect("]")
        return Interval(lo, hi)

    def formula(self) -> Formula:
        f = self.and_expr()
        while self.accept("|"):
            f = Or(f, self.and_expr())
        return f

    def and_expr(self) -> Formula:
        f = self.bin_temp()
        while self.accept("&"):
            f = And(f, self.bin_temp())
        return f

    def bin_temp(self) -> Formula:
        left = self.unary()
        if self.accept("U"):
            iv = self.interval()
            return Until(left, self.bin_temp(), iv)
        if self.accept("R"):
            iv = self.interval()
            return Release(left, self.bin_temp(), iv)
        return left

    def unary(self) -> Formula:
        if self.accept("!"):
            return Not(self.unary())
        if self.accept("F"):
            iv = self.interval()
            return Future(self.unary(), iv)
        if self.accept("G"):
            iv = self.interval()
            return Global(self.unary(), iv)
        return self.atom()

    def atom(self) -> Formula:
        tok = self.cur
        if self.accept("true"):
            return TrueLit()
        if self.accept("false"):
            return FalseLit()
        if tok.kind == "ident":
            self.i += 1
            return Prop(tok.text)
        if self.accept("("):
            f = self.formula()
            self.expect(")")
            return f
        raise self.error("a formula")


def parse_formula(text: str) -> Formula:
    """Parse formula text. Ill-formed intervals (``lo > hi``) are accepted."""
    p = _Parser(text)
    f = p.formula()
    if p.cur.kind != "eof":
        raise p.error("end of input")
    return f


def print_formula(f: Formula) -> str:
    """Fully parenthesised rendering that :func:`parse_formula` maps back to ``f``."""
    match f:
        case TrueLit():
            return "true"
        case FalseLit():
            return "false"
        case Prop(name):
            return name
        case Not(child):
            return f"(! {print_formula(child)})"
        case And(left, right):
            return f"({print_formula(left)} & {print_formula(right)})"
        case Or(left, right):
            return f"({print_formula(left)} | {print_formula(right)})"
        case Future(child, iv):
            return f"(F[{iv.lo},{iv.hi}] {print_formula(child)})"
        case Global(child, iv):
            return f"(G[{iv.lo},{iv.hi}] {print_formula(child)})"
        case Until(left, right, iv):
            return f"({print_formula(left)} U[{iv.lo},{iv.hi}] {print_formula(right)})"
        case Release(left, right, iv):
            return f"({print_formula(left)} R[{iv.lo},{iv.hi}] {print_formula(right)})"
    raise TypeError(f"not an MLTL formula: {f!r}")


def parse_trace(text: str) -> tuple[frozenset[str], ...]:
    """Parse a trace file body. Accepts LF or CRLF; a final newline is optional."""
    norm = text.replace("\r\n", "\n")
    lines = norm.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    states = []
    offset = 0
    for line in lines:
        body = line.strip()
        if body in ("", "-"):
            states.append(frozenset())
        else:
            names = set()
            col = 0
            for item in body.split(","):
                name = item.strip()
                if not _TRACE_NAME.match(name):
                    start = offset + line.find(body) + col + len(item) - len(item.lstrip())
                    raise ParseError(
                        f"malformed proposition name {name!r}",
                        _span(norm, start, start + max(1, len(name))),
                        norm,
                    )
                names.add(name)
                col += len(item) + 1
            states.append(frozenset(names))
        offset += len(line) + 1
    return tuple(states)


def print_trace(t: Sequence) -> str:
    """Render a trace in the file format: sorted names per line, ``-`` for empty."""
    return "".join((",".join(sorted(s)) or "-") + "\n" for s in as_trace(t))


def trace_to_json(t: Sequence) -> list[list[str]]:
    return [sorted(s) for s in as_trace(t)]


def is_identifier(name: str) -> bool:
    return bool(_IDENT.match(name)) and name not in KEYWORDS
