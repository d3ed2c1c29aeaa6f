"""Minimal s-expression reader shared by every file format in the package.

Atoms are bare tokens; lists are parenthesised. Each value remembers the
byte offset where it started so parse errors can point at the input.
"""
from __future__ import annotations

from dataclasses import dataclass, field


class ParseError(ValueError):
    """Malformed input. ``offset`` is a byte offset into the source text."""

    def __init__(self, offset: int, expected: str, found: str | None = None):
        self.offset = offset
        self.expected = expected
        self.found = found
        where = "end of input" if found is None else repr(found)
        super().__init__(f"at offset {offset}: expected {expected}, found {where}")


@dataclass(frozen=True)
class Symbol:
    text: str
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class SList:
    items: tuple
    offset: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)

    def __len__(self):
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __iter__(self):
        return iter(self.items)

    def head(self) -> str | None:
        if self.items and isinstance(self.items[0], Symbol):
            return self.items[0].text
        return None


SExpr = Symbol | SList


def tokenize(text: str):
    """Yield ``(token, byte_offset)`` pairs; ``;`` starts a line comment."""
    data = text.encode("utf-8")
    i, n = 0, len(data)
    while i < n:
        c = data[i : i + 1]
        if c.isspace():
            i += 1
        elif c == b";":
            while i < n and data[i : i + 1] != b"\n":
                i += 1
        elif c in (b"(", b")"):
            yield c.decode(), i
            i += 1
        else:
            j = i
            while j < n and not data[j : j + 1].isspace() and data[j : j + 1] not in (b"(", b")", b";"):
                j += 1
            yield data[i:j].decode("utf-8"), i
            i = j


def read_all(text: str) -> list[SExpr]:
    """Read every top-level expression in ``text``."""
    end = len(text.encode("utf-8"))
    tokens = list(tokenize(text))
    out: list[SExpr] = []
    pos = 0
    while pos < len(tokens):
        expr, pos = _read(tokens, pos, end)
        out.append(expr)
    return out


def read_one(text: str) -> SExpr:
    """Read exactly one expression; trailing input is an error."""
    end = len(text.encode("utf-8"))
    tokens = list(tokenize(text))
    if not tokens:
        raise ParseError(end, "an expression")
    expr, pos = _read(tokens, 0, end)
    if pos != len(tokens):
        tok, off = tokens[pos]
        raise ParseError(off, "end of input", tok)
    return expr


def _read(tokens, pos, end):
    if pos >= len(tokens):
        raise ParseError(end, "an expression")
    tok, off = tokens[pos]
    if tok == ")":
        raise ParseError(off, "an expression", tok)
    if tok != "(":
        return Symbol(tok, off), pos + 1
    items = []
    pos += 1
    while True:
        if pos >= len(tokens):
            raise ParseError(end, "')'")
        tok, close = tokens[pos]
        if tok == ")":
            return SList(tuple(items), off, close), pos + 1
        item, pos = _read(tokens, pos, end)
        items.append(item)


def dump(expr) -> str:
    """Render a nested structure of Symbol/SList/str/list back to text."""
    if isinstance(expr, Symbol):
        return expr.text
    if isinstance(expr, str):
        return expr
    if isinstance(expr, SList):
        expr = expr.items
    return "(" + " ".join(dump(e) for e in expr) + ")"
