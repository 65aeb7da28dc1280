"""Tokenizing helpers shared by the structured-text input formats."""

from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\S+")
_RATIONAL = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def data_lines(text: str):
    """Yield ``(lineno, first_column, [(column, token), ...])`` for every
    non-blank line, with ``#`` comments stripped.  Columns are 1-based."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(body)]
        if tokens:
            yield lineno, tokens[0][0], tokens


def parse_rational(token: str, line: int, column: int) -> Fraction:
    if not _RATIONAL.match(token):
        raise ParseError(f"expected a rational p/q, found {token!r}", line, column)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", line, column) from None


def parse_int(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, found {token!r}", line, column) from None
