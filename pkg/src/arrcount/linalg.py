"""Exact rank over Q by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence


def integer_row(row: Sequence) -> List[int]:
    """Scale a rational row by the lcm of its denominators."""
    row = [Fraction(x) for x in row]
    den = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * den) for x in row]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix given as a list of rows."""
    m = [integer_row(r) for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    if any(len(r) != ncols for r in m):
        raise ValueError("ragged matrix")
    nrows = len(m)
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, ncols):
                # Bareiss step: the division by the previous pivot is exact
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r
