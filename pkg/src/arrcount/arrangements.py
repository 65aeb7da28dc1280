"""Hyperplane arrangements over Q, their intersection lattices, and the
multivariate Tutte polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, List, Sequence, Tuple

from .linalg import rank
from .textio import ParseError, data_lines, parse_rational

MAX_HYPERPLANES = 12


@dataclass(frozen=True)
class HyperplaneArrangement:
    n: int
    hyperplanes: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.n}")
        if not self.hyperplanes:
            raise ValueError("an arrangement needs at least one hyperplane")
        for i, h in enumerate(self.hyperplanes):
            if len(h) != self.n + 1:
                raise ValueError(
                    f"hyperplane {i} has {len(h)} coefficients, expected {self.n + 1}")
            if not any(h):
                raise ValueError(f"hyperplane {i} is the zero vector")

    @classmethod
    def from_rows(cls, n: int, rows) -> HyperplaneArrangement:
        return cls(n, tuple(tuple(Fraction(x) for x in r) for r in rows))

    @property
    def k(self) -> int:
        return len(self.hyperplanes)


@dataclass(frozen=True)
class IntersectionLattice:
    """Flats of rank <= n, each labeled by the maximal set of hyperplanes
    containing the intersection.  Ordered by rank, then label."""

    n: int
    k: int
    flats: Tuple[Tuple[FrozenSet[int], int], ...]

    def ranks(self):
        return {label: r for label, r in self.flats}

    def subset_rank(self, subset) -> int:
        """Rank of an arbitrary subset: the rank of the smallest flat containing
        it, or n+1 when the hyperplanes have no common point."""
        subset = frozenset(subset)
        best = self.n + 1
        for label, r in self.flats:
            if r < best and subset <= label:
                best = r
        return best


def lattice_from_arrangement(a: HyperplaneArrangement) -> IntersectionLattice:
    if a.k > MAX_HYPERPLANES:
        raise ValueError(
            f"{a.k} hyperplanes exceeds the supported bound of {MAX_HYPERPLANES}")
    vecs = a.hyperplanes
    cache = {}

    def rk(s: FrozenSet[int]) -> int:
        if s not in cache:
            cache[s] = rank([vecs[i] for i in sorted(s)])
        return cache[s]

    def closure(s: FrozenSet[int]) -> FrozenSet[int]:
        r = rk(s)
        return s | frozenset(j for j in range(a.k) if j not in s and rk(s | {j}) == r)

    bottom = closure(frozenset())
    seen = {bottom: rk(bottom)}
    frontier = [bottom]
    while frontier:
        nxt = []
        for flat in frontier:
            for j in range(a.k):
                if j in flat:
                    continue
                bigger = flat | {j}
                if rk(bigger) > a.n:
                    continue
                c = closure(bigger)
                if c not in seen:
                    seen[c] = rk(c)
                    nxt.append(c)
        frontier = nxt
    flats = sorted(seen.items(), key=lambda fr: (fr[1], sorted(fr[0])))
    return IntersectionLattice(a.n, a.k, tuple(flats))


def is_generic(a: HyperplaneArrangement) -> bool:
    """k > n and no point lies on more than n of the hyperplanes."""
    if a.k <= a.n:
        return False
    return all(rank(sub) == a.n + 1 for sub in combinations(a.hyperplanes, a.n + 1))


def tutte_eval(l: IntersectionLattice, q, xs: Sequence) -> Fraction:
    """Z(q, x_1..x_k) = sum over subsets B of q^(-rk B) * prod_{j in B} x_j.

    Subset ranks come from the lattice; a subset with empty intersection has
    rank n+1.  At q = 1 this is prod(1 + x_j) for any arrangement.
    """
    q = Fraction(q)
    xs = [Fraction(x) for x in xs]
    if len(xs) != l.k:
        raise ValueError(f"expected {l.k} hyperplane weights, got {len(xs)}")
    if q == 0 and l.k > 0:
        raise ZeroDivisionError("q = 0 is a pole of the Tutte polynomial")
    total = Fraction(0)
    for size in range(l.k + 1):
        for subset in combinations(range(l.k), size):
            w = Fraction(1)
            for j in subset:
                w *= xs[j]
                if not w:
                    break
            if w:
                total += w / q ** l.subset_rank(subset)
    return total


def parse_arrangement(text: str) -> HyperplaneArrangement:
    """Parse ``n`` on the first data line, then n+1 rationals per hyperplane.

    ``#`` starts a comment; blank lines are skipped.
    """
    lines = list(data_lines(text))
    if not lines:
        raise ParseError("empty arrangement file", 1, 1)
    lineno, col, tokens = lines[0]
    if len(tokens) != 1:
        raise ParseError("first line must hold only the ambient dimension", lineno, col)
    try:
        n = int(tokens[0][1])
    except ValueError:
        raise ParseError(f"bad dimension {tokens[0][1]!r}", lineno, tokens[0][0]) from None
    rows = []
    for lineno, col, tokens in lines[1:]:
        if len(tokens) != n + 1:
            raise ParseError(
                f"expected {n + 1} coefficients, found {len(tokens)}", lineno, col)
        rows.append(tuple(parse_rational(t, lineno, c) for c, t in tokens))
    try:
        return HyperplaneArrangement(n, tuple(rows))
    except ValueError as exc:
        raise ParseError(str(exc), lines[-1][0], 1) from None


def format_arrangement(a: HyperplaneArrangement) -> str:
    out = [str(a.n)]
    out += [" ".join(str(x) for x in h) for h in a.hyperplanes]
    return "\n".join(out) + "\n"
