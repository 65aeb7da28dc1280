"""Schubert calculus on G(d, n) restricted to the special classes sigma_{1^m}.

Classes are indexed by nonincreasing (d+1)-tuples inside the
(d+1) x (n-d) box.  Multiplication by sigma_{1^m} is the vertical-strip
(dual Pieri) rule; degrees of products of such classes are read off as the
coefficient of the point class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Dict, Iterable, Sequence, Tuple

Partition = Tuple[int, ...]


@dataclass(frozen=True)
class GrassmannianSpec:
    """G(d, n): d-dimensional linear subspaces of P^n."""

    d: int
    n: int

    def __post_init__(self):
        if not 0 <= self.d < self.n:
            raise ValueError(f"need 0 <= d < n, got d={self.d}, n={self.n}")

    @property
    def rows(self) -> int:
        return self.d + 1

    @property
    def cols(self) -> int:
        return self.n - self.d

    @property
    def dim(self) -> int:
        return self.rows * self.cols

    @property
    def identity(self) -> Partition:
        return (0,) * self.rows

    @property
    def point(self) -> Partition:
        return (self.cols,) * self.rows

    def check(self, alpha: Sequence[int]) -> Partition:
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.rows:
            raise ValueError(f"partition {alpha} must have exactly {self.rows} parts")
        if any(a < 0 or a > self.cols for a in alpha):
            raise ValueError(f"partition {alpha} does not fit the {self.rows}x{self.cols} box")
        if any(alpha[i] < alpha[i + 1] for i in range(len(alpha) - 1)):
            raise ValueError(f"partition {alpha} is not nonincreasing")
        return alpha

    def partitions(self, weight: int | None = None):
        """Every partition in the box, optionally of a fixed weight."""
        def rec(i, cap):
            if i == self.rows:
                yield ()
                return
            for a in range(cap, -1, -1):
                for rest in rec(i + 1, a):
                    yield (a,) + rest
        for alpha in rec(0, self.cols):
            if weight is None or sum(alpha) == weight:
                yield alpha


@dataclass
class SchubertExpansion:
    grassmannian: GrassmannianSpec
    terms: Dict[Partition, int] = field(default_factory=dict)

    def coefficient(self, alpha: Sequence[int]) -> int:
        return self.terms.get(tuple(alpha), 0)

    def times_special(self, m: int) -> SchubertExpansion:
        out: Dict[Partition, int] = {}
        for lam, c in self.terms.items():
            for mu in _vertical_strips(self.grassmannian, lam, m):
                out[mu] = out.get(mu, 0) + c
        return SchubertExpansion(self.grassmannian, out)

    def __str__(self):
        return format_expansion(self)


def _vertical_strips(g: GrassmannianSpec, lam: Partition, m: int):
    # choose m rows, add one box to each; keep the result a partition in the box
    for rows in combinations(range(g.rows), m):
        mu = list(lam)
        for r in rows:
            mu[r] += 1
        if mu[0] > g.cols:
            continue
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            yield tuple(mu)


def pieri_vertical(g: GrassmannianSpec, lam: Sequence[int], m: int) -> SchubertExpansion:
    """sigma_lam * sigma_{1^m}: sum of sigma_mu over vertical m-strips mu/lam."""
    lam = g.check(lam)
    if not 0 <= m <= g.rows:
        raise ValueError(f"m must lie in [0, {g.rows}], got {m}")
    return SchubertExpansion(g, {mu: 1 for mu in _vertical_strips(g, lam, m)})


def schubert_degree(g: GrassmannianSpec, s: Sequence[int]) -> int:
    """Degree of sigma_0^{s_0} sigma_1^{s_1} sigma_{11}^{s_2} ... sigma_{1^{d+1}}^{s_{d+1}}.

    ``s`` has d+2 entries; the sigma_0 factors are identities and are ignored.
    """
    s = tuple(int(x) for x in s)
    if len(s) != g.rows + 1:
        raise ValueError(f"expected {g.rows + 1} exponents, got {len(s)}")
    if any(x < 0 for x in s):
        raise ValueError(f"negative exponent in {s}")
    weight = sum(i * x for i, x in enumerate(s))
    if weight != g.dim:
        raise ValueError(
            f"product has codimension {weight}, not the top dimension {g.dim}")
    exp = SchubertExpansion(g, {g.identity: 1})
    # big strips first keeps the intermediate expansions small
    for m in range(g.rows, 0, -1):
        for _ in range(s[m]):
            exp = exp.times_special(m)
    return exp.coefficient(g.point)


def catalan(N: int) -> int:
    """Catalan number indexed from 1: C_1 = C_2 = 1, C_3 = 2, C_4 = 5."""
    if N < 1:
        raise ValueError(f"catalan index must be >= 1, got {N}")
    return comb(2 * N - 2, N - 1) // N


def duality_partner(g: GrassmannianSpec, alpha: Sequence[int]) -> Partition:
    alpha = g.check(alpha)
    return tuple(g.cols - a for a in reversed(alpha))


def format_partition(alpha: Iterable[int]) -> str:
    return ",".join(str(a) for a in alpha)


def parse_partition(text: str) -> Partition:
    return tuple(int(t) for t in text.split(",") if t.strip())


def format_expansion(e: SchubertExpansion) -> str:
    if not e.terms:
        return "0"
    return "+".join(f"{c}*sigma({format_partition(a)})"
                    for a, c in sorted(e.terms.items(), reverse=True))
