"""Dimensions, degrees and characteristic numbers of arrangement moduli spaces.

Every count is an exact Python int.  Divisions that must be exact go through
:func:`exact_div`, which raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Dict, List, Sequence, Tuple

from .ring import RingSpec, TruncatedPolynomial, ring_new, top_pairing
from .schubert import GrassmannianSpec, schubert_degree


class InexactDivision(ArithmeticError):
    """A division that the theory says is exact left a remainder."""


def exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InexactDivision(f"{a} is not divisible by {b}")
    return q


@dataclass
class CharNumberTable:
    """Entries map p to N(p, D - p): p points, D - p tangent lines."""

    family: str
    D: int
    entries: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if sorted(self.entries) != list(range(self.D + 1)):
            raise ValueError(f"table keys must cover 0..{self.D} exactly")

    def __getitem__(self, p: int) -> int:
        return self.entries[p]

    def as_list(self) -> List[int]:
        return [self.entries[p] for p in range(self.D + 1)]


@dataclass(frozen=True)
class CurveSpec:
    """A smooth plane curve seen only through its degree and class.

    A point condition is (degree 0, class 1) and a line is (degree 1, class 0).
    """

    degree: int
    class_number: int

    def __post_init__(self):
        if self.degree < 0 or self.class_number < 0:
            raise ValueError("degree and class must be nonnegative")
        if self.degree == 0 and self.class_number == 0:
            raise ValueError("degree and class cannot both be zero")


LINE = CurveSpec(1, 0)
POINT = CurveSpec(0, 1)


def conic() -> CurveSpec:
    return CurveSpec(2, 2)


def multinomial(d: int, parts: Sequence[Tuple[int, int]]) -> int:
    """d! / prod (value!)^multiplicity for a multiset given as (value, multiplicity).

    Counts ordered groups: groups of equal size are not identified.
    """
    total = sum(v * m for v, m in parts)
    if total != d:
        raise ValueError(f"parts sum to {total}, not {d}")
    if any(v < 0 or m < 0 for v, m in parts):
        raise ValueError("parts must be nonnegative")
    return exact_div(factorial(d), prod(factorial(v) ** m for v, m in parts))


def dim_generic(k: int, n: int) -> int:
    _check_generic(k, n)
    return k * n


def count_generic(k: int, n: int) -> int:
    """Number of generic arrangements of k hyperplanes in P^n through kn points."""
    _check_generic(k, n)
    return exact_div(factorial(k * n), factorial(k) * factorial(n) ** k)


def _check_generic(k, n):
    if not k > n >= 1:
        raise ValueError(f"generic arrangements need k > n >= 1, got k={k}, n={n}")


def point_condition_class(ring: RingSpec, hyperplane_vars: Sequence[str], D: int
                          ) -> TruncatedPolynomial:
    """(sum of the hyperplane classes)^D: the arrangement meets D general points."""
    if D < 0:
        raise ValueError(f"D must be nonnegative, got {D}")
    s = ring.zero()
    for v in hyperplane_vars:
        s = s + ring.gen(v)
    return s ** D


def line_vars(k: int) -> List[str]:
    return [f"x{i}" for i in range(1, k + 1)]


def point_vars(k: int) -> List[str]:
    return [f"y{i}{j}" for i, j in combinations(range(1, k + 1), 2)]


@lru_cache(maxsize=None)
def incidence_class(k: int) -> Tuple[RingSpec, TruncatedPolynomial]:
    """Class of {(l_1..l_k, p_ij) : p_ij on l_i and l_j} in (P^2*)^k x (P^2)^C(k,2).

    The product of the bilinear hypersurface classes (x_i + y_ij)(x_j + y_ij).
    Only k = 3 and k = 4 are supported; for k >= 5 the incidence variety has an
    excess component and the product is not its class.
    """
    if k not in (3, 4):
        raise ValueError(f"incidence class is only available for k in (3, 4), got {k}")
    names = line_vars(k) + point_vars(k)
    ring = ring_new(names, [2] * len(names))
    cls = ring.one()
    for i, j in combinations(range(1, k + 1), 2):
        y = ring.gen(f"y{i}{j}")
        cls = cls * (ring.gen(f"x{i}") + y) * (ring.gen(f"x{j}") + y)
    return ring, cls


def labeled_char_degree(k: int, p: int) -> int:
    """deg [M_k] (sum x)^p (sum y)^(2k - p): labeled count before corrections."""
    _check_char_range(k, p)
    ring, cls = incidence_class(k)
    pts = point_condition_class(ring, line_vars(k), p)
    tang = point_condition_class(ring, point_vars(k), 2 * k - p)
    return top_pairing(cls, pts * tang)


def quadruple_line_correction(p: int) -> int:
    """Labeled solutions with all four lines equal that the k = 4 degree counts.

    The common line must pass through two of the prescribed points or
    pairwise crossings of tangent lines; it then meets the remaining tangent
    lines in the six marked points, labeled in 6! ways.
    """
    if p == 0:
        # joins L_a ^ L_b to L_c ^ L_e: unordered pair of disjoint pairs among 8 lines
        return exact_div(multinomial(8, [(2, 2), (4, 1)]) * factorial(6), 2)
    if p == 1:
        # joins the point to L_a ^ L_b, a pair among the 7 lines
        return multinomial(7, [(2, 1), (5, 1)]) * factorial(6)
    if p == 2:
        return factorial(6)
    return 0


def _check_char_range(k, p):
    if k not in (3, 4):
        raise ValueError(f"characteristic numbers are only available for k in (3, 4), got {k}")
    if not 0 <= p <= 2 * k:
        raise ValueError(f"p must lie in [0, {2 * k}], got {p}")


def char_number_generic_lines(k: int, p: int) -> int:
    """N_k(p, 2k - p) for a generic arrangement of k = 3 or 4 lines in P^2."""
    labeled = labeled_char_degree(k, p)
    if k == 4:
        labeled -= quadruple_line_correction(p)
    return exact_div(labeled, factorial(k))


def braid_char_number(p: int) -> int:
    """Braid arrangements through p points tangent to 8 - p lines (dual of 4 lines)."""
    if not 0 <= p <= 8:
        raise ValueError(f"p must lie in [0, 8], got {p}")
    return char_number_generic_lines(4, 8 - p)


def generic_lines_table(k: int) -> CharNumberTable:
    return CharNumberTable(f"generic-{k}-lines", 2 * k,
                           {p: char_number_generic_lines(k, p) for p in range(2 * k + 1)})


def braid_table() -> CharNumberTable:
    return CharNumberTable("braid", 8, {p: braid_char_number(p) for p in range(9)})


def pencil_char_numbers(k: int) -> CharNumberTable:
    if k < 3:
        raise ValueError(f"a pencil needs k >= 3 lines, got {k}")
    D = k + 2
    entries = {p: 0 for p in range(D + 1)}
    entries[k + 2] = 3 * comb(k + 2, 4)
    entries[k + 1] = comb(k + 1, 2)
    entries[k] = 1
    return CharNumberTable(f"pencil-{k}", D, entries)


def char_number_table(family: str, k: int | None = None) -> CharNumberTable:
    """Look up a table by CLI family name: generic3, generic4, braid, pencil."""
    if family == "generic3":
        return generic_lines_table(3)
    if family == "generic4":
        return generic_lines_table(4)
    if family == "braid":
        return braid_table()
    if family == "pencil":
        if k is None:
            raise ValueError("the pencil family needs k")
        return pencil_char_numbers(k)
    raise ValueError(f"unknown family {family!r}")


def zeuthen_transfer(table: CharNumberTable, p: int, curves: Sequence[CurveSpec]) -> int:
    """Arrangements through p points tangent to the given curves.

    Expand mu^p * prod(class * mu + degree * nu) and replace mu^j nu^(D-j)
    by N(j, D - j).
    """
    if p < 0 or p + len(curves) != table.D:
        raise ValueError(
            f"{p} points and {len(curves)} curves do not add up to dimension {table.D}")
    # coeffs[j] is the coefficient of mu^j nu^(deg - j)
    coeffs = [0] * p + [1]
    for c in curves:
        nxt = [0] * (len(coeffs) + 1)
        for j, a in enumerate(coeffs):
            if a:
                nxt[j + 1] += a * c.class_number
                nxt[j] += a * c.degree
        coeffs = nxt
    return sum(a * table[j] for j, a in enumerate(coeffs) if a)


def _check_dconed(d, k, n):
    if not 0 <= d <= n - 2:
        raise ValueError(f"need 0 <= d <= n - 2, got d={d}, n={n}")
    if not k > n:
        raise ValueError(f"need k > n, got k={k}, n={n}")


def dconed_dim(d: int, k: int, n: int) -> int:
    """Dimension of G(d, n) x (P^{n-d-1})^k."""
    _check_dconed(d, k, n)
    return (d + 1) * (n - d) + k * (n - d - 1)


def count_0coned(k: int, n: int) -> int:
    """Cones over generic arrangements with a point apex, through kn + n - k points."""
    if not k >= n >= 2:
        raise ValueError(f"need k >= n >= 2, got k={k}, n={n}")
    num = factorial(k * n + n - k)
    den = factorial(n) ** (n + 1) * factorial(k - n) * factorial(n - 1) ** (k - n)
    return exact_div(num, den)


def gamma_tuples(d: int, k: int, n: int) -> List[Tuple[int, ...]]:
    """All (s_0..s_{d+1}) >= 0 with sum s_i = k and sum i*s_i = (d+1)(n-d).

    Listed in decreasing lexicographic order.
    """
    _check_dconed(d, k, n)
    target = (d + 1) * (n - d)
    out = []

    def rec(i, left_k, left_w, acc):
        if i == 0:
            if left_w == 0:
                out.append((left_k,) + acc)
            return
        for s in range(min(left_k, left_w // i), -1, -1):
            rec(i - 1, left_k - s, left_w - i * s, (s,) + acc)

    rec(d + 1, k, target, ())
    return sorted(out, reverse=True)


def dconed_terms(d: int, k: int, n: int):
    """Yield (s, schubert degree, labeling multinomial, point multinomial)."""
    g = GrassmannianSpec(d, n)
    D = dconed_dim(d, k, n)
    for s in gamma_tuples(d, k, n):
        deg = schubert_degree(g, s)
        lab = multinomial(k, [(si, 1) for si in s])
        # a hyperplane with an i-fold condition on the apex passes through n-d-1+i points
        pts = multinomial(D, [(n - d - 1 + i, si) for i, si in enumerate(s)])
        yield s, deg, lab, pts


def count_dconed(d: int, k: int, n: int) -> int:
    """d-coned generic arrangements of k hyperplanes in P^n through D points."""
    total = sum(deg * lab * pts for _, deg, lab, pts in dconed_terms(d, k, n))
    return exact_div(total, factorial(k))


def naive_dconed_count(d: int, k: int, n: int) -> int:
    """The undercount that keeps only the s_1 = ... = s_d = 0 configuration.

    n - d hyperplanes through n points each cut out the apex; the other
    k - n + d contain it and n - d - 1 further points.  Agrees with
    :func:`count_dconed` at d = 0 and is strictly smaller for d >= 1.
    """
    D = dconed_dim(d, k, n)
    labeled = comb(k, n - d) * multinomial(D, [(n, n - d), (n - d - 1, k - n + d)])
    return exact_div(labeled, factorial(k))
