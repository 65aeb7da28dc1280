"""Dimension of the point/hyperplane incidence correspondence.

Given combinatorial incidence data (which marked points lie on which
hyperplanes) and an exact rational realization, compare the virtual
dimension n(k + l) - #incidences with the local dimension computed from the
rank of the Jacobian of the bilinear incidence equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Sequence, Tuple

from .linalg import rank
from .textio import ParseError, data_lines, parse_int, parse_rational

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class IncidenceSpec:
    n: int
    line_count: int
    point_count: int
    incidences: FrozenSet[Tuple[int, int]]  # (point index, hyperplane index)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.n}")
        if self.line_count < 0 or self.point_count < 0:
            raise ValueError("counts must be nonnegative")
        for p, h in self.incidences:
            if not (0 <= p < self.point_count and 0 <= h < self.line_count):
                raise ValueError(f"incidence ({p}, {h}) out of range")

    @classmethod
    def build(cls, n, line_count, point_count, pairs) -> IncidenceSpec:
        pairs = [tuple(p) for p in pairs]
        if len(set(pairs)) != len(pairs):
            raise ValueError("duplicate incidence pair")
        return cls(n, line_count, point_count, frozenset(pairs))

    def sorted_incidences(self):
        return sorted(self.incidences)


@dataclass(frozen=True)
class Realization:
    hyperplanes: Tuple[Vector, ...]
    points: Tuple[Vector, ...]

    @classmethod
    def from_rows(cls, hyperplanes, points) -> Realization:
        return cls(tuple(tuple(Fraction(x) for x in h) for h in hyperplanes),
                   tuple(tuple(Fraction(x) for x in p) for p in points))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _chart(v: Vector) -> int:
    """Coordinate used to dehomogenize: the first one of largest magnitude."""
    big = max(abs(x) for x in v)
    return next(i for i, x in enumerate(v) if abs(x) == big)


def check_realization(spec: IncidenceSpec, r: Realization) -> None:
    if len(r.hyperplanes) != spec.line_count or len(r.points) != spec.point_count:
        raise ValueError(
            f"realization has {len(r.hyperplanes)} hyperplanes and {len(r.points)} points, "
            f"spec expects {spec.line_count} and {spec.point_count}")
    for kind, vecs in (("hyperplane", r.hyperplanes), ("point", r.points)):
        for i, v in enumerate(vecs):
            if len(v) != spec.n + 1:
                raise ValueError(f"{kind} {i} has {len(v)} coordinates, expected {spec.n + 1}")
            if not any(v):
                raise ValueError(f"{kind} {i} is the zero vector")
    for p, h in spec.sorted_incidences():
        if _dot(r.points[p], r.hyperplanes[h]) != 0:
            raise ValueError(f"point {p} does not lie on hyperplane {h}")


def virtual_dimension(spec: IncidenceSpec) -> int:
    return spec.n * (spec.point_count + spec.line_count) - len(spec.incidences)


def jacobian(spec: IncidenceSpec, r: Realization):
    """Differentials of <P_i, H_j> = 0 in affine charts, one row per incidence.

    Columns are the n free coordinates of each hyperplane, then of each point.
    """
    check_realization(spec, r)
    n = spec.n

    def normalize(v):
        c = _chart(v)
        return c, tuple(x / v[c] for x in v)

    hyp = [normalize(h) for h in r.hyperplanes]
    pts = [normalize(p) for p in r.points]
    ncols = n * (spec.line_count + spec.point_count)
    rows = []
    for p, h in spec.sorted_incidences():
        row = [Fraction(0)] * ncols
        hc, hv = hyp[h]
        pc, pv = pts[p]
        base = n * h
        for slot, t in enumerate(t for t in range(n + 1) if t != hc):
            row[base + slot] = pv[t]
        base = n * (spec.line_count + p)
        for slot, t in enumerate(t for t in range(n + 1) if t != pc):
            row[base + slot] = hv[t]
        rows.append(row)
    return rows


def jacobian_rank(spec: IncidenceSpec, r: Realization) -> int:
    rows = jacobian(spec, r)
    return rank(rows) if rows else 0


def moduli_dimension_estimate(spec: IncidenceSpec, r: Realization) -> int:
    """Local dimension of the incidence correspondence at ``r``.

    Exact at smooth points; at a singular point the tangent space is larger
    than the variety and this is only an upper bound.
    """
    return spec.n * (spec.point_count + spec.line_count) - jacobian_rank(spec, r)


def cross(u, v) -> Vector:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def pappus_realization() -> Tuple[IncidenceSpec, Realization]:
    """Nine lines and nine points of a Pappus configuration in P^2.

    A_1, A_2, A_3 lie on one line and B_1, B_2, B_3 on another; the cross
    joins A_iB_j and A_jB_i meet in C_ij, and the three C_ij are collinear.
    Points are ordered A1 A2 A3 B1 B2 B3 C12 C13 C23; lines are the two
    carriers, the Pappus line, then A_iB_j for i != j.
    """
    F = Fraction
    A = [(F(0), F(0), F(1)), (F(1), F(0), F(1)), (F(3), F(0), F(1))]
    B = [(F(b), F(2 * b + 1), F(1)) for b in (F(1, 2), F(2), F(-3))]
    join = {(i, j): cross(A[i], B[j]) for i in range(3) for j in range(3) if i != j}
    pairs = [(0, 1), (0, 2), (1, 2)]
    C = {ij: cross(join[ij], join[ij[::-1]]) for ij in pairs}
    points = A + B + [C[ij] for ij in pairs]
    lines = [cross(A[0], A[1]), cross(B[0], B[1]), cross(C[(0, 1)], C[(0, 2)])]
    line_ids = {}
    for ij in sorted(join):
        line_ids[ij] = len(lines)
        lines.append(join[ij])
    inc = []
    inc += [(i, 0) for i in range(3)]
    inc += [(3 + j, 1) for j in range(3)]
    inc += [(6 + t, 2) for t in range(3)]
    for (i, j), lid in line_ids.items():
        c = pairs.index((min(i, j), max(i, j)))
        inc += [(i, lid), (3 + j, lid), (6 + c, lid)]
    spec = IncidenceSpec.build(2, len(lines), len(points), inc)
    real = Realization(tuple(lines), tuple(points))
    check_realization(spec, real)
    return spec, real


def parse_incidence_spec(text: str) -> IncidenceSpec:
    """Header lines ``n N``, ``lines L``, ``points K``, then ``i j`` per
    incidence (point i on hyperplane j, both 0-based)."""
    header = {}
    pairs = []
    seen = set()
    for lineno, col, tokens in data_lines(text):
        key = tokens[0][1]
        if key in ("n", "lines", "points"):
            if len(tokens) != 2:
                raise ParseError(f"{key!r} takes exactly one value", lineno, col)
            if key in header:
                raise ParseError(f"repeated header {key!r}", lineno, col)
            if pairs:
                raise ParseError("headers must precede incidences", lineno, col)
            header[key] = parse_int(tokens[1][1], lineno, tokens[1][0])
            continue
        if len(tokens) != 2:
            raise ParseError("an incidence line needs two indices 'i j'", lineno, col)
        pair = tuple(parse_int(t, lineno, c) for c, t in tokens)
        if pair in seen:
            raise ParseError(f"duplicate incidence {pair}", lineno, col)
        missing = {"n", "lines", "points"} - header.keys()
        if missing:
            raise ParseError(f"missing header(s) {sorted(missing)}", lineno, col)
        if not (0 <= pair[0] < header["points"] and 0 <= pair[1] < header["lines"]):
            raise ParseError(f"incidence {pair} out of range", lineno, col)
        seen.add(pair)
        pairs.append(pair)
    missing = {"n", "lines", "points"} - header.keys()
    if missing:
        raise ParseError(f"missing header(s) {sorted(missing)}", 1, 1)
    try:
        return IncidenceSpec.build(header["n"], header["lines"], header["points"], pairs)
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def format_incidence_spec(spec: IncidenceSpec) -> str:
    out = [f"n {spec.n}", f"lines {spec.line_count}", f"points {spec.point_count}"]
    out += [f"{p} {h}" for p, h in spec.sorted_incidences()]
    return "\n".join(out) + "\n"


def parse_realization(text: str) -> Realization:
    """A ``hyperplanes`` section and a ``points`` section, one vector of
    rationals ``p/q`` per line."""
    sections = {"hyperplanes": [], "points": []}
    current = None
    width = None
    for lineno, col, tokens in data_lines(text):
        if len(tokens) == 1 and tokens[0][1] in sections:
            current = tokens[0][1]
            continue
        if current is None:
            raise ParseError("expected a 'hyperplanes' or 'points' section header",
                             lineno, col)
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise ParseError(f"expected {width} coordinates, found {len(tokens)}",
                             lineno, col)
        sections[current].append(tuple(parse_rational(t, lineno, c) for c, t in tokens))
    return Realization(tuple(sections["hyperplanes"]), tuple(sections["points"]))


def format_realization(r: Realization) -> str:
    out = ["hyperplanes"]
    out += [" ".join(str(x) for x in h) for h in r.hyperplanes]
    out.append("points")
    out += [" ".join(str(x) for x in p) for p in r.points]
    return "\n".join(out) + "\n"
