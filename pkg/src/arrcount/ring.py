"""Sparse polynomials in the Chow ring of a product of projective spaces.

The ring is Z[v_1, ..., v_m] / (v_1^(c_1+1), ..., v_m^(c_m+1)).  A polynomial
is a map from exponent tuples to nonzero Python ints; any monomial with an
exponent above its cap is zero and is never stored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class RingSpec:
    variables: Tuple[str, ...]
    caps: Tuple[int, ...]

    def __post_init__(self):
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        if len(self.variables) != len(self.caps):
            raise ValueError(
                f"{len(self.variables)} variables but {len(self.caps)} caps")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable identifier in {self.variables}")
        for v, c in zip(self.variables, self.caps):
            if c < 0:
                raise ValueError(f"negative cap {c} for variable {v}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def top(self) -> Monomial:
        """Exponent vector of the point class."""
        return self.caps

    @property
    def dimension(self) -> int:
        return sum(self.caps)

    def index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}") from None

    def monomial(self, powers: Mapping[str, int] | Sequence[int] | str) -> Monomial:
        """Normalize a monomial given as an exponent vector, a {var: exp} map,
        or a string such as ``"x1^2*y12"``."""
        if isinstance(powers, str):
            return parse_monomial(self, powers)
        if isinstance(powers, Mapping):
            exps = [0] * self.nvars
            for var, e in powers.items():
                exps[self.index(var)] += e
            powers = exps
        m = tuple(int(e) for e in powers)
        if len(m) != self.nvars:
            raise ValueError(
                f"monomial has {len(m)} exponents, ring has {self.nvars} variables")
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {m}")
        return m

    def fits(self, m: Monomial) -> bool:
        return all(e <= c for e, c in zip(m, self.caps))

    def zero(self) -> TruncatedPolynomial:
        return TruncatedPolynomial(self, {})

    def one(self) -> TruncatedPolynomial:
        return TruncatedPolynomial(self, {(0,) * self.nvars: 1})

    def gen(self, var: str) -> TruncatedPolynomial:
        i = self.index(var)
        m = tuple(1 if j == i else 0 for j in range(self.nvars))
        return TruncatedPolynomial(self, {m: 1} if self.fits(m) else {})

    def gens(self) -> Tuple[TruncatedPolynomial, ...]:
        return tuple(self.gen(v) for v in self.variables)

    def monomials_of_degree(self, degree: int):
        """All monomials of a given total degree that survive truncation."""
        def rec(i, left):
            if i == self.nvars - 1:
                if left <= self.caps[i]:
                    yield (left,)
                return
            for e in range(min(left, self.caps[i]), -1, -1):
                for rest in rec(i + 1, left - e):
                    yield (e,) + rest
        if degree < 0:
            return
        yield from rec(0, degree)


def ring_new(variables: Iterable[str], caps: Iterable[int]) -> RingSpec:
    return RingSpec(tuple(variables), tuple(int(c) for c in caps))


class TruncatedPolynomial:
    """Immutable sparse polynomial over a :class:`RingSpec`."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: RingSpec, terms: Mapping[Monomial, int] | None = None):
        self.ring = ring
        clean: Dict[Monomial, int] = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != ring.nvars:
                raise ValueError(f"monomial {m} does not match ring {ring.variables}")
            if c and ring.fits(m):
                clean[m] = clean.get(m, 0) + int(c)
        self._terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def _raw(cls, ring, terms):
        # terms already validated, truncated and free of zeros
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def _check(self, other):
        if isinstance(other, int):
            return TruncatedPolynomial(self.ring, {(0,) * self.ring.nvars: other})
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")
        return other

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __neg__(self):
        return TruncatedPolynomial._raw(self.ring, {m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return TruncatedPolynomial._raw(self.ring, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        caps = self.ring.caps
        n = len(caps)
        out: Dict[Monomial, int] = {}
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        bitems = list(b.items())
        for ma, ca in a.items():
            room = tuple(c - e for c, e in zip(caps, ma))
            for mb, cb in bitems:
                ok = True
                for i in range(n):
                    if mb[i] > room[i]:
                        ok = False
                        break
                if not ok:
                    continue
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return TruncatedPolynomial._raw(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def coefficient(self, m) -> int:
        m = self.ring.monomial(m)
        if not self.ring.fits(m):
            raise ValueError(f"monomial {m} exceeds the caps {self.ring.caps}")
        return self._terms.get(m, 0)

    def degree(self) -> int:
        return self._terms.get(self.ring.top, 0)

    def homogeneous_part(self, degree: int) -> TruncatedPolynomial:
        return TruncatedPolynomial._raw(
            self.ring, {m: c for m, c in self._terms.items() if sum(m) == degree})

    def sorted_terms(self):
        """Terms in canonical order: exponent vectors, lexicographically descending."""
        return sorted(self._terms.items(), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"TruncatedPolynomial({format_polynomial(self)!r})"


def poly_add(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    return a + b


def poly_mul(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    return a * b


def poly_pow(a: TruncatedPolynomial, e: int) -> TruncatedPolynomial:
    return a ** e


def coefficient_of(a: TruncatedPolynomial, m) -> int:
    return a.coefficient(m)


def chow_degree(a: TruncatedPolynomial) -> int:
    """Coefficient of the point class, the monomial with every exponent at its cap."""
    return a.degree()


def top_pairing(a: TruncatedPolynomial, b: TruncatedPolynomial) -> int:
    """``chow_degree(a * b)`` without forming the product.

    Only pairs of complementary monomials reach the top class, so this is a
    single pass over the smaller operand.
    """
    if a.ring != b.ring:
        raise ValueError("polynomials live in different rings")
    if len(a) > len(b):
        a, b = b, a
    top = a.ring.top
    bt = b._terms
    total = 0
    for m, c in a._terms.items():
        cb = bt.get(tuple(t - e for t, e in zip(top, m)))
        if cb:
            total += c * cb
    return total


def format_monomial(ring: RingSpec, m: Monomial) -> str:
    parts = []
    for v, e in zip(ring.variables, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_polynomial(p: TruncatedPolynomial) -> str:
    """Serialize as ``coeff*v1^e1*...`` terms joined by ``+``.

    Coefficients are always written, exponent 1 is omitted, and the zero
    polynomial is ``0``.
    """
    if not p:
        return "0"
    out = []
    for m, c in p.sorted_terms():
        mono = format_monomial(p.ring, m)
        out.append(f"{c}*{mono}" if mono else str(c))
    return "+".join(out)


_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(ring: RingSpec, text: str) -> Monomial:
    exps = [0] * ring.nvars
    text = text.strip()
    if text in ("", "1"):
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        var, e = match.group(1), match.group(2)
        exps[ring.index(var)] += int(e) if e else 1
    return tuple(exps)


def parse_polynomial(ring: RingSpec, text: str) -> TruncatedPolynomial:
    """Inverse of :func:`format_polynomial`."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    terms: Dict[Monomial, int] = {}
    for chunk in text.split("+"):
        coeff, _, mono = chunk.strip().partition("*")
        m = parse_monomial(ring, mono)
        terms[m] = terms.get(m, 0) + int(coeff)
    return TruncatedPolynomial(ring, terms)
