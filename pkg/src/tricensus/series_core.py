"""Exact truncated power series over arbitrary-precision rationals.

A :class:`TruncatedSeries` holds coefficients 0..N of a formal power
series as :class:`fractions.Fraction` values.  Every operation is exact;
there is no floating point and no tolerance anywhere in this module.
Combining two series of different orders truncates to the smaller order,
so a coefficient is never reported beyond the range where it is valid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


Coeff = Fraction | int


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class TruncatedSeries:
    """Formal power series known exactly through the coefficient of x^order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: list[Fraction] | tuple[Fraction, ...]):
        self._coeffs = tuple(coeffs)
        if not self._coeffs:
            raise ValueError("a series must carry at least the constant term")

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} out of range 0..{self.order}")
        return self._coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"TruncatedSeries(order={self.order}, [{shown}])"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def truncated(self, order: int) -> "TruncatedSeries":
        if order < 0:
            raise ValueError("order must be non-negative")
        if order >= self.order:
            return self
        return TruncatedSeries(self._coeffs[: order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other.scaled(-1))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return self.scaled(-1)

    def scaled(self, factor: Coeff) -> "TruncatedSeries":
        f = _as_fraction(factor)
        return TruncatedSeries([c * f for c in self._coeffs])

    def nonzero_indices(self) -> list[int]:
        return [n for n, c in enumerate(self._coeffs) if c != 0]


def make_series(coeffs, order: int) -> TruncatedSeries:
    """Build a series of the given order; missing high coefficients are zero."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    cs = [_as_fraction(c) for c in coeffs]
    if len(cs) > order + 1:
        raise ValueError(f"{len(cs)} coefficients exceed order {order}")
    cs += [Fraction(0)] * (order + 1 - len(cs))
    return TruncatedSeries(cs)


def identity_series(order: int) -> TruncatedSeries:
    """The series x."""
    return make_series([0, 1] if order >= 1 else [0], order)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum, truncated to the smaller order."""
    n = min(a.order, b.order)
    return TruncatedSeries([a[k] + b[k] for k in range(n + 1)])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    if all(c.denominator == 1 for c in ac) and all(c.denominator == 1 for c in bc):
        # integer fast path: the census series all have integer coefficients
        an = [c.numerator for c in ac[: n + 1]]
        bn = [c.numerator for c in bc[: n + 1]]
        out = [0] * (n + 1)
        for i, ai in enumerate(an):
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = bn[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries([Fraction(v) for v in out])
    out = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        ai = ac[i]
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(out)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(x)) by Horner accumulation in the series ring.

    ``inner`` must have zero constant term, otherwise the truncated
    composition would depend on coefficients beyond the working order.
    """
    if inner[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncated(n)
    acc = make_series([outer[n]], n)
    for k in range(n - 1, -1, -1):
        acc = mul(acc, inner)
        if outer[k] != 0:
            acc = add(acc, make_series([outer[k]], n))
    return acc


def powers(a: TruncatedSeries, upto: int) -> list[TruncatedSeries]:
    """[a^1, a^2, ..., a^upto], each truncated to a.order."""
    out = [a]
    for _ in range(upto - 1):
        out.append(mul(out[-1], a))
    return out


def revert(a: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse: the series b with a(b(x)) = b(a(x)) = x.

    Requires a0 = 0 and a1 != 0.  Solved coefficient by coefficient from
    b(a(x)) = x, which is triangular in the unknowns because [x^n] a^k
    vanishes for k > n.
    """
    if a[0] != 0:
        raise ValueError("series must have zero constant term")
    if a[1] == 0:
        raise ValueError("series must have nonzero linear coefficient")
    n = a.order
    if n == 0:
        raise ValueError("order must be at least 1")
    pw = powers(a, n)
    b = [Fraction(0)] * (n + 1)
    b[1] = 1 / a[1]
    for m in range(2, n + 1):
        acc = Fraction(0)
        for k in range(1, m):
            if b[k] != 0:
                acc += b[k] * pw[k - 1][m]
        b[m] = -acc / pw[m - 1][m]  # [x^m] a^m = a1^m
    return TruncatedSeries(b)


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = _as_fraction(x)
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "RationalInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


def eval_enclosure(a: TruncatedSeries, point, tail_ratio) -> RationalInterval:
    """[partial sum, partial sum + geometric tail budget] at a point >= 0.

    The upper endpoint adds |c_N point^N| * q / (1 - q) with q = tail_ratio.
    This budget covers the discarded tail whenever the caller can show that
    the terms beyond the working order are dominated by the geometric
    sequence |c_N point^N| * q^k; the usual route is a termwise ratio bound,
    but any domination argument whose total does not exceed the budget is
    equally valid (each call site documents the one it uses).
    """
    p = _as_fraction(point)
    q = _as_fraction(tail_ratio)
    if p < 0:
        raise ValueError("evaluation point must be non-negative")
    if not 0 <= q < 1:
        raise ValueError(f"tail ratio must lie in [0, 1), got {q}")
    cs = a.coeffs
    if all(c.denominator == 1 for c in cs):
        # single final normalization instead of one gcd per Horner step
        pn, pd = p.numerator, p.denominator
        w = cs[-1].numerator
        qpow = 1
        for c in reversed(cs[:-1]):
            qpow *= pd
            w = w * pn + c.numerator * qpow
        partial = Fraction(w, qpow)
    else:
        partial = Fraction(0)
        for c in reversed(cs):
            partial = partial * p + c
    last_term = a[a.order] * p**a.order
    budget = abs(last_term) * q / (1 - q)
    return RationalInterval(partial, partial + budget)
