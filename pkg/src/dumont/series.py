"""Truncated formal power series with exact rational coefficients.

A :class:`TruncatedSeries` of order ``N`` stands for a series modulo
``x**(N+1)``. Nothing in here touches floating point.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence, Union

__all__ = [
    "SeriesError",
    "TruncatedSeries",
    "series_arith",
    "sqrt_series",
    "catalan_series",
    "q_recurrence",
    "q_summation",
]

Number = Union[int, Fraction]


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")

    # -- construction -------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Number], order: int) -> "TruncatedSeries":
        """Pad with zeros or truncate ``coeffs`` to degree ``order``."""
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def constant(cls, c: Number, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([c], order)

    @classmethod
    def monomial(cls, degree: int, order: int, c: Number = 1) -> "TruncatedSeries":
        if degree > order:
            return cls.constant(0, order)
        return cls.from_coeffs([0] * degree + [c], order)

    @classmethod
    def rational(cls, num: Sequence[Number], den: Sequence[Number], order: int) -> "TruncatedSeries":
        """Expansion of ``num(x) / den(x)`` given as coefficient lists, low degree first."""
        return cls.from_coeffs(num, order) / cls.from_coeffs(den, order)

    # -- access -------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def integers(self) -> list[int]:
        """Coefficients as ints; raises if any is not integral."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise SeriesError(f"coefficient of x^{i} is {c}, not an integer")
            out.append(int(c))
        return out

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*x^{i}")
        return f"TruncatedSeries({' + '.join(terms) or '0'} + O(x^{self.order + 1}))"

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        return cls(tuple(Fraction(s) for s in json.loads(text)))

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise SeriesError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (N + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(N + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero scalar")
            return TruncatedSeries(tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        b = other.coeffs
        if b[0] == 0:
            raise SeriesError("divisor has zero constant term")
        q: list[Fraction] = []
        for n, an in enumerate(self.coeffs):
            acc = an - sum(q[i] * b[n - i] for i in range(n))
            q.append(acc / b[0])
        return TruncatedSeries(tuple(q))

    def __rtruediv__(self, other):
        return TruncatedSeries.constant(other, self.order) / self

    def __pow__(self, e: int):
        if e < 0:
            return TruncatedSeries.constant(1, self.order) / (self ** -e)
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- substitutions --------------------------------------------------
    def shift(self, m: int) -> "TruncatedSeries":
        """Multiply by ``x**m``."""
        return TruncatedSeries.from_coeffs([0] * m + list(self.coeffs), self.order)

    def scale_argument(self, power: int) -> "TruncatedSeries":
        """Substitute ``x -> x**power``."""
        out = [Fraction(0)] * (self.order + 1)
        for i, c in enumerate(self.coeffs):
            if i * power > self.order:
                break
            out[i * power] = c
        return TruncatedSeries(tuple(out))

    def reflect(self) -> "TruncatedSeries":
        """Substitute ``x -> -x``."""
        return TruncatedSeries(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def even_part(self) -> "TruncatedSeries":
        return (self + self.reflect()) / 2

    def odd_part(self) -> "TruncatedSeries":
        return (self - self.reflect()) / 2


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """``op`` is one of ``add``, ``sub``, ``mul``, ``div``."""
    if a.order != b.order:
        raise SeriesError(f"order mismatch: {a.order} vs {b.order}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def sqrt_series(a: TruncatedSeries) -> TruncatedSeries:
    """The square root with constant term 1; ``a`` must have constant term 1."""
    c = a.coeffs
    if c[0] != 1:
        raise SeriesError(f"sqrt needs constant term 1, got {c[0]}")
    s = [Fraction(1)]
    for n in range(1, len(c)):
        acc = c[n] - sum(s[i] * s[n - i] for i in range(1, n))
        s.append(acc / 2)
    return TruncatedSeries(tuple(s))


def catalan_series(order: int) -> TruncatedSeries:
    if order < 0:
        raise SeriesError("order must be non-negative")
    return TruncatedSeries.from_coeffs([comb(2 * n, n) // (n + 1) for n in range(order + 1)], order)


_INITIAL = {"F": (0, 1), "G": (1, 1)}


def _check_kind(kind: str) -> str:
    kind = kind.upper()[:1]
    if kind not in _INITIAL:
        raise ValueError("init must be 'F' or 'G'")
    return kind


@lru_cache(maxsize=None)
def _q_chain(kind: str, r: int, order: int) -> tuple[TruncatedSeries, ...]:
    q0, q1 = _INITIAL[kind]
    chain = [TruncatedSeries.constant(q0, order), TruncatedSeries.constant(q1, order)]
    x2 = TruncatedSeries.monomial(2, order)
    for _ in range(2, r + 1):
        chain.append(1 + x2 * chain[-1] / (1 - x2 * chain[-2]))
    return tuple(chain)


def q_recurrence(r: int, init: str, order: int) -> TruncatedSeries:
    """``Q_r = 1 + x^2 Q_{r-1} / (1 - x^2 Q_{r-2})``.

    ``init="F"`` starts from ``Q_0 = 0, Q_1 = 1``; ``init="G"`` from
    ``Q_0 = Q_1 = 1``.
    """
    if r < 0:
        raise SeriesError(f"r must be non-negative, got {r}")
    return _q_chain(_check_kind(init), r, order)[r]


def q_summation(r: int, init: str, order: int) -> TruncatedSeries:
    """The closed sum form of ``Q_r`` for ``r >= 1``.

    ``Q_r = 1 + sum_{j=1}^{r-1} x^{2j} / prod_{m=r-1-j}^{r-2} (1 - x^2 Q_m)``.
    Lower members come from this same sum (only ``Q_0`` is taken from the
    initial conditions), so it is an independent cross-check of
    :func:`q_recurrence`.
    """
    if r < 1:
        raise SeriesError("the summation form needs r >= 1")
    return _q_sum(_check_kind(init), r, order)


@lru_cache(maxsize=None)
def _q_sum(kind: str, r: int, order: int) -> TruncatedSeries:
    if r == 0:
        return TruncatedSeries.constant(_INITIAL[kind][0], order)
    x2 = TruncatedSeries.monomial(2, order)
    total = TruncatedSeries.constant(1, order)
    for j in range(1, r):
        den = TruncatedSeries.constant(1, order)
        for m in range(r - 1 - j, r - 1):
            den = den * (1 - x2 * _q_sum(kind, m, order))
        total = total + TruncatedSeries.monomial(2 * j, order) / den
    return total
