"""Closed-form generating functions for restricted Dumont permutations.

Every entry is a name plus integer parameters (``k`` for the pattern length,
``r`` for an exact occurrence count) and expands to a
:class:`~dumont.series.TruncatedSeries`. Entries prefixed ``example-`` and
the ``descents-prose-slice`` are literal transcriptions of worked examples
whose coefficients are known to disagree with enumeration in places; they
are kept so the verifier can report the disagreement.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .series import TruncatedSeries, catalan_series, q_recurrence, sqrt_series

__all__ = [
    "FormulaError",
    "FormulaId",
    "CATALOG",
    "formula",
    "statistic_gf",
    "rises_closed_form_slice",
    "once_series",
]

S = TruncatedSeries


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class FormulaId:
    name: str
    k: int | None = None
    r: int | None = None

    def __str__(self) -> str:
        params = [f"{p}={v}" for p, v in (("k", self.k), ("r", self.r)) if v is not None]
        return f"{self.name}({', '.join(params)})" if params else self.name


def _x(m: int, N: int) -> TruncatedSeries:
    return S.monomial(m, N)


def _poly(coeffs: Sequence[int], N: int, shift: int = 0) -> TruncatedSeries:
    return S.from_coeffs([0] * shift + list(coeffs), N)


def _F(r: int, N: int) -> TruncatedSeries:
    return q_recurrence(r, "F", N)


def _G(r: int, N: int) -> TruncatedSeries:
    return q_recurrence(r, "G", N)


def _one_minus_x2(N: int, power: int = 1) -> TruncatedSeries:
    return (1 - _x(2, N)) ** power


# -- avoidance ---------------------------------------------------------------

def d_empty(N: int) -> TruncatedSeries:
    return (1 + _x(1, N)) * catalan_series(N).scale_argument(2)


def d_incr(k: int, N: int) -> TruncatedSeries:
    return _F(k, N) + _x(1, N) * _F(k - 1, N)


def d_213k(k: int, N: int) -> TruncatedSeries:
    return _G(k - 1, N) + _x(1, N) * _G(k - 2, N)


def d_23k1(k: int, N: int) -> TruncatedSeries:
    x, x2 = _x(1, N), _x(2, N)
    return 1 + x + x2 * (1 + x) / (1 - x2 - x2 * _F(k - 3, N))


# -- exactly one occurrence --------------------------------------------------

def once_series(k: int, kind: str, initial: dict[int, TruncatedSeries], N: int) -> TruncatedSeries:
    """``A_k + x A_{k-1}`` where ``A`` follows the two-term recurrence

    ``A_j = x^2/(1 - x^2 Q_{j-2}) A_{j-1} + x^4 Q_{j-1}/(1 - x^2 Q_{j-2})^2 A_{j-2}``

    for every ``j`` beyond the largest index in ``initial``; ``Q`` is the F or
    G family selected by ``kind``.
    """
    a = dict(initial)
    x2, x4 = _x(2, N), _x(4, N)
    for j in range(max(a) + 1, k + 1):
        den = 1 - x2 * q_recurrence(j - 2, kind, N)
        a[j] = x2 / den * a[j - 1] + x4 * q_recurrence(j - 1, kind, N) / (den * den) * a[j - 2]
    return a[k] + _x(1, N) * a[k - 1]


def once_incr(k: int, N: int) -> TruncatedSeries:
    return once_series(k, "F", {1: S.constant(0, N), 2: _x(4, N)}, N)


def once_213k(k: int, N: int) -> TruncatedSeries:
    init = {1: _x(2, N), 2: _x(2, N), 3: _x(4, N) / _one_minus_x2(N)}
    return once_series(k, "G", init, N)


def once_12_3k(k: int, N: int) -> TruncatedSeries:
    return once_series(k, "F", {1: _x(2, N), 2: 2 * _x(4, N)}, N)


def once_21_3k(k: int, N: int) -> TruncatedSeries:
    init = {
        1: _x(2, N),
        2: _x(2, N),
        3: _x(4, N) / _one_minus_x2(N),
        4: _x(6, N) * (2 - _x(2, N)) / _one_minus_x2(N, 3),
    }
    return once_series(k, "G", init, N)


# -- explicit k=3 expansions by occurrence count r ---------------------------
# (numerator coefficients, numerator shift, [extra numerator factor], power of 1-x^2)

_EXPLICIT: dict[str, dict[int, tuple]] = {
    "123": {
        0: ([1, 1, 0, 0, 1, -1], 0, None, 1),
        1: ([1, 1, -1], 5, None, 1),
        2: ([1, 2, -2, -1, 1], 5, [1, 0, 1], 2),
        3: ([1, 1, -1, 1, -1, -1, 1], 7, None, 2),
        4: ([-1, -3, 3, 3, -3, -1, 1], 9, [1, 0, 1], 2),
    },
    "12-3": {
        0: ([1, 1, 0, 0, 1, -1], 0, None, 1),
        1: ([2, 3, -4, -1, 2], 5, None, 2),
        2: ([2, 2, -6, -1, 6, 1, -2], 7, None, 3),
        # the printed "2x^10" is read as 2*x**10
        3: ([3, 5, -10, -9, 10, 3, 0, 4, -5, -1, 2], 7, None, 4),
        4: ([5, 5, -23, -7, 40, -1, -30, 5, 5, -1, 5, 1, -2], 9, None, 5),
    },
    "21-3": {
        0: ([1, 1, 0, 0, 1, -1], 0, None, 1),
        1: ([1, 1, -1], 3, None, 1),
        2: ([1, 2, -2, -1, 1], 5, None, 2),
        3: ([1, 1, -1, 1, -1, -1, 1], 5, None, 2),
        4: ([1, 2, -2, 0, 0, -2, 2, 1, -1], 7, None, 3),
    },
}


def explicit(pattern: str, r: int, N: int) -> TruncatedSeries:
    num, shift, factor, power = _EXPLICIT[pattern][r]
    top = _poly(num, N, shift)
    if factor:
        top = top * _poly(factor, N)
    return top / _one_minus_x2(N, power)


# -- statistic slices --------------------------------------------------------

def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def rlm_slice(k: int, N: int) -> TruncatedSeries:
    c2 = catalan_series(N).scale_argument(2)
    if k in (0, 1):
        return (c2 ** k).shift(k)
    return (c2 ** (k - 1)).shift(2 * k - 2)


def rises_slice(k: int, N: int) -> TruncatedSeries:
    if k == 0:
        return _poly([1, 1, 1], N)
    return _x(2 * k + 1, N) * _catalan(k) + _x(2 * k + 2, N) * _catalan(k + 1)


def descents_slice(k: int, N: int) -> TruncatedSeries:
    # y^k slice of (1+x) C(x^2 y)
    return (1 + _x(1, N)) * _x(2 * k, N) * _catalan(k)


def descents_prose_slice(k: int, N: int) -> TruncatedSeries:
    return _x(2 * k + 1, N) * _catalan(k) + _x(2 * k + 2, N) * _catalan(k)


def rises_closed_form_slice(k: int, N: int) -> TruncatedSeries:
    """The y^k slice of the bivariate closed form for rises

    ``(1 + xy - 2x^2 y + 2x^2 y^2 - (1 + xy) sqrt(1 - 4x^2 y)) / (2 x^2 y^2)``,

    computed from the univariate expansion ``sqrt(1 - 4t) = sum_m s_m t^m``
    with ``t = x^2 y``. Independent of :func:`rises_slice`.
    """
    s = sqrt_series(S.from_coeffs([1, -4], k + 3)).coeffs
    j = k + 2
    # [y^j] of the numerator, as a polynomial in x
    num = [0] * (2 * j + 1)
    num[2 * j] -= s[j]
    num[2 * j - 1] -= s[j - 1]
    if j == 2:
        num[2] += 2
    # divide by 2 x^2
    return S.from_coeffs([c / 2 for c in num[2:]], N)


# -- worked examples, transcribed literally ----------------------------------

def _ex_d123(N):
    return S.rational([1, 1, 0, 0, 1, -1], [1, 0, -1], N)


def _ex_d1234(N):
    return _poly([1, 2, 1, 0, 0, 0, 2, 1, 1], N) / ((1 + _x(1, N)) * _poly([1, 0, -1, 0, -1], N))


def _ex_d213(N):
    return S.rational([1, 1, 0, -1], [1, -1], N)


def _ex_d2134(N):
    return _poly([1, 1, -1, -1, 1], N) / _one_minus_x2(N, 2)


def _ex_d23451(N):
    return (1 + _x(1, N)) * _poly([1, 0, -1, 0, -1], N) / _poly([1, 0, -2, 0, -1], N)


def _ex_d123_once(N):
    return _poly([1, 1, -1], N, 5) / _one_minus_x2(N)


def _ex_d1234_once(N):
    den = _one_minus_x2(N) * _poly([1, 0, -1, 0, -1], N) ** 2
    return _poly([1, 1, -3, 2, 3, 3, -1, 1], N, 7) / den


def _fib(count: int) -> list[int]:
    fib = [0, 1]
    while len(fib) < count:
        fib.append(fib[-1] + fib[-2])
    return fib


def _fibonacci_form(N):
    # f_{n+2} + f_n - 2 at x^{2n} taken literally, so degree 0 gives -1
    fib = _fib(N + 4)
    return S.from_coeffs([fib[n // 2 + 2] + fib[n // 2] - 2 if n % 2 == 0 else 0 for n in range(N + 1)], N)


def _d1234_prose(N):
    # f_{n/2+2} + f_{n/2} - 2 for even n, 2 for odd n
    fib = _fib(N + 4)
    return S.from_coeffs([fib[n // 2 + 2] + fib[n // 2] - 2 if n % 2 == 0 else 2 for n in range(N + 1)], N)


def _g4_form(N):
    return S.from_coeffs(
        [(1 if n // 2 < 2 else 3 * 2 ** (n // 2 - 2) - 1) if n % 2 == 0 else 0 for n in range(N + 1)], N
    )


@dataclass(frozen=True)
class _Entry:
    build: Callable[..., TruncatedSeries]
    params: tuple[str, ...]
    minimum: int
    anchor: str


CATALOG: dict[str, _Entry] = {
    "d-empty": _Entry(lambda N: d_empty(N), (), 0, "th2a: (1+x)C(x^2)"),
    "d-incr": _Entry(d_incr, ("k",), 1, "th2b: F_k + x F_{k-1}"),
    "d-213k": _Entry(d_213k, ("k",), 2, "th2c: G_{k-1} + x G_{k-2}"),
    "d-gen-12-3k": _Entry(d_incr, ("k",), 1, "th2d: F_k + x F_{k-1}"),
    "d-gen-21-3k": _Entry(d_213k, ("k",), 2, "th2e: G_{k-1} + x G_{k-2}"),
    "d-23k1": _Entry(d_23k1, ("k",), 3, "th2f: 1 + x + x^2(1+x)/(1 - x^2 - x^2 F_{k-3})"),
    "contain-once-incr": _Entry(once_incr, ("k",), 2, "th3a: A_k + x A_{k-1}, A_1=0, A_2=x^4"),
    "contain-once-213k": _Entry(once_213k, ("k",), 2, "th3b: A_1=A_2=x^2, A_3=x^4/(1-x^2)"),
    "contain-once-gen-12-3k": _Entry(once_12_3k, ("k",), 2, "th3c: A_1=x^2, A_2=2x^4"),
    "contain-once-gen-21-3k": _Entry(once_21_3k, ("k",), 2, "th3d: A_4=x^6(2-x^2)/(1-x^2)^3"),
    "explicit-123-r": _Entry(lambda r, N: explicit("123", r, N), ("r",), 0, "explicit k=3 expansion D_{123;r}, r=0..4"),
    "explicit-12-3-r": _Entry(lambda r, N: explicit("12-3", r, N), ("r",), 0, "explicit k=3 expansion D_{12-3;r}, r=0..4"),
    "explicit-21-3-r": _Entry(lambda r, N: explicit("21-3", r, N), ("r",), 0, "explicit k=3 expansion D_{21-3;r}, r=0..4"),
    "triple-avoid": _Entry(d_213k, ("k",), 2, "thga: G_{k-1} + x G_{k-2}"),
    "rlm-slice": _Entry(rlm_slice, ("k",), 0, "rlm corollary: x^{2k-2}C^{k-1}(x^2)"),
    "rises-slice": _Entry(rises_slice, ("k",), 0, "rises corollary: C_k x^{2k+1} + C_{k+1} x^{2k+2}"),
    "rises-closed-form-slice": _Entry(rises_closed_form_slice, ("k",), 0, "rises corollary: sqrt(1-4x^2y) closed form"),
    "descents-slice": _Entry(descents_slice, ("k",), 0, "descents corollary: y^k slice of (1+x)C(x^2y)"),
    "descents-prose-slice": _Entry(descents_prose_slice, ("k",), 0, "descents corollary prose: C_k x^{2k+1} + C_k x^{2k+2}"),
    "example-d123": _Entry(_ex_d123, (), 0, "example after th2b: (1+x+x^4-x^5)/(1-x^2)"),
    "example-d1234": _Entry(_ex_d1234, (), 0, "example after th2b: (1+2x+x^2+2x^6+x^7+x^8)/((1+x)(1-x^2-x^4))"),
    "example-d1234-fibonacci": _Entry(_d1234_prose, (), 0, "example after th2b: f_{n/2+2}+f_{n/2}-2 at even n, 2 at odd n"),
    "example-d213": _Entry(_ex_d213, (), 0, "example after th2c: (1+x-x^3)/(1-x)"),
    "example-d2134": _Entry(_ex_d2134, (), 0, "example after th2c: (1+x-x^2-x^3+x^4)/(1-x^2)^2"),
    "example-d23451": _Entry(_ex_d23451, (), 0, "example after th2f: (1+x)(1-x^2-x^4)/(1-2x^2-x^4)"),
    "example-d123-once": _Entry(_ex_d123_once, (), 0, "example after th3a: x^5(1+x-x^2)/(1-x^2)"),
    "example-d1234-once": _Entry(_ex_d1234_once, (), 0, "example after th3a: x^7(...)/((1-x^2)(1-x^2-x^4)^2)"),
    "example-f4-closed-form": _Entry(_fibonacci_form, (), 0, "introduction example: F_4(sqrt x) = sum (f_{n+2}+f_n-2) x^n"),
    "example-g4-closed-form": _Entry(_g4_form, (), 0, "introduction example: G_4(sqrt x) = 1+x+sum (3*2^{n-2}-1) x^n"),
}


def formula(fid: FormulaId | str, order: int, k: int | None = None, r: int | None = None) -> TruncatedSeries:
    """Expand a catalog entry to a series of the given order."""
    if isinstance(fid, str):
        fid = FormulaId(fid, k, r)
    entry = CATALOG.get(fid.name)
    if entry is None:
        raise FormulaError(f"unknown formula {fid.name!r}")
    if order < 0:
        raise FormulaError("order must be non-negative")
    args = []
    for p in entry.params:
        v = getattr(fid, p)
        if v is None:
            raise FormulaError(f"{fid.name} needs parameter {p}")
        if v < entry.minimum:
            raise FormulaError(f"{fid.name}: {p}={v} is below the valid range ({p} >= {entry.minimum})")
        if fid.name.startswith("explicit-") and v > 4:
            raise FormulaError(f"{fid.name}: only r = 0..4 are given explicitly")
        args.append(v)
    for p in ("k", "r"):
        if p not in entry.params and getattr(fid, p) is not None:
            raise FormulaError(f"{fid.name} takes no parameter {p}")
    return entry.build(*args, order)


def statistic_gf(stat: str, k: int, order: int) -> TruncatedSeries:
    """Series in x counting 132-avoiding Dumont permutations with statistic value ``k``."""
    names = {"rlm": "rlm-slice", "rises": "rises-slice", "descents": "descents-slice"}
    if stat not in names:
        raise FormulaError(f"unknown statistic {stat!r}")
    if k < 0:
        raise FormulaError("k must be non-negative")
    return formula(names[stat], order, k=k)
