"""Permutations in one-line notation, the two Dumont predicates and three statistics.

Positions and values are 1-indexed in everything user facing (error
messages, text format); internally a permutation is a plain tuple.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "MAX_LENGTH",
    "STATISTICS",
    "Permutation",
    "PermutationError",
    "new_permutation",
    "is_dumont_first",
    "is_dumont_second",
    "statistic",
    "rlm",
    "rises",
    "descents",
]

MAX_LENGTH = int(os.environ.get("DUMONT_MAX_PERM_LENGTH", 20))

STATISTICS = ("rlm", "rises", "descents")


class PermutationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """An immutable permutation of ``{1, ..., n}``.

    Build one with :func:`new_permutation` (or ``Permutation.parse``); the
    constructor trusts its input.
    """

    values: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self) -> str:
        if len(self.values) <= 9:
            return "".join(map(str, self.values))
        return ",".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"Permutation({str(self) or 'ε'})"

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Inverse of ``str``: ``"2143"`` or ``"10,1,2,..."``."""
        text = text.strip()
        if not text or text == "ε":
            return new_permutation(())
        try:
            if "," in text:
                values = [int(t) for t in text.split(",")]
            else:
                values = [int(c) for c in text]
        except ValueError:
            raise PermutationError(f"cannot parse permutation {text!r}") from None
        return new_permutation(values)


def new_permutation(values: Iterable[int], max_length: int | None = None) -> Permutation:
    """Validate ``values`` as a bijection on ``{1..n}`` and wrap it.

    Raises :class:`PermutationError` naming the first offending (1-indexed)
    position.
    """
    vals = tuple(values)
    limit = MAX_LENGTH if max_length is None else max_length
    n = len(vals)
    if n > limit:
        raise PermutationError(f"length {n} exceeds the limit {limit}")
    seen = set()
    for pos, v in enumerate(vals, 1):
        if not isinstance(v, int) or isinstance(v, bool):
            raise PermutationError(f"position {pos}: {v!r} is not an integer")
        if not 1 <= v <= n:
            raise PermutationError(f"position {pos}: value {v} out of range 1..{n}")
        if v in seen:
            raise PermutationError(f"position {pos}: duplicate value {v}")
        seen.add(v)
    return Permutation(vals)


def _values(p: Permutation | Sequence[int]) -> Sequence[int]:
    return p.values if isinstance(p, Permutation) else p


def is_dumont_first(p: Permutation | Sequence[int]) -> bool:
    """Even entries are followed by a smaller entry; odd ones by a larger entry or nothing."""
    v = _values(p)
    n = len(v)
    for i in range(n - 1):
        if v[i] % 2 == 0:
            if v[i + 1] > v[i]:
                return False
        elif v[i + 1] < v[i]:
            return False
    return n == 0 or v[-1] % 2 == 1


def is_dumont_second(p: Permutation | Sequence[int]) -> bool:
    """``p_i < i`` at even positions, ``p_i >= i`` at odd positions (1-indexed)."""
    for i, x in enumerate(_values(p), 1):
        if i % 2 == 0:
            if x >= i:
                return False
        elif x < i:
            return False
    return True


def rlm(p: Permutation | Sequence[int]) -> int:
    count, best = 0, 0
    for x in reversed(_values(p)):
        if x > best:
            best = x
            count += 1
    return count


def rises(p: Permutation | Sequence[int]) -> int:
    v = _values(p)
    return sum(1 for a, b in zip(v, v[1:]) if a < b)


def descents(p: Permutation | Sequence[int]) -> int:
    v = _values(p)
    return sum(1 for a, b in zip(v, v[1:]) if a > b)


_STAT_FUNCS = {"rlm": rlm, "rises": rises, "descents": descents}


def statistic(p: Permutation | Sequence[int], kind: str) -> int:
    """Value of the statistic ``kind`` (one of :data:`STATISTICS`) on ``p``."""
    try:
        return _STAT_FUNCS[kind](p)
    except KeyError:
        raise ValueError(f"unknown statistic {kind!r}; expected one of {STATISTICS}") from None
