"""Vincular (dash-notation) patterns and occurrence counting.

Grammar, exactly::

    pattern := digit (sep digit)*
    sep     := "-" | ""
    digit   := "1".."9"

Two consecutive letters written without a dash must land on adjacent
positions of the host permutation. ``"1-3-2"`` is the classical pattern 132,
``"12-3"`` asks for the ``1`` and ``2`` to be adjacent.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .perm import Permutation

__all__ = [
    "PatternError",
    "VincularPattern",
    "parse_pattern",
    "occurrences",
    "occurrences_ending_at",
    "naive_occurrences",
    "avoids",
    "contains_exactly",
]

MAX_PATTERN_LENGTH = 9

_GRAMMAR = re.compile(r"[1-9](-?[1-9])*")


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class VincularPattern:
    letters: tuple[int, ...]
    adjacent: tuple[bool, ...]

    def __post_init__(self):
        k = len(self.letters)
        if not 1 <= k <= MAX_PATTERN_LENGTH:
            raise PatternError(f"pattern length {k} outside 1..{MAX_PATTERN_LENGTH}")
        if sorted(self.letters) != list(range(1, k + 1)):
            raise PatternError(f"pattern letters {self.letters} are not a permutation of 1..{k}")
        if len(self.adjacent) != k - 1:
            raise PatternError(f"need {k - 1} adjacency flags, got {len(self.adjacent)}")

    @classmethod
    def classical(cls, letters: Sequence[int]) -> "VincularPattern":
        letters = tuple(letters)
        return cls(letters, (False,) * (len(letters) - 1))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        out = [str(self.letters[0])]
        for flag, letter in zip(self.adjacent, self.letters[1:]):
            out.append(str(letter) if flag else f"-{letter}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"VincularPattern({str(self)!r})"

    @property
    def is_classical(self) -> bool:
        return not any(self.adjacent)

    @cached_property
    def _bounds(self) -> tuple[tuple[int | None, int | None], ...]:
        # For letter j, the earlier pattern slots holding the nearest smaller and
        # nearest larger letter; checking against those two suffices.
        out = []
        for j, a in enumerate(self.letters):
            below = [(b, i) for i, b in enumerate(self.letters[:j]) if b < a]
            above = [(b, i) for i, b in enumerate(self.letters[:j]) if b > a]
            out.append((max(below)[1] if below else None, min(above)[1] if above else None))
        return tuple(out)


def parse_pattern(text: str | VincularPattern) -> VincularPattern:
    """Parse dash notation, e.g. ``"23-1"`` or ``"1-3-2"``."""
    if isinstance(text, VincularPattern):
        return text
    if not isinstance(text, str) or not _GRAMMAR.fullmatch(text):
        raise PatternError(f"malformed pattern {text!r}")
    letters, adjacent = [], []
    pending_dash = False
    for ch in text:
        if ch == "-":
            pending_dash = True
            continue
        if letters:
            adjacent.append(not pending_dash)
        letters.append(int(ch))
        pending_dash = False
    return VincularPattern(tuple(letters), tuple(adjacent))


def _count(v: Sequence[int], t: VincularPattern, limit: int | None, end: int | None) -> int:
    """Backtrack over pattern slots; stop once the count exceeds ``limit``.

    ``end`` (0-based) pins the last pattern letter to that host position.
    """
    k = len(t.letters)
    n = len(v) if end is None else end + 1
    if k > n:
        return 0
    bounds = t._bounds
    adjacent = t.adjacent
    chosen = [0] * k
    total = 0

    def rec(j: int, start: int) -> bool:
        nonlocal total
        lo, hi = bounds[j]
        low = v[chosen[lo]] if lo is not None else 0
        high = v[chosen[hi]] if hi is not None else 1 << 30
        if j == k - 1 and end is not None:
            cands = (end,) if end >= start else ()
            if j > 0 and adjacent[j - 1] and end != chosen[j - 1] + 1:
                cands = ()
        elif j > 0 and adjacent[j - 1]:
            cands = (start,) if start <= n - (k - j) else ()
        else:
            cands = range(start, n - (k - j) + 1)
        for i in cands:
            x = v[i]
            if low < x < high:
                chosen[j] = i
                if j == k - 1:
                    total += 1
                    if limit is not None and total > limit:
                        return True
                elif rec(j + 1, i + 1):
                    return True
        return False

    rec(0, 0)
    return total


def _vals(p) -> Sequence[int]:
    return p.values if isinstance(p, Permutation) else p


def occurrences(p: Permutation | Sequence[int], t: VincularPattern | str) -> int:
    """Number of occurrences of ``t`` in ``p`` honouring adjacency flags."""
    return _count(_vals(p), parse_pattern(t), None, None)


def occurrences_ending_at(
    p: Sequence[int], t: VincularPattern | str, end: int, limit: int | None = None
) -> int:
    """Occurrences whose last letter sits at 0-based position ``end`` of ``p``.

    Summing this over ``end`` gives :func:`occurrences`; the enumerator uses
    it to maintain counts incrementally as a prefix grows.
    """
    return _count(_vals(p), parse_pattern(t), limit, end)


def avoids(p: Permutation | Sequence[int], t: VincularPattern | str) -> bool:
    return _count(_vals(p), parse_pattern(t), 0, None) == 0


def contains_exactly(p: Permutation | Sequence[int], t: VincularPattern | str, r: int) -> bool:
    return _count(_vals(p), parse_pattern(t), r, None) == r


def naive_occurrences(p: Permutation | Sequence[int], t: VincularPattern | str) -> int:
    """Reference count: scan every index tuple. Slow; used as a test oracle."""
    t = parse_pattern(t)
    v = _vals(p)
    k = len(t.letters)
    total = 0
    for idx in combinations(range(len(v)), k):
        if any(flag and idx[j + 1] != idx[j] + 1 for j, flag in enumerate(t.adjacent)):
            continue
        sub = [v[i] for i in idx]
        ranks = tuple(sorted(sub).index(x) + 1 for x in sub)
        if ranks == t.letters:
            total += 1
    return total
