"""Pruned generation of pattern-restricted (Dumont) permutation families.

Permutations are built left to right, trying values in increasing order, so
every stream comes out in lexicographic order. A prefix is cut as soon as

* the Dumont rule of the chosen kind cannot be met by any extension,
* it already contains 1-3-2 (``dumont-first-132-avoiding``),
* it contains a pattern from ``avoid``, or
* it holds more occurrences of a ``contain`` pattern than allowed.

Occurrences inside a prefix survive any extension (adjacent positions stay
adjacent), so the last two cuts are sound for vincular patterns too. Counts
are maintained incrementally from the occurrences ending at the newest entry.
"""
from __future__ import annotations

import bisect
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Sequence

from .patterns import VincularPattern, occurrences_ending_at, parse_pattern
from .perm import STATISTICS, Permutation, statistic

__all__ = [
    "KINDS",
    "BoundError",
    "FamilySpec",
    "CountTable",
    "family",
    "max_length",
    "enumerate_family",
    "count_family",
    "count_table",
    "joint_distribution",
]

KINDS = ("all", "dumont-first", "dumont-second", "dumont-first-132-avoiding")

DEFAULT_MAX_ALL = 10
DEFAULT_MAX_CONSTRAINED = 14


class BoundError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    length: int
    kind: str = "all"
    avoid: tuple[VincularPattern, ...] = ()
    contain: tuple[tuple[VincularPattern, int], ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if self.length < 0:
            raise ValueError("length must be non-negative")
        clash = set(self.avoid) & {t for t, _ in self.contain}
        if clash:
            raise ValueError(f"pattern(s) {sorted(map(str, clash))} both avoided and contained")
        if any(r < 0 for _, r in self.contain):
            raise ValueError("containment counts must be non-negative")

    def with_length(self, n: int) -> "FamilySpec":
        return replace(self, length=n)


def family(
    kind: str = "all",
    avoid: Iterable[str | VincularPattern] = (),
    contain: Iterable[tuple[str | VincularPattern, int]] = (),
    n: int = 0,
) -> FamilySpec:
    """Convenience constructor accepting pattern strings."""
    return FamilySpec(
        n,
        kind,
        tuple(parse_pattern(t) for t in avoid),
        tuple((parse_pattern(t), int(r)) for t, r in contain),
    )


def max_length(kind: str) -> int:
    """Largest length the enumerator accepts for ``kind``.

    ``DUMONT_MAX_N`` in the environment overrides both defaults.
    """
    env = os.environ.get("DUMONT_MAX_N")
    if env:
        return int(env)
    return DEFAULT_MAX_ALL if kind == "all" else DEFAULT_MAX_CONSTRAINED


def _check_bound(kind: str, n: int) -> None:
    limit = max_length(kind)
    if n > limit:
        raise BoundError(f"length {n} exceeds the bound {limit} for kind {kind!r} (see DUMONT_MAX_N)")


def _search(spec: FamilySpec, first: int | None = None) -> Iterator[tuple[int, ...]]:
    n = spec.length
    kind = spec.kind
    first_kind = kind.startswith("dumont-first")
    second_kind = kind == "dumont-second"
    no132 = kind == "dumont-first-132-avoiding"
    avoid = spec.avoid
    contain = [t for t, _ in spec.contain]
    caps = [r for _, r in spec.contain]
    if n == 0:
        if all(r == 0 for r in caps):
            yield ()
        return

    prefix: list[int] = []
    remaining = list(range(1, n + 1))
    counts = [0] * len(contain)
    # (smallest value before slot j, value at slot j); a new value v closes a
    # 1-3-2 iff some pair has low < v < high.
    peaks: list[tuple[int, int]] = []

    def admissible(v: int) -> bool:
        pos = len(prefix) + 1
        if first_kind:
            if prefix:
                u = prefix[-1]
                if (u % 2 == 0 and v > u) or (u % 2 == 1 and v < u):
                    return False
            if pos == n:
                if v % 2 == 0:
                    return False
            else:
                # some remaining value must be able to follow v
                others = [w for w in remaining if w != v]
                if v % 2 == 0 and min(others) > v:
                    return False
                if v % 2 == 1 and max(others) < v:
                    return False
        elif second_kind:
            if pos % 2 == 0:
                if v >= pos:
                    return False
            elif v < pos:
                return False
        if no132:
            for low, high in peaks:
                if low < v < high:
                    return False
        return True

    def rec() -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            if counts == caps:
                yield tuple(prefix)
            return
        cands = list(remaining) if prefix or first is None else [first]
        for v in cands:
            if not admissible(v):
                continue
            prefix.append(v)
            end = len(prefix) - 1
            ok = all(occurrences_ending_at(prefix, t, end, limit=0) == 0 for t in avoid)
            added = []
            if ok:
                for i, t in enumerate(contain):
                    c = occurrences_ending_at(prefix, t, end, limit=caps[i] - counts[i])
                    added.append(c)
                    counts[i] += c
                ok = all(c <= r for c, r in zip(counts, caps))
            if ok:
                remaining.remove(v)
                if no132:
                    peaks.append((min(prefix[:-1], default=n + 1), v))
                yield from rec()
                if no132:
                    peaks.pop()
                bisect.insort(remaining, v)
            for i, c in enumerate(added):
                counts[i] -= c
            prefix.pop()

    yield from rec()


def enumerate_family(spec: FamilySpec) -> Iterator[Permutation]:
    """Yield every member of the family, in lexicographic order."""
    _check_bound(spec.kind, spec.length)
    for values in _search(spec):
        yield Permutation(values)


def _count_branch(args: tuple[FamilySpec, int | None, str | None]) -> Counter:
    spec, first, stat = args
    out: Counter = Counter()
    for values in _search(spec, first):
        out[statistic(values, stat) if stat else None] += 1
    return out


def _branch_counts(spec: FamilySpec, stat: str | None, workers: int) -> Counter:
    if workers <= 1 or spec.length < 2:
        return _count_branch((spec, None, stat))
    jobs = [(spec, f, stat) for f in range(1, spec.length + 1)]
    total: Counter = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_count_branch, jobs):
            total.update(part)
    return total


def count_family(spec: FamilySpec, workers: int = 1) -> int:
    """``len(list(enumerate_family(spec)))`` without keeping the permutations."""
    _check_bound(spec.kind, spec.length)
    return sum(_branch_counts(spec, None, workers).values())


@dataclass
class CountTable:
    """Exact counts keyed by ``(n, k)``; ``k`` is ``None`` for plain counts."""

    rows: dict[tuple[int, int | None], int] = field(default_factory=dict)

    def __getitem__(self, key):
        if isinstance(key, int):
            key = (key, None)
        return self.rows.get(key, 0)

    def merge(self, other: "CountTable") -> "CountTable":
        rows = dict(self.rows)
        for key, c in other.rows.items():
            rows[key] = rows.get(key, 0) + c
        return CountTable(rows)

    __add__ = merge

    def lengths(self) -> list[int]:
        return sorted({n for n, _ in self.rows})

    def sequence(self, n_max: int | None = None, k: int | None = None) -> list[int]:
        """Counts for ``n = 0..n_max``; with ``k`` given, the column of that statistic value."""
        if n_max is None:
            n_max = max(self.lengths(), default=-1)
        if k is None and any(kk is not None for _, kk in self.rows):
            return [self.marginal(n) for n in range(n_max + 1)]
        return [self.rows.get((n, k), 0) for n in range(n_max + 1)]

    def marginal(self, n: int) -> int:
        return sum(c for (m, _), c in self.rows.items() if m == n)

    def sorted_rows(self) -> list[tuple[int, int | None, int]]:
        return sorted(((n, k, c) for (n, k), c in self.rows.items()), key=lambda r: (r[0], -1 if r[1] is None else r[1]))

    def to_csv(self) -> str:
        grouped = any(k is not None for _, k in self.rows)
        lines = ["n,k,count" if grouped else "n,count"]
        for n, k, c in self.sorted_rows():
            lines.append(f"{n},{k},{c}" if grouped else f"{n},{c}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        rows = []
        for n, k, c in self.sorted_rows():
            row = {"n": n, "count": c}
            if k is not None:
                row["k"] = k
            rows.append(row)
        return json.dumps({"rows": rows})

    @classmethod
    def from_json(cls, text: str) -> "CountTable":
        data = json.loads(text)
        return cls({(r["n"], r.get("k")): r["count"] for r in data["rows"]})


def count_table(template: FamilySpec, n_max: int, workers: int = 1) -> CountTable:
    """Family sizes for every length ``0..n_max`` (the template's length is ignored)."""
    _check_bound(template.kind, n_max)
    rows = {}
    for n in range(n_max + 1):
        rows[(n, None)] = sum(_branch_counts(template.with_length(n), None, workers).values())
    return CountTable(rows)


def joint_distribution(
    n_max: int,
    kind: str,
    avoid: Sequence[str | VincularPattern] = (),
    stat: str = "rlm",
    contain: Sequence[tuple[str | VincularPattern, int]] = (),
    workers: int = 1,
) -> CountTable:
    """Counts keyed by ``(n, k)`` where ``k`` is the value of ``stat``."""
    if stat not in STATISTICS:
        raise ValueError(f"unknown statistic {stat!r}")
    _check_bound(kind, n_max)
    template = family(kind, avoid, contain)
    rows = {}
    for n in range(n_max + 1):
        for k, c in _branch_counts(template.with_length(n), stat, workers).items():
            rows[(n, k)] = c
    return CountTable(rows)
