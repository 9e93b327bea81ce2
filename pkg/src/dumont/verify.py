"""Theorem registry: enumeration counts against closed-form coefficients.

Each :class:`TheoremCheck` produces two sequences indexed by ``n`` (the
length of the permutations, equivalently the power of ``x``) and compares
them exactly on ``n_min, n_min + step, ..., n_max``. Values are usually
integers; a few checks compare short strings (permutation listings,
statistic distributions).

Tiers:

``must-pass``
    internally consistent statements confirmed by enumeration; the overall
    verdict depends only on these.
``informational``
    worked examples and prose claims transcribed literally; a mismatch here
    documents a suspected misprint and does not fail the run.
``out-of-scope``
    statements in infinitely many variables, covered through their
    single-statistic specialisations; always reported as ``skipped``.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .catalog import formula
from .enumeration import count_table, enumerate_family, family, joint_distribution
from .patterns import occurrences
from .perm import new_permutation
from .series import q_recurrence, q_summation

__all__ = [
    "TIERS",
    "TheoremCheck",
    "CheckResult",
    "VerificationReport",
    "REGISTRY",
    "UnknownCheckError",
    "run_check",
    "run_all",
]

TIERS = ("must-pass", "informational", "out-of-scope")

# depths: Catalan-sized families, unconstrained Dumont scans, pruned avoidance counts
CATALAN_DEPTH = 12
SCAN_DEPTH = 10
PRUNED_DEPTH = 14

Values = list  # one entry per n = 0..n_max (int or str)


class UnknownCheckError(KeyError):
    pass


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    anchor: str
    tier: str
    depth: int
    oracle: Callable[[int, int], Values] | None
    formula: Callable[[int], Values] | None
    n_min: int = 0
    step: int = 1


@dataclass
class CheckResult:
    id: str
    paper_anchor: str
    tier: str
    status: str
    n_max: int
    mismatch: dict | None
    runtime_ms: float

    def canonical(self) -> dict:
        d = asdict(self)
        d.pop("runtime_ms")
        return d


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        out = {"pass": 0, "mismatch": 0, "skipped": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(c.status != "mismatch" for c in self.checks if c.tier == "must-pass")

    def informational_mismatches(self) -> list[CheckResult]:
        return [c for c in self.checks if c.tier == "informational" and c.status == "mismatch"]

    def canonical(self) -> list[dict]:
        """The report without timings; equal for any two runs at the same depth."""
        return [c.canonical() for c in self.checks]

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps({"checks": [asdict(c) for c in self.checks], "summary": self.summary}, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        data = json.loads(text)
        return cls([CheckResult(**c) for c in data["checks"]])

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():8} {c.id:34} {c.tier:13} n<={c.n_max}"
            if c.mismatch:
                m = c.mismatch
                line += (
                    f"  first disagreement at n={m['n']}: "
                    f"oracle {json.dumps(m['oracle'])} vs formula {json.dumps(m['formula'])}"
                )
            lines.append(line)
        s = self.summary
        lines.append(
            f"summary: {s['pass']} pass, {s['mismatch']} mismatch "
            f"({len(self.informational_mismatches())} informational), {s['skipped']} skipped; "
            f"{'OK' if self.ok else 'FAILED'}"
        )
        return "\n".join(lines) + "\n"


# -- oracle and formula builders ---------------------------------------------

def _counts(kind: str, avoid: Sequence[str] = (), contain: Sequence[tuple[str, int]] = ()):
    def oracle(n_max: int, workers: int = 1) -> Values:
        return count_table(family(kind, avoid, contain), n_max, workers=workers).sequence(n_max)

    return oracle


def _d132(avoid: Sequence[str] = (), contain: Sequence[tuple[str, int]] = ()):
    return _counts("dumont-first-132-avoiding", avoid, contain)


def _series(name: str, k: int | None = None, r: int | None = None):
    def build(n_max: int) -> Values:
        return formula(name, n_max, k=k, r=r).integers()

    return build


def _const(values: Callable[[int], int | str]):
    return lambda n_max: [values(n) for n in range(n_max + 1)]


def _dash(prefix: str, k: int) -> str:
    """``prefix`` followed by ``-m`` for each remaining letter up to ``k``."""
    start = len(prefix.replace("-", "")) + 1
    return prefix + "".join(f"-{m}" for m in range(start, k + 1))


def _bernoulli(m: int) -> Fraction:
    # Akiyama-Tanigawa
    a = [Fraction(0)] * (m + 1)
    for i in range(m + 1):
        a[i] = Fraction(1, i + 1)
        for j in range(i, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def _genocchi_for_length(n: int) -> int:
    # the (n/2 + 1)st Genocchi number |G_{n+2}| = 2 (2^{n+2} - 1) |B_{n+2}|
    m = n + 2
    return int(abs(2 * (2**m - 1) * _bernoulli(m)))


@lru_cache(maxsize=None)
def _joint(stat: str, n_max: int) -> tuple[tuple[tuple[int, int], int], ...]:
    table = joint_distribution(n_max, "dumont-first-132-avoiding", (), stat)
    return tuple(sorted(table.rows.items()))


def _render(dist: dict[int, int]) -> str:
    return " ".join(f"{k}:{c}" for k, c in sorted(dist.items()) if c)


def _stat_oracle(stat: str):
    def oracle(n_max: int, workers: int = 1) -> Values:
        rows = dict(_joint(stat, n_max))
        return [_render({k: c for (m, k), c in rows.items() if m == n}) for n in range(n_max + 1)]

    return oracle


def _stat_formula(name: str):
    def build(n_max: int) -> Values:
        slices = {k: formula(name, n_max, k=k).integers() for k in range(n_max + 2)}
        return [_render({k: s[n] for k, s in slices.items()}) for n in range(n_max + 1)]

    return build


def _listing(kind: str, length: int):
    def oracle(n_max: int, workers: int = 1) -> Values:
        return [
            " ".join(map(str, enumerate_family(family(kind, n=n)))) if n == length else ""
            for n in range(n_max + 1)
        ]

    return oracle


def _decomposition_counts(n_max: int) -> Values:
    # Assemble (pi', n, pi'') by the block rule: odd n puts n last; even n has
    # pi' of length 0 or odd a <= n-3 on the top values and nonempty pi''.
    d = [1]
    for n in range(1, n_max + 1):
        if n % 2:
            d.append(d[n - 1])
        else:
            d.append(d[n - 1] + sum(d[a] * d[n - 1 - a] for a in range(1, n - 2, 2)))
    return d


def _q_table(method: Callable[[int, str, int], object]):
    def build(n_max: int) -> Values:
        rows = {(kind, r): method(r, kind, n_max).integers() for kind in "FG" for r in range(1, 7)}
        return [";".join(f"{kind}{r}:{c[n]}" for (kind, r), c in rows.items()) for n in range(n_max + 1)]

    return build


def _pattern_example(n_max: int, workers: int = 1) -> Values:
    p = new_permutation([3, 5, 4, 2, 1])
    return [f"{occurrences(p, '23-1')},{occurrences(p, '2-3-1')}" if n == 5 else "" for n in range(n_max + 1)]


def _pell(m: int) -> int:
    a, b = 0, 1
    for _ in range(m):
        a, b = b, 2 * b + a
    return a


# -- the registry ------------------------------------------------------------

def _build_registry() -> dict[str, TheoremCheck]:
    checks: list[TheoremCheck] = []

    def add(id, anchor, tier, depth, oracle, formula_, n_min=0, step=1):
        checks.append(TheoremCheck(id, anchor, tier, depth, oracle, formula_, n_min, step))

    MP, INFO = "must-pass", "informational"

    # definitions and introduction
    add("genocchi-first-kind", "Dumont: first kind on 2n letters counted by the (n+1)st Genocchi number",
        MP, SCAN_DEPTH, _counts("dumont-first"), _const(_genocchi_for_length), step=2)
    add("genocchi-second-kind", "Dumont: second kind on 2n letters counted by the (n+1)st Genocchi number",
        MP, SCAN_DEPTH, _counts("dumont-second"), _const(_genocchi_for_length), step=2)
    add("dumont-first-length-4", "Introduction: 2143, 3421, 4213 are the first-kind Dumont permutations of length 4",
        MP, 4, _listing("dumont-first", 4), _const(lambda n: "2143 3421 4213" if n == 4 else ""), n_min=4)
    add("dumont-second-length-4", "Introduction: 2143, 3142, 4132 are the second-kind Dumont permutations of length 4",
        MP, 4, _listing("dumont-second", 4), _const(lambda n: "2143 3142 4132" if n == 4 else ""), n_min=4)
    add("vincular-example-35421", "Introduction: 35421 has two occurrences of 23-1 and four of 2-3-1",
        MP, 5, _pattern_example, _const(lambda n: "2,4" if n == 5 else ""), n_min=5)
    add("remark-second-kind-132", "Remark: no second-kind Dumont permutation avoids 132 for n >= 4",
        MP, SCAN_DEPTH, _counts("dumont-second", ["1-3-2"]), _const(lambda n: 0), n_min=4)
    add("q-summation-form", "F_r, G_r recurrence agrees with the closed sum form, r = 1..6",
        MP, 20, lambda n, w=1: _q_table(q_recurrence)(n), _q_table(q_summation))
    add("example-f4-closed-form", "Example: F_4(sqrt x) = sum (f_{n+2} + f_n - 2) x^n, degrees >= 1",
        MP, 20, lambda n, w=1: _series_q("F", 4)(n), _series("example-f4-closed-form"), n_min=1)
    add("example-f4-closed-form-degree-0", "Example: F_4(sqrt x) Fibonacci form at n = 0",
        INFO, 20, lambda n, w=1: _series_q("F", 4)(n), _series("example-f4-closed-form"))
    add("example-g4-closed-form", "Example: G_4(sqrt x) = 1 + x + sum (3*2^{n-2} - 1) x^n",
        MP, 20, lambda n, w=1: _series_q("G", 4)(n), _series("example-g4-closed-form"))

    # avoiding 132 and another pattern
    add("prop-block-decomposition", "Proposition prom1: block decomposition of 132-avoiding Dumont permutations",
        MP, PRUNED_DEPTH, _d132(), _decomposition_counts)
    add("th2a", "Theorem th2a: (1+x)C(x^2), i.e. C_[n/2]", MP, PRUNED_DEPTH, _d132(), _series("d-empty"))
    add("example-d1", "Example: D_1(x) = 1", MP, CATALAN_DEPTH, _d132(["1"]), _const(lambda n: int(n == 0)))
    add("example-d12", "Example: D_12(x) = 1 + x + x^2", MP, CATALAN_DEPTH, _d132(["1-2"]),
        _const(lambda n: int(n <= 2)))
    for k in (3, 4, 5):
        add(f"th2b-k{k}", f"Theorem th2b: avoiding 12...k, F_k + x F_(k-1), k={k}",
            MP, CATALAN_DEPTH, _d132([_dash("1-2", k)]), _series("d-incr", k=k))
    add("example-d123-rational", "Example after th2b: D_123 = (1+x+x^4-x^5)/(1-x^2)",
        MP, CATALAN_DEPTH, _d132(["1-2-3"]), _series("example-d123"))
    add("example-d123-parity", "Example after th2b: D_123(n) = 1 + (-1)^n for n >= 4",
        MP, CATALAN_DEPTH, _d132(["1-2-3"]), _const(lambda n: 1 + (-1) ** n), n_min=4)
    add("example-d1234-rational", "Example after th2b: D_1234 = (1+2x+x^2+2x^6+x^7+x^8)/((1+x)(1-x^2-x^4))",
        MP, CATALAN_DEPTH, _d132(["1-2-3-4"]), _series("example-d1234"))
    add("example-d1234-fibonacci", "Example after th2b: D_1234(n) = f_(n/2+2) + f_(n/2) - 2 for even n >= 2",
        MP, CATALAN_DEPTH, _d132(["1-2-3-4"]), _series("example-d1234-fibonacci"), n_min=2, step=2)
    add("example-d1234-odd", "Example after th2b: D_1234(n) = 2 for odd n >= 2",
        INFO, CATALAN_DEPTH, _d132(["1-2-3-4"]), _series("example-d1234-fibonacci"), n_min=3, step=2)
    add("th2bg", "Theorem th2bg: multivariate equation, verified via the rlm slices", "out-of-scope",
        0, None, None)
    add("cor-rlm", "Corollary: k right-to-left maxima, x^(2k-2) C^(k-1)(x^2) (k >= 2), x^k C^k(x^2) (k = 0, 1)",
        MP, CATALAN_DEPTH, _stat_oracle("rlm"), _stat_formula("rlm-slice"))
    for k in (3, 4):
        add(f"th2c-k{k}", f"Theorem th2c: avoiding 213...k, G_(k-1) + x G_(k-2), k={k}",
            MP, CATALAN_DEPTH, _d132([_dash("2-1", k)]), _series("d-213k", k=k))
    add("example-d213", "Example after th2c: D_213 = (1+x-x^3)/(1-x)",
        INFO, CATALAN_DEPTH, _d132(["2-1-3"]), _series("example-d213"))
    add("example-d2134", "Example after th2c: D_2134 = (1+x-x^2-x^3+x^4)/(1-x^2)^2",
        MP, CATALAN_DEPTH, _d132(["2-1-3-4"]), _series("example-d2134"))
    for k in (2, 3, 4):
        add(f"th2d-k{k}", f"Theorem th2d: avoiding 12-3-...-k, F_k + x F_(k-1), k={k}",
            MP, CATALAN_DEPTH, _d132([_dash("12", k)]), _series("d-gen-12-3k", k=k))
    add("th2dg", "Theorem th2dg: multivariate equation, verified via the rises slices", "out-of-scope",
        0, None, None)
    add("cor-rises", "Corollary: k rises, C_k x^(2k+1) + C_(k+1) x^(2k+2) (k >= 1), 1 + x + x^2 (k = 0)",
        MP, CATALAN_DEPTH, _stat_oracle("rises"), _stat_formula("rises-slice"))
    add("cor-rises-closed-form", "Corollary: rises bivariate closed form with sqrt(1 - 4x^2 y)",
        MP, CATALAN_DEPTH, _stat_oracle("rises"), _stat_formula("rises-closed-form-slice"))
    for k in (2, 3, 4):
        add(f"th2e-k{k}", f"Theorem th2e: avoiding 21-3-...-k, G_(k-1) + x G_(k-2), k={k}",
            MP, CATALAN_DEPTH, _d132([_dash("21", k)]), _series("d-gen-21-3k", k=k))
    add("th2eg", "Theorem th2eg: multivariate equation, verified via the descents slices", "out-of-scope",
        0, None, None)
    add("cor-descents", "Corollary: descents generating function (1+x)C(x^2 y)",
        MP, CATALAN_DEPTH, _stat_oracle("descents"), _stat_formula("descents-slice"))
    add("cor-descents-prose", "Corollary: k descents, C_k x^(2k+1) + C_k x^(2k+2) as stated in prose",
        INFO, CATALAN_DEPTH, _stat_oracle("descents"), _stat_formula("descents-prose-slice"))
    for k in (3, 4, 5):
        add(f"th2f-k{k}", f"Theorem th2f: avoiding 23...k1, 1 + x + x^2(1+x)/(1 - x^2 - x^2 F_(k-3)), k={k}",
            MP, CATALAN_DEPTH, _d132(["-".join(map(str, [*range(2, k + 1), 1]))]), _series("d-23k1", k=k))
    add("example-d23451-rational", "Example after th2f: D_23451 = (1+x)(1-x^2-x^4)/(1-2x^2-x^4)",
        MP, CATALAN_DEPTH, _d132(["2-3-4-5-1"]), _series("example-d23451"))
    add("example-d23451-pell", "Example after th2f: D_23451(n) = P_[n/2], n >= 2",
        MP, CATALAN_DEPTH, _d132(["2-3-4-5-1"]), _const(lambda n: _pell(n // 2)), n_min=2)

    # containing a pattern exactly once
    for k in (2, 3, 4):
        add(f"th3a-k{k}", f"Theorem th3a: containing 12...k once, A_k + x A_(k-1), k={k}",
            MP, SCAN_DEPTH, _d132(contain=[(_dash("1-2", k), 1)]), _series("contain-once-incr", k=k))
    add("example-d123-once", "Example after th3a: D_123;1 = x^5(1+x-x^2)/(1-x^2)",
        MP, SCAN_DEPTH, _d132(contain=[("1-2-3", 1)]), _series("example-d123-once"))
    add("example-d1234-once", "Example after th3a: D_1234;1 = x^7(1+x-3x^2+...)/((1-x^2)(1-x^2-x^4)^2)",
        INFO, SCAN_DEPTH, _d132(contain=[("1-2-3-4", 1)]), _series("example-d1234-once"))
    add("th3b-k2", "Theorem th3b: containing 21 once, k=2",
        MP, SCAN_DEPTH, _d132(contain=[("2-1", 1)]), _series("contain-once-213k", k=2))
    add("th3b-k3", "Theorem th3b: containing 213 once, k=3",
        MP, SCAN_DEPTH, _d132(contain=[("2-1-3", 1)]), _series("contain-once-213k", k=3))
    add("th3b-k4", "Theorem th3b: containing 2134 once, recurrence from k=4 as stated",
        INFO, SCAN_DEPTH, _d132(contain=[("2-1-3-4", 1)]), _series("contain-once-213k", k=4))
    for k in (2, 3, 4):
        add(f"th3c-k{k}", f"Theorem th3c: containing 12-3-...-k once, k={k}",
            MP, SCAN_DEPTH, _d132(contain=[(_dash("12", k), 1)]), _series("contain-once-gen-12-3k", k=k))
    for k in (2, 3, 4):
        add(f"th3d-k{k}", f"Theorem th3d: containing 21-3-...-k once, k={k}",
            MP, SCAN_DEPTH, _d132(contain=[(_dash("21", k), 1)]), _series("contain-once-gen-21-3k", k=k))
    for label, pattern in (("123", "1-2-3"), ("12-3", "12-3"), ("21-3", "21-3")):
        for r in range(5):
            oracle = _d132([pattern]) if r == 0 else _d132(contain=[(pattern, r)])
            add(f"explicit-{label}-r{r}", f"Explicit D_{label};{r} for k=3, r={r}",
                INFO, SCAN_DEPTH, oracle, _series(f"explicit-{label}-r", r=r))

    # further results
    add("sec4-no-single-132", "Theorem: no Dumont permutation contains 132 exactly once",
        MP, SCAN_DEPTH, _counts("dumont-first", contain=[("1-3-2", 1)]), _const(lambda n: 0))
    for k in (3, 4):
        add(f"thga-k{k}", f"Theorem thga: avoiding 132, 12...k and 213...k, G_(k-1) + x G_(k-2), k={k}",
            MP, SCAN_DEPTH, _d132([_dash("1-2", k), _dash("2-1", k)]), _series("triple-avoid", k=k))
    add("wilf-second-kind-321", "Theorem: second kind avoiding 321 counted by C_[n/2]",
        MP, CATALAN_DEPTH, _counts("dumont-second", ["3-2-1"]), _series("d-empty"))
    add("wilf-first-kind-231", "Theorem: first kind avoiding 231 counted by C_[n/2]",
        MP, CATALAN_DEPTH, _counts("dumont-first", ["2-3-1"]), _series("d-empty"))
    add("wilf-first-kind-312", "Theorem: first kind avoiding 312 counted by C_[n/2]",
        MP, CATALAN_DEPTH, _counts("dumont-first", ["3-1-2"]), _series("d-empty"))

    registry = {}
    for c in checks:
        if c.id in registry:
            raise RuntimeError(f"duplicate check id {c.id}")
        registry[c.id] = c
    return registry


def _series_q(kind: str, r: int):
    return lambda n_max: q_recurrence(r, kind, n_max).integers()


REGISTRY: dict[str, TheoremCheck] = _build_registry()


def _compare(check: TheoremCheck, n_max: int, workers: int) -> dict | None:
    oracle = check.oracle(n_max, workers)
    predicted = check.formula(n_max)
    for n in range(check.n_min, n_max + 1, check.step):
        if oracle[n] != predicted[n]:
            return {"n": n, "oracle": oracle[n], "formula": predicted[n]}
    return None


def run_check(check_id: str, n_max: int, workers: int = 1) -> CheckResult:
    """Compare oracle and formula for every ``n <= n_max``."""
    try:
        check = REGISTRY[check_id]
    except KeyError:
        raise UnknownCheckError(check_id) from None
    start = time.perf_counter()
    if check.tier == "out-of-scope":
        status, mismatch, n_max = "skipped", None, 0
    else:
        mismatch = _compare(check, n_max, workers)
        status = "mismatch" if mismatch else "pass"
    runtime = round((time.perf_counter() - start) * 1000, 3)
    return CheckResult(check.id, check.anchor, check.tier, status, n_max, mismatch, runtime)


def _run_capped(args: tuple[str, int]) -> CheckResult:
    check_id, n_max = args
    return run_check(check_id, min(n_max, REGISTRY[check_id].depth))


def run_all(n_max: int, workers: int = 1, ids: Sequence[str] | None = None) -> VerificationReport:
    """Run every registered check at ``min(n_max, its depth)``.

    With ``workers > 1`` checks run in separate processes; the report lists
    them in registry order either way.
    """
    ids = list(REGISTRY) if ids is None else list(ids)
    for i in ids:
        if i not in REGISTRY:
            raise UnknownCheckError(i)
    jobs = [(i, n_max) for i in ids]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_capped, jobs))
    else:
        results = [_run_capped(j) for j in jobs]
    return VerificationReport(results)
