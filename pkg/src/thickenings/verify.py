"""Brute-force verification suites, shared by the CLI and the test suite.

Each suite replays one family of claims on a bounded grid and reports a
case count plus any failures; nothing here trusts the code it checks, the
comparisons always run a second, independent route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .closed_forms import (
    asymptotic_multiplicity,
    binom,
    catalan,
    cumulative_length,
    identity_holds,
    layer_length_closed,
    telescoping_holds,
)
from .filtration import (
    FiltrationIndex,
    cumulative_length_via_decomposition,
    filtration_indices,
    layer_summands,
)
from .partitions import Partition, partitions_of
from .schur import schur_dim, ssyt_count, weyl_dim

SUITE_NAMES = ("schur", "zset", "decomposition", "identities", "catalan")


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, detail: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(detail)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failed)"
        return f"{self.name}: {status} ({self.cases} cases)"


def verify_schur(max_size: int = 8, max_rows: int = 4, max_dim: int = 6) -> SuiteResult:
    """Weyl product against tableau counting, plus power closed forms."""
    res = SuiteResult("schur")
    shapes = [
        p
        for size in range(max_size + 1)
        for p in partitions_of(size, max_rows=max_rows)
    ]
    for shape in shapes:
        for n in range(1, max_dim + 1):
            res.check(
                schur_dim(shape, n) == ssyt_count(shape, n),
                f"weyl/ssyt mismatch for {shape!r} on C^{n}",
            )
    for k in range(max_size + 1):
        row = Partition([k] if k else [])
        column = Partition([1] * k)
        for n in range(1, max_dim + 1):
            res.check(
                schur_dim(row, n) == binom(n + k - 1, k),
                f"symmetric power mismatch at k={k}, n={n}",
            )
            res.check(
                schur_dim(column, n) == binom(n, k),
                f"exterior power mismatch at k={k}, n={n}",
            )
    return res


def verify_zset(max_t: int = 20) -> SuiteResult:
    """General filtration-index search against the n = 2 characterization."""
    res = SuiteResult("zset")
    for t in range(1, max_t + 1):
        expected = {FiltrationIndex(Partition((z, z)), 1) for z in range(t)}
        res.check(
            filtration_indices(2, 2, t) == expected,
            f"filtration index set differs from ((z, z), 1), z < t at t={t}",
        )
    return res


def verify_decomposition(max_m: int = 8, max_t: int = 12) -> SuiteResult:
    """Weight-by-weight layer sums against the closed forms."""
    res = SuiteResult("decomposition")
    for m in range(3, max_m + 1):
        for t in range(1, max_t + 1):
            summands = layer_summands(m, t)
            ok = sum(s.dim for s in summands) == layer_length_closed(m, t)
            for s in summands:
                e = s.epsilon
                term = Fraction(
                    (e + 1) ** 2 * binom(m + t - 3, m - 2) * binom(m + t - 4 - e, t - e - 2),
                    m - 1,
                )
                ok = ok and term == s.dim
                ok = ok and weyl_dim(s.gl2_weight, 2) == e + 1
            res.check(ok, f"layer decomposition mismatch at m={m}, t={t}")
        res.check(
            cumulative_length_via_decomposition(m, max_t) == cumulative_length(m, max_t),
            f"cumulative decomposition mismatch at m={m}, t={max_t}",
        )
        res.check(
            telescoping_holds(m, max_t),
            f"layer sums do not telescope at m={m}, t={max_t}",
        )
    return res


def verify_identities(max_b: int = 40) -> SuiteResult:
    """Square-weighted binomial identity on the full 0 <= a <= b grid."""
    res = SuiteResult("identities")
    for b in range(max_b + 1):
        for a in range(b + 1):
            res.check(identity_holds(a, b), f"identity fails at a={a}, b={b}")
    return res


def verify_catalan(max_m: int = 20) -> SuiteResult:
    """(2m)! times the asymptotic multiplicity equals the m-th Catalan number."""
    res = SuiteResult("catalan")
    for m in range(3, max_m + 1):
        res.check(
            math.factorial(2 * m) * asymptotic_multiplicity(m) == catalan(m),
            f"Catalan identity fails at m={m}",
        )
    return res


def run(
    suite: str,
    max_m: int | None = None,
    max_t: int | None = None,
    max_b: int | None = None,
) -> list[SuiteResult]:
    """Run one named suite, or all of them, with optional bound overrides."""
    names = SUITE_NAMES if suite == "all" else (suite,)
    results = []
    for name in names:
        if name == "schur":
            results.append(verify_schur())
        elif name == "zset":
            results.append(verify_zset(20 if max_t is None else max_t))
        elif name == "decomposition":
            results.append(
                verify_decomposition(
                    8 if max_m is None else max_m,
                    12 if max_t is None else max_t,
                )
            )
        elif name == "identities":
            results.append(verify_identities(40 if max_b is None else max_b))
        elif name == "catalan":
            results.append(verify_catalan(20 if max_m is None else max_m))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return results
