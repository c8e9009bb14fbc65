"""Vanishing structure of the local cohomology of R/I^t.

Graded duality trades H^j_m(R/I^t) for Ext^{2m-j}(R/I^t, R), and the Ext
modules vanish away from the indices 2m - 3 and m - 1. Back on the local
cohomology side that leaves exactly two live indices: j = m + 1 (the top,
infinite length) and j = 3 (finite length, the cumulative closed form).
"""

from __future__ import annotations

from dataclasses import dataclass

from .closed_forms import cumulative_length
from .filtration import ThickeningInstance


@dataclass(frozen=True)
class LengthValue:
    """Tri-state length: zero, a finite positive integer, or infinite.

    A finite zero is always represented by the zero state, so
    ``LengthValue.finite(0)`` collapses to ``LengthValue.zero()``.
    """

    kind: str
    value: int | None = None

    _KINDS = ("zero", "finite", "infinite")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "finite":
            if self.value is None or self.value <= 0:
                raise ValueError("finite lengths are positive; use zero() for 0")
        elif self.value is not None:
            raise ValueError(f"{self.kind} length carries no value")

    @classmethod
    def zero(cls) -> "LengthValue":
        return cls("zero")

    @classmethod
    def finite(cls, value: int) -> "LengthValue":
        if value < 0:
            raise ValueError("lengths are nonnegative")
        if value == 0:
            return cls.zero()
        return cls("finite", int(value))

    @classmethod
    def infinite(cls) -> "LengthValue":
        return cls("infinite")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    def to_json(self) -> dict:
        if self.kind == "finite":
            return {"kind": "finite", "value": str(self.value)}
        return {"kind": self.kind}


def nonvanishing_indices(n: int, m: int) -> set[int]:
    """Cohomological indices where H^j_I(R) is nonzero, for maximal minors.

    These are (n - r)(m - n) + 1 for 0 <= r < n; at n = 2 that is
    {m - 1, 2m - 3}. Requires 2 <= n < m, since equal sizes collapse the
    indices and the maximal-minor picture degenerates.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if n >= m:
        raise ValueError(f"need n < m, got n={n}, m={m}")
    return {(n - r) * (m - n) + 1 for r in range(n)}


def dual_index(m: int, n: int, j: int) -> int:
    """Graded-duality partner index m*n - j; involutive on 0 <= j <= m*n."""
    if not 0 <= j <= m * n:
        raise ValueError(f"index {j} out of range 0..{m * n}")
    return m * n - j


def local_cohomology_length(m: int, t: int, j: int) -> LengthValue:
    """Length of H^j_m(R/I^t) for the 2 x m matrix and its 2 x 2 minors.

    Infinite at the top index j = m + 1 (the Krull dimension of R/I^t),
    the cumulative closed form at j = 3 (zero at t = 1, where R/I is
    Cohen-Macaulay), and zero everywhere else.
    """
    inst = ThickeningInstance(m=m, t=t)
    if not 0 <= j <= inst.ambient_dim:
        raise ValueError(f"index {j} out of range 0..{inst.ambient_dim}")
    if j == inst.thickening_dim:
        return LengthValue.infinite()
    if j == 3:
        return LengthValue.finite(cumulative_length(m, t))
    return LengthValue.zero()
