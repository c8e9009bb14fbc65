"""The Ext-split filtration of R/I^t and its weight-by-weight decomposition.

R is the polynomial ring on a 2 x m matrix of variables and I the ideal of
its 2 x 2 minors. Powers I^t are GL-invariant, so R/I^t carries a finite
GL-invariant filtration whose factors J_(z,l) are indexed by pairs of a
partition z and an integer l, and Ext against R splits as a direct sum over
those factors. Each factor in turn contributes, at cohomological index
2m - 3, one summand S_{lambda(0)}(C^m) tensor S_lambda(C^2) per dominant
weight lambda in an explicit interval. Summing exact dimensions over that
chain is the long route to the length of Ext^{2m-3}(R/I^t, R); the short
route is the closed form in :mod:`thickenings.closed_forms`, and the test
suite insists the two agree.

``filtration_indices`` enumerates the index pairs for general matrix and
minor sizes by bounded exhaustive search, so the n = 2 characterization
(all indices are ((z, z), 1) with z <= t - 1) is something the tests can
check rather than assume.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .partitions import DominantWeight, Partition, _as_weight
from .schur import tensor_pair_dim


@dataclass(frozen=True)
class FiltrationIndex:
    """Index (z, l) of one factor J_(z,l) of the Ext-split filtration."""

    z: Partition
    l: int


@dataclass(frozen=True)
class ThickeningInstance:
    """Parameters of one thickening R/I^t: a 2 x m matrix, 2 x 2 minors, power t."""

    m: int
    t: int
    n: int = 2
    minor_size: int = 2

    def __post_init__(self) -> None:
        if self.n != 2 or self.minor_size != 2:
            raise ValueError("only 2-row matrices with 2 x 2 minors are supported")
        if self.m <= self.n:
            raise ValueError(f"m must exceed n = 2, got m = {self.m}")
        if self.t < 1:
            raise ValueError(f"t must be positive, got t = {self.t}")

    @property
    def ambient_dim(self) -> int:
        """Dimension of the polynomial ring, m * n."""
        return self.m * self.n

    @property
    def thickening_dim(self) -> int:
        """Krull dimension of R/I^t, which is m + 1."""
        return self.m + 1


@dataclass(frozen=True)
class LayerSummand:
    """One weight summand of Ext^{2m-3}(I^{t-1}/I^t, R).

    ``gl2_weight`` is the length-2 weight lambda, ``glm_weight`` the paired
    length-m weight lambda(0), ``epsilon`` their spread lambda_1 - lambda_2,
    and ``dim`` the exact dimension of the tensor product.
    """

    epsilon: int
    gl2_weight: DominantWeight
    glm_weight: DominantWeight
    dim: int

    def to_json(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "lambda": self.gl2_weight.to_json(),
            "lambda_s": self.glm_weight.to_json(),
            "dim": str(self.dim),
        }


def _bounded_partitions(max_part: int, length: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(max_part, -1, -1):
        for rest in _bounded_partitions(first, length - 1):
            yield (first,) + rest


def filtration_indices(n: int, minor_size: int, t: int) -> set[FiltrationIndex]:
    """All filtration indices (z, l) for the t-th power of the size-``minor_size`` minor ideal.

    Exhausts partitions z with at most n parts, each part at most t - 1, and
    levels 0 <= l <= minor_size - 1, keeping the pairs that satisfy

        z_1 = ... = z_{l+1} <= t - 1
        |z| + (t - z_1) * l + 1  <=  minor_size * t  <=  |z| + (t - z_1) * (l + 1)

    The part bound makes the search space finite.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 1 <= minor_size <= n:
        raise ValueError(f"minor size must lie in 1..{n}, got {minor_size}")
    if t < 1:
        raise ValueError("t must be positive")
    found: set[FiltrationIndex] = set()
    for z in _bounded_partitions(t - 1, n):
        total = sum(z)
        for l in range(minor_size):
            if any(z[i] != z[0] for i in range(l + 1)):
                continue
            lower = total + (t - z[0]) * l + 1
            upper = total + (t - z[0]) * (l + 1)
            if lower <= minor_size * t <= upper:
                found.add(FiltrationIndex(Partition(z), l))
    return found


def degree_parameters(m: int, j: int) -> tuple[int, int]:
    """The unique (t1, s) putting a filtration factor's Ext in cohomological degree j.

    With n = 2 every filtration index has l = 1, so the degree bookkeeping
    reads 2m - 1 - s(m - 2) - 2*t1 = j over 0 <= s <= t1 <= 1. Only the top
    degree j = 2m - 3 is supported, where the answer is (1, 0); solving by
    enumeration keeps the uniqueness claim honest.
    """
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if j != 2 * m - 3:
        raise ValueError(f"unsupported cohomological index {j}, expected {2 * m - 3}")
    solutions = [
        (t1, s)
        for t1 in range(2)
        for s in range(t1 + 1)
        if 2 * m - 1 - s * (m - 2) - 2 * t1 == j
    ]
    if len(solutions) != 1:
        raise ValueError(f"expected a unique (t1, s) for m={m}, j={j}, found {solutions}")
    return solutions[0]


def contributing_weights(z: int, m: int) -> list[DominantWeight]:
    """Length-2 dominant weights contributing at index 2m - 3 for the factor ((z, z), 1).

    These are (lambda_1, 1 - z - m) for lambda_1 from 1 - z - m up to -m,
    in increasing order: exactly z weights, none at all for z = 0, so the
    lowest filtration factor contributes nothing.
    """
    if z < 0:
        raise ValueError("z must be nonnegative")
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    lam2 = 1 - z - m
    return [DominantWeight((lam1, lam2)) for lam1 in range(lam2, -m + 1)]


def paired_weight(weight: DominantWeight | Sequence[int], m: int) -> DominantWeight:
    """The length-m weight lambda(0) paired with a length-2 weight lambda.

    lambda(0) = (-2, ..., -2, lambda_1 + m - 2, lambda_2 + m - 2) with m - 2
    copies of -2. Dominance needs lambda_1 <= -m; a violation means the
    input was outside the contributing range and is rejected.
    """
    w = _as_weight(weight)
    if len(w) != 2:
        raise ValueError(f"expected a length-2 weight, got {w!r}")
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if w[0] > -m:
        raise ValueError(f"weight {w!r} is out of range: first entry must be <= {-m}")
    return DominantWeight((-2,) * (m - 2) + (w[0] + m - 2, w[1] + m - 2))


def layer_summands(m: int, t: int) -> list[LayerSummand]:
    """Weight summands of the layer new at power t, in increasing epsilon order.

    The only filtration index present for I^t but not I^{t-1} is
    ((t-1, t-1), 1), so the layer is the z = t - 1 contribution; for t = 1
    there are no weights and the list is empty.
    """
    inst = ThickeningInstance(m=m, t=t)
    out = []
    for w in contributing_weights(t - 1, inst.m):
        glm = paired_weight(w, m)
        out.append(
            LayerSummand(
                epsilon=w[0] - w[1],
                gl2_weight=w,
                glm_weight=glm,
                dim=tensor_pair_dim(glm, w),
            )
        )
    return out


def layer_length_via_decomposition(m: int, t: int) -> int:
    """Length of Ext^{2m-3}(I^{t-1}/I^t, R), summed weight by weight."""
    return sum(s.dim for s in layer_summands(m, t))


def cumulative_length_via_decomposition(m: int, t: int) -> int:
    """Length of Ext^{2m-3}(R/I^t, R) through the whole decomposition chain.

    Enumerates the filtration indices, expands each factor into its
    contributing weights, and adds exact tensor dimensions. Defensively
    re-checks that every index has the ((z, z), 1) shape the weight
    machinery is specialized to.
    """
    inst = ThickeningInstance(m=m, t=t)
    total = 0
    for idx in filtration_indices(inst.n, inst.minor_size, inst.t):
        if idx.l != 1 or idx.z[0] != idx.z[1]:
            raise AssertionError(f"unexpected filtration index {idx!r} for n = 2")
        for w in contributing_weights(idx.z[0], m):
            total += tensor_pair_dim(paired_weight(w, m), w)
    return total
