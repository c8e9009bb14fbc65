"""Exact dimensions of Schur functors on finite-dimensional complex spaces.

Two independent routes are kept side by side: ``weyl_dim`` evaluates the
closed product formula

    dim S_lambda(C^n) = prod_{1 <= i < j <= n} (lambda_i - lambda_j + j - i) / (j - i)

while ``ssyt_count`` counts semistandard tableaux by plain backtracking,
with no formula shortcuts, precisely so it can serve as an oracle for the
product.
"""

from __future__ import annotations

from typing import Sequence

from .partitions import DominantWeight, Partition, _as_partition, _as_weight


def weyl_dim(weight: DominantWeight | Sequence[int], n: int) -> int:
    """Dimension of the Schur functor of a length-n dominant weight on C^n.

    The product is accumulated as an exact rational and checked to be an
    integer at the end; dominance guarantees the check passes, so a failure
    would mean the formula was transcribed wrong.
    """
    w = _as_weight(weight)
    if n < 1:
        raise ValueError("n must be positive")
    if len(w) != n:
        raise ValueError(f"weight {w!r} has length {len(w)}, expected {n}")
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= w[i] - w[j] + j - i
            den *= j - i
    if num % den:
        raise ArithmeticError(f"Weyl product for {w!r} is not an integer")
    return num // den


def schur_dim(shape: Partition | Sequence[int], n: int) -> int:
    """Dimension of the Schur functor of a partition shape on C^n.

    Zero when the shape has more rows than n (the functor vanishes there);
    otherwise the shape is zero-padded to length n and fed to ``weyl_dim``.
    """
    p = _as_partition(shape)
    if n < 1:
        raise ValueError("n must be positive")
    if len(p) > n:
        return 0
    return weyl_dim(p.pad(n), n)


def shift_normalize(weight: DominantWeight | Sequence[int]) -> tuple[Partition, int]:
    """Write a dominant weight as partition + constant shift.

    Returns (p, c) with p_i = weight_i - c >= 0 and c the last entry, so the
    last part of p is 0 and p is canonical. Tensoring with powers of the
    top exterior power shows the Schur dimension is invariant under the
    shift, which is what makes the normalization useful.
    """
    w = _as_weight(weight)
    c = w[len(w) - 1]
    return Partition(e - c for e in w), c


def ssyt_count(shape: Partition | Sequence[int], n: int) -> int:
    """Count semistandard tableaux of the given shape with entries in 1..n.

    Rows weakly increase, columns strictly increase. Complete backtracking
    enumeration, one leaf per tableau; returns 0 when the shape has more
    than n rows and 1 for the empty shape. Exponential in the number of
    boxes, callers keep shapes small.
    """
    p = _as_partition(shape)
    if n < 1:
        raise ValueError("n must be positive")
    if len(p) > n:
        return 0
    if not p:
        return 1
    row_len = p.parts
    rows = len(row_len)
    grid = [[0] * row_len[r] for r in range(rows)]

    def fill(r: int, c: int) -> int:
        if r == rows:
            return 1
        nr, nc = (r, c + 1) if c + 1 < row_len[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        total = 0
        for v in range(lo, n + 1):
            grid[r][c] = v
            total += fill(nr, nc)
        return total

    return fill(0, 0)


def tensor_pair_dim(
    weight_m: DominantWeight | Sequence[int],
    weight_n: DominantWeight | Sequence[int],
) -> int:
    """Dimension of S_a(C^m) tensor S_b(C^n), each factor on a space of its own length."""
    a = _as_weight(weight_m)
    b = _as_weight(weight_n)
    return weyl_dim(a, len(a)) * weyl_dim(b, len(b))
