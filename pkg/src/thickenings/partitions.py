"""Integer partitions and dominant weights, as immutable exact values.

A partition is kept in canonical form: weakly decreasing, trailing zeros
stripped, so ``(3, 2, 1)`` and ``(3, 2, 1, 0, 0, 0)`` are the same value.
A dominant weight never normalizes: its length is semantic (it indexes a
Schur functor on a space of that dimension) and its entries may be negative.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Sequence


class Partition:
    """Weakly decreasing sequence of nonnegative integers (a Young diagram).

    Indexing reads 0 past the last part, so ``p[i]`` behaves like the
    zero-padded sequence; ``len(p)`` is the number of nonzero parts.
    The ``<=`` order is diagram containment (a partial order, like subset
    order on sets).
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        data = tuple(int(p) for p in parts)
        for a, b in zip(data, data[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {data}")
        if data and data[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {data}")
        while data and data[-1] == 0:
            data = data[:-1]
        self._parts = data

    @property
    def parts(self) -> tuple[int, ...]:
        """Canonical parts, without trailing zeros."""
        return self._parts

    @property
    def size(self) -> int:
        """Number of boxes in the diagram."""
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i: int) -> int:
        if not isinstance(i, int):
            raise TypeError("partition indices must be integers")
        if i < 0:
            raise IndexError("partition indices are nonnegative")
        return self._parts[i] if i < len(self._parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __le__(self, other: "Partition") -> bool:
        return contained_in(self, other)

    def __ge__(self, other: "Partition") -> bool:
        return contained_in(other, self)

    def __lt__(self, other: "Partition") -> bool:
        return self != other and contained_in(self, other)

    def __gt__(self, other: "Partition") -> bool:
        return self != other and contained_in(other, self)

    def pad(self, length: int) -> tuple[int, ...]:
        """Parts padded with zeros to the given length."""
        if length < len(self._parts):
            raise ValueError(f"cannot pad {self!r} to length {length}")
        return self._parts + (0,) * (length - len(self._parts))

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: column i has height #{j : p_j >= i}."""
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for p in self._parts:
            for i in range(p):
                cols[i] += 1
        return Partition(cols)

    def to_json(self) -> list[int]:
        """Canonical JSON form: a plain array of the nonzero parts."""
        return list(self._parts)


def conjugate(x: Partition | Sequence[int]) -> Partition:
    """Conjugate (transposed) partition, e.g. (5,3,2) -> (3,3,2,1,1)."""
    return _as_partition(x).conjugate()


def contained_in(x: Partition | Sequence[int], y: Partition | Sequence[int]) -> bool:
    """True when the diagram of x fits inside the diagram of y.

    Componentwise x_i <= y_i after zero padding, so trailing zeros never
    matter.
    """
    xp, yp = _as_partition(x), _as_partition(y)
    return all(xp[i] <= yp[i] for i in range(max(len(xp), len(yp))))


def minor_sizes(x: Partition | Sequence[int]) -> Counter:
    """Sizes of the minors whose product generates the invariant ideal of x.

    Column i of the diagram contributes one minor of size equal to its
    height, so the result is the multiset of conjugate parts: for (t, t)
    this is t copies of 2, the t-th power of the ideal of 2 x 2 minors.
    """
    xp = _as_partition(x)
    if not xp:
        raise ValueError("empty partition has no minor support")
    return Counter(xp.conjugate().parts)


def partitions_of(n: int, max_rows: int | None = None) -> Iterator[Partition]:
    """Yield every partition of n, optionally with at most max_rows parts."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition()
        return
    rows = n if max_rows is None else max_rows

    def rec(remaining: int, max_part: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for p in range(min(max_part, remaining), 0, -1):
            for rest in rec(remaining - p, p, rows_left - 1):
                yield (p,) + rest

    for parts in rec(n, n, rows):
        yield Partition(parts)


class DominantWeight:
    """Weakly decreasing integer sequence of fixed positive length.

    Unlike a partition, entries may be negative and the length is preserved
    by every operation: (0, 0) and (0, 0, 0) index representations of
    different groups.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]):
        data = tuple(int(e) for e in entries)
        if not data:
            raise ValueError("a dominant weight needs at least one entry")
        for a, b in zip(data, data[1:]):
            if a < b:
                raise ValueError(f"entries must be weakly decreasing: {data}")
        self._entries = data

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, i: int) -> int:
        return self._entries[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DominantWeight):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("DominantWeight", self._entries))

    def __repr__(self) -> str:
        return f"DominantWeight({list(self._entries)})"

    def shifted(self, c: int) -> "DominantWeight":
        """The weight with c added to every entry; same length."""
        return DominantWeight(e + c for e in self._entries)

    def to_json(self) -> list[int]:
        return list(self._entries)


def _as_partition(x: Partition | Sequence[int]) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def _as_weight(x: DominantWeight | Sequence[int]) -> DominantWeight:
    return x if isinstance(x, DominantWeight) else DominantWeight(x)
