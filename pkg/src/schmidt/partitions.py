"""Integer partitions, two-color partitions, and exhaustive enumerators.

A partition is a weakly decreasing tuple of positive integers.  Its
alternating sum is the sum of the first, third, fifth, ... parts; a
partition is called a Schmidt partition of n when that sum equals n.
Two-color partitions are ordered pairs of partitions, thought of as one
multiset of parts painted red or green.  Both families are enumerated
exhaustively here, together with the bounded refinements of each count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Parts = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Parts:
    """Normalize ``parts`` to a tuple, checking the partition invariants."""
    p = tuple(parts)
    if any(x < 1 for x in p):
        raise ValueError(f"parts must be positive integers: {p!r}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"parts must be weakly decreasing: {p!r}")
    return p


def weight(p: Parts) -> int:
    """Sum of all parts."""
    return sum(p)


def alternating_sum(p: Parts) -> int:
    """Sum of the parts in odd positions (first, third, fifth, ...)."""
    return sum(p[::2])


def conjugate(p: Parts) -> Parts:
    """Transpose the Young diagram of ``p``."""
    p = as_partition(p)
    if not p:
        return ()
    return tuple(sum(1 for row in p if row >= col) for col in range(1, p[0] + 1))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Parts]:
    """Yield every partition of ``n`` in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    bound = n if max_part is None else min(max_part, n)
    if n == 0:
        yield ()
        return
    for first in range(bound, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _schmidt_suffixes(remaining: int, bound: int) -> Iterator[Parts]:
    # Weakly decreasing positive tuples with first part <= bound whose
    # odd-position parts sum to ``remaining``.  Tuples are built from a
    # leading block (odd-position part, optional even-position part), so
    # each one is produced exactly once and termination is structural.
    if remaining == 0:
        yield ()
        return
    for head in range(min(remaining, bound), 0, -1):
        rest = remaining - head
        if rest == 0:
            for even in range(head, 0, -1):
                yield (head, even)
            yield (head,)
        else:
            for even in range(head, 0, -1):
                for suffix in _schmidt_suffixes(rest, even):
                    yield (head, even) + suffix


def enumerate_schmidt(n: int) -> list[Parts]:
    """All partitions with alternating sum ``n``, descending lexicographic.

    Any such partition has first part at most n, at most 2n parts, and
    total weight at most 2n, since every even-position part is bounded by
    the odd-position part before it.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sorted(_schmidt_suffixes(n, n), reverse=True)


def count_schmidt(n: int) -> int:
    """Number of partitions with alternating sum ``n``."""
    return len(enumerate_schmidt(n))


@dataclass(frozen=True)
class TwoColorPartition:
    """A pair of partitions: the red parts and the green parts."""

    red: Parts = ()
    green: Parts = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "red", as_partition(self.red))
        object.__setattr__(self, "green", as_partition(self.green))

    @property
    def weight(self) -> int:
        return sum(self.red) + sum(self.green)

    @property
    def num_red(self) -> int:
        return len(self.red)

    @property
    def num_green(self) -> int:
        return len(self.green)

    @property
    def max_red(self) -> int:
        return self.red[0] if self.red else 0

    @property
    def max_green(self) -> int:
        return self.green[0] if self.green else 0

    def sort_key(self) -> list[tuple[int, int]]:
        """Merged part list: largest size first, red before green on ties."""
        return sorted([(-s, 0) for s in self.red] + [(-s, 1) for s in self.green])


def enumerate_two_color(n: int) -> list[TwoColorPartition]:
    """All two-color partitions of weight ``n`` in canonical order.

    Canonical order sorts by the merged part list, largest part first with
    red preceding green on equal sizes.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    for red_weight in range(n, -1, -1):
        for red in partitions_of(red_weight):
            for green in partitions_of(n - red_weight):
                out.append(TwoColorPartition(red, green))
    return sorted(out, key=TwoColorPartition.sort_key)


def count_two_color(n: int) -> int:
    """Number of two-color partitions of weight ``n``."""
    return len(enumerate_two_color(n))


@dataclass(frozen=True)
class RefinedQuery:
    """Bounds for the refined counts.

    Asks for weight ``n`` with exactly ``r`` red and ``l`` green parts, the
    largest red part at most ``p`` and the largest green part at most ``q``.
    """

    n: int
    r: int
    l: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if min(self.r, self.l, self.p, self.q) < 1:
            raise ValueError("r, l, p, q must be positive")


def enumerate_two_color_refined(query: RefinedQuery) -> list[TwoColorPartition]:
    """Two-color partitions of weight ``n`` matching all four bounds."""
    return [
        tc
        for tc in enumerate_two_color(query.n)
        if tc.num_red == query.r
        and tc.num_green == query.l
        and tc.max_red <= query.p
        and tc.max_green <= query.q
    ]


def _bounded_vectors(length: int, cap: int, target: int) -> Iterator[tuple[int, ...]]:
    # Weakly decreasing vectors of the given length, entries in [0, cap],
    # whose odd-position (0-based even index) entries sum to ``target``.
    def extend(prefix: list[int], bound: int, odd_left: int) -> Iterator[tuple[int, ...]]:
        i = len(prefix)
        if i == length:
            if odd_left == 0:
                yield tuple(prefix)
            return
        if i % 2 == 0:
            slots_after = (length - i - 1) // 2
            for v in range(min(bound, odd_left), -1, -1):
                if odd_left - v <= slots_after * v:
                    yield from extend(prefix + [v], v, odd_left - v)
        else:
            slots_after = (length - i) // 2
            for v in range(bound, -1, -1):
                if odd_left <= slots_after * v:
                    yield from extend(prefix + [v], v, odd_left)

    yield from extend([], cap, target)


def enumerate_schmidt_refined_literal(query: RefinedQuery) -> list[tuple[int, ...]]:
    """Fixed-length weakly decreasing vectors with bounded entries.

    Vectors have length exactly 2*max(r, l), entries in [0, p+q], and
    odd-position sum ``n``.  Trailing zeros are significant, so vectors
    that would trim to the same partition are distinct members.
    """
    length = 2 * max(query.r, query.l)
    cap = query.p + query.q
    return sorted(_bounded_vectors(length, cap, query.n), reverse=True)
