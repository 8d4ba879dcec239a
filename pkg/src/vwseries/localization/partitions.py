"""Young diagrams as non-increasing tuples of row lengths."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def partitions(n: int, largest: int | None = None) -> tuple:
    """All partitions of n with parts <= largest, as tuples of row lengths."""
    if n == 0:
        return ((),)
    largest = n if largest is None else min(largest, n)
    out = []
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def size(lam) -> int:
    return sum(lam)


def conjugate(lam) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for row in lam if row > i) for i in range(lam[0]))


def boxes(lam):
    """(i, j) with j the row index and 0 <= i < lam[j]."""
    for j, row in enumerate(lam):
        for i in range(row):
            yield i, j


def arm_leg(lam):
    """(box, l, a) with l the extent along the first direction, a along the second."""
    lt = conjugate(lam)
    for i, j in boxes(lam):
        yield (i, j), lam[j] - i - 1, lt[i] - j - 1


@lru_cache(maxsize=None)
def tuples_of_size(slots: int, n: int) -> tuple:
    """All tuples of `slots` partitions of total size n."""
    if slots == 0:
        return ((),) if n == 0 else ()
    out = []
    for k in range(n + 1):
        for head in partitions(k):
            for tail in tuples_of_size(slots - 1, n - k):
                out.append((head,) + tail)
    return tuple(out)
