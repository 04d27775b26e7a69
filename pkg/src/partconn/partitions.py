"""Set partition enumeration by restricted growth strings."""

from __future__ import annotations

from typing import Iterator, Optional, Sequence


def restricted_growth_strings(n: int, max_blocks: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Yield every restricted growth string of length ``n``.

    A string ``a`` satisfies ``a[0] == 0`` and ``a[i] <= max(a[:i]) + 1``; each
    one encodes a set partition of ``range(n)`` exactly once. With
    ``max_blocks`` only strings using at most that many labels are produced.
    """
    if n == 0:
        yield ()
        return
    cap = n if max_blocks is None else min(n, max_blocks)
    a = [0] * n
    top = [0] * n  # top[i] = max(a[:i+1])

    def rec(i):
        if i == n:
            yield tuple(a)
            return
        for x in range(min(top[i - 1] + 1, cap - 1) + 1):
            a[i] = x
            top[i] = max(top[i - 1], x)
            yield from rec(i + 1)

    yield from rec(1)


def set_partitions(items: Sequence, max_blocks: Optional[int] = None) -> Iterator[list[list]]:
    items = list(items)
    for rgs in restricted_growth_strings(len(items), max_blocks):
        blocks: list[list] = [[] for _ in range(max(rgs, default=-1) + 1)]
        for item, b in zip(items, rgs):
            blocks[b].append(item)
        yield blocks


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
