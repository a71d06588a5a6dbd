"""Vertex sets as integer bitmasks.

Bit ``i`` set means vertex ``i`` is a member.  Python integers are arbitrary
precision, so the 128-vertex capacity is enforced by :class:`~cnideal.graph.Graph`
rather than by the representation.
"""

from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = int

EMPTY: VertexSet = 0


def bit(i: int) -> VertexSet:
    return 1 << i


def full(n: int) -> VertexSet:
    return (1 << n) - 1


def from_indices(indices: Iterable[int]) -> VertexSet:
    s = 0
    for i in indices:
        s |= 1 << i
    return s


def members(s: VertexSet) -> Iterator[int]:
    """Yield member indices in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def to_list(s: VertexSet) -> list[int]:
    return list(members(s))


def size(s: VertexSet) -> int:
    return s.bit_count()


def lowest(s: VertexSet) -> int:
    return (s & -s).bit_length() - 1


def is_subset(a: VertexSet, b: VertexSet) -> bool:
    return a & ~b == 0


def lex_key(s: VertexSet) -> tuple[int, ...]:
    """Sort key comparing sets as increasing tuples of their members."""
    return tuple(members(s))


def minimal_sets(sets: Iterable[VertexSet]) -> list[VertexSet]:
    """Inclusion-minimal members of ``sets``, duplicates removed, in lex order."""
    kept: list[VertexSet] = []
    for s in sorted(set(sets), key=size):
        if not any(k & ~s == 0 for k in kept):
            kept.append(s)
    return sorted(kept, key=lex_key)
