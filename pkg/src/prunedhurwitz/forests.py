"""Rooted labelled forests counted by ordered out-degree sequence.

A rooted forest on vertices {0, ..., n-1} with root set S has each
non-root vertex pointing at a unique parent and every component
containing exactly one root.  ``deg(v)`` is the number of successors of
v under the orientation away from the roots; an n-tuple of non-negative
integers is a degree sequence of such a forest iff it sums to n - |S|.

The closed form for the number of forests with a prescribed ordered
degree sequence (delta_1, ..., delta_n) is

    sum_{i in S} multinomial(n - |S| - 1; delta_1, ..., delta_i - 1, ..., delta_n)

which the zero-extended multinomial makes total; the brute-force
enumeration below is the independent oracle for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .combinatorics import multinomial

DEFAULT_ENUMERATION_BOUND = 8


@dataclass(frozen=True)
class RootedForest:
    """Parent representation: parent[v] is None exactly for roots."""

    parent: tuple[int | None, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def roots(self) -> frozenset[int]:
        return frozenset(v for v, p in enumerate(self.parent) if p is None)

    def out_degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for p in self.parent:
            if p is not None:
                degs[p] += 1
        return tuple(degs)


def count_forests_with_degrees(degrees: Sequence[int], roots: Iterable[int]) -> int:
    """Number of rooted forests on len(degrees) vertices with the given
    root set and ordered out-degree sequence.

    The n = |S| base case (no non-root vertices) is the unique empty
    forest, bypassing the closed form's negative exponent.
    """
    degrees = tuple(degrees)
    n = len(degrees)
    root_set = sorted(set(roots))
    if not root_set:
        raise ValueError("root set must be non-empty")
    if any(r < 0 or r >= n for r in root_set):
        raise ValueError("root indices out of range")
    s = len(root_set)
    if s == n:
        return 1 if all(d == 0 for d in degrees) else 0
    total = 0
    for i in root_set:
        decremented = list(degrees)
        decremented[i] -= 1
        total += multinomial(n - s - 1, decremented)
    return total


def enumerate_rooted_forests(
    n: int,
    roots: Iterable[int],
    bound: int = DEFAULT_ENUMERATION_BOUND,
) -> Iterator[RootedForest]:
    """Brute-force enumeration: all parent assignments on the non-root
    vertices, filtered for acyclicity.  Refuses n above ``bound``."""
    if n > bound:
        raise ValueError(f"n={n} exceeds enumeration bound {bound}")
    root_set = sorted(set(roots))
    if not root_set:
        raise ValueError("root set must be non-empty")
    if any(r < 0 or r >= n for r in root_set):
        raise ValueError("root indices out of range")
    is_root = [False] * n
    for r in root_set:
        is_root[r] = True
    non_roots = [v for v in range(n) if not is_root[v]]
    candidates = [[u for u in range(n) if u != v] for v in non_roots]
    for choice in product(*candidates):
        parent: list[int | None] = [None] * n
        for v, p in zip(non_roots, choice):
            parent[v] = p
        if _is_forest(parent):
            yield RootedForest(tuple(parent))


def _is_forest(parent: Sequence[int | None]) -> bool:
    n = len(parent)
    state = [0] * n  # 0 unknown, 1 in progress, 2 reaches a root
    for start in range(n):
        path = []
        v: int | None = start
        while v is not None and state[v] == 0:
            state[v] = 1
            path.append(v)
            v = parent[v]
        ok = v is None or state[v] == 2
        for u in path:
            state[u] = 2 if ok else 1
        if not ok:
            return False
    return True
