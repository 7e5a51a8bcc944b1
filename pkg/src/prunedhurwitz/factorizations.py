"""Enumeration of transitive transposition factorizations.

The counting model: freeze sigma1 to the canonical permutation of mu and
count sequences (tau_1, ..., tau_m) of transpositions such that

    sigma2 := (tau_m ... tau_1 sigma1)^(-1)

has cycle type nu, the tuple generates a transitive subgroup of S_d,
and (optionally) the tuple is *pruned*: every cycle of sigma1 meets the
support of at least two of the transpositions.  Counts over all sigma1
of type mu follow by conjugation invariance; the Hurwitz-number
normalisation lives in :mod:`prunedhurwitz.hurwitz`.

Pruned-ness conventions at the degenerate edge counts:

* m = 1: pruned iff sigma1 is a single cycle (the lone edge is a loop,
  so the single vertex has valency 2);
* m = 0: not pruned by default.  The edgeless graph is arguably
  leaf-free vacuously, so the opposite convention is available through
  the ``m0_pruned`` flag; every caller threads it.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Sequence

from .combinatorics import Partition, automorphism_factor, centralizer_order
from .permutations import (
    Permutation,
    all_transposition_pairs,
    canonical_permutation,
    compose,
    cycle_index_map,
    cycle_type,
    cycles,
    identity_permutation,
    inverse,
    transposition,
)


@dataclass(frozen=True)
class FactorizationTuple:
    """A tuple (sigma1, tau_1...tau_m, sigma2) with product identity."""

    sigma1: Permutation
    transpositions: tuple[tuple[int, int], ...]
    sigma2: Permutation

    @property
    def degree(self) -> int:
        return len(self.sigma1)

    def product_is_identity(self) -> bool:
        prod = self.sigma1
        d = self.degree
        for a, b in self.transpositions:
            prod = compose(transposition(d, a, b), prod)
        return compose(self.sigma2, prod) == identity_permutation(d)


def is_transitive(t: FactorizationTuple) -> bool:
    """True iff the cycles of sigma1 together with the transposition
    supports connect {0, ..., d-1} (union-find)."""
    d = t.degree
    parent = list(range(d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for cyc in cycles(t.sigma1):
        for x in cyc[1:]:
            union(cyc[0], x)
    for a, b in t.transpositions:
        union(a, b)
    return len({find(x) for x in range(d)}) == 1


def is_pruned(t: FactorizationTuple, m0_pruned: bool = False) -> bool:
    """The pruned condition on a factorization tuple.

    For m > 1 transpositions: every cycle of sigma1 must meet the
    support of at least two distinct transpositions.  For m = 1 the
    condition is that sigma1 is a single cycle; for m = 0 it is the
    ``m0_pruned`` convention.
    """
    m = len(t.transpositions)
    sigma1_cycles = cycles(t.sigma1)
    if m == 0:
        return m0_pruned
    if m == 1:
        return len(sigma1_cycles) == 1
    for cyc in sigma1_cycles:
        support = set(cyc)
        touching = sum(1 for a, b in t.transpositions if a in support or b in support)
        if touching < 2:
            return False
    return True


def iter_factorization_tuples(
    g: int,
    mu: Sequence[int],
    nu: Sequence[int],
    pruned: bool = False,
    m0_pruned: bool = False,
) -> Iterator[FactorizationTuple]:
    """Naive reference enumeration (sigma1 canonical): filter the full
    Cartesian product of transposition sequences.  Small inputs only."""
    d = sum(mu)
    if sum(nu) != d or d < 1:
        raise ValueError("mu and nu must be partitions of the same d >= 1")
    m = 2 * g - 2 + len(mu) + len(nu)
    if m < 0:
        return
    sigma1 = canonical_permutation(mu)
    target = tuple(sorted(nu, reverse=True))
    pairs = all_transposition_pairs(d)
    for seq in product(pairs, repeat=m):
        prod = sigma1
        for a, b in seq:
            prod = compose(transposition(d, a, b), prod)
        if cycle_type(prod) != target:
            continue
        t = FactorizationTuple(sigma1, seq, inverse(prod))
        if not is_transitive(t):
            continue
        if pruned and not is_pruned(t, m0_pruned=m0_pruned):
            continue
        yield t


def _search(
    sigma1: Permutation,
    m: int,
    target: Partition,
    first_choices: Sequence[tuple[int, int]],
    all_choices: Sequence[tuple[int, int]],
    track_touches: bool,
    cyc_of: Sequence[int],
    leaf_accepts: Callable[[list[int], list[tuple[int, int]]], bool] | None = None,
) -> int:
    """Depth-first count of qualifying transposition sequences.

    Maintains the running product P = tau_k ... tau_1 sigma1 with O(1)
    left-multiplication (swap the two output values), the cycle count of
    P for a distance/parity bound, and, in pruned mode, the outstanding
    touch deficit of the sigma1-cycles.  Transitivity and the exact
    cycle type are checked at the leaves.
    """
    d = len(sigma1)
    ltarget = len(target)
    prod = list(sigma1)
    pos = [0] * d
    for i, v in enumerate(prod):
        pos[v] = i
    ncyc = len(cycles(sigma1))
    ncycles_sigma1 = max(cyc_of) + 1 if d else 0
    touch = [0] * ncycles_sigma1
    # outstanding touch units: each cycle needs 2, each tau provides at most 2
    short = 2 * ncycles_sigma1 if track_touches else 0
    chosen: list[tuple[int, int]] = []
    count = 0

    def transitive_at_leaf() -> bool:
        parent = list(range(ncycles_sigma1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in chosen:
            ra, rb = find(cyc_of[a]), find(cyc_of[b])
            if ra != rb:
                parent[ra] = rb
        return len({find(c) for c in range(ncycles_sigma1)}) == 1

    def leaf_type_matches() -> bool:
        if ncyc != ltarget:
            return False
        seen = [False] * d
        lengths = []
        for start in range(d):
            if seen[start]:
                continue
            n = 1
            seen[start] = True
            x = prod[start]
            while x != start:
                seen[x] = True
                n += 1
                x = prod[x]
            lengths.append(n)
        lengths.sort(reverse=True)
        return tuple(lengths) == target

    def recurse(depth: int) -> None:
        nonlocal ncyc, short, count
        if depth == m:
            if short == 0 and leaf_type_matches() and transitive_at_leaf():
                if leaf_accepts is None or leaf_accepts(prod, chosen):
                    count += 1
            return
        remaining = m - depth - 1
        candidates = first_choices if depth == 0 else all_choices
        for a, b in candidates:
            # left-multiplying by (a b): same cycle splits, two cycles merge
            y = prod[a]
            while y != a and y != b:
                y = prod[y]
            new_ncyc = ncyc + (1 if y == b else -1)
            if abs(new_ncyc - ltarget) > remaining:
                continue
            if (new_ncyc - ltarget - remaining) % 2 != 0:
                continue
            if track_touches:
                gain = 0
                ca, cb = cyc_of[a], cyc_of[b]
                ta, tb = touch[ca], touch[cb]
                if ca == cb:
                    gain = min(2, 2 - ta) if ta < 2 else 0
                else:
                    gain = (1 if ta < 2 else 0) + (1 if tb < 2 else 0)
                if short - gain > 2 * remaining:
                    continue
                touch[ca] += 1
                touch[cb] += 1
                short -= gain
            pa, pb = pos[a], pos[b]
            prod[pa], prod[pb] = b, a
            pos[a], pos[b] = pb, pa
            old_ncyc = ncyc
            ncyc = new_ncyc
            chosen.append((a, b))
            recurse(depth + 1)
            chosen.pop()
            ncyc = old_ncyc
            prod[pa], prod[pb] = a, b
            pos[a], pos[b] = pa, pb
            if track_touches:
                touch[ca] -= 1
                touch[cb] -= 1
                short += gain
        return

    recurse(0)
    return count


def _count_m0(
    mu: Partition,
    target: Partition,
    pruned: bool,
    m0_pruned: bool,
    leaf_accepts: Callable[[list[int], list[tuple[int, int]]], bool] | None = None,
) -> int:
    """The empty-sequence case: sigma2 = sigma1^(-1)."""
    if tuple(sorted(mu, reverse=True)) != target:
        return 0
    if len(mu) != 1:  # orbits of <sigma1> alone are its cycles
        return 0
    if pruned and not m0_pruned:
        return 0
    if leaf_accepts is not None:
        sigma1 = canonical_permutation(mu)
        if not leaf_accepts(list(sigma1), []):
            return 0
    return 1


def count_factorizations(
    g: int,
    mu: Sequence[int],
    nu: Sequence[int],
    pruned: bool = False,
    *,
    m0_pruned: bool = False,
    workers: int = 1,
) -> int:
    """Number of qualifying transposition sequences with sigma1 frozen.

    Returns 0 when m = 2g - 2 + l(mu) + l(nu) is negative.  With
    ``workers`` > 1 the search is sharded on the first transposition and
    the shard counts added exactly, so the result is independent of the
    shard count.
    """
    mu = tuple(mu)
    nu = tuple(nu)
    d = sum(mu)
    if d < 1 or sum(nu) != d:
        raise ValueError("mu and nu must be partitions of the same d >= 1")
    m = 2 * g - 2 + len(mu) + len(nu)
    if m < 0:
        return 0
    target = tuple(sorted(nu, reverse=True))
    if m == 0:
        return _count_m0(mu, target, pruned, m0_pruned)
    if pruned and m == 1 and len(mu) != 1:
        return 0
    track_touches = pruned and m > 1
    sigma1 = canonical_permutation(mu)
    cyc_of = cycle_index_map(mu)
    pairs = all_transposition_pairs(d)
    if track_touches and 2 * len(mu) > 2 * m:
        return 0

    def run(first: Sequence[tuple[int, int]]) -> int:
        return _search(sigma1, m, target, first, pairs, track_touches, cyc_of)

    if workers <= 1 or len(pairs) <= 1:
        return run(pairs)
    shards = [pairs[i::workers] for i in range(min(workers, len(pairs)))]
    with ThreadPoolExecutor(max_workers=len(shards)) as pool:
        return sum(pool.map(run, shards))


def _rotation_centralizer(mu: Partition) -> list[Permutation]:
    """Elements of the centralizer of the canonical permutation of mu
    that fix every cycle setwise: independent rotations of the cycles."""
    blocks = []
    start = 0
    for part in mu:
        blocks.append(list(range(start, start + part)))
        start += part
    d = start
    out = []
    for offsets in product(*(range(len(b)) for b in blocks)):
        images = [0] * d
        for block, off in zip(blocks, offsets):
            k = len(block)
            for s, x in enumerate(block):
                images[x] = block[(s + off) % k]
        out.append(tuple(images))
    return out


def count_isomorphism_classes(
    g: int,
    mu: Sequence[int],
    nu: Sequence[int],
    pruned: bool = False,
    *,
    m0_pruned: bool = False,
) -> int:
    """Number of simultaneous-conjugation classes of qualifying tuples
    with labelled sigma1/sigma2 cycles, by Burnside's lemma over the
    centralizer of the canonical sigma1.

    Only centralizer elements fixing every sigma1-cycle setwise can fix
    a labelled tuple, so the sum runs over the cycle rotations; a fixed
    tuple additionally needs all transpositions invariant under z and
    every sigma2-cycle fixed setwise by z.
    """
    mu = tuple(mu)
    nu = tuple(nu)
    d = sum(mu)
    if d < 1 or sum(nu) != d:
        raise ValueError("mu and nu must be partitions of the same d >= 1")
    m = 2 * g - 2 + len(mu) + len(nu)
    if m < 0:
        return 0
    target = tuple(sorted(nu, reverse=True))
    if pruned and m == 1 and len(mu) != 1:
        return 0
    track_touches = pruned and m > 1
    sigma1 = canonical_permutation(mu)
    cyc_of = cycle_index_map(mu)
    pairs = all_transposition_pairs(d)

    total = 0
    for z in _rotation_centralizer(mu):
        fixed_pairs = [(a, b) for a, b in pairs if {z[a], z[b]} == {a, b}]

        def sigma2_cycles_fixed(prod: list[int], _chosen: list[tuple[int, int]]) -> bool:
            # cycles of sigma2 = cycles of the product, as point sets
            cid = [-1] * d
            nxt = 0
            for start in range(d):
                if cid[start] >= 0:
                    continue
                cid[start] = nxt
                x = prod[start]
                while x != start:
                    cid[x] = nxt
                    x = prod[x]
                nxt += 1
            return all(cid[z[x]] == cid[x] for x in range(d))

        if m == 0:
            total += _count_m0(mu, target, pruned, m0_pruned, sigma2_cycles_fixed)
        else:
            total += _search(
                sigma1, m, target, fixed_pairs, fixed_pairs,
                track_touches, cyc_of, leaf_accepts=sigma2_cycles_fixed,
            )

    weighted = total * automorphism_factor(mu) * automorphism_factor(nu)
    order = centralizer_order(mu)
    if weighted % order:
        raise ArithmeticError("Burnside count is not an integer; bug")
    return weighted // order
