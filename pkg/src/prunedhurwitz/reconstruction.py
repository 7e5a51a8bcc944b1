"""Reconstruction of double Hurwitz numbers from pruned ones.

The double Hurwitz number is a weighted sum, over the possible pruned
cores, of modified pruned numbers of smaller type: choose reduced face
perimeters nu~ (1 <= nu~_i <= nu_i), the surviving vertex subset I with
|mu_I| = |nu~|, distribute the removed vertices over the faces
(I_1 ... I_n with |mu_{I_i}| = nu_i - nu~_i), distribute the edge
labels (one multinomial and a factorial per face), and regraft the
removed vertices in every tree-like way.

The regrafting count per face is evaluated two independent ways:

* by ordered out-degree sequences, using the closed forest-count
  formula (``reconstruct_double_hurwitz``); the degree tuple for face i
  has the nu~_i root slots first and the removed vertices of I_i after
  them, the decrement running over root positions and the perimeter
  weights mu_k^deg over the non-root positions;
* by explicit enumeration of rooted forests weighted by
  prod mu_v^(val(v) - 1) over non-root vertices
  (``reconstruct_via_forests``).

Both take the modified pruned oracle as an argument so tests can swap
in stubs.  Validity note: the underlying pruning construction requires
at least two faces; for a single face at genus zero iterated leaf
removal ends at a bare vertex and the identity genuinely fails (for
example both conventions miss H = 1/2 at genus 0 with mu = nu = (2)),
so callers are expected to stay on l(nu) >= 2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .combinatorics import (
    bounded_tuples,
    compositions,
    multinomial,
    ordered_set_partitions,
    subsets,
)
from .forests import count_forests_with_degrees, enumerate_rooted_forests

PhatOracle = Callable[[int, tuple[int, ...], tuple[int, ...]], Fraction]


def _degree_block_factor(root_count: int, weights: Sequence[int]) -> int:
    """Sum over degree tuples (roots first, then the weighted vertices)
    of forest count times prod weights_j^deg_j; 1 for an empty block."""
    p = len(weights)
    if p == 0:
        return 1
    n = root_count + p
    roots = range(root_count)
    total = 0
    for delta in compositions(p, n):
        cnt = count_forests_with_degrees(delta, roots)
        if cnt:
            w = 1
            for j, weight in enumerate(weights):
                w *= weight ** delta[root_count + j]
            total += cnt * w
    return total


def _forest_block_factor(root_count: int, weights: Sequence[int]) -> int:
    """Same quantity by brute-force forest enumeration, weighting each
    non-root vertex v by weights_v^(val(v) - 1) = weights_v^outdeg(v)."""
    p = len(weights)
    if p == 0:
        return 1
    n = root_count + p
    total = 0
    for forest in enumerate_rooted_forests(n, range(root_count)):
        degs = forest.out_degrees()
        w = 1
        for j, weight in enumerate(weights):
            w *= weight ** degs[root_count + j]
        total += w
    return total


def _reconstruct(
    g: int,
    mu: Sequence[int],
    nu: Sequence[int],
    phat: PhatOracle,
    block_factor: Callable[[int, Sequence[int]], int],
) -> Fraction:
    mu = tuple(mu)
    nu = tuple(nu)
    d = sum(mu)
    if d < 1 or sum(nu) != d:
        raise ValueError("mu and nu must be partitions of the same d >= 1")
    n = len(nu)
    m = 2 * g - 2 + len(mu) + n
    indices = tuple(range(len(mu)))
    total = Fraction(0)
    for nut in bounded_tuples(nu):
        reduced_degree = sum(nut)
        deficits = tuple(nu_i - nut_i for nu_i, nut_i in zip(nu, nut))
        for core in subsets(indices):
            if sum(mu[i] for i in core) != reduced_degree:
                continue
            core_value = phat(g, tuple(mu[i] for i in core), nut)
            if core_value == 0:
                continue
            removed = tuple(i for i in indices if i not in core)
            inner = 0
            for blocks in ordered_set_partitions(removed, n):
                if any(
                    sum(mu[i] for i in block) != deficit
                    for block, deficit in zip(blocks, deficits)
                ):
                    continue
                head = 2 * g - 2 + len(core) + n
                coeff = multinomial(m, (head, *(len(b) for b in blocks)))
                if coeff == 0:
                    continue
                for block in blocks:
                    for perm_count in range(2, len(block) + 1):
                        coeff *= perm_count  # l(mu_{I_i})! label assignments
                term = coeff
                for nut_i, block in zip(nut, blocks):
                    term *= block_factor(nut_i, [mu[i] for i in block])
                    if term == 0:
                        break
                inner += term
            total += core_value * inner
    return total


def reconstruct_double_hurwitz(
    g: int, mu: Sequence[int], nu: Sequence[int], phat: PhatOracle
) -> Fraction:
    """Evaluate the reconstruction sum with the closed-form forest counts."""
    return _reconstruct(g, mu, nu, phat, _degree_block_factor)


def reconstruct_via_forests(
    g: int, mu: Sequence[int], nu: Sequence[int], phat: PhatOracle
) -> Fraction:
    """Evaluate the reconstruction sum by enumerating rooted forests."""
    return _reconstruct(g, mu, nu, phat, _forest_block_factor)
