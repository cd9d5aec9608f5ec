"""Brute-force ground truth for small instances.

Solutions are enumerated variable by variable: partial assignments over
``x_1..x_k`` are kept in a numpy array and every clause is checked as soon as
its largest variable is assigned, so unsatisfiable prefixes die early.
Assignments are bitmasks with ``x_i`` in bit ``i - 1``.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .instance import EquivRel, Instance, LiteralInstance
from .sparsifier import SuccGraph

DEFAULT_LIMIT = 24


class SizeLimitError(ValueError):
    """The instance has more variables than the enumeration limit allows."""


class MergeCounterexample(NamedTuple):
    solution: tuple[int, ...]
    pair: tuple[int, int]


class SuccCounterexample(NamedTuple):
    solution: tuple[int, ...]
    edge: tuple[int, int]


def _check_limit(n: int, limit_n: int):
    if n > limit_n:
        raise SizeLimitError(f"{n} variables exceeds the enumeration limit {limit_n}")
    if n > 63:
        raise SizeLimitError("enumeration supports at most 63 variables")


def _enumerate(n: int, constraints_by_var: list[list], check) -> np.ndarray:
    states = np.zeros(1, dtype=np.uint64)
    for k in range(1, n + 1):
        states = np.concatenate([states, states | np.uint64(1 << (k - 1))])
        for con in constraints_by_var[k]:
            states = states[check(states, con)]
        if states.size == 0:
            break
    return np.sort(states)


def _bit(states: np.ndarray, v: int) -> np.ndarray:
    return (states >> np.uint64(v - 1)) & np.uint64(1)


def solution_masks(inst: Instance, limit_n: int = DEFAULT_LIMIT) -> np.ndarray:
    """Sorted array of satisfying assignments as bitmasks."""
    _check_limit(inst.n, limit_n)
    by_var: list[list] = [[] for _ in range(inst.n + 1)]
    for c in inst.clauses:
        by_var[c[2]].append(c)
    target = np.uint64(inst.semantics.true_count)

    def check(states, c):
        return _bit(states, c[0]) + _bit(states, c[1]) + _bit(states, c[2]) == target

    return _enumerate(inst.n, by_var, check)


def literal_solution_masks(li: LiteralInstance, limit_n: int = DEFAULT_LIMIT) -> np.ndarray:
    """Sorted satisfying assignments of a non-monotone 1-in-3 instance."""
    _check_limit(li.n, limit_n)
    by_var: list[list] = [[] for _ in range(li.n + 1)]
    for c in li.clauses:
        by_var[max(abs(l) for l in c)].append(c)
    one = np.uint64(1)

    def check(states, c):
        total = np.zeros(states.shape, dtype=np.uint64)
        for lit in c:
            b = _bit(states, abs(lit))
            total += b if lit > 0 else one - b
        return total == one

    return _enumerate(li.n, by_var, check)


def mask_to_tuple(mask: int, n: int) -> tuple[int, ...]:
    return tuple((int(mask) >> i) & 1 for i in range(n))


def enumerate_solutions(inst: Instance, limit_n: int = DEFAULT_LIMIT) -> list[tuple[int, ...]]:
    """All satisfying assignments ``(x_1, ..., x_n)`` in ascending bitmask order."""
    return [mask_to_tuple(m, inst.n) for m in solution_masks(inst, limit_n)]


def count_solutions(inst: Instance, limit_n: int = DEFAULT_LIMIT) -> int:
    return int(solution_masks(inst, limit_n).size)


def _first_disagreement(masks: np.ndarray, n: int, pairs):
    for x, y in pairs:
        bad = np.nonzero(_bit(masks, x) != _bit(masks, y))[0]
        if bad.size:
            return MergeCounterexample(mask_to_tuple(masks[bad[0]], n), (x, y))
    return None


def verify_merges(inst: Instance, eq: EquivRel, limit_n: int = DEFAULT_LIMIT) -> MergeCounterexample | None:
    """None if every merged pair agrees in every solution, else a witness."""
    if eq.n != inst.n:
        raise ValueError("relation and instance sizes differ")
    masks = solution_masks(inst, limit_n)
    pairs = [(eq.find(i), i) for i in range(1, inst.n + 1) if eq.find(i) != i]
    return _first_disagreement(masks, inst.n, pairs)


def verify_literal_merges(li: LiteralInstance, eq: EquivRel, limit_n: int = DEFAULT_LIMIT) -> MergeCounterexample | None:
    if eq.n != li.n:
        raise ValueError("relation and instance sizes differ")
    masks = literal_solution_masks(li, limit_n)
    pairs = [(eq.find(i), i) for i in range(1, li.n + 1) if eq.find(i) != i]
    return _first_disagreement(masks, li.n, pairs)


def verify_succ_semantics(inst: Instance, g: SuccGraph, limit_n: int = DEFAULT_LIMIT) -> SuccCounterexample | None:
    """None if ``x >= y`` holds in every solution for every edge ``x -> y``."""
    if g.n != inst.n:
        raise ValueError("graph and instance sizes differ")
    masks = solution_masks(inst, limit_n)
    for x, y in g.edge_list():
        bad = np.nonzero(_bit(masks, x) < _bit(masks, y))[0]
        if bad.size:
            return SuccCounterexample(mask_to_tuple(masks[bad[0]], inst.n), (x, y))
    return None


def pair_uniqueness(inst: Instance) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """None if no two clauses share two positions' worth of variables.

    Pairs are taken positionally, so ``(1, 1, 2)`` and ``(1, 1, 3)`` share the
    pair ``(1, 1)``.
    """
    owner: dict[tuple[int, int], tuple[int, ...]] = {}
    for c in inst.clauses:
        a, b, d = c
        for key in {(a, b), (a, d), (b, d)}:
            prev = owner.setdefault(key, c)
            if prev != c:
                return prev, c
    return None


__all__ = [
    "DEFAULT_LIMIT",
    "SizeLimitError",
    "MergeCounterexample",
    "SuccCounterexample",
    "solution_masks",
    "literal_solution_masks",
    "enumerate_solutions",
    "count_solutions",
    "verify_merges",
    "verify_literal_merges",
    "verify_succ_semantics",
    "pair_uniqueness",
    "mask_to_tuple",
]
