"""Instance and family generators.

All randomness goes through ``random.Random(seed)`` (Mersenne Twister), so a
``(parameters, seed)`` pair always reproduces the same instance.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from .addcomb import VectorFamily
from .instance import Instance, LiteralInstance, Semantics


def gen_xor(k: int) -> Instance:
    """Variables are the vectors of ``{0,1}^k``; clauses are the XOR-zero triples.

    Vector ``u`` is variable ``1 + u``.  Only triples of distinct vectors are
    kept, giving ``(2^k - 1)(2^k - 2) / 6`` clauses, and every pair of
    distinct variables lies in at most one clause.
    """
    if not 1 <= k <= 16:
        raise ValueError("k must be in 1..16")
    size = 1 << k
    clauses = []
    for i in range(1, size):
        for j in range(i + 1, size):
            t = i ^ j
            if t > j:
                clauses.append((i + 1, j + 1, t + 1))
    return Instance(size, clauses)


def subset_order(d: int) -> list[int]:
    """All subsets of ``[d]`` as bitmasks, largest first, ties by integer value."""
    return sorted(range(1 << d), key=lambda s: (-bin(s).count("1"), s))


def gen_subset_family(d: int) -> VectorFamily:
    """The lattice family: ``N_S`` holds every subset of ``S``; sizes sum to ``3^d``."""
    if not 1 <= d <= 12:
        raise ValueError("d must be in 1..12")
    order = subset_order(d)
    index = {s: i for i, s in enumerate(order)}
    N = []
    for s in order:
        members = []
        t = s
        while True:  # walk the submasks of s
            members.append(index[t])
            if t == 0:
                break
            t = (t - 1) & s
        N.append(frozenset(members))
    return VectorFamily(d, tuple(order), tuple(N))


def gen_planted(n: int, m: int, seed: int, semantics: Semantics = Semantics.ONE_IN_THREE) -> Instance:
    """``m`` distinct clauses all satisfied by a hidden random assignment.

    The hidden assignment (in 1-in-3 terms) has at least one true and two
    false variables so that some clause can be satisfied; for 2-in-3 output
    the instance is the complement, satisfied by the complemented assignment.
    """
    if n < 3:
        raise ValueError("planted instances need n >= 3")
    rng = random.Random(seed)
    while True:
        hidden = [rng.randrange(2) for _ in range(n)]
        if sum(hidden) >= 1 and n - sum(hidden) >= 2:
            break
    ones = [i + 1 for i, b in enumerate(hidden) if b]
    zeros = [i + 1 for i, b in enumerate(hidden) if not b]
    available = len(ones) * comb(len(zeros), 2)
    if m > available:
        raise ValueError(f"only {available} clauses are satisfied by the planted assignment, {m} requested")
    chosen: set[tuple[int, int, int]] = set()
    if 2 * m > available:
        pool = [tuple(sorted((t, a, b))) for t in ones for a, b in combinations(zeros, 2)]
        chosen.update(rng.sample(pool, m))
    while len(chosen) < m:
        t = rng.choice(ones)
        a, b = rng.sample(zeros, 2)
        chosen.add(tuple(sorted((t, a, b))))
    inst = Instance(n, chosen)
    if semantics is Semantics.TWO_IN_THREE:
        inst = Instance(n, inst.clauses, semantics)
    return inst


def planted_assignment(n: int, seed: int) -> tuple[int, ...]:
    """The hidden 1-in-3 assignment :func:`gen_planted` uses for this seed."""
    rng = random.Random(seed)
    while True:
        hidden = tuple(rng.randrange(2) for _ in range(n))
        if sum(hidden) >= 1 and n - sum(hidden) >= 2:
            return hidden


def _random_triples(n: int, m: int, rng: random.Random) -> list[tuple[int, int, int]]:
    total = comb(n, 3)
    if m > total:
        raise ValueError(f"only {total} distinct triples exist on {n} variables")
    if 2 * m > total:
        return rng.sample(list(combinations(range(1, n + 1), 3)), m)
    chosen: dict[tuple[int, int, int], None] = {}
    while len(chosen) < m:
        chosen.setdefault(tuple(sorted(rng.sample(range(1, n + 1), 3))), None)
    return list(chosen)


def gen_random(n: int, m: int, seed: int, semantics: Semantics = Semantics.ONE_IN_THREE) -> Instance:
    """``m`` distinct uniformly random variable triples."""
    rng = random.Random(seed)
    return Instance(n, _random_triples(n, m, rng), semantics)


def gen_random_nonmonotone(n: int, m: int, seed: int) -> LiteralInstance:
    """``m`` distinct clauses over distinct variable triples with uniform signs."""
    rng = random.Random(seed)
    total = comb(n, 3) * 8
    if m > total:
        raise ValueError(f"only {total} distinct literal clauses exist on {n} variables")
    chosen: dict[tuple[int, ...], None] = {}
    while len(chosen) < m:
        vs = sorted(rng.sample(range(1, n + 1), 3))
        chosen.setdefault(tuple(v if rng.randrange(2) else -v for v in vs), None)
    return LiteralInstance(n, tuple(chosen))


__all__ = [
    "gen_xor",
    "gen_subset_family",
    "subset_order",
    "gen_planted",
    "planted_assignment",
    "gen_random",
    "gen_random_nonmonotone",
]
