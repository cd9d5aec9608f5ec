"""Strong sparsification of monotone 1-in-3-SAT by merging provably equal variables.

Every instance is handled in 2-in-3 form, where each clause ``(x, y, z)``
gives the homogeneous relation ``x + y + z = 0 (mod 2)``.  Each round

1. embeds the variables into ``F2[X] / <C>`` (:func:`compute_alpha`) and
   merges variables with the same image (twins);
2. when there are no twins, builds the dominance digraph
   (:func:`succ_relation`) and merges its strongly connected components;

and stops once neither step finds anything.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import networkx as nx

from .f2 import Basis, BitVec, F2Matrix, Rref, iter_bits, rref_ints
from .instance import (
    EquivRel,
    Instance,
    Semantics,
    as_two_in_three,
    clause_rows,
    quotient,
)


@dataclass(frozen=True)
class AlphaMap:
    """Images of the variables in the quotient space ``F2^d``.

    ``vectors[x - 1]`` is the raw int of the image of variable ``x``.
    """

    d: int
    vectors: tuple[int, ...]
    basis: Rref

    @property
    def n(self) -> int:
        return len(self.vectors)

    def image(self, x: int) -> BitVec:
        return BitVec(self.d, self.vectors[x - 1])

    @property
    def images(self) -> tuple[BitVec, ...]:
        return tuple(BitVec(self.d, v) for v in self.vectors)


@dataclass
class SuccGraph:
    """Edge ``x -> y`` means ``x`` dominates ``y``: in every 2-in-3 solution ``x >= y``."""

    n: int
    edges: list[set[int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.edges:
            self.edges = [set() for _ in range(self.n + 1)]

    def add(self, x: int, y: int):
        if x != y:
            self.edges[x].add(y)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(1, self.n + 1) for y in sorted(self.edges[x])]

    def num_edges(self) -> int:
        return sum(len(s) for s in self.edges)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edge_list())
        return g


@dataclass
class SparsifyStats:
    n_in: int
    m_in: int
    rounds: int = 0
    twin_merges: int = 0
    cycle_merges: int = 0
    n_out: int = 0
    m_out: int = 0

    @property
    def exponent_estimate(self) -> float | None:
        """``log(m_out) / log(n_out)``; None when undefined."""
        if self.n_out < 2 or self.m_out < 1:
            return None
        return math.log(self.m_out) / math.log(self.n_out)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["exponent_estimate"] = self.exponent_estimate
        return out


def compute_alpha(inst: Instance) -> AlphaMap:
    """Quotient map ``x -> e_x mod <C>`` in coordinates of the non-pivot columns."""
    if inst.semantics is not Semantics.TWO_IN_THREE:
        raise ValueError("compute_alpha expects a 2-in-3 instance")
    basis = Basis(clause_rows(inst))
    pivots = sorted(basis.rows)
    free = [c for c in range(inst.n) if c not in basis.rows]
    pos = {c: k for k, c in enumerate(free)}
    vectors = []
    for c in range(inst.n):
        if c in pos:
            vectors.append(1 << pos[c])
        else:
            # the pivot row is e_c plus free columns only
            img = 0
            for b in iter_bits(basis.rows[c] ^ (1 << c)):
                img |= 1 << pos[b]
            vectors.append(img)
    rref = Rref(F2Matrix.from_ints(inst.n, [basis.rows[p] for p in pivots]), tuple(pivots))
    return AlphaMap(len(free), tuple(vectors), rref)


def find_twins(alpha: AlphaMap) -> list[list[int]]:
    """Groups of two or more variables with equal images."""
    groups: dict[int, list[int]] = {}
    for x, v in enumerate(alpha.vectors, start=1):
        groups.setdefault(v, []).append(x)
    return sorted(g for g in groups.values() if len(g) > 1)


def cooccupants(inst: Instance) -> list[list[int]]:
    """For each variable, the other two positions of every clause it occupies.

    This is the neighbour multiset of the variable, plus the variable itself
    whenever it fills two positions of one clause (only after quotienting).
    """
    table: list[list[int]] = [[] for _ in range(inst.n + 1)]
    for a, b, c in inst.clauses:
        table[a] += (b, c)
        table[b] += (a, c)
        table[c] += (a, b)
    return table


def _succ_basis(alpha_vecs, occupants: list[int]) -> Basis:
    basis = Basis()
    if occupants:
        anchor = alpha_vecs[occupants[0] - 1]
        for z in occupants[1:]:
            basis.add(alpha_vecs[z - 1] ^ anchor)
    return basis


def succ_space(inst: Instance, alpha: AlphaMap, x: int) -> Rref:
    """Span of all pairwise sums of images of the clause partners of ``x``."""
    if not 1 <= x <= inst.n:
        raise ValueError(f"variable {x} out of range")
    occ = cooccupants(inst)[x]
    basis = _succ_basis(alpha.vectors, occ)
    return rref_ints(alpha.d, basis.sorted_rows())


def succ_relation(inst: Instance, alpha: AlphaMap, workers: int | None = None) -> SuccGraph:
    """Dominance digraph: ``x -> y`` iff ``alpha(y)`` lies in the succ space of ``x``."""
    occ = cooccupants(inst)
    vecs = alpha.vectors

    def targets(x: int) -> list[int]:
        # an isolated x still dominates a zero image (empty even subset)
        basis = _succ_basis(vecs, occ[x])
        return [y for y, v in enumerate(vecs, start=1) if y != x and basis.contains(v)]

    sources = range(1, inst.n + 1)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(targets, sources))
    else:
        results = [targets(x) for x in sources]
    g = SuccGraph(inst.n)
    for x, ys in zip(sources, results):
        g.edges[x].update(ys)
    return g


def find_cycles(g: SuccGraph) -> list[list[int]]:
    """Strongly connected components with at least two members."""
    comps = nx.strongly_connected_components(g.to_networkx())
    return sorted(sorted(c) for c in comps if len(c) > 1)


def topological_order(g: SuccGraph) -> list[int]:
    """Order with every edge pointing forward; ties broken by smallest index."""
    return list(nx.lexicographical_topological_sort(g.to_networkx()))


def _lift_groups(groups, rep_of_new):
    return [[rep_of_new[v] for v in grp] for grp in groups]


def sparsify(inst: Instance, workers: int | None = None) -> tuple[EquivRel, Instance, SparsifyStats]:
    """Merge twins, then dominance cycles, until neither exists.

    Returns the relation over the input variables, the quotient instance
    (with the input's semantics) and run statistics.
    """
    base = as_two_in_three(inst)
    eq = EquivRel(inst.n)
    stats = SparsifyStats(inst.n, inst.m)
    while True:
        cur, mapping = quotient(base, eq)
        rep_of_new = {}
        for old, new in mapping.items():
            rep_of_new.setdefault(new, old)
        alpha = compute_alpha(cur)
        twins = find_twins(alpha)
        if twins:
            for grp in _lift_groups(twins, rep_of_new):
                stats.twin_merges += eq.merge(grp)
            stats.rounds += 1
            continue
        cycles = find_cycles(succ_relation(cur, alpha, workers))
        if not cycles:
            break
        for grp in _lift_groups(cycles, rep_of_new):
            stats.cycle_merges += eq.merge(grp)
        stats.rounds += 1
    out, _ = quotient(inst, eq)
    stats.n_out, stats.m_out = out.n, out.m
    return eq, out, stats


def baseline_pair_merge(inst: Instance) -> tuple[EquivRel, Instance]:
    """Merge ``z`` and ``t`` whenever clauses ``(x, y, z)`` and ``(x, y, t)`` exist.

    Applied until no clause pair shares two positions, so each positional
    pair of variables determines at most one clause.
    """
    eq = EquivRel(inst.n)
    while True:
        cur, mapping = quotient(inst, eq)
        rep_of_new = {}
        for old, new in mapping.items():
            rep_of_new.setdefault(new, old)
        third: dict[tuple[int, int], int] = {}
        changed = False
        for a, b, c in cur.clauses:
            for key, z in (((a, b), c), ((a, c), b), ((b, c), a)):
                t = third.setdefault(key, z)
                if t != z:
                    changed |= eq.union(rep_of_new[t], rep_of_new[z])
        if not changed:
            return eq, cur


__all__ = [
    "AlphaMap",
    "SuccGraph",
    "SparsifyStats",
    "compute_alpha",
    "find_twins",
    "cooccupants",
    "succ_space",
    "succ_relation",
    "find_cycles",
    "topological_order",
    "sparsify",
    "baseline_pair_merge",
]
