"""Strong sparsification of non-monotone 1-in-3-SAT through the monotone sparsifier.

Each negative literal ``-i`` becomes a fresh variable ``n + i``.  After the
monotone run, the conflict graph joins the class of ``x_i`` to the class of
its shadow ``y_i``; a 2-colouring of that graph tells which original
variables are forced equal, and an odd cycle proves unsatisfiability.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .instance import EquivRel, Instance, LiteralInstance, quotient
from .sparsifier import sparsify


class Status(enum.Enum):
    OK = "ok"
    UNSAT_DETECTED = "unsat_detected"


@dataclass(frozen=True)
class MonotoneMapping:
    """Literal <-> variable correspondence of :func:`to_monotone`."""

    n: int

    def var_of(self, lit: int) -> int:
        return lit if lit > 0 else self.n - lit

    def literal_of(self, v: int) -> int:
        return v if v <= self.n else -(v - self.n)


def to_monotone(li: LiteralInstance) -> tuple[Instance, MonotoneMapping]:
    mapping = MonotoneMapping(li.n)
    clauses = [tuple(mapping.var_of(l) for l in c) for c in li.clauses]
    return Instance(2 * li.n, clauses), mapping


@dataclass
class ConflictGraph:
    """Undirected graph on the ``2n`` monotone variables.

    ``v -- w`` whenever ``v ~ x_i`` and ``w ~ y_i`` for some ``i``.  Stored at
    the level of class representatives: ``adj[r]`` lists the representatives
    adjacent to ``r``; a loop ``r -- r`` appears when ``x_i ~ y_i``.
    """

    n_vertices: int
    adj: dict[int, set[int]]
    eq: EquivRel

    def has_loop(self) -> bool:
        return any(r in nbrs for r, nbrs in self.adj.items())


def conflict_graph(n: int, eq: EquivRel) -> ConflictGraph:
    adj: dict[int, set[int]] = {}
    for i in range(1, n + 1):
        a, b = eq.find(i), eq.find(n + i)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return ConflictGraph(2 * n, adj, eq)


def two_colour(g: ConflictGraph) -> dict[int, int] | None:
    """Side (0 or 1) of every representative, or None if some component is odd.

    Each component is explored from its smallest representative, which gets
    side 0.  Since a representative is its class minimum, that is the side of
    the smallest vertex of the component.
    """
    side: dict[int, int] = {}
    for start in sorted(g.adj):
        if start in side:
            continue
        side[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in side:
                    side[w] = side[u] ^ 1
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def _components(g: ConflictGraph) -> dict[int, int]:
    comp: dict[int, int] = {}
    for start in sorted(g.adj):
        if start in comp:
            continue
        comp[start] = start
        stack = [start]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in comp:
                    comp[w] = start
                    stack.append(w)
    return comp


@dataclass
class NonmonotoneResult:
    eq: EquivRel
    status: Status
    eq_y: EquivRel
    monotone: Instance

    def __iter__(self):
        # unpacks as (eq, status)
        return iter((self.eq, self.status))


def sparsify_nonmonotone(li: LiteralInstance, workers: int | None = None) -> NonmonotoneResult:
    """Relation over the original variables plus the monotone run it came from.

    When the conflict graph is not bipartite the instance has no solution, so
    any relation is sound; all variables are merged into one class and
    ``Status.UNSAT_DETECTED`` is reported.  The single class keeps the literal
    quotient at no more than 4 clauses, inside the 8-per-clause bound.
    """
    y_inst, _ = to_monotone(li)
    eq_y, _, _ = sparsify(y_inst, workers)
    g = conflict_graph(li.n, eq_y)
    side = two_colour(g)
    eq = EquivRel(li.n)
    if side is None:
        eq.merge(range(1, li.n + 1))
        return NonmonotoneResult(eq, Status.UNSAT_DETECTED, eq_y, y_inst)
    comp = _components(g)
    first: dict[tuple[int, int], int] = {}
    for i in range(1, li.n + 1):
        r = eq_y.find(i)
        key = (comp[r], side[r])
        eq.union(first.setdefault(key, i), i)
    return NonmonotoneResult(eq, Status.OK, eq_y, y_inst)


def literal_quotient(li: LiteralInstance, eq: EquivRel) -> LiteralInstance:
    """Map each literal ``±x_i`` to ``±[x_i]`` (classes renumbered as in :func:`quotient`)."""
    mapping = eq.renumbering()
    clauses = [tuple(mapping[abs(l)] * (1 if l > 0 else -1) for l in c) for c in li.clauses]
    return LiteralInstance(eq.num_classes(), clauses, allow_repeats=True)


@dataclass(frozen=True)
class BoundViolation:
    literal_clauses: int
    monotone_clauses: int


def clause_bound_check(li: LiteralInstance, eq_g: EquivRel, eq_y: EquivRel) -> BoundViolation | None:
    """None if the literal quotient has at most 8 clauses per monotone quotient clause."""
    lit_m = literal_quotient(li, eq_g).m
    mono_m = quotient(to_monotone(li)[0], eq_y)[0].m
    if lit_m <= 8 * mono_m:
        return None
    return BoundViolation(lit_m, mono_m)


def extend_solution(assignment, n: int) -> tuple[int, ...]:
    """Extend ``(x_1..x_n)`` to the monotone variables by ``y_i = 1 - x_i``."""
    assignment = tuple(assignment)
    if len(assignment) != n:
        raise ValueError("assignment length differs from n")
    return assignment + tuple(1 - b for b in assignment)


__all__ = [
    "Status",
    "MonotoneMapping",
    "ConflictGraph",
    "NonmonotoneResult",
    "BoundViolation",
    "to_monotone",
    "conflict_graph",
    "two_colour",
    "sparsify_nonmonotone",
    "literal_quotient",
    "clause_bound_check",
    "extend_solution",
]
