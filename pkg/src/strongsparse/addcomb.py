"""Vector families in F2^d: the two structural conditions, energies and sumsets.

A :class:`VectorFamily` is an ordered list of distinct vectors ``V`` together
with, for each ``i``, a subset ``N[i]`` of positions into ``V``.  The checks
are

* condition (i): ``V[i] + N[i] == N[i]`` as sets;
* condition (ii): no earlier vector ``V[j]`` (``j < i``) lies in the span of
  the pairwise sums of ``N[i]``.

Positions are 0-based in the Python API and 1-based in the text format.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .f2 import Basis, BitVec
from .instance import FormatError, Instance, as_two_in_three
from .sparsifier import (
    compute_alpha,
    cooccupants,
    find_cycles,
    find_twins,
    succ_relation,
    topological_order,
)


@dataclass(frozen=True)
class VectorFamily:
    d: int
    V: tuple[int, ...]
    N: tuple[frozenset[int], ...]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "V", tuple(int(v) for v in self.V))
        object.__setattr__(self, "N", tuple(frozenset(s) for s in self.N))
        if len(self.N) != len(self.V):
            raise ValueError("need exactly one N set per vector")
        if len(set(self.V)) != len(self.V):
            raise ValueError("vectors must be pairwise distinct")
        for v in self.V:
            if v < 0 or v >> self.d:
                raise ValueError(f"vector {v:#x} does not fit in dimension {self.d}")
        for s in self.N:
            if any(not 0 <= j < len(self.V) for j in s):
                raise ValueError("N members must be positions into V")

    @property
    def n(self) -> int:
        return len(self.V)

    def vectors(self) -> list[BitVec]:
        return [BitVec(self.d, v) for v in self.V]

    def members(self, i: int) -> set[int]:
        """The vectors of ``N[i]``."""
        return {self.V[j] for j in self.N[i]}


def check_condition_i(f: VectorFamily) -> list[int]:
    """Indices ``i`` with ``V[i] + N[i] != N[i]``."""
    bad = []
    for i, v in enumerate(f.V):
        s = f.members(i)
        if {v ^ w for w in s} != s:
            bad.append(i)
    return bad


def sum_span(vectors: Iterable[int]) -> Basis:
    """Basis of the span of all pairwise sums, built from sums with one anchor."""
    it = iter(vectors)
    anchor = next(it, None)
    return Basis(w ^ anchor for w in it)


def check_condition_ii(f: VectorFamily) -> list[tuple[int, int]]:
    """Pairs ``(j, i)`` with ``j < i`` and ``V[j]`` in the span of ``N[i] + N[i]``."""
    bad = []
    for i in range(f.n):
        basis = sum_span(f.V[j] for j in sorted(f.N[i]))
        bad.extend((j, i) for j in range(i) if basis.contains(f.V[j]))
    return bad


def total_size(f: VectorFamily) -> int:
    return sum(len(s) for s in f.N)


def _as_ints(A) -> set[int]:
    return {a.bits if isinstance(a, BitVec) else int(a) for a in A}


def representation_counts(A) -> Counter:
    """``r_A(x)``: the number of ordered pairs of ``A`` summing to ``x``."""
    A = list(_as_ints(A))
    return Counter(a ^ b for a in A for b in A)


def e_k(A, k: int) -> int:
    """Number of ordered ``k``-tuples from the set ``A`` summing to zero."""
    if k < 2:
        raise ValueError("k must be at least 2")
    A = _as_ints(A)
    if k == 2:
        return len(A)
    r = representation_counts(A)
    if k == 3:
        return sum(r[a] for a in A)
    if k == 4:
        return sum(c * c for c in r.values())
    # convolve up to k - 1 summands, then close the tuple with an element of A
    dist = r
    for _ in range(k - 3):
        nxt: Counter = Counter()
        for x, c in dist.items():
            for a in A:
                nxt[x ^ a] += c
        dist = nxt
    return sum(dist[a] for a in A)


def e3(A) -> int:
    return e_k(A, 3)


def e4(A) -> int:
    return e_k(A, 4)


def sumset(A) -> set[int]:
    A = _as_ints(A)
    if not A:
        raise ValueError("sumset of an empty set")
    return {a ^ b for a in A for b in A}


def doubling(A) -> Fraction:
    """``|A + A| / |A|`` as an exact fraction."""
    A = _as_ints(A)
    return Fraction(len(sumset(A)), len(A))


def family_from_instance(inst: Instance, alpha=None) -> VectorFamily:
    """Family of images of a twin-free, cycle-free instance, in dominance order.

    Vector ``i`` is the image of the ``i``-th variable of a topological order
    of the dominance digraph, and ``N[i]`` holds the images of its clause
    partners.  Raises ValueError when twins or dominance cycles remain.
    """
    inst2 = as_two_in_three(inst)
    if alpha is None:
        alpha = compute_alpha(inst2)
    twins = find_twins(alpha)
    if twins:
        raise ValueError(f"instance has twins: {twins[:3]}")
    g = succ_relation(inst2, alpha)
    cycles = find_cycles(g)
    if cycles:
        raise ValueError(f"instance has dominance cycles: {cycles[:3]}")
    order = topological_order(g)
    pos = {x: i for i, x in enumerate(order)}
    occ = cooccupants(inst2)
    V = [alpha.vectors[x - 1] for x in order]
    N = [frozenset(pos[z] for z in occ[x]) for x in order]
    return VectorFamily(alpha.d, tuple(V), tuple(N), tuple(order))


def serialize_family(f: VectorFamily) -> str:
    width = max(1, -(-f.d // 4))
    lines = [f"f {f.n} {f.d}"]
    for v, s in zip(f.V, f.N):
        idx = " ".join(str(j + 1) for j in sorted(s))
        lines.append(f"{v:0{width}x} : {idx}".rstrip())
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> VectorFamily:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("c ")]
    if not rows:
        raise FormatError("missing family header")
    head = rows[0].split()
    if len(head) != 3 or head[0] != "f":
        raise FormatError(f"bad family header {rows[0]!r}")
    try:
        n, d = int(head[1]), int(head[2])
        V, N = [], []
        for row in rows[1:]:
            vec, _, idx = row.partition(":")
            V.append(int(vec.strip(), 16))
            N.append(frozenset(int(t) - 1 for t in idx.split()))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    if len(V) != n:
        raise FormatError(f"header announces {n} vectors, found {len(V)}")
    try:
        return VectorFamily(d, tuple(V), tuple(N))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


__all__ = [
    "VectorFamily",
    "check_condition_i",
    "check_condition_ii",
    "total_size",
    "representation_counts",
    "e_k",
    "e3",
    "e4",
    "sumset",
    "doubling",
    "sum_span",
    "family_from_instance",
    "serialize_family",
    "parse_family",
]
