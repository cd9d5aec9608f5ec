"""Linearly-ordered colourings of 3-uniform hypergraphs.

A hypergraph is an :class:`~strongsparse.instance.Instance` read as a list of
edges.  A colouring maps every vertex to a positive integer and is LO when
the largest colour of each edge occurs exactly once in it, counting repeated
vertices of an edge with multiplicity.
"""

from __future__ import annotations

from typing import Mapping

from .instance import EquivRel, FormatError, Instance, Semantics
from .oracle import DEFAULT_LIMIT, solution_masks

Colouring = dict[int, int]


def check_lo(h: Instance, c: Mapping[int, int]) -> tuple[int, int, int] | None:
    """None if ``c`` is an LO colouring of ``h``, else the first bad edge."""
    missing = [v for v in range(1, h.n + 1) if v not in c]
    if missing:
        raise ValueError(f"no colour for vertices {missing[:5]}")
    for edge in h.clauses:
        colours = [c[v] for v in edge]
        if colours.count(max(colours)) != 1:
            return edge
    return None


def lift_colouring(eq: EquivRel, c_quotient: Mapping[int, int]) -> Colouring:
    """Give each vertex the colour of its class in the quotient numbering."""
    mapping = eq.renumbering()
    lifted = {}
    for v, cls in mapping.items():
        if cls not in c_quotient:
            raise ValueError(f"no colour for quotient vertex {cls}")
        lifted[v] = c_quotient[cls]
    return lifted


def brute_lo2(h: Instance, limit_n: int = DEFAULT_LIMIT) -> Colouring | None:
    """An LO 2-colouring (colours 1 < 2) found by exhaustive search, or None.

    Colour 2 marks exactly the true variables of a 1-in-3 solution; the
    smallest solution bitmask is used.
    """
    masks = solution_masks(Instance(h.n, h.clauses, Semantics.ONE_IN_THREE), limit_n)
    if masks.size == 0:
        return None
    first = int(masks[0])
    return {v: 2 if (first >> (v - 1)) & 1 else 1 for v in range(1, h.n + 1)}


def serialize_colouring(c: Mapping[int, int]) -> str:
    return "".join(f"{v} {c[v]}\n" for v in sorted(c))


def parse_colouring(text: str) -> Colouring:
    out: Colouring = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        parts = line.split()
        try:
            v, col = (int(p) for p in parts)
        except ValueError:
            raise FormatError(f"line {lineno}: expected '<vertex> <colour>'") from None
        if v < 1 or col < 1:
            raise FormatError(f"line {lineno}: vertices and colours are positive")
        if v in out:
            raise FormatError(f"line {lineno}: vertex {v} coloured twice")
        out[v] = col
    return out


__all__ = [
    "Colouring",
    "check_lo",
    "lift_colouring",
    "brute_lo2",
    "serialize_colouring",
    "parse_colouring",
]
