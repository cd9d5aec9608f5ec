"""Monotone 1-in-3 / 2-in-3 instances, equivalence relations and quotients.

Variables are numbered ``1..n``.  A clause is a sorted triple of variable
indices; its semantics is positional, i.e. "exactly one (two) of the three
positions is true", which matters once quotienting produces triples such as
``(1, 1, 2)``.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .f2 import F2Matrix

Clause = tuple[int, int, int]


class FormatError(ValueError):
    """Raised for malformed instance, merge-map or literal files."""


class Semantics(enum.Enum):
    ONE_IN_THREE = "oit"
    TWO_IN_THREE = "o2t3"

    @property
    def true_count(self) -> int:
        return 1 if self is Semantics.ONE_IN_THREE else 2

    def flipped(self) -> "Semantics":
        if self is Semantics.ONE_IN_THREE:
            return Semantics.TWO_IN_THREE
        return Semantics.ONE_IN_THREE


@dataclass(frozen=True)
class Instance:
    n: int
    clauses: tuple[Clause, ...] = ()
    semantics: Semantics = Semantics.ONE_IN_THREE

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        canon = sorted({tuple(sorted(c)) for c in self.clauses})
        for c in canon:
            if len(c) != 3:
                raise ValueError(f"clause {c} is not a triple")
            if c[0] < 1 or c[2] > self.n:
                raise ValueError(f"clause {c} has an index outside 1..{self.n}")
        object.__setattr__(self, "clauses", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def has_repeats(self) -> bool:
        return any(c[0] == c[1] or c[1] == c[2] for c in self.clauses)


def complement(inst: Instance) -> Instance:
    """Swap the roles of 0 and 1: 1-in-3 becomes 2-in-3 and back."""
    return Instance(inst.n, inst.clauses, inst.semantics.flipped())


def as_two_in_three(inst: Instance) -> Instance:
    return inst if inst.semantics is Semantics.TWO_IN_THREE else complement(inst)


def clause_matrix(inst: Instance) -> F2Matrix:
    """One row per clause with a 1 at each variable occurring an odd number of times.

    Column ``i - 1`` holds variable ``i``.
    """
    if inst.semantics is not Semantics.TWO_IN_THREE:
        raise ValueError("clause_matrix expects a 2-in-3 instance; complement first")
    return F2Matrix.from_ints(inst.n, clause_rows(inst))


def clause_rows(inst: Instance) -> list[int]:
    rows = []
    for a, b, c in inst.clauses:
        rows.append((1 << (a - 1)) ^ (1 << (b - 1)) ^ (1 << (c - 1)))
    return rows


def neighbours(inst: Instance, x: int) -> set[int]:
    """Variables other than ``x`` sharing a clause with ``x``."""
    if not 1 <= x <= inst.n:
        raise ValueError(f"variable {x} out of range")
    out = set()
    for c in inst.clauses:
        if x in c:
            out.update(c)
    out.discard(x)
    return out


def neighbour_table(inst: Instance) -> list[set[int]]:
    """``table[x]`` is ``neighbours(inst, x)``; index 0 is unused."""
    table: list[set[int]] = [set() for _ in range(inst.n + 1)]
    for c in inst.clauses:
        for v in set(c):
            table[v].update(c)
    for x, s in enumerate(table):
        s.discard(x)
    return table


class EquivRel:
    """Union-find over ``1..n`` whose class representative is the minimum member."""

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n + 1))

    @classmethod
    def from_groups(cls, n: int, groups: Iterable[Iterable[int]]) -> "EquivRel":
        eq = cls(n)
        for g in groups:
            eq.merge(g)
        return eq

    @classmethod
    def from_reps(cls, reps: Sequence[int]) -> "EquivRel":
        """Build from ``reps[i - 1] = rep(i)``."""
        eq = cls(len(reps))
        for i, r in enumerate(reps, start=1):
            eq.union(i, r)
        return eq

    def find(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"element {x} out of range 1..{self.n}")
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if rx < ry:
            self.parent[ry] = rx
        else:
            self.parent[rx] = ry
        return True

    def merge(self, group: Iterable[int]) -> int:
        """Union every member of ``group``; return how many unions took effect."""
        it = iter(group)
        first = next(it, None)
        return sum(self.union(first, y) for y in it)

    def same(self, x: int, y: int) -> bool:
        return self.find(x) == self.find(y)

    def reps(self) -> list[int]:
        return [self.find(i) for i in range(1, self.n + 1)]

    def classes(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for i in range(1, self.n + 1):
            groups.setdefault(self.find(i), []).append(i)
        return [groups[r] for r in sorted(groups)]

    def num_classes(self) -> int:
        return sum(1 for i in range(1, self.n + 1) if self.find(i) == i)

    def renumbering(self) -> dict[int, int]:
        """Map each element to its class index in ``1..n'`` (classes ordered by representative)."""
        new_of_rep: dict[int, int] = {}
        out = {}
        for i in range(1, self.n + 1):
            r = self.find(i)
            if r not in new_of_rep:
                new_of_rep[r] = len(new_of_rep) + 1
            out[i] = new_of_rep[r]
        return out

    def is_identity(self) -> bool:
        return all(self.find(i) == i for i in range(1, self.n + 1))

    def copy(self) -> "EquivRel":
        eq = EquivRel(self.n)
        eq.parent = [0] + self.reps()
        return eq

    def __eq__(self, other):
        if not isinstance(other, EquivRel):
            return NotImplemented
        return self.n == other.n and self.reps() == other.reps()

    def __repr__(self):
        nontrivial = [c for c in self.classes() if len(c) > 1]
        return f"EquivRel(n={self.n}, classes={nontrivial})"


def quotient(inst: Instance, eq: EquivRel) -> tuple[Instance, dict[int, int]]:
    """Quotient ``inst`` by ``eq``; also return the old -> new variable map."""
    if eq.n != inst.n:
        raise ValueError(f"relation over {eq.n} elements, instance has {inst.n}")
    mapping = eq.renumbering()
    clauses = [tuple(mapping[v] for v in c) for c in inst.clauses]
    return Instance(eq.num_classes(), clauses, inst.semantics), mapping


# text formats ---------------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        yield lineno, line


def _ints(parts: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(parts)!r}") from None


def _header(lines, expected: Sequence[str]) -> tuple[str, int, int]:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError("missing header") from None
    parts = line.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] not in expected:
        raise FormatError(f"line {lineno}: bad header {line!r}")
    n, m = _ints(parts[2:], lineno)
    if n < 0 or m < 0:
        raise FormatError(f"line {lineno}: negative size in header")
    return parts[1], n, m


def _body(lines, m: int) -> list[tuple[int, list[int]]]:
    body = [(lineno, line.split()) for lineno, line in lines]
    if len(body) != m:
        raise FormatError(f"header announces {m} clauses, found {len(body)}")
    return [(lineno, _ints(parts, lineno)) for lineno, parts in body]


def parse(text: str, allow_repeats: bool = False) -> Instance:
    """Parse a monotone instance (``p oit`` or ``p o2t3`` header).

    Clauses repeating a variable are rejected unless ``allow_repeats`` is set,
    which is how quotient instances written by :func:`serialize` are read back.
    Duplicate clauses are dropped with a warning.
    """
    lines = _content_lines(text)
    kind, n, m = _header(lines, ("oit", "o2t3"))
    clauses = []
    for lineno, vals in _body(lines, m):
        if len(vals) != 3:
            raise FormatError(f"line {lineno}: a clause has exactly three variables")
        for v in vals:
            if not 1 <= v <= n:
                raise FormatError(f"line {lineno}: variable {v} outside 1..{n}")
        if not allow_repeats and len(set(vals)) != 3:
            raise FormatError(f"line {lineno}: clause repeats a variable")
        clauses.append(tuple(sorted(vals)))
    if len(set(clauses)) != len(clauses):
        warnings.warn(f"dropped {len(clauses) - len(set(clauses))} duplicate clause(s)")
    return Instance(n, clauses, Semantics(kind))


def serialize(inst: Instance) -> str:
    lines = [f"p {inst.semantics.value} {inst.n} {inst.m}"]
    lines += [f"{a} {b} {c}" for a, b, c in inst.clauses]
    return "\n".join(lines) + "\n"


# non-monotone instances ------------------------------------------------------


def _literal_key(lit: int) -> tuple[int, int]:
    return (abs(lit), lit < 0)


@dataclass(frozen=True)
class LiteralInstance:
    """Non-monotone 1-in-3 instance: a clause holds when exactly one literal is true."""

    n: int
    clauses: tuple[tuple[int, int, int], ...] = ()
    allow_repeats: bool = field(default=False, compare=False)

    def __post_init__(self):
        canon = sorted({tuple(sorted(c, key=_literal_key)) for c in self.clauses},
                       key=lambda c: [_literal_key(l) for l in c])
        for c in canon:
            if len(c) != 3:
                raise ValueError(f"clause {c} is not a triple")
            if any(l == 0 or abs(l) > self.n for l in c):
                raise ValueError(f"clause {c} has a literal outside ±1..{self.n}")
            if not self.allow_repeats and len({abs(l) for l in c}) != 3:
                raise ValueError(f"clause {c} repeats a variable")
        object.__setattr__(self, "clauses", tuple(canon))

    @property
    def m(self) -> int:
        return len(self.clauses)


def parse_literal(text: str, allow_repeats: bool = False) -> LiteralInstance:
    lines = _content_lines(text)
    _, n, m = _header(lines, ("oitg",))
    clauses = []
    for lineno, vals in _body(lines, m):
        if len(vals) != 3:
            raise FormatError(f"line {lineno}: a clause has exactly three literals")
        for v in vals:
            if v == 0 or abs(v) > n:
                raise FormatError(f"line {lineno}: literal {v} outside ±1..{n}")
        if not allow_repeats and len({abs(v) for v in vals}) != 3:
            raise FormatError(f"line {lineno}: clause repeats a variable")
        clauses.append(tuple(sorted(vals, key=_literal_key)))
    if len(set(clauses)) != len(clauses):
        warnings.warn(f"dropped {len(clauses) - len(set(clauses))} duplicate clause(s)")
    return LiteralInstance(n, clauses, allow_repeats=allow_repeats)


def serialize_literal(li: LiteralInstance) -> str:
    lines = [f"p oitg {li.n} {li.m}"]
    lines += [" ".join(map(str, c)) for c in li.clauses]
    return "\n".join(lines) + "\n"


def parse_any(text: str, allow_repeats: bool = False) -> Instance | LiteralInstance:
    """Dispatch on the header kind."""
    for _, line in _content_lines(text):
        if line.split()[:2] == ["p", "oitg"]:
            return parse_literal(text, allow_repeats)
        break
    return parse(text, allow_repeats)


# merge maps ---------------------------------------------------------------


def serialize_merges(eq: EquivRel) -> str:
    lines = [f"m {eq.n}"]
    lines += [f"{i} {eq.find(i)}" for i in range(1, eq.n + 1)]
    return "\n".join(lines) + "\n"


def parse_merges(text: str) -> EquivRel:
    lines = _content_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise FormatError("missing merge-map header") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != "m":
        raise FormatError(f"line {lineno}: bad merge-map header {line!r}")
    (n,) = _ints(parts[1:], lineno)
    reps = [0] * n
    seen = set()
    for lineno, line in lines:
        vals = _ints(line.split(), lineno)
        if len(vals) != 2:
            raise FormatError(f"line {lineno}: expected '<i> <rep>'")
        i, r = vals
        if not (1 <= i <= n and 1 <= r <= n):
            raise FormatError(f"line {lineno}: index outside 1..{n}")
        if i in seen:
            raise FormatError(f"line {lineno}: element {i} listed twice")
        seen.add(i)
        reps[i - 1] = r
    if len(seen) != n:
        raise FormatError(f"merge map lists {len(seen)} of {n} elements")
    return EquivRel.from_reps(reps)


__all__ = [
    "Clause",
    "FormatError",
    "Semantics",
    "Instance",
    "LiteralInstance",
    "EquivRel",
    "complement",
    "as_two_in_three",
    "clause_matrix",
    "clause_rows",
    "neighbours",
    "neighbour_table",
    "quotient",
    "parse",
    "serialize",
    "parse_literal",
    "serialize_literal",
    "parse_any",
    "parse_merges",
    "serialize_merges",
]
