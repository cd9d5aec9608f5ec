"""Bit-packed linear algebra over F2.

Vectors are Python ints used as bitsets: coordinate ``i`` lives in bit ``i``,
so column 0 is the leftmost character of the string form ``"110"``.  The
public types wrap those ints with a width; the ``*_int`` helpers work on raw
ints and are what the hot loops elsewhere in the package call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def iter_bits(x: int):
    """Yield the indices of the set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class BitVec:
    """A vector in F2^width."""

    width: int
    bits: int = 0

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("width must be nonnegative")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bits {self.bits:#x} do not fit in width {self.width}")

    @classmethod
    def from_str(cls, s: str) -> "BitVec":
        """Parse ``"1101"``; the first character is coordinate 0."""
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"not a bit string: {s!r}")
        return cls(len(s), bits)

    @classmethod
    def from_bits(cls, values: Sequence[int]) -> "BitVec":
        return cls.from_str("".join("1" if v & 1 else "0" for v in values))

    @classmethod
    def unit(cls, width: int, i: int) -> "BitVec":
        return cls(width, 1 << i)

    def __add__(self, other: "BitVec") -> "BitVec":
        if self.width != other.width:
            raise ValueError("width mismatch")
        return BitVec(self.width, self.bits ^ other.bits)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.width:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self):
        return ((self.bits >> i) & 1 for i in range(self.width))

    def __len__(self):
        return self.width

    def __bool__(self):
        return self.bits != 0

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def dot(self, other: "BitVec") -> int:
        if self.width != other.width:
            raise ValueError("width mismatch")
        return bin(self.bits & other.bits).count("1") & 1

    def to_str(self) -> str:
        return "".join(str(b) for b in self)

    def __repr__(self):
        return f"BitVec({self.to_str()!r})"


@dataclass(frozen=True)
class F2Matrix:
    ncols: int
    rows: tuple[BitVec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if r.width != self.ncols:
                raise ValueError(f"row width {r.width} != ncols {self.ncols}")

    @classmethod
    def from_ints(cls, ncols: int, rows: Iterable[int]) -> "F2Matrix":
        return cls(ncols, tuple(BitVec(ncols, r) for r in rows))

    @classmethod
    def from_strs(cls, rows: Sequence[str], ncols: int | None = None) -> "F2Matrix":
        vecs = tuple(BitVec.from_str(r) for r in rows)
        if ncols is None:
            if not vecs:
                raise ValueError("ncols required for an empty matrix")
            ncols = vecs[0].width
        return cls(ncols, vecs)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def int_rows(self) -> list[int]:
        return [r.bits for r in self.rows]

    def __matmul__(self, x: BitVec) -> BitVec:
        if x.width != self.ncols:
            raise ValueError("dimension mismatch")
        out = 0
        for i, r in enumerate(self.rows):
            if bin(r.bits & x.bits).count("1") & 1:
                out |= 1 << i
        return BitVec(len(self.rows), out)


class Basis:
    """Incrementally maintained reduced row echelon basis over raw ints.

    Each stored row has its lowest set bit at its pivot and is zero on every
    other pivot column, so reducing a vector costs one XOR per pivot bit it
    contains.
    """

    __slots__ = ("rows", "pivmask")

    def __init__(self, vectors: Iterable[int] = ()):
        self.rows: dict[int, int] = {}
        self.pivmask = 0
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: int) -> int:
        rows = self.rows
        hit = v & self.pivmask
        while hit:
            low = hit & -hit
            v ^= rows[low.bit_length() - 1]
            hit = v & self.pivmask
        return v

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def add(self, v: int) -> bool:
        """Insert ``v``; return True if the span grew."""
        v = self.reduce(v)
        if not v:
            return False
        low = v & -v
        p = low.bit_length() - 1
        for q, r in self.rows.items():
            if r & low:
                self.rows[q] = r ^ v
        self.rows[p] = v
        self.pivmask |= low
        return True

    def sorted_rows(self) -> list[int]:
        return [self.rows[p] for p in sorted(self.rows)]


@dataclass(frozen=True)
class Rref:
    matrix: F2Matrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def ncols(self) -> int:
        return self.matrix.ncols

    def basis(self) -> Basis:
        b = Basis()
        b.rows = dict(zip(self.pivots, self.matrix.int_rows()))
        b.pivmask = sum(1 << p for p in self.pivots)
        return b


def rref_ints(ncols: int, rows: Iterable[int]) -> Rref:
    b = Basis(rows)
    pivots = tuple(sorted(b.rows))
    return Rref(F2Matrix.from_ints(ncols, (b.rows[p] for p in pivots)), pivots)


def rref(m: F2Matrix) -> Rref:
    """Reduced row echelon form of ``m``; pivot = leading (lowest-index) 1."""
    return rref_ints(m.ncols, m.int_rows())


def reduce_mod(r: Rref, v: BitVec) -> BitVec:
    """Canonical representative of ``v + rowspace(r)``: zero on every pivot."""
    if v.width != r.ncols:
        raise ValueError(f"width {v.width} != {r.ncols}")
    bits = v.bits
    for p, row in zip(r.pivots, r.matrix.rows):
        if (bits >> p) & 1:
            bits ^= row.bits
    return BitVec(v.width, bits)


def in_span(r: Rref, v: BitVec) -> bool:
    return not reduce_mod(r, v)


def solve(m: F2Matrix, b: BitVec) -> BitVec | None:
    """Return some ``x`` with ``m @ x == b``, or None if the system is inconsistent.

    Free variables are set to zero.
    """
    if b.width != m.nrows:
        raise ValueError(f"rhs has {b.width} bits for {m.nrows} rows")
    n = m.ncols
    aug = [r.bits | (((b.bits >> i) & 1) << n) for i, r in enumerate(m.rows)]
    red = Basis(aug)
    if n in red.rows:
        return None
    x = 0
    for p, row in red.rows.items():
        if (row >> n) & 1:
            x |= 1 << p
    return BitVec(n, x)


def span_ints(vectors: Sequence[int]) -> set[int]:
    """Every element of the span; exponential, for tests and tiny inputs."""
    out = {0}
    for v in vectors:
        out |= {u ^ v for u in out}
    return out


__all__ = [
    "BitVec",
    "F2Matrix",
    "Rref",
    "Basis",
    "rref",
    "rref_ints",
    "reduce_mod",
    "in_span",
    "solve",
    "span_ints",
    "iter_bits",
]
