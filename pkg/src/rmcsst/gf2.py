"""Bit-packed linear algebra over GF(2).

Vectors are stored as Python integers: bit ``i`` of the integer is
coordinate ``i`` of the vector.  A Python int is an arbitrary-width packed
word, so XOR of whole rows is a single operation.  Every external
representation goes through 0/1 strings where character ``i`` is
coordinate ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when operands have incompatible lengths."""


class MatrixFormatError(ValueError):
    """Raised when matrix text cannot be parsed."""


def _mask(n: int) -> int:
    return (1 << n) - 1


def bits_from_str(s: str) -> int:
    value = 0
    for i, ch in enumerate(s):
        if ch == "1":
            value |= 1 << i
        elif ch != "0":
            raise MatrixFormatError(f"invalid bit character {ch!r}")
    return value


def bits_to_str(bits: int, n: int) -> str:
    return "".join("1" if (bits >> i) & 1 else "0" for i in range(n))


def parity(bits: int) -> int:
    return bits.bit_count() & 1


def compress(bits: int, positions: Sequence[int]) -> int:
    """Gather the bits at ``positions`` into a dense integer (in order)."""
    out = 0
    for j, p in enumerate(positions):
        if (bits >> p) & 1:
            out |= 1 << j
    return out


def support_of(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class BitVector:
    """A length-``len`` vector over GF(2) packed into ``bits``."""

    len: int
    bits: int = 0

    def __post_init__(self):
        if self.len < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.len:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_str(cls, s: str) -> BitVector:
        return cls(len(s), bits_from_str(s))

    @classmethod
    def from_support(cls, n: int, indices: Iterable[int]) -> BitVector:
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise IndexError(i)
            bits |= 1 << i
        return cls(n, bits)

    def __str__(self) -> str:
        return bits_to_str(self.bits, self.len)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __xor__(self, other: BitVector) -> BitVector:
        if other.len != self.len:
            raise DimensionError(f"lengths {self.len} and {other.len} differ")
        return BitVector(self.len, self.bits ^ other.bits)

    __add__ = __xor__

    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: BitVector) -> int:
        if other.len != self.len:
            raise DimensionError(f"lengths {self.len} and {other.len} differ")
        return parity(self.bits & other.bits)

    def support(self) -> list[int]:
        return support_of(self.bits)


@dataclass(frozen=True)
class BitMatrix:
    """Row-major GF(2) matrix; ``data`` holds one packed int per row."""

    ncols: int
    data: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "data", tuple(self.data))
        limit = _mask(self.ncols)
        for row in self.data:
            if row < 0 or row & ~limit:
                raise ValueError("row has bits beyond ncols")

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.data), self.ncols

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int] | str | BitVector], ncols: int | None = None) -> BitMatrix:
        """Build from 0/1 lists, 0/1 strings or BitVectors."""
        packed = []
        width = ncols
        for row in rows:
            if isinstance(row, BitVector):
                n, bits = row.len, row.bits
            elif isinstance(row, str):
                n, bits = len(row), bits_from_str(row)
            else:
                n, bits = len(row), bits_from_str("".join(str(int(b) & 1) for b in row))
            if width is None:
                width = n
            elif n != width:
                raise DimensionError("rows have different lengths")
            packed.append(bits)
        if width is None:
            raise ValueError("ncols required for an empty matrix")
        return cls(width, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> BitMatrix:
        return cls(ncols, (0,) * nrows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self.data[i])

    def rows(self) -> list[BitVector]:
        return [BitVector(self.ncols, r) for r in self.data]

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.data]

    def to_text(self) -> str:
        lines = [f"{self.nrows} {self.ncols}"]
        lines.extend(bits_to_str(r, self.ncols) for r in self.data)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> BitMatrix:
        """Parse the ``rows cols`` header + 0/1 lines format."""
        if not text.endswith("\n"):
            raise MatrixFormatError("matrix text must be newline-terminated")
        lines = text[:-1].split("\n")
        header = lines[0].split(" ")
        if len(header) != 2 or not all(h.isdigit() for h in header):
            raise MatrixFormatError(f"bad header line {lines[0]!r}")
        nrows, ncols = int(header[0]), int(header[1])
        body = lines[1:]
        if nrows == 0 and body == []:
            return cls(ncols, ())
        if len(body) != nrows:
            raise MatrixFormatError(f"expected {nrows} rows, found {len(body)}")
        data = []
        for line in body:
            if len(line) != ncols:
                raise MatrixFormatError(f"row {line!r} does not have {ncols} columns")
            data.append(bits_from_str(line))
        return cls(ncols, tuple(data))

    def __str__(self) -> str:
        return self.to_text()


def rref_rows(rows: Iterable[int], ncols: int) -> tuple[list[int], list[int]]:
    """Fully reduced row-echelon form on packed rows.

    Pivots are taken left to right (column 0 first) and cleared both above
    and below; zero rows are dropped.  Returns ``(rows, pivots)``.
    """
    work = [r for r in rows if r]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top == len(work):
            break
        bit = 1 << col
        for i in range(top, len(work)):
            if work[i] & bit:
                break
        else:
            continue
        work[top], work[i] = work[i], work[top]
        prow = work[top]
        for j in range(len(work)):
            if j != top and work[j] & bit:
                work[j] ^= prow
        pivots.append(col)
        top += 1
    return work[:top], pivots


def reduce_against(v: int, basis: Sequence[int], pivots: Sequence[int]) -> int:
    """Reduce ``v`` modulo a reduced echelon basis; zero iff ``v`` is in the span."""
    for row, p in zip(basis, pivots):
        if (v >> p) & 1:
            v ^= row
    return v


def nullspace_rows(rows: Sequence[int], ncols: int) -> list[int]:
    basis, pivots = rref_rows(rows, ncols)
    pivot_set = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(basis, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        out.append(v)
    return out


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    rows, pivots = rref_rows(m.data, m.ncols)
    return BitMatrix(m.ncols, tuple(rows)), pivots


def rank(m: BitMatrix) -> int:
    return len(rref_rows(m.data, m.ncols)[0])


def nullspace_basis(m: BitMatrix) -> BitMatrix:
    """Basis of ``{v : M v^T = 0}``, one free column per row."""
    if m.ncols < 1:
        raise ValueError("nullspace needs at least one column")
    return BitMatrix(m.ncols, tuple(nullspace_rows(m.data, m.ncols)))


def mat_mul_transpose(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """``A @ B.T`` over GF(2)."""
    if a.ncols != b.ncols:
        raise DimensionError(f"incompatible lengths {a.ncols} and {b.ncols}")
    out = []
    for ra in a.data:
        v = 0
        for j, rb in enumerate(b.data):
            if (ra & rb).bit_count() & 1:
                v |= 1 << j
        out.append(v)
    return BitMatrix(b.nrows, tuple(out))


def is_zero(m: BitMatrix) -> bool:
    return not any(m.data)
