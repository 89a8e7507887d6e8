"""Bit-packed linear algebra over GF(2) with the fermionic pairing.

Vectors are fixed-length bit strings packed into Python ints, so XOR, AND
and popcount run word-parallel inside the interpreter.  Matrices are stored
column-wise; throughout the package columns index stabilizer generators.

The commutation pairing of two even-weight mode sets is computed in closed
form, ``weight(u)*weight(v) + u.v  (mod 2)``, so the dense pairing matrix
(identity plus all-ones) is never materialized except for explicit
symplectic-condition checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BitVec",
    "BitMatrix",
    "symplectic_pairing",
    "reorder_parity",
    "rank",
    "in_span",
    "fermionic_form",
    "check_symplectic",
]


def _bit_positions(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _lowest_bit(x: int) -> int:
    if x <= 0:
        raise ValueError("no set bit")
    return (x & -x).bit_length() - 1


def _pairing_raw(u: int, v: int) -> int:
    """Fermionic commutation pairing of two packed bit strings."""
    return (u.bit_count() * v.bit_count() + (u & v).bit_count()) & 1


def _reorder_raw(u: int, v: int) -> int:
    """Parity of pairs (a, b) with a > b, bit a set in u, bit b set in v."""
    total = 0
    x = u
    while x:
        low = x & -x
        total += (v & (low - 1)).bit_count()
        x ^= low
    return total & 1


@dataclass(frozen=True, slots=True)
class BitVec:
    """Immutable GF(2) vector of fixed length, packed into a Python int."""

    length: int
    value: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value does not fit in {self.length} bits")

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> BitVec:
        value = 0
        for i in indices:
            if not 0 <= i < length:
                raise ValueError(f"index {i} out of range for length {length}")
            value |= 1 << i
        return cls(length, value)

    def weight(self) -> int:
        return self.value.bit_count()

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range")
        return (self.value >> i) & 1

    def indices(self) -> tuple[int, ...]:
        return tuple(_bit_positions(self.value))

    def __xor__(self, other: BitVec) -> BitVec:
        _same_length(self, other)
        return BitVec(self.length, self.value ^ other.value)

    def __and__(self, other: BitVec) -> BitVec:
        _same_length(self, other)
        return BitVec(self.length, self.value & other.value)

    def __str__(self) -> str:
        return "".join(str((self.value >> i) & 1) for i in range(self.length))


def _same_length(u: BitVec, v: BitVec) -> None:
    if u.length != v.length:
        raise ValueError(f"length mismatch: {u.length} != {v.length}")


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """GF(2) matrix stored as a tuple of packed column ints."""

    n_rows: int
    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0:
            raise ValueError("n_rows must be nonnegative")
        for c in self.columns:
            if c < 0 or c >> self.n_rows:
                raise ValueError(f"column does not fit in {self.n_rows} rows")

    @classmethod
    def from_columns(cls, n_rows: int, cols: Iterable[BitVec | int]) -> BitMatrix:
        packed = []
        for c in cols:
            if isinstance(c, BitVec):
                if c.length != n_rows:
                    raise ValueError("column length mismatch")
                packed.append(c.value)
            else:
                packed.append(c)
        return cls(n_rows, tuple(packed))

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    def col(self, j: int) -> BitVec:
        return BitVec(self.n_rows, self.columns[j])

    def entry(self, i: int, j: int) -> int:
        return (self.columns[j] >> i) & 1

    def transpose(self) -> BitMatrix:
        rows = []
        for i in range(self.n_rows):
            acc = 0
            for j, c in enumerate(self.columns):
                acc |= ((c >> i) & 1) << j
            rows.append(acc)
        return BitMatrix(self.n_cols, tuple(rows))

    def mul_vec(self, v: BitVec) -> BitVec:
        if v.length != self.n_cols:
            raise ValueError("vector length must equal column count")
        return BitVec(self.n_rows, _mat_vec(self.columns, v.value))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        if self.n_cols != other.n_rows:
            raise ValueError("inner dimensions do not match")
        cols = tuple(_mat_vec(self.columns, c) for c in other.columns)
        return BitMatrix(self.n_rows, cols)


def _mat_vec(columns: Sequence[int], x: int) -> int:
    acc = 0
    while x:
        low = x & -x
        acc ^= columns[low.bit_length() - 1]
        x ^= low
    return acc


def symplectic_pairing(u: BitVec, v: BitVec) -> int:
    """Commutation pairing: 0 when the monomials on u and v commute, else 1.

    Closed form ``weight(u)*weight(v) + |u & v|  (mod 2)``; equivalent to the
    quadratic form of the identity-plus-all-ones pairing matrix.
    """
    _same_length(u, v)
    return _pairing_raw(u.value, v.value)


def reorder_parity(u: BitVec, v: BitVec) -> int:
    """Sign exponent picked up when sorting the concatenation of u after v.

    Counts index pairs (a, b) with a > b, bit a set in u and bit b set in v,
    modulo 2 -- the strictly-lower-triangular all-ones quadratic form.
    """
    _same_length(u, v)
    return _reorder_raw(u.value, v.value)


def _eliminate(columns: Iterable[int]) -> dict[int, int]:
    """Column elimination; pivots are the lowest set row of each survivor."""
    pivots: dict[int, int] = {}
    for c in columns:
        cur = c
        while cur:
            row = _lowest_bit(cur)
            seen = pivots.get(row)
            if seen is None:
                pivots[row] = cur
                break
            cur ^= seen
    return pivots


def _residue(pivots: dict[int, int], v: int) -> int:
    cur = v
    while cur:
        row = _lowest_bit(cur)
        seen = pivots.get(row)
        if seen is None:
            break
        cur ^= seen
    return cur


def rank(m: BitMatrix) -> int:
    """Rank of the matrix over GF(2)."""
    return len(_eliminate(m.columns))


def in_span(m: BitMatrix, v: BitVec) -> bool:
    """Whether v lies in the GF(2) column span of m."""
    if v.length != m.n_rows:
        raise ValueError("length mismatch between matrix rows and vector")
    return _residue(_eliminate(m.columns), v.value) == 0


def fermionic_form(n: int) -> BitMatrix:
    """The n-by-n pairing matrix: identity plus all-ones, entries mod 2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    ones = (1 << n) - 1
    return BitMatrix(n, tuple(ones ^ (1 << j) for j in range(n)))


def check_symplectic(m: BitMatrix) -> bool:
    """Whether a square matrix preserves the fermionic pairing.

    Checks ``C^T L C = L`` with L the identity-plus-all-ones form.  Requires
    an even number of rows so the form is invertible.
    """
    n = m.n_rows
    if m.n_cols != n:
        raise ValueError("matrix must be square")
    if n % 2:
        raise ValueError("mode count must be even")
    ones = (1 << n) - 1
    # L @ C, column by column: x -> x + parity(x) * all-ones.
    lc = [c ^ (ones if c.bit_count() & 1 else 0) for c in m.columns]
    for i in range(n):
        ci = m.columns[i]
        for j in range(n):
            want = 0 if i == j else 1
            if (ci & lc[j]).bit_count() & 1 != want:
                return False
    return True
