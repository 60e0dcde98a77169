"""Exact arithmetic and linear algebra over GF(3).

Vectors are stored in two bit planes: plane one holds a set bit wherever the
entry is 1, plane two wherever it is 2.  Both planes live in arbitrary-size
Python integers, so addition, negation, Hamming weight and inner products are
word-parallel bitwise operations whatever the length.  The packing is an
implementation detail; code outside this package should stick to the
entry-level API.

All types here are immutable values: every operation returns a fresh object,
and instances hash by content, so they are safe to use as dict keys and to
ship between worker processes.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import LengthMismatchError

Gf3 = int  # field elements are plain ints 0, 1, 2


def _mk(n: int, lo: int, hi: int) -> "Gf3Vector":
    v = object.__new__(Gf3Vector)
    v._n = n
    v._lo = lo
    v._hi = hi
    return v


class Gf3Vector:
    """A fixed-length vector over GF(3), packed in two bit planes.

    Bit i of the low plane is set when entry i equals 1, bit i of the high
    plane when it equals 2.  Entry index 0 is the leftmost (first) position.
    """

    __slots__ = ("_n", "_lo", "_hi")

    def __init__(self, entries: Iterable[int]):
        lo = hi = 0
        n = 0
        for e in entries:
            e = e % 3
            if e == 1:
                lo |= 1 << n
            elif e == 2:
                hi |= 1 << n
            n += 1
        self._n = n
        self._lo = lo
        self._hi = hi

    @classmethod
    def from_entries(cls, entries: Iterable[int]) -> "Gf3Vector":
        return cls(entries)

    @classmethod
    def zeros(cls, n: int) -> "Gf3Vector":
        return _mk(n, 0, 0)

    # -- element access ----------------------------------------------------

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> Gf3:
        if not 0 <= i < self._n:
            raise IndexError(i)
        if (self._lo >> i) & 1:
            return 1
        if (self._hi >> i) & 1:
            return 2
        return 0

    def __iter__(self) -> Iterator[Gf3]:
        lo, hi = self._lo, self._hi
        for i in range(self._n):
            yield ((lo >> i) & 1) + 2 * ((hi >> i) & 1)

    def entries(self) -> list[Gf3]:
        return list(self)

    def is_zero(self) -> bool:
        return not (self._lo | self._hi)

    def first_nonzero(self) -> tuple[int, Gf3] | None:
        """Position and value of the leftmost nonzero entry, or None."""
        nz = self._lo | self._hi
        if not nz:
            return None
        i = (nz & -nz).bit_length() - 1
        return i, (1 if (self._lo >> i) & 1 else 2)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Gf3Vector") -> "Gf3Vector":
        if self._n != other._n:
            raise LengthMismatchError(f"{self._n} != {other._n}")
        # bit-sliced GF(3) addition on the (lo, hi) encoding
        t = (self._lo | other._hi) ^ (self._hi | other._lo)
        lo = t ^ (self._hi | other._hi)
        hi = t ^ (self._lo | other._lo)
        return _mk(self._n, lo, hi)

    def __neg__(self) -> "Gf3Vector":
        return _mk(self._n, self._hi, self._lo)

    def __sub__(self, other: "Gf3Vector") -> "Gf3Vector":
        return self + (-other)

    def scale(self, c: Gf3) -> "Gf3Vector":
        c = c % 3
        if c == 0:
            return _mk(self._n, 0, 0)
        if c == 1:
            return self
        return _mk(self._n, self._hi, self._lo)

    def weight(self) -> int:
        return (self._lo | self._hi).bit_count()

    def dot(self, other: "Gf3Vector") -> Gf3:
        if self._n != other._n:
            raise LengthMismatchError(f"{self._n} != {other._n}")
        ones = (self._lo & other._lo) | (self._hi & other._hi)
        twos = (self._lo & other._hi) | (self._hi & other._lo)
        return (ones.bit_count() + 2 * twos.bit_count()) % 3

    # -- structure ----------------------------------------------------------

    def concat(self, other: "Gf3Vector") -> "Gf3Vector":
        return _mk(
            self._n + other._n,
            self._lo | (other._lo << self._n),
            self._hi | (other._hi << self._n),
        )

    def block(self, index: int, width: int) -> "Gf3Vector":
        """The contiguous sub-vector [index*width, (index+1)*width)."""
        if (index + 1) * width > self._n:
            raise IndexError(f"block {index} of width {width} exceeds length {self._n}")
        mask = (1 << width) - 1
        s = index * width
        return _mk(width, (self._lo >> s) & mask, (self._hi >> s) & mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf3Vector):
            return NotImplemented
        return self._n == other._n and self._lo == other._lo and self._hi == other._hi

    def __hash__(self) -> int:
        return hash((self._n, self._lo, self._hi))

    def __repr__(self) -> str:
        return f"Gf3Vector([{''.join(str(e) for e in self)}])"


def dot(a: Gf3Vector, b: Gf3Vector) -> Gf3:
    return a.dot(b)


class Gf3Matrix:
    """A matrix over GF(3) stored as a tuple of packed row vectors."""

    __slots__ = ("rows", "_ncols")

    def __init__(self, rows: Sequence[Gf3Vector], ncols: int | None = None):
        rows = tuple(rows)
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise LengthMismatchError("ragged rows")
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.rows = rows
        self._ncols = ncols

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "Gf3Matrix":
        return cls([Gf3Vector(row) for row in entries])

    @classmethod
    def identity(cls, n: int) -> "Gf3Matrix":
        return cls([_mk(n, 1 << i, 0) for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Gf3Matrix":
        return cls([Gf3Vector.zeros(ncols) for _ in range(nrows)], ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    def entry(self, i: int, j: int) -> Gf3:
        return self.rows[i][j]

    def transpose(self) -> "Gf3Matrix":
        cols = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self._ncols)]
        return Gf3Matrix.from_entries(cols) if cols else Gf3Matrix([], self.nrows)

    def mul(self, other: "Gf3Matrix") -> "Gf3Matrix":
        if self._ncols != other.nrows:
            raise LengthMismatchError(f"{self._ncols} != {other.nrows}")
        bt = other.transpose()
        return Gf3Matrix(
            [Gf3Vector(r.dot(c) for c in bt.rows) for r in self.rows],
            other.ncols,
        )

    def gram(self) -> "Gf3Matrix":
        """self times its own transpose."""
        return Gf3Matrix(
            [Gf3Vector(r.dot(s) for s in self.rows) for r in self.rows],
            self.nrows,
        )

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self.rows)

    def hstack(self, other: "Gf3Matrix") -> "Gf3Matrix":
        if self.nrows != other.nrows:
            raise LengthMismatchError("row counts differ")
        return Gf3Matrix(
            [a.concat(b) for a, b in zip(self.rows, other.rows)],
            self._ncols + other.ncols,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf3Matrix):
            return NotImplemented
        return self._ncols == other._ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self._ncols, self.rows))

    def __repr__(self) -> str:
        body = ", ".join(repr(r) for r in self.rows)
        return f"Gf3Matrix([{body}])"


def _rref_rows(
    rows: Sequence[Gf3Vector], column_order: Sequence[int] | None = None
) -> tuple[list[Gf3Vector], list[int]]:
    """Row-reduce, scanning columns in the given order (default left to right).

    Returns the reduced rows (zero rows last) and the pivot columns in the
    order they were found.  Pivot entries are normalized to 1 and pivot
    columns are cleared everywhere else, so the result is canonical for the
    row space under the chosen column order.
    """
    work = list(rows)
    ncols = len(work[0]) if work else 0
    order = range(ncols) if column_order is None else column_order
    pivots: list[int] = []
    top = 0
    for col in order:
        pivot_row = None
        for i in range(top, len(work)):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[top], work[pivot_row] = work[pivot_row], work[top]
        if work[top][col] == 2:
            work[top] = -work[top]
        for i in range(len(work)):
            if i != top:
                c = work[i][col]
                if c:
                    work[i] = work[i] + work[top].scale(3 - c)
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work, pivots


def rref(matrix: Gf3Matrix) -> tuple[Gf3Matrix, int, list[int]]:
    """Reduced row echelon form with deterministic first-nonzero pivoting.

    Returns (reduced matrix, rank, pivot columns).
    """
    work, pivots = _rref_rows(matrix.rows)
    return Gf3Matrix(work, matrix.ncols), len(pivots), pivots


class Code:
    """A linear code over GF(3), held as a reduced-echelon row basis.

    Construction reduces whatever spanning rows are supplied, so two Code
    objects compare equal exactly when they are the same subspace.
    """

    __slots__ = ("n", "k", "basis", "pivots", "_cache")

    def __init__(self, n: int, rows: Sequence[Gf3Vector]):
        for r in rows:
            if len(r) != n:
                raise LengthMismatchError(f"row of length {len(r)} in a length-{n} code")
        reduced, pivots = _rref_rows(rows)
        self.n = n
        self.k = len(pivots)
        self.basis = tuple(reduced[: self.k])
        self.pivots = tuple(pivots)
        self._cache: dict = {}

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Gf3Vector]) -> "Code":
        return cls(n, rows)

    def contains(self, v: Gf3Vector) -> bool:
        if len(v) != self.n:
            raise LengthMismatchError(f"{len(v)} != {self.n}")
        for p, row in zip(self.pivots, self.basis):
            c = v[p]
            if c:
                v = v + row.scale(3 - c)
        return v.is_zero()

    def dual(self) -> "Code":
        """The dual code under the standard inner product."""
        free = [j for j in range(self.n) if j not in set(self.pivots)]
        rows = []
        for f in free:
            entries = [0] * self.n
            entries[f] = 1
            for p, row in zip(self.pivots, self.basis):
                entries[p] = (-row[f]) % 3
            rows.append(Gf3Vector(entries))
        return Code(self.n, rows)

    def gram_is_zero(self) -> bool:
        rows = self.basis
        return all(rows[i].dot(rows[j]) == 0 for i in range(len(rows)) for j in range(i, len(rows)))

    def is_self_dual(self) -> bool:
        return 2 * self.k == self.n and self.gram_is_zero()

    def iter_codewords(self) -> Iterator[Gf3Vector]:
        """Every codeword, by an odometer over the basis.  3^k values; the
        caller is responsible for keeping k small."""
        digits = [0] * self.k
        v = Gf3Vector.zeros(self.n)
        yield v
        total = 3**self.k
        for _ in range(total - 1):
            i = self.k - 1
            while True:
                v = v + self.basis[i]
                digits[i] += 1
                if digits[i] < 3:
                    break
                digits[i] = 0
                i -= 1
            yield v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.n, self.basis))

    def __repr__(self) -> str:
        return f"Code(n={self.n}, k={self.k})"


def dual_basis(code: Code) -> Code:
    return code.dual()
