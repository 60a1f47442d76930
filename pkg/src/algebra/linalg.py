"""
Exact dense linear algebra over a cyclotomic field.
"""
from __future__ import annotations

from typing import Iterable, List, Sequence

from .exactfield import DEFAULT_CONDUCTOR, CycloNum, as_cyclo


class MatrixF:
    """Dense rows x cols matrix of CycloNum entries sharing one conductor."""

    __slots__ = ("rows", "cols", "entries", "n", "_hash")

    def __init__(self, rows: int, cols: int, entries: Sequence, n: int = DEFAULT_CONDUCTOR):
        entries = tuple(as_cyclo(e, n) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        for e in entries:
            if e.n != n:
                raise ValueError(f"conductor mismatch: entry in Q(zeta_{e.n}), matrix over Q(zeta_{n})")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.n = n
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], n: int = DEFAULT_CONDUCTOR) -> "MatrixF":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, [e for r in rows for e in r], n)

    @classmethod
    def identity(cls, size: int, n: int = DEFAULT_CONDUCTOR) -> "MatrixF":
        return cls(size, size, [1 if i == j else 0 for i in range(size) for j in range(size)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int, n: int = DEFAULT_CONDUCTOR) -> "MatrixF":
        return cls(rows, cols, [0] * (rows * cols), n)

    @classmethod
    def diagonal(cls, values: Sequence, n: int = DEFAULT_CONDUCTOR) -> "MatrixF":
        size = len(values)
        return cls(size, size, [values[i] if i == j else 0 for i in range(size) for j in range(size)], n)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[CycloNum]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def with_entry(self, i: int, j: int, value) -> "MatrixF":
        entries = list(self.entries)
        entries[i * self.cols + j] = as_cyclo(value, self.n)
        return MatrixF(self.rows, self.cols, entries, self.n)

    # --- arithmetic -----------------------------------------------------

    def __add__(self, other: "MatrixF") -> "MatrixF":
        self._check_shape(other)
        return MatrixF(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)], self.n)

    def __sub__(self, other: "MatrixF") -> "MatrixF":
        self._check_shape(other)
        return MatrixF(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)], self.n)

    def __neg__(self):
        return MatrixF(self.rows, self.cols, [-a for a in self.entries], self.n)

    def scale(self, c) -> "MatrixF":
        return MatrixF(self.rows, self.cols, [c * a for a in self.entries], self.n)

    def __mul__(self, other):
        if not isinstance(other, MatrixF):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = CycloNum.zero(self.n)
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(row):
                    if a:
                        b = other.entries[k * other.cols + j]
                        if b:
                            acc = acc + a * b
                entries.append(acc)
        return MatrixF(self.rows, other.cols, entries, self.n)

    def __rmul__(self, c):
        return self.scale(c)

    def apply(self, vector: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match matrix width")
        zero = CycloNum.zero(self.n)
        out = []
        for i in range(self.rows):
            acc = zero
            for a, v in zip(self.row(i), vector):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "MatrixF":
        return MatrixF(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)], self.n)

    def trace(self) -> CycloNum:
        self._require_square("trace")
        return sum((self[i, i] for i in range(self.rows)), CycloNum.zero(self.n))

    def __pow__(self, exponent: int) -> "MatrixF":
        self._require_square("power")
        if exponent < 0:
            raise ValueError("negative matrix powers are not supported")
        result = MatrixF.identity(self.rows, self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def is_identity(self) -> bool:
        return self.is_square() and self == MatrixF.identity(self.rows, self.n)

    def __eq__(self, other):
        if not isinstance(other, MatrixF):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"MatrixF[{body}]"

    def _check_shape(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def _require_square(self, what):
        if not self.is_square():
            raise ValueError(f"{what} needs a square matrix, got {self.rows}x{self.cols}")


class UniPoly:
    """Univariate polynomial with CycloNum coefficients, lowest degree first."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs: Iterable, n: int = DEFAULT_CONDUCTOR):
        coeffs = [as_cyclo(c, n) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.n = n

    @classmethod
    def from_roots(cls, roots: Sequence, n: int = DEFAULT_CONDUCTOR) -> "UniPoly":
        poly = cls([1], n)
        for r in roots:
            poly = poly * cls([-as_cyclo(r, n), 1], n)
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.n)
        out = [CycloNum.zero(self.n)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.n)

    def __call__(self, x):
        acc = CycloNum.zero(self.n)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, m: MatrixF) -> MatrixF:
        """Horner evaluation at a square matrix (used for Cayley-Hamilton)."""
        size = m.rows
        acc = MatrixF.zeros(size, size, self.n)
        identity = MatrixF.identity(size, self.n)
        for c in reversed(self.coeffs):
            acc = acc * m + identity.scale(c)
        return acc

    def reversed_coefficients(self, length: int) -> tuple:
        """Coefficients of T^length * p(1/T), lowest first."""
        padded = list(self.coeffs) + [CycloNum.zero(self.n)] * (length + 1 - len(self.coeffs))
        return tuple(reversed(padded[: length + 1]))

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "UniPoly(" + ", ".join(str(c) for c in self.coeffs) + ")"


def det(m: MatrixF) -> CycloNum:
    """Determinant by fraction-free (Bareiss) elimination, first nonzero pivot."""
    m._require_square("det")
    size = m.rows
    a = m.to_rows()
    sign = 1
    previous = CycloNum.one(m.n)
    for k in range(size - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not a[i][k].is_zero()), None)
            if swap is None:
                return CycloNum.zero(m.n)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        inv_previous = previous.inverse()
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) * inv_previous
            a[i][k] = CycloNum.zero(m.n)
        previous = pivot
    result = a[size - 1][size - 1]
    return result if sign > 0 else -result


def row_reduce(m: MatrixF):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = m.to_rows()
    pivots = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if not a[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and not a[i][c].is_zero():
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: MatrixF) -> int:
    return len(row_reduce(m)[1])


def kernel(m: MatrixF) -> List[tuple]:
    """Basis of the right null space; empty iff m is injective."""
    reduced, pivots = row_reduce(m)
    zero, one = CycloNum.zero(m.n), CycloNum.one(m.n)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        vector = [zero] * m.cols
        vector[f] = one
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r][f]
        basis.append(tuple(vector))
    return basis


def row_space_basis(vectors: Sequence[Sequence], width: int, n: int = DEFAULT_CONDUCTOR) -> List[tuple]:
    """Canonical (reduced echelon) basis of the span of the given row vectors."""
    if not vectors:
        return []
    reduced, pivots = row_reduce(MatrixF(len(vectors), width, [x for v in vectors for x in v], n))
    return [tuple(reduced[i]) for i in range(len(pivots))]


def charpoly(m: MatrixF) -> UniPoly:
    """det(T*I - m) by Faddeev-LeVerrier."""
    m._require_square("charpoly")
    size = m.rows
    identity = MatrixF.identity(size, m.n)
    coeffs = [CycloNum.zero(m.n)] * (size + 1)
    coeffs[size] = CycloNum.one(m.n)
    aux = MatrixF.zeros(size, size, m.n)
    for k in range(1, size + 1):
        aux = m * aux + identity.scale(coeffs[size - k + 1])
        coeffs[size - k] = -(m * aux).trace() / k
    return UniPoly(coeffs, m.n)
