"""Exact vectors, matrices and order-3 structure tensors over :class:`Scalar`.

Index conventions, fixed for the whole package:

* a linear map ``H^{(x)p} -> H^{(x)q}`` is a ``n^q x n^p`` matrix, column = input;
* multi-indices flatten big-endian: ``(i, j) -> i * n + j``;
* ``kron(A, B)`` maps ``(i (x) j) -> i * cols(B) + j``.

Matrices keep only their nonzero entries (rows of ``{col: value}`` dicts) but
behave as dense matrices; composites through ``H^{(x)4}`` would otherwise not
fit in memory.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Matrix",
    "Tensor3",
    "SingularMatrixError",
    "kron",
    "eye",
    "flip_matrix",
    "leg_permutation",
    "mat_inverse",
    "nullspace",
    "rank",
    "span_equal",
    "flat_index",
    "split_index",
]


class SingularMatrixError(ArithmeticError):
    def __init__(self, rank: int, size: int):
        self.rank = rank
        super().__init__(f"matrix is singular (rank {rank} < {size})")


def flat_index(idx: Sequence[int], n: int) -> int:
    out = 0
    for i in idx:
        out = out * n + i
    return out


def split_index(k: int, n: int, legs: int) -> tuple[int, ...]:
    out = []
    for _ in range(legs):
        k, r = divmod(k, n)
        out.append(r)
    return tuple(reversed(out))


class Matrix:
    __slots__ = ("rows", "cols", "_data", "_cols_cache")

    def __init__(self, rows: int, cols: int, data: dict | None = None):
        self.rows = rows
        self.cols = cols
        self._data = data if data is not None else {}
        self._cols_cache = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_lists(cls, lists) -> Matrix:
        rows = len(lists)
        cols = len(lists[0]) if rows else 0
        data = {}
        for i, row in enumerate(lists):
            if len(row) != cols:
                raise ValueError("ragged matrix")
            entries = {}
            for j, x in enumerate(row):
                x = as_scalar(x)
                if x:
                    entries[j] = x
            if entries:
                data[i] = entries
        return cls(rows, cols, data)

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[dict]) -> Matrix:
        """Build from one ``{row: value}`` dict per column."""
        data: dict = {}
        for j, col in enumerate(columns):
            for i, x in col.items():
                if x:
                    data.setdefault(i, {})[j] = x
        return cls(rows, len(columns), data)

    @classmethod
    def column_vector(cls, entries: Sequence) -> Matrix:
        return cls.from_lists([[x] for x in entries])

    @classmethod
    def row_vector(cls, entries: Sequence) -> Matrix:
        return cls.from_lists([list(entries)])

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._data.get(i, {}).get(j, ZERO)

    def row(self, i: int) -> dict:
        return self._data.get(i, {})

    def column(self, j: int) -> dict:
        if self._cols_cache is None:
            cols: dict = {}
            for i, entries in self._data.items():
                for k, x in entries.items():
                    cols.setdefault(k, {})[i] = x
            self._cols_cache = cols
        return self._cols_cache.get(j, {})

    def items(self):
        """Nonzero entries as ``((i, j), value)``, row-major."""
        for i in sorted(self._data):
            entries = self._data[i]
            for j in sorted(entries):
                yield (i, j), entries[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    def to_lists(self) -> list[list[Scalar]]:
        out = [[ZERO] * self.cols for _ in range(self.rows)]
        for i, entries in self._data.items():
            for j, x in entries.items():
                out[i][j] = x
        return out

    # -- algebra ------------------------------------------------------------

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        odata = other._data
        data = {}
        for i, entries in self._data.items():
            acc: dict = {}
            for k, a in entries.items():
                brow = odata.get(k)
                if not brow:
                    continue
                for j, b in brow.items():
                    prev = acc.get(j)
                    acc[j] = a * b if prev is None else prev + a * b
            acc = {j: x for j, x in acc.items() if x}
            if acc:
                data[i] = acc
        return Matrix(self.rows, other.cols, data)

    def _combine(self, other: Matrix, sign: int) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        data = {i: dict(r) for i, r in self._data.items()}
        for i, entries in other._data.items():
            row = data.setdefault(i, {})
            for j, x in entries.items():
                v = row.get(j, ZERO) + (x if sign > 0 else -x)
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
            if not row:
                del data[i]
        return Matrix(self.rows, self.cols, data)

    def __add__(self, other: Matrix) -> Matrix:
        return self._combine(other, 1)

    def __sub__(self, other: Matrix) -> Matrix:
        return self._combine(other, -1)

    def __neg__(self) -> Matrix:
        return self.scale(-ONE)

    def scale(self, c) -> Matrix:
        c = as_scalar(c)
        if not c:
            return Matrix(self.rows, self.cols)
        return Matrix(self.rows, self.cols,
                      {i: {j: c * x for j, x in r.items()} for i, r in self._data.items()})

    @property
    def T(self) -> Matrix:
        data: dict = {}
        for i, entries in self._data.items():
            for j, x in entries.items():
                data.setdefault(j, {})[i] = x
        return Matrix(self.cols, self.rows, data)

    def map_entries(self, f) -> Matrix:
        data = {}
        for i, entries in self._data.items():
            row = {j: y for j, x in entries.items() if (y := f(x))}
            if row:
                data[i] = row
        return Matrix(self.rows, self.cols, data)

    def apply(self, vec: dict) -> dict:
        """Apply to a sparse vector ``{index: value}``."""
        acc: dict = {}
        for j, x in vec.items():
            for i, a in self.column(j).items():
                acc[i] = acc.get(i, ZERO) + a * x
        return {i: x for i, x in acc.items() if x}

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    __hash__ = None

    def first_difference(self, other: Matrix):
        """First ``(row, col)`` where the matrices differ, scanning columns
        (inputs) first, then rows; ``None`` if equal."""
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        if self._data == other._data:
            return None
        best = None
        for i in set(self._data) | set(other._data):
            a, b = self._data.get(i, {}), other._data.get(i, {})
            for j in set(a) | set(b):
                if a.get(j, ZERO) != b.get(j, ZERO):
                    key = (j, i)
                    if best is None or key < best:
                        best = key
        return best[1], best[0]

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == eye(self.rows)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.to_lists())


def eye(n: int) -> Matrix:
    return Matrix(n, n, {i: {i: ONE} for i in range(n)})


def kron(*mats: Matrix) -> Matrix:
    out = mats[0]
    for B in mats[1:]:
        data = {}
        for i, ra in out._data.items():
            for k, rb in B._data.items():
                row = {}
                for j, x in ra.items():
                    base = j * B.cols
                    for l, y in rb.items():
                        row[base + l] = x * y
                data[i * B.rows + k] = row
        out = Matrix(out.rows * B.rows, out.cols * B.cols, data)
    return out


def leg_permutation(n: int, perm: Sequence[int]) -> Matrix:
    """Matrix of ``e_{i_0} (x) ... (x) e_{i_{k-1}} -> e_{i_perm[0]} (x) ... ``.

    Output leg ``t`` carries input leg ``perm[t]``.
    """
    k = len(perm)
    data = {}
    for idx in product(range(n), repeat=k):
        out = tuple(idx[p] for p in perm)
        data[flat_index(out, n)] = {flat_index(idx, n): ONE}
    return Matrix(n ** k, n ** k, data)


def flip_matrix(n: int) -> Matrix:
    """The flip ``e_i (x) e_j -> e_j (x) e_i`` on an n-dimensional space."""
    if n < 1:
        raise ValueError("dimension must be positive")
    return leg_permutation(n, (1, 0))


# -- Gaussian elimination ---------------------------------------------------

def _rref(lists: list[list[Scalar]]):
    """Reduced row echelon form in place; returns pivot columns."""
    rows = len(lists)
    cols = len(lists[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if lists[i][c]), None)
        if p is None:
            continue
        lists[r], lists[p] = lists[p], lists[r]
        inv = lists[r][c].inverse()
        lists[r] = [x * inv if x else x for x in lists[r]]
        pivot_row = lists[r]
        for i in range(rows):
            if i != r and lists[i][c]:
                f = lists[i][c]
                lists[i] = [x - f * y if y else x for x, y in zip(lists[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(A: Matrix) -> int:
    if not A.rows or not A.cols:
        return 0
    return len(_rref(A.to_lists()))


def mat_inverse(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise ValueError("only square matrices are invertible")
    n = A.rows
    aug = [row + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A.to_lists())]
    pivots = _rref(aug)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise SingularMatrixError(rank(A), n)
    return Matrix.from_lists([row[n:] for row in aug])


def nullspace(A: Matrix) -> list[tuple[Scalar, ...]]:
    """Basis of the exact kernel, one vector per free column."""
    if not A.rows:
        return [tuple(ONE if i == j else ZERO for i in range(A.cols)) for j in range(A.cols)]
    lists = A.to_lists()
    pivots = _rref(lists)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * A.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -lists[r][f]
        basis.append(tuple(v))
    return basis


def span_equal(us: Iterable[Sequence], vs: Iterable[Sequence]) -> bool:
    us, vs = [list(u) for u in us], [list(v) for v in vs]
    if not us and not vs:
        return True
    if not us or not vs:
        return all(not any(x) for x in us + vs)
    ru = rank(Matrix.from_lists(us))
    return ru == rank(Matrix.from_lists(vs)) == rank(Matrix.from_lists(us + vs))


class Tensor3:
    """Bilinear map ``(e_i, e_j) -> sum_k c[i][j][k] e_k``."""

    __slots__ = ("n", "c", "_matrix")

    def __init__(self, n: int, c):
        if len(c) != n or any(len(row) != n or any(len(v) != n for v in row) for row in c):
            raise ValueError(f"structure tensor must be {n}x{n}x{n}")
        self.n = n
        self.c = c
        self._matrix = None

    @classmethod
    def from_function(cls, n: int, f) -> Tensor3:
        """``f(i, j)`` returns a sparse vector ``{k: value}``."""
        c = []
        for i in range(n):
            row = []
            for j in range(n):
                vec = f(i, j)
                row.append([vec.get(k, ZERO) for k in range(n)])
            c.append(row)
        return cls(n, c)

    @classmethod
    def from_matrix(cls, M: Matrix) -> Tensor3:
        n = M.rows
        if M.cols != n * n:
            raise ValueError("expected an n x n^2 matrix")
        t = cls.from_function(n, lambda i, j: M.column(i * n + j))
        t._matrix = M
        return t

    def __getitem__(self, ijk) -> Scalar:
        i, j, k = ijk
        return self.c[i][j][k]

    def image(self, i: int, j: int) -> dict:
        return {k: x for k, x in enumerate(self.c[i][j]) if x}

    def to_matrix(self) -> Matrix:
        if self._matrix is None:
            n = self.n
            self._matrix = Matrix.from_columns(
                n, [self.image(i, j) for i in range(n) for j in range(n)])
        return self._matrix

    def map_entries(self, f) -> Tensor3:
        return Tensor3(self.n, [[[f(x) for x in v] for v in row] for row in self.c])

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    __hash__ = None

    def __repr__(self):
        return f"Tensor3(n={self.n})"
