"""Dense matrices over a semiring, indexed by labeled finite bases."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BasisMismatchError, SchemaError, SemiringMismatchError
from .semiring import Semiring

TENSOR_SEP = "⊗"


@dataclass(frozen=True)
class Basis:
    labels: tuple

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        if len(set(labels)) != len(labels):
            raise SchemaError(f"basis labels must be distinct: {labels}")
        object.__setattr__(self, "labels", labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)

    @classmethod
    def range(cls, n: int, prefix: str = "") -> "Basis":
        return cls(tuple(f"{prefix}{i}" for i in range(n)))


# the canonical one-element basis; row space of start vectors, column space of outputs
ONE = Basis(("1",))


def tensor_basis(x: Basis, y: Basis) -> Basis:
    """Pair labels ``a⊗b``, left factor major."""
    return Basis(tuple(f"{a}{TENSOR_SEP}{b}" for a in x for b in y))


@dataclass(frozen=True, eq=False)
class Matrix:
    semiring: Semiring
    rows: Basis
    cols: Basis
    entries: tuple

    def __post_init__(self):
        entries = tuple(tuple(r) for r in self.entries)
        if len(entries) != len(self.rows) or any(len(r) != len(self.cols) for r in entries):
            raise SchemaError(
                f"matrix entries do not fit a {len(self.rows)}x{len(self.cols)} shape"
            )
        contains = self.semiring.contains
        for r in entries:
            for v in r:
                if not contains(v):
                    raise SemiringMismatchError(f"{v!r} is not an element of {self.semiring.name}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, h, rows: Sequence[Sequence], row_basis=None, col_basis=None):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else (len(col_basis) if col_basis is not None else 0)
        if row_basis is None:
            row_basis = Basis.range(nrows)
        if col_basis is None:
            col_basis = Basis.range(ncols)
        return cls(h, row_basis, col_basis, rows)

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i) -> tuple:
        return self.entries[i]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self.entries)

    def to_lists(self):
        return [list(r) for r in self.entries]

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.semiring == other.semiring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(self.semiring.render(v) for v in r) for r in self.entries)
        return f"Matrix[{self.semiring.name}]({body})"


def _same_semiring(a: Matrix, b: Matrix):
    if a.semiring != b.semiring:
        raise SemiringMismatchError(f"semiring mismatch: {a.semiring.name} vs {b.semiring.name}")


def _product(h: Semiring, left, right, inner: int, ncols: int):
    add, mul, zero = h.add, h.mul, h.zero
    out = []
    for lrow in left:
        row = []
        for j in range(ncols):
            acc = zero
            for k in range(inner):
                a = lrow[k]
                if a == zero:
                    continue
                acc = add(acc, mul(a, right[k][j]))
            row.append(acc)
        out.append(row)
    return out


def vec_mat(h: Semiring, vec: Sequence, m: Sequence[Sequence]) -> tuple:
    """Row vector times matrix on raw entries, no basis checks."""
    ncols = len(m[0]) if m else 0
    return tuple(_product(h, (vec,), m, len(vec), ncols)[0])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _same_semiring(a, b)
    if a.cols != b.rows:
        raise BasisMismatchError(
            f"cannot multiply {a.shape} by {b.shape}: column basis {a.cols.labels} "
            f"!= row basis {b.rows.labels}"
        )
    entries = _product(a.semiring, a.entries, b.entries, len(a.cols), len(b.cols))
    return Matrix(a.semiring, a.rows, b.cols, entries)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    _same_semiring(a, b)
    if a.rows != b.rows or a.cols != b.cols:
        raise BasisMismatchError(f"cannot add {a.shape} and {b.shape} over different bases")
    add = a.semiring.add
    entries = [[add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.entries, b.entries)]
    return Matrix(a.semiring, a.rows, a.cols, entries)


def scalar_mul(k, a: Matrix) -> Matrix:
    h = a.semiring
    if not h.contains(k):
        raise SemiringMismatchError(f"{k!r} is not an element of {h.name}")
    return Matrix(h, a.rows, a.cols, [[h.mul(k, v) for v in r] for r in a.entries])


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Entry ``((i,k),(j,l)) = a[i,j] * b[k,l]`` on left-major pair bases."""
    _same_semiring(a, b)
    mul = a.semiring.mul
    entries = [
        [mul(x, y) for x in ra for y in rb]
        for ra in a.entries
        for rb in b.entries
    ]
    return Matrix(a.semiring, tensor_basis(a.rows, b.rows), tensor_basis(a.cols, b.cols), entries)


def transpose(a: Matrix) -> Matrix:
    entries = [[r[j] for r in a.entries] for j in range(len(a.cols))]
    return Matrix(a.semiring, a.cols, a.rows, entries)


def identity(h: Semiring, basis: Basis) -> Matrix:
    n = len(basis)
    return Matrix(h, basis, basis, [[h.one if i == j else h.zero for j in range(n)] for i in range(n)])


def zeros(h: Semiring, rows: Basis, cols: Basis) -> Matrix:
    return Matrix(h, rows, cols, [[h.zero] * len(cols) for _ in rows])


def relabel(a: Matrix, rows: Basis | None = None, cols: Basis | None = None) -> Matrix:
    rows = a.rows if rows is None else rows
    cols = a.cols if cols is None else cols
    if len(rows) != len(a.rows) or len(cols) != len(a.cols):
        raise BasisMismatchError("relabeling must preserve dimensions")
    return Matrix(a.semiring, rows, cols, a.entries)


def row_vector(h: Semiring, values: Sequence, basis: Basis) -> Matrix:
    return Matrix(h, ONE, basis, [list(values)])


def col_vector(h: Semiring, values: Sequence, basis: Basis) -> Matrix:
    return Matrix(h, basis, ONE, [[v] for v in values])


def block_diag(a: Matrix, b: Matrix, rows: Basis, cols: Basis) -> Matrix:
    _same_semiring(a, b)
    z = a.semiring.zero
    nb, na = len(b.cols), len(a.cols)
    entries = [list(r) + [z] * nb for r in a.entries]
    entries += [[z] * na + list(r) for r in b.entries]
    return Matrix(a.semiring, rows, cols, entries)
