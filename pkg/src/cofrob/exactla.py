"""Exact dense linear algebra and a canonical subspace calculus.

Subspaces are always stored by a basis in reduced row-echelon form, so two
subspaces are equal exactly when their stored bases are identical.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import AmbientMismatch, DimensionMismatch, NotASubspace
from .scalar import CycloField, Scalar

__all__ = [
    "Matrix",
    "Subspace",
    "Echelon",
    "rref",
    "kernel",
    "span",
    "sum_spaces",
    "intersect",
    "preimage",
    "quotient_basis",
    "annihilator",
    "apply",
    "dot",
]


class Matrix:
    """Immutable rows x cols grid of scalars sharing one field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, fld: CycloField, entries, cols: int | None = None):
        entries = tuple(tuple(fld(x) for x in row) for row in entries)
        if cols is None:
            if not entries:
                raise DimensionMismatch("cols must be given for an empty matrix")
            cols = len(entries[0])
        for row in entries:
            if len(row) != cols:
                raise DimensionMismatch("ragged matrix")
        self.field = fld
        self.rows = len(entries)
        self.cols = cols
        self.entries = entries

    @classmethod
    def _trusted(cls, fld, entries, cols):
        m = object.__new__(cls)
        m.field = fld
        m.rows = len(entries)
        m.cols = cols
        m.entries = entries
        return m

    @classmethod
    def identity(cls, fld: CycloField, n: int) -> "Matrix":
        z, o = fld.zero, fld.one
        return cls._trusted(fld, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, fld: CycloField, rows: int, cols: int) -> "Matrix":
        z = fld.zero
        return cls._trusted(fld, tuple((z,) * cols for _ in range(rows)), cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix._trusted(
            self.field, tuple(tuple(r[j] for r in self.entries) for j in range(self.cols)), self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        z = self.field.zero
        cols_t = [other.column(j) for j in range(other.cols)]
        out = []
        for r in self.entries:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append(tuple(_sparse_dot(nz, c, z) for c in cols_t))
        return Matrix._trusted(self.field, tuple(out), other.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def rank(self) -> int:
        return len(Echelon(self.field, self.cols).extend(self.entries))

    def tolist(self):
        return [list(r) for r in self.entries]

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.entries)
        return f"Matrix([{body}])"


def _sparse_dot(nz, vec, zero):
    acc = zero
    for k, a in nz:
        b = vec[k]
        if b:
            acc = acc + a * b
    return acc


def dot(u: Sequence[Scalar], v: Sequence[Scalar], zero: Scalar) -> Scalar:
    acc = zero
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def apply(m: Matrix, v: Sequence[Scalar]) -> tuple:
    """m @ v for a column vector v."""
    if len(v) != m.cols:
        raise DimensionMismatch(f"vector of length {len(v)} for {m.rows}x{m.cols} matrix")
    nz = [(k, a) for k, a in enumerate(v) if a]
    z = m.field.zero
    return tuple(_sparse_dot(nz, r, z) for r in m.entries)


class Echelon:
    """Incrementally maintained reduced row-echelon basis.

    Rows are kept fully reduced against every other pivot, so reduction of a
    new vector can use the pivots in any order.
    """

    def __init__(self, fld: CycloField, ncols: int):
        self.field = fld
        self.ncols = ncols
        self._rows: dict[int, tuple[list, list]] = {}

    def __len__(self):
        return len(self._rows)

    @property
    def full(self) -> bool:
        return len(self._rows) == self.ncols

    def reduce(self, v) -> list:
        v = list(v)
        for p, (r, nz) in self._rows.items():
            c = v[p]
            if c:
                for j in nz:
                    v[j] = v[j] - c * r[j]
        return v

    def add(self, v) -> bool:
        """Insert v; return True when it enlarged the span."""
        if len(v) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient {self.ncols}")
        if not all(isinstance(x, Scalar) for x in v):
            v = [self.field(x) for x in v]
        w = self.reduce(v)
        p = next((j for j, x in enumerate(w) if x), None)
        if p is None:
            return False
        inv = 1 / w[p]
        if w[p] != 1:
            w = [x * inv if x else x for x in w]
        nzw = [j for j, x in enumerate(w) if x]
        for q, (r, nz) in self._rows.items():
            c = r[p]
            if c:
                for j in nzw:
                    r[j] = r[j] - c * w[j]
                nz[:] = [j for j in range(self.ncols) if r[j]]
        self._rows[p] = (w, nzw)
        return True

    def extend(self, vectors: Iterable) -> "Echelon":
        for v in vectors:
            if self.full:
                break
            self.add(v)
        return self

    def contains(self, v) -> bool:
        return not any(self.reduce(v))

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def basis_rows(self) -> tuple:
        return tuple(tuple(self._rows[p][0]) for p in sorted(self._rows))

    def subspace(self) -> "Subspace":
        return Subspace._trusted(self.field, self.ncols, self.basis_rows(), tuple(self.pivots()))


class Subspace:
    """A subspace of k^n stored by its RREF basis (rows)."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, fld: CycloField, ambient_dim: int, vectors: Iterable = ()):
        ech = Echelon(fld, ambient_dim).extend(tuple(fld(x) for x in v) for v in vectors)
        self.field = fld
        self.ambient_dim = ambient_dim
        self.rows = ech.basis_rows()
        self.pivots = tuple(ech.pivots())

    @classmethod
    def _trusted(cls, fld, n, rows, pivots):
        s = object.__new__(cls)
        s.field = fld
        s.ambient_dim = n
        s.rows = rows
        s.pivots = pivots
        return s

    @classmethod
    def full(cls, fld: CycloField, n: int) -> "Subspace":
        return cls._trusted(fld, n, Matrix.identity(fld, n).entries, tuple(range(n)))

    @classmethod
    def zero(cls, fld: CycloField, n: int) -> "Subspace":
        return cls._trusted(fld, n, (), ())

    @classmethod
    def coordinate(cls, fld: CycloField, n: int, indices: Iterable[int]) -> "Subspace":
        idx = sorted(set(indices))
        z, o = fld.zero, fld.one
        rows = tuple(tuple(o if j == i else z for j in range(n)) for i in idx)
        return cls._trusted(fld, n, rows, tuple(idx))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> Matrix:
        return Matrix._trusted(self.field, self.rows, self.ambient_dim)

    def echelon(self) -> Echelon:
        ech = Echelon(self.field, self.ambient_dim)
        for p, r in zip(self.pivots, self.rows):
            lst = list(r)
            ech._rows[p] = (lst, [j for j, x in enumerate(lst) if x])
        return ech

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        return self.echelon().contains(v)

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v) -> tuple:
        """Coordinates of v in the stored basis; raises NotASubspace if v is outside."""
        coords = tuple(v[p] for p in self.pivots)
        z = self.field.zero
        for j in range(self.ambient_dim):
            acc = z
            for c, r in zip(coords, self.rows):
                if c and r[j]:
                    acc = acc + c * r[j]
            if acc != v[j]:
                raise NotASubspace("vector does not lie in the subspace")
        return coords

    def is_subspace_of(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        ech = other.echelon()
        return all(ech.contains(r) for r in self.rows)

    __le__ = is_subspace_of

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={list(self.pivots)})"


def _check_ambient(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(f"ambient dims {a.ambient_dim} and {b.ambient_dim}")


def span(fld: CycloField, n: int, vectors: Iterable) -> Subspace:
    return Echelon(fld, n).extend(vectors).subspace()


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form, same shape as m (zero rows last)."""
    rows = Echelon(m.field, m.cols).extend(m.entries).basis_rows()
    pad = (tuple(m.field.zero for _ in range(m.cols)),) * (m.rows - len(rows))
    return Matrix._trusted(m.field, tuple(rows) + pad, m.cols)


def kernel(m: Matrix) -> Subspace:
    """Right null space {v : m v = 0}."""
    fld = m.field
    n = m.cols
    ech = Echelon(fld, n).extend(m.entries)
    piv = ech.pivots()
    pivset = set(piv)
    z, o = fld.zero, fld.one
    vecs = []
    for f in range(n):
        if f in pivset:
            continue
        v = [z] * n
        v[f] = o
        for p in piv:
            c = ech._rows[p][0][f]
            if c:
                v[p] = -c
        vecs.append(v)
    return span(fld, n, vecs)


def annihilator(s: Subspace) -> Subspace:
    """{f : f . v = 0 for all v in s} under the standard pairing."""
    if s.dim == 0:
        return Subspace.full(s.field, s.ambient_dim)
    return kernel(s.basis)


def sum_spaces(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return a.echelon().extend(b.rows).subspace()


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    ann = annihilator(a).echelon().extend(annihilator(b).rows).subspace()
    return annihilator(ann)


def preimage(f: Matrix, t: Subspace) -> Subspace:
    """{v : f v in t}, as the kernel of (annihilator of t) composed with f."""
    if f.rows != t.ambient_dim:
        raise DimensionMismatch(f"map lands in dim {f.rows}, target subspace lives in dim {t.ambient_dim}")
    ann = annihilator(t)
    if ann.dim == 0:
        return Subspace.full(f.field, f.cols)
    return kernel(ann.basis @ f)


def quotient_basis(v: Subspace, w: Subspace) -> Matrix:
    """Coset representatives for v/w, chosen greedily from v's RREF rows."""
    _check_ambient(v, w)
    if not w.is_subspace_of(v):
        raise NotASubspace("w is not contained in v")
    ech = w.echelon()
    reps = []
    for r in v.rows:
        if len(ech) == v.dim:
            break
        if ech.add(r):
            reps.append(r)
    return Matrix._trusted(v.field, tuple(reps), v.ambient_dim)


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix by Gauss-Jordan on [m | I]."""
    n = m.rows
    if m.cols != n:
        raise DimensionMismatch("inverse of a non-square matrix")
    fld = m.field
    z, o = fld.zero, fld.one
    aug = [list(r) + [o if i == j else z for j in range(n)] for i, r in enumerate(m.entries)]
    ech = Echelon(fld, 2 * n).extend(aug)
    if ech.pivots()[:n] != list(range(n)) or len(ech) != n:
        raise DimensionMismatch("matrix is singular")
    return Matrix._trusted(fld, tuple(tuple(r[n:]) for r in ech.basis_rows()), n)


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int, fld: CycloField) -> tuple:
    """A particular solution x of rows @ x = rhs (free variables set to 0).

    Raises DimensionMismatch when the system is inconsistent.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ech = Echelon(fld, ncols + 1).extend(aug)
    if ncols in ech._rows:
        raise DimensionMismatch("inconsistent linear system")
    x = [fld.zero] * ncols
    for p, (r, _) in ech._rows.items():
        x[p] = r[ncols]
    return tuple(x)
