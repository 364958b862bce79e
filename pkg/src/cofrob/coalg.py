"""Finite-dimensional coalgebras and algebras given by structure constants.

Conventions
-----------
``Coalgebra.delta[k]`` maps ``(i, j)`` to ``c^k_{ij}`` with
``Delta(e_k) = sum c^k_{ij} e_i (x) e_j``.  ``Algebra.mult[(i, j)]`` maps ``k``
to ``m^k_{ij}`` with ``e_i e_j = sum m^k_{ij} e_k``.

The dual algebra uses the convolution ``(f g)(c) = f(c_1) g(c_2)``.  A right
comodule is a left module over it through ``f . m = f(m_1) m_0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import AmbientMismatch, DimensionMismatch, FiltrationDidNotStabilize
from .exactla import (
    Echelon,
    Matrix,
    Subspace,
    annihilator,
    inverse,
    kernel,
    quotient_basis,
)
from .report import Report
from .scalar import CycloField, Scalar

__all__ = [
    "Coalgebra",
    "Algebra",
    "Filtration",
    "GradedCoalgebra",
    "validate_coalgebra",
    "validate_algebra",
    "dual_algebra",
    "jacobson_radical",
    "ideal_powers",
    "coradical",
    "wedge",
    "coradical_filtration",
    "adapted_basis",
    "transport_coalgebra",
    "associated_graded",
    "grouplike_check",
    "filtration_violations",
]


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _accumulate(acc: dict, key, value):
    cur = acc.get(key)
    acc[key] = value if cur is None else cur + value


class Coalgebra:
    """Coalgebra on k^dim; immutable once built."""

    def __init__(self, fld: CycloField, dim: int, delta, counit: Sequence, name: str | None = None):
        self.field = fld
        self.dim = dim
        self.name = name
        if isinstance(delta, dict) or (delta and isinstance(delta, (list, tuple)) and isinstance(delta[0], dict)):
            rows = [dict() for _ in range(dim)]
            items = delta.items() if isinstance(delta, dict) else enumerate(delta)
            for k, terms in items:
                for (i, j), s in terms.items():
                    _accumulate(rows[k], (i, j), fld(s))
        else:
            rows = [dict() for _ in range(dim)]
            for k, i, j, s in delta:
                _accumulate(rows[k], (i, j), fld(s))
        for r in rows:
            for (i, j) in r:
                if not (0 <= i < dim and 0 <= j < dim):
                    raise DimensionMismatch(f"tensor index {(i, j)} outside dim {dim}")
        self.delta = tuple(_clean(r) for r in rows)
        if len(counit) != dim:
            raise DimensionMismatch("counit length differs from dim")
        self.counit = tuple(fld(x) for x in counit)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Coalgebra{tag} dim={self.dim} N={self.field.conductor}>"

    def triples(self):
        """Sparse (k, i, j, c) listing in sorted order."""
        for k, r in enumerate(self.delta):
            for (i, j) in sorted(r):
                yield k, i, j, r[(i, j)]

    def comult(self, v: Sequence[Scalar]) -> dict:
        """Delta(v) as a sparse dict over index pairs."""
        out: dict = {}
        for k, a in enumerate(v):
            if a:
                for ij, c in self.delta[k].items():
                    _accumulate(out, ij, a * c)
        return _clean(out)

    def epsilon(self, v: Sequence[Scalar]) -> Scalar:
        acc = self.field.zero
        for a, e in zip(v, self.counit):
            if a and e:
                acc = acc + a * e
        return acc

    def delta_matrix(self) -> Matrix:
        n = self.dim
        z = self.field.zero
        rows = [[z] * n for _ in range(n * n)]
        for k, r in enumerate(self.delta):
            for (i, j), c in r.items():
                rows[i * n + j][k] = c
        return Matrix._trusted(self.field, tuple(tuple(r) for r in rows), n)

    def same_structure(self, other: "Coalgebra") -> bool:
        return (self.field is other.field and self.dim == other.dim
                and self.delta == other.delta and self.counit == other.counit)

    # derived data, cached because the object is immutable
    @cached_property
    def dual(self) -> "Algebra":
        return dual_algebra(self)

    @cached_property
    def radical(self) -> Subspace:
        return jacobson_radical(self.dual)

    @cached_property
    def _jpowers(self) -> list:
        return ideal_powers(self.dual, self.radical)

    @cached_property
    def _filtrations(self) -> dict:
        return {}


class Algebra:
    """Associative unital algebra on k^dim."""

    def __init__(self, fld: CycloField, dim: int, mult, unit: Sequence, name: str | None = None):
        self.field = fld
        self.dim = dim
        self.name = name
        table: dict = {}
        items = mult.items() if isinstance(mult, dict) else ((((i, j), {k: s})) for k, i, j, s in mult)
        for (i, j), terms in items:
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"index {(i, j)} outside dim {dim}")
            row = table.setdefault((i, j), {})
            for k, s in terms.items():
                if not 0 <= k < dim:
                    raise DimensionMismatch(f"index {k} outside dim {dim}")
                _accumulate(row, k, fld(s))
        self.mult = {ij: _clean(r) for ij, r in table.items() if _clean(r)}
        if len(unit) != dim:
            raise DimensionMismatch("unit length differs from dim")
        self.unit = tuple(fld(x) for x in unit)
        by_left: list[list] = [[] for _ in range(dim)]
        for (i, j), r in sorted(self.mult.items()):
            for k, c in sorted(r.items()):
                by_left[i].append((j, k, c))
        self._by_left = by_left

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Algebra{tag} dim={self.dim} N={self.field.conductor}>"

    def triples(self):
        """Sparse (k, i, j, m) listing in sorted order."""
        out = []
        for (i, j), r in self.mult.items():
            for k, c in r.items():
                out.append((k, i, j, c))
        out.sort(key=lambda t: t[:3])
        return out

    def product(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> list:
        z = self.field.zero
        out = [z] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, k, c in self._by_left[i]:
                b = v[j]
                if b:
                    out[k] = out[k] + a * b * c
        return out

    def basis_product(self, i: int, j: int) -> dict:
        return self.mult.get((i, j), {})

    def left_matrix(self, u: Sequence[Scalar]) -> Matrix:
        """Matrix of v -> u v (columns are images of basis vectors)."""
        n = self.dim
        z = self.field.zero
        cols = []
        for j in range(n):
            e = [z] * n
            e[j] = self.field.one
            cols.append(self.product(u, e))
        return Matrix._trusted(self.field, tuple(tuple(c[i] for c in cols) for i in range(n)), n)

    def same_structure(self, other: "Algebra") -> bool:
        return (self.field is other.field and self.dim == other.dim
                and self.mult == other.mult and self.unit == other.unit)


@dataclass(frozen=True)
class Filtration:
    """Increasing chain of subspaces ending at the full space."""

    chain: tuple
    ambient_dim: int

    def __post_init__(self):
        if not self.chain or not self.chain[-1].is_full():
            raise ValueError("filtration must end at the full space")

    @property
    def length(self) -> int:
        return len(self.chain) - 1

    @property
    def dims(self) -> tuple:
        return tuple(s.dim for s in self.chain)

    def term(self, n: int) -> Subspace:
        if n < 0:
            return Subspace.zero(self.chain[0].field, self.ambient_dim)
        return self.chain[min(n, self.length)]

    def layers(self) -> tuple:
        """dim F_n / F_{n-1} for n = 0..length."""
        d = self.dims
        return tuple(d[i] - (d[i - 1] if i else 0) for i in range(len(d)))

    def __eq__(self, other):
        if not isinstance(other, Filtration):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.chain == other.chain

    def __hash__(self):
        return hash(self.chain)


@dataclass(frozen=True)
class GradedCoalgebra:
    """gr C written in a basis adapted to the coradical filtration of C.

    ``basis_map`` rows are the chosen representatives in the coordinates of
    the source coalgebra; ``degrees[a]`` is the degree of basis vector a.
    """

    coalgebra: Coalgebra
    degrees: tuple
    basis_map: Matrix
    source_filtration: Filtration

    @property
    def top(self) -> int:
        return max(self.degrees) if self.degrees else 0

    @property
    def degree_dims(self) -> tuple:
        return tuple(self.degrees.count(n) for n in range(self.top + 1))

    def component(self, n: int) -> Subspace:
        c = self.coalgebra
        return Subspace.coordinate(c.field, c.dim, [a for a, d in enumerate(self.degrees) if d == n])

    def partial_sum(self, n: int) -> Subspace:
        c = self.coalgebra
        return Subspace.coordinate(c.field, c.dim, [a for a, d in enumerate(self.degrees) if d <= n])

    @cached_property
    def inverse_map(self) -> Matrix:
        return inverse(self.basis_map)

    def to_graded_coords(self, v: Sequence[Scalar]) -> tuple:
        """Coordinates of a source vector in the adapted basis."""
        inv = self.inverse_map
        z = self.coalgebra.field.zero
        n = len(v)
        return tuple(_row_combo(v, inv, j, z) for j in range(n))


def _row_combo(v, m: Matrix, j, z):
    acc = z
    for k, a in enumerate(v):
        if a:
            b = m.entries[k][j]
            if b:
                acc = acc + a * b
    return acc


# --------------------------------------------------------------------------
# validation


def validate_coalgebra(c: Coalgebra) -> Report:
    """Check coassociativity and the counit laws exactly."""
    rep = Report(f"validate coalgebra{' ' + c.name if c.name else ''}")
    rep.add("dim", c.dim)
    n = c.dim
    for k in range(n):
        left: dict = {}
        right: dict = {}
        for (i, j), a in c.delta[k].items():
            for (p, q), b in c.delta[i].items():
                _accumulate(left, (p, q, j), a * b)
            for (p, q), b in c.delta[j].items():
                _accumulate(right, (i, p, q), a * b)
        if _clean(left) != _clean(right):
            rep.fail(f"coassociativity fails on e_{k}")
    for k in range(n):
        lft: dict = {}
        rgt: dict = {}
        for (i, j), a in c.delta[k].items():
            if c.counit[i]:
                _accumulate(lft, j, c.counit[i] * a)
            if c.counit[j]:
                _accumulate(rgt, i, c.counit[j] * a)
        want = {k: c.field.one}
        if _clean(lft) != want:
            rep.fail(f"left counit law fails on e_{k}")
        if _clean(rgt) != want:
            rep.fail(f"right counit law fails on e_{k}")
    return rep


def validate_algebra(a: Algebra) -> Report:
    rep = Report(f"validate algebra{' ' + a.name if a.name else ''}")
    n = a.dim
    f = a.field
    basis = [[f.one if i == j else f.zero for i in range(n)] for j in range(n)]
    prods = [[a.product(basis[i], basis[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if a.product(prods[i][j], basis[k]) != a.product(basis[i], prods[j][k]):
                    rep.fail(f"associativity fails on (e_{i} e_{j}) e_{k}")
    for i in range(n):
        if a.product(a.unit, basis[i]) != basis[i] or a.product(basis[i], a.unit) != basis[i]:
            rep.fail(f"unit law fails on e_{i}")
    return rep


# --------------------------------------------------------------------------
# dual algebra, radical, coradical


def dual_algebra(c: Coalgebra) -> Algebra:
    """C* with convolution product; dual basis delta_i delta_j = sum_k c^k_ij delta_k."""
    mult: dict = {}
    for k, r in enumerate(c.delta):
        for (i, j), s in r.items():
            mult.setdefault((i, j), {})[k] = s
    return Algebra(c.field, c.dim, mult, c.counit, name=f"{c.name}*" if c.name else None)


def jacobson_radical(a: Algebra) -> Subspace:
    """Radical as the kernel of the trace form (x, y) -> tr L_{xy} (char 0)."""
    n = a.dim
    z = a.field.zero
    trace = [z] * n
    for (k, i), r in a.mult.items():
        c = r.get(i)
        if c:
            trace[k] = trace[k] + c
    gram = []
    for x in range(n):
        row = []
        for y in range(n):
            acc = z
            for k, c in a.basis_product(x, y).items():
                if trace[k]:
                    acc = acc + c * trace[k]
            row.append(acc)
        gram.append(tuple(row))
    return kernel(Matrix._trusted(a.field, tuple(gram), n))


def ideal_powers(a: Algebra, ideal: Subspace, cap: int | None = None) -> list:
    """[I^1, I^2, ..., 0] for a nilpotent ideal I; the list ends with the zero space."""
    cap = a.dim + 1 if cap is None else cap
    powers = [ideal]
    cur = ideal
    while cur.dim:
        if len(powers) > cap:
            raise FiltrationDidNotStabilize("ideal is not nilpotent within the dimension bound")
        ech = Echelon(a.field, a.dim)
        for x in cur.rows:
            for y in ideal.rows:
                ech.add(a.product(x, y))
                if len(ech) == cur.dim:
                    break
            if len(ech) == cur.dim:
                break
        cur = ech.subspace()
        powers.append(cur)
    return powers


def coradical(c: Coalgebra) -> Subspace:
    """C_0 as the annihilator of the Jacobson radical of C*."""
    return annihilator(c.radical)


def _tensor_constraint_rows(c: Coalgebra, left: Sequence, right: Sequence) -> list:
    """Rows (phi (x) psi) o Delta for phi in left, psi in right (functionals on C)."""
    n = c.dim
    z = c.field.zero
    rows = []
    for phi in left:
        partial = []
        for k in range(n):
            d: dict = {}
            for (i, j), s in c.delta[k].items():
                if phi[i]:
                    _accumulate(d, j, phi[i] * s)
            partial.append([(j, v) for j, v in d.items() if v])
        for psi in right:
            row = []
            for k in range(n):
                acc = z
                for j, v in partial[k]:
                    if psi[j]:
                        acc = acc + v * psi[j]
                row.append(acc)
            rows.append(row)
    return rows


def wedge(c: Coalgebra, x: Subspace, y: Subspace) -> Subspace:
    """X ^ Y = Delta^{-1}(X (x) C + C (x) Y).

    The annihilator of X (x) C + C (x) Y is X^perp (x) Y^perp, so the
    preimage is the common kernel of (phi (x) psi) o Delta.
    """
    for s in (x, y):
        if s.ambient_dim != c.dim:
            raise AmbientMismatch(f"subspace of dim-{s.ambient_dim} space used with dim-{c.dim} coalgebra")
    ann_x = annihilator(x)
    ann_y = annihilator(y)
    if not ann_x.dim or not ann_y.dim:
        return Subspace.full(c.field, c.dim)
    rows = _tensor_constraint_rows(c, ann_x.rows, ann_y.rows)
    return _kernel_of_rows(c.field, c.dim, rows)


def _kernel_of_rows(fld, n, rows) -> Subspace:
    ech = Echelon(fld, n).extend(rows)
    if ech.full:
        return Subspace.zero(fld, n)
    return kernel(Matrix._trusted(fld, ech.basis_rows(), n)) if len(ech) else Subspace.full(fld, n)


def coradical_filtration(c: Coalgebra, route: str = "perp") -> Filtration:
    """C_0 <= C_1 <= ... up to the first full term.

    route="perp":  C_n = (J^{n+1})^perp from powers of the radical of C*.
    route="wedge": C_{n+1} = C_n ^ C_0.
    """
    cache = c._filtrations
    if route in cache:
        return cache[route]
    if route == "perp":
        chain = []
        for p in c._jpowers:
            term = annihilator(p)
            chain.append(term)
            if term.is_full():
                break
    elif route == "wedge":
        c0 = coradical(c)
        chain = [c0]
        while not chain[-1].is_full():
            if len(chain) > c.dim + 1:
                raise FiltrationDidNotStabilize("wedge iteration exceeded dim steps")
            chain.append(wedge(c, chain[-1], c0))
    else:
        raise ValueError(f"unknown route {route!r}")
    filt = Filtration(tuple(chain), c.dim)
    cache[route] = filt
    return filt


# --------------------------------------------------------------------------
# change of basis and associated graded


def adapted_basis(filt: Filtration) -> tuple[Matrix, tuple]:
    """Representatives of F_n / F_{n-1} stacked by degree, and their degrees."""
    fld = filt.chain[0].field
    rows: list = []
    degrees: list = []
    for n in range(filt.length + 1):
        reps = quotient_basis(filt.term(n), filt.term(n - 1))
        rows.extend(reps.entries)
        degrees.extend([n] * reps.rows)
    return Matrix._trusted(fld, tuple(rows), filt.ambient_dim), tuple(degrees)


def _sparse_rows(m: Matrix) -> list:
    return [[(j, x) for j, x in enumerate(r) if x] for r in m.entries]


def transport_coalgebra(c: Coalgebra, basis: Matrix, inv: Matrix | None = None, name=None) -> Coalgebra:
    """The same coalgebra written in the basis u_a = sum_k basis[a][k] e_k."""
    inv = inverse(basis) if inv is None else inv
    b_rows = _sparse_rows(basis)
    inv_rows = _sparse_rows(inv)
    delta = []
    for a in range(c.dim):
        acc: dict = {}
        for k, bk in b_rows[a]:
            for (i, j), s in c.delta[k].items():
                w = bk * s
                for p, x in inv_rows[i]:
                    wx = w * x
                    for q, y in inv_rows[j]:
                        _accumulate(acc, (p, q), wx * y)
        delta.append(_clean(acc))
    counit = [c.epsilon(basis.entries[a]) for a in range(c.dim)]
    return Coalgebra(c.field, c.dim, delta, counit, name=name)


def filtration_violations(structure: Sequence[dict], deg_out: Sequence[int],
                          deg_left: Sequence[int], deg_right: Sequence[int]) -> list:
    """Terms (a; b, d) with deg_left[b] + deg_right[d] > deg_out[a]."""
    bad = []
    for a, terms in enumerate(structure):
        for (b, d) in terms:
            if deg_left[b] + deg_right[d] > deg_out[a]:
                bad.append((a, b, d))
    return bad


def associated_graded(c: Coalgebra, route: str = "perp") -> GradedCoalgebra:
    """gr C = (+)_n C_n / C_{n-1} with the induced comultiplication."""
    filt = coradical_filtration(c, route)
    basis, degrees = adapted_basis(filt)
    inv = inverse(basis)
    moved = transport_coalgebra(c, basis, inv)
    bad = filtration_violations(moved.delta, degrees, degrees, degrees)
    if bad:
        raise FiltrationDidNotStabilize(f"coradical filtration is not a coalgebra filtration: {bad[:3]}")
    delta = [{(b, d): s for (b, d), s in terms.items() if degrees[b] + degrees[d] == degrees[a]}
             for a, terms in enumerate(moved.delta)]
    counit = [e if degrees[a] == 0 else c.field.zero for a, e in enumerate(moved.counit)]
    name = f"gr {c.name}" if c.name else None
    graded = Coalgebra(c.field, c.dim, delta, counit, name=name)
    gc = GradedCoalgebra(graded, degrees, basis, filt)
    object.__setattr__(gc, "inverse_map", inv)
    return gc


def grouplike_check(c: Coalgebra, v: Sequence[Scalar]) -> bool:
    """True iff Delta v = v (x) v and eps(v) = 1."""
    if len(v) != c.dim:
        raise DimensionMismatch("vector length differs from dim")
    v = [c.field(x) for x in v]
    if c.epsilon(v) != 1:
        return False
    want = {}
    for i, a in enumerate(v):
        if a:
            for j, b in enumerate(v):
                if b:
                    want[(i, j)] = a * b
    return c.comult(v) == want


def coalgebra_filtration_violations(c: Coalgebra, filt: Filtration) -> list:
    """Terms of Delta(C_n) falling outside sum_i C_i (x) C_{n-i}."""
    basis, degrees = adapted_basis(filt)
    moved = transport_coalgebra(c, basis)
    return filtration_violations(moved.delta, degrees, degrees, degrees)


def is_subcoalgebra(c: Coalgebra, s: Subspace) -> bool:
    """Delta(S) <= S (x) S."""
    ann = annihilator(s)
    if not ann.dim:
        return True
    full = Subspace.full(c.field, c.dim).rows
    rows = _tensor_constraint_rows(c, ann.rows, full) + _tensor_constraint_rows(c, full, ann.rows)
    return all(not any(_row_dot(r, v) for r in rows) for v in s.rows)


def _row_dot(r, v):
    acc = None
    for a, b in zip(r, v):
        if a and b:
            acc = a * b if acc is None else acc + a * b
    return acc if acc is not None else 0
