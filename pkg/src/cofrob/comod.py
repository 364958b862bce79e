"""Right comodules: Loewy series, socles, associated graded comodules,
Poincare series, and injective envelopes inside the coalgebra.

``Comodule.rho[k]`` maps ``(i, j)`` to ``r^k_{ij}`` with
``rho(m_k) = sum m_i (x) e_j r^k_{ij}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .coalg import (
    Algebra,
    Coalgebra,
    Filtration,
    GradedCoalgebra,
    _accumulate,
    _clean,
    _kernel_of_rows,
    _sparse_rows,
    adapted_basis,
    associated_graded,
    coradical,
    coradical_filtration,
    filtration_violations,
)
from .errors import (
    BaseMismatch,
    CoradicalNotSplit,
    DimensionMismatch,
    FiltrationDidNotStabilize,
    NotADecomposition,
    NotASubspace,
    NotIdempotentModRadical,
    NotOrthogonalModRadical,
)
from .exactla import Echelon, Matrix, Subspace, annihilator, inverse, solve, span
from .report import Report
from .scalar import Scalar

__all__ = [
    "Comodule",
    "PoincareSeries",
    "validate_comodule",
    "regular_comodule",
    "subcomodule",
    "direct_sum",
    "loewy_series",
    "socle",
    "is_completely_reducible",
    "layer_coaction_violations",
    "associated_graded_comodule",
    "lift_idempotents",
    "injective_decomposition",
    "poincare",
    "coefficient_coalgebra",
]


class Comodule:
    """Right comodule over ``over``.

    ``embedding`` (optional) records the basis of this comodule inside some
    ambient comodule, usually C itself.  ``degrees`` is set on graded
    comodules produced by :func:`associated_graded_comodule`.
    """

    def __init__(self, over: Coalgebra, dim: int, rho, name: str | None = None,
                 embedding: Matrix | None = None, degrees: tuple | None = None):
        fld = over.field
        self.over = over
        self.field = fld
        self.dim = dim
        self.name = name
        rows = [dict() for _ in range(dim)]
        items = enumerate(rho) if isinstance(rho, (list, tuple)) and (not rho or isinstance(rho[0], dict)) else None
        if items is not None:
            for k, terms in items:
                for (i, j), s in terms.items():
                    _accumulate(rows[k], (i, j), fld(s))
        else:
            for k, i, j, s in rho:
                _accumulate(rows[k], (i, j), fld(s))
        for r in rows:
            for (i, j) in r:
                if not (0 <= i < dim and 0 <= j < over.dim):
                    raise DimensionMismatch(f"coaction index {(i, j)} out of range")
        self.rho = tuple(_clean(r) for r in rows)
        self.embedding = embedding
        self.degrees = degrees

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Comodule{tag} dim={self.dim} over dim {self.over.dim}>"

    def triples(self):
        for k, r in enumerate(self.rho):
            for (i, j) in sorted(r):
                yield k, i, j, r[(i, j)]

    @cached_property
    def _by_k(self):
        return [[(i, j, s) for (i, j), s in sorted(r.items())] for r in self.rho]

    @cached_property
    def _loewy(self) -> dict:
        return {}

    def coact(self, v: Sequence[Scalar]) -> dict:
        out: dict = {}
        for k, a in enumerate(v):
            if a:
                for ij, s in self.rho[k].items():
                    _accumulate(out, ij, a * s)
        return _clean(out)


@dataclass(frozen=True)
class PoincareSeries:
    """Loewy layer dimensions l_0, ..., l_top."""

    coefficients: tuple

    @property
    def top(self) -> int:
        return len(self.coefficients) - 1

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __add__(self, other: "PoincareSeries") -> "PoincareSeries":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return PoincareSeries(_trim(tuple(x + y for x, y in zip(a, b))))

    def scale(self, k: int) -> "PoincareSeries":
        return PoincareSeries(tuple(k * x for x in self.coefficients))

    def __str__(self):
        return "(" + ", ".join(map(str, self.coefficients)) + ")"


def _trim(t):
    t = list(t)
    while len(t) > 1 and t[-1] == 0:
        t.pop()
    return tuple(t)


def validate_comodule(m: Comodule) -> Report:
    """Coassociativity and counit of the coaction, exactly."""
    rep = Report(f"validate comodule{' ' + m.name if m.name else ''}")
    c = m.over
    one = m.field.one
    for k in range(m.dim):
        left: dict = {}
        right: dict = {}
        for (i, j), a in m.rho[k].items():
            for (p, q), b in m.rho[i].items():
                _accumulate(left, (p, q, j), a * b)
            for (p, q), b in c.delta[j].items():
                _accumulate(right, (i, p, q), a * b)
        if _clean(left) != _clean(right):
            rep.fail(f"coaction coassociativity fails on m_{k}")
        cu: dict = {}
        for (i, j), a in m.rho[k].items():
            if c.counit[j]:
                _accumulate(cu, i, a * c.counit[j])
        if _clean(cu) != {k: one}:
            rep.fail(f"coaction counit law fails on m_{k}")
    return rep


def regular_comodule(c: Coalgebra) -> Comodule:
    """C as a right comodule over itself (rho = Delta)."""
    return Comodule(c, c.dim, list(c.delta), name=c.name,
                    embedding=Matrix.identity(c.field, c.dim))


def subcomodule(m: Comodule, w: Subspace, name: str | None = None) -> Comodule:
    """Restriction of the coaction to w; raises NotASubspace if w is not a subcomodule."""
    if w.ambient_dim != m.dim:
        raise DimensionMismatch("subspace ambient differs from comodule dim")
    fld = m.field
    rho = []
    for b in w.rows:
        cols: dict = {}
        for k, a in enumerate(b):
            if a:
                for i, j, s in m._by_k[k]:
                    vec = cols.setdefault(j, [fld.zero] * m.dim)
                    vec[i] = vec[i] + a * s
        terms = {}
        for j, vec in cols.items():
            try:
                coords = w.coordinates(vec)
            except NotASubspace:
                raise NotASubspace("subspace is not a subcomodule") from None
            for bi, x in enumerate(coords):
                if x:
                    terms[(bi, j)] = x
        rho.append(terms)
    emb = w.basis if m.embedding is None else w.basis @ m.embedding
    return Comodule(m.over, w.dim, rho, name=name, embedding=emb)


def direct_sum(m: Comodule, n: Comodule) -> Comodule:
    if m.over is not n.over:
        raise BaseMismatch("comodules over different coalgebras")
    rho = list(m.rho) + [{(i + m.dim, j): s for (i, j), s in r.items()} for r in n.rho]
    return Comodule(m.over, m.dim + n.dim, rho)


def _coaction_rows(m: Comodule, functionals) -> list:
    """Rows of m -> (id (x) f) rho(m), one per (f, output index i)."""
    z = m.field.zero
    rows = []
    for f in functionals:
        block = [[z] * m.dim for _ in range(m.dim)]
        for k in range(m.dim):
            for i, j, s in m._by_k[k]:
                if f[j]:
                    block[i][k] = block[i][k] + s * f[j]
        rows.extend(r for r in block if any(r))
    return rows


def loewy_series(m: Comodule, route: str = "preimage") -> Filtration:
    """M_0 <= M_1 <= ... with M_n = rho^{-1}(M (x) C_n) = ann_M(J^{n+1}).

    route="ann" uses the powers of the radical of C*; route="preimage" uses
    the coradical filtration of C obtained by iterated wedges.
    """
    cache = m._loewy
    if route in cache:
        return cache[route]
    fld = m.field
    chain = []
    if route == "ann":
        for p in m.over._jpowers:
            term = _kernel_of_rows(fld, m.dim, _coaction_rows(m, p.rows)) if p.dim else Subspace.full(fld, m.dim)
            chain.append(term)
            if term.is_full():
                break
        else:
            raise FiltrationDidNotStabilize("annihilator chain did not reach M")
    elif route == "preimage":
        cfilt = coradical_filtration(m.over, "wedge")
        n = 0
        while True:
            ann = annihilator(cfilt.term(n))
            term = _kernel_of_rows(fld, m.dim, _coaction_rows(m, ann.rows)) if ann.dim else Subspace.full(fld, m.dim)
            chain.append(term)
            if term.is_full():
                break
            n += 1
            if n > m.dim + m.over.dim:
                raise FiltrationDidNotStabilize("Loewy series did not stabilize")
    else:
        raise ValueError(f"unknown route {route!r}")
    filt = Filtration(tuple(chain), m.dim)
    cache[route] = filt
    return filt


def socle(m: Comodule) -> Subspace:
    """Sum of the simple subcomodules, i.e. M_0."""
    return loewy_series(m).chain[0]


def is_completely_reducible(m: Comodule) -> bool:
    return socle(m).is_full()


def _transport_rho(m: Comodule, bm: Matrix, bm_inv: Matrix, bc_inv: Matrix) -> list:
    bm_rows = _sparse_rows(bm)
    inv_m = _sparse_rows(bm_inv)
    inv_c = _sparse_rows(bc_inv)
    out = []
    for a in range(m.dim):
        acc: dict = {}
        for k, x in bm_rows[a]:
            for i, j, s in m._by_k[k]:
                w = x * s
                for b, y in inv_m[i]:
                    wy = w * y
                    for d, t in inv_c[j]:
                        _accumulate(acc, (b, d), wy * t)
        out.append(_clean(acc))
    return out


def layer_coaction_violations(m: Comodule) -> list:
    """Terms of rho(M_n) outside sum_i M_i (x) C_{n-i}; empty when the inclusion holds."""
    mf = loewy_series(m)
    cf = coradical_filtration(m.over, "perp")
    bm, dm = adapted_basis(mf)
    bc, dc = adapted_basis(cf)
    rho = _transport_rho(m, bm, inverse(bm), inverse(bc))
    return filtration_violations(rho, dm, dm, dc)


def associated_graded_comodule(m: Comodule, grc: GradedCoalgebra | None = None) -> Comodule:
    """gr M over gr C; the degree of each basis vector is recorded in ``degrees``."""
    grc = associated_graded(m.over) if grc is None else grc
    mf = loewy_series(m)
    bm, dm = adapted_basis(mf)
    rho = _transport_rho(m, bm, inverse(bm), grc.inverse_map)
    dc = grc.degrees
    bad = filtration_violations(rho, dm, dm, dc)
    if bad:
        raise FiltrationDidNotStabilize(f"Loewy series is not compatible with the coaction: {bad[:3]}")
    graded = [{(b, d): s for (b, d), s in terms.items() if dm[b] + dc[d] == dm[a]}
              for a, terms in enumerate(rho)]
    name = f"gr {m.name}" if m.name else None
    return Comodule(grc.coalgebra, m.dim, graded, name=name, degrees=dm)


def poincare(m: Comodule) -> PoincareSeries:
    return PoincareSeries(loewy_series(m).layers())


def coefficient_coalgebra(m: Comodule) -> Subspace:
    """Span of the matrix coefficients c_{ik} with rho(m_k) = sum m_i (x) c_{ik}."""
    fld = m.field
    vecs: dict = {}
    for k in range(m.dim):
        for i, j, s in m._by_k[k]:
            v = vecs.setdefault((i, k), [fld.zero] * m.over.dim)
            v[j] = v[j] + s
    return span(fld, m.over.dim, vecs.values())


# --------------------------------------------------------------------------
# idempotents and injective envelopes


def lift_idempotents(a: Algebra, residues: Sequence[Sequence[Scalar]], radical: Subspace | None = None) -> list:
    """Lift orthogonal idempotents modulo the radical to exact ones.

    Each residue is sharpened by e <- 3e^2 - 2e^3, then made orthogonal to
    the already lifted ones by passing to the corner (1-f) A (1-f).
    """
    from .coalg import jacobson_radical

    rad = jacobson_radical(a) if radical is None else radical
    rad_ech = rad.echelon()
    fld = a.field
    unit = list(a.unit)
    res = [[fld(x) for x in r] for r in residues]

    def in_rad(v):
        return rad_ech.contains(v)

    def sub(u, v):
        return [x - y for x, y in zip(u, v)]

    for idx, e in enumerate(res):
        if not in_rad(sub(a.product(e, e), e)):
            raise NotIdempotentModRadical(f"residue {idx} is not idempotent modulo the radical")
    for i, e in enumerate(res):
        for j, f in enumerate(res):
            if i != j and not in_rad(a.product(e, f)):
                raise NotOrthogonalModRadical(f"residues {i} and {j} are not orthogonal modulo the radical")
    total = [fld.zero] * a.dim
    for e in res:
        total = [x + y for x, y in zip(total, e)]
    if not in_rad(sub(total, unit)):
        raise NotIdempotentModRadical("residues do not sum to the unit modulo the radical")

    steps = math.ceil(math.log2(max(a.dim, 2))) + 2

    def sharpen(e):
        for _ in range(steps):
            e2 = a.product(e, e)
            if e2 == e:
                return e
            e3 = a.product(e2, e)
            e = [3 * x - 2 * y for x, y in zip(e2, e3)]
        if a.product(e, e) != e:
            raise NotIdempotentModRadical("idempotent iteration did not converge")
        return e

    lifted: list = []
    f = [fld.zero] * a.dim
    for e in res:
        comp = sub(unit, f)
        x = a.product(a.product(comp, e), comp)
        x = sharpen(x)
        lifted.append(x)
        f = [p + q for p, q in zip(f, x)]
    if f != unit:
        raise NotIdempotentModRadical("lifted idempotents do not sum to the unit")
    return lifted


def _check_split(c: Coalgebra, c0: Subspace, split: Sequence[Subspace]) -> None:
    reg = regular_comodule(c)
    if sum(s.dim for s in split) != c0.dim:
        raise NotADecomposition("dimensions of the pieces do not add up to dim C_0")
    ech = Echelon(c.field, c.dim)
    for s in split:
        if s.ambient_dim != c.dim:
            raise NotADecomposition("piece lives in the wrong ambient space")
        if not s.is_subspace_of(c0):
            raise CoradicalNotSplit("piece is not contained in the coradical")
        for r in s.rows:
            if not ech.add(r):
                raise NotADecomposition("pieces are not independent")
        try:
            sub = subcomodule(reg, s)
        except NotASubspace:
            raise CoradicalNotSplit("piece is not a right subcomodule of C") from None
        if not is_completely_reducible(sub):
            raise CoradicalNotSplit("piece is not semisimple")


def hit_map_image(c: Coalgebra, e: Sequence[Scalar]) -> Subspace:
    """Image of x -> sum e(x_1) x_2, the right comodule endomorphism attached to e."""
    fld = c.field
    vecs = []
    for k in range(c.dim):
        v = [fld.zero] * c.dim
        for (i, j), s in c.delta[k].items():
            if e[i]:
                v[j] = v[j] + e[i] * s
        vecs.append(v)
    return span(fld, c.dim, vecs)


def injective_decomposition(c: Coalgebra, simple_split: Sequence[Subspace],
                            jobs: int = 1) -> list:
    """E(S) for each piece S of a decomposition C_0 = (+) S.

    The projection of C_0 onto S is a comodule map, hence of the form
    x -> e(x_1) x_2 for a functional e; e is idempotent modulo J = C_0^perp,
    lifted exactly, and E(S) is the image of the lifted hit map.
    """
    fld = c.field
    c0 = coradical(c)
    _check_split(c, c0, simple_split)
    basis_vecs = []
    owner = []
    for idx, s in enumerate(simple_split):
        for r in s.rows:
            basis_vecs.append(r)
            owner.append(idx)
    residues = []
    for idx in range(len(simple_split)):
        rhs = [c.epsilon(v) if owner[t] == idx else fld.zero for t, v in enumerate(basis_vecs)]
        residues.append(list(solve(basis_vecs, rhs, c.dim, fld)))
    idems = lift_idempotents(c.dual, residues, radical=c.radical)
    reg = regular_comodule(c)

    def envelope(idx):
        image = hit_map_image(c, idems[idx])
        env = subcomodule(reg, image, name=f"E({idx})")
        env.idempotent = tuple(idems[idx])
        return env

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            envs = list(pool.map(envelope, range(len(simple_split))))
    else:
        envs = [envelope(i) for i in range(len(simple_split))]

    total = Echelon(fld, c.dim)
    for env in envs:
        for r in env.embedding.entries:
            if not total.add(r):
                raise NotADecomposition("envelopes are not independent")
    if not total.full:
        raise NotADecomposition("envelopes do not span C")
    return envs


def socle_in_ambient(m: Comodule) -> Subspace:
    """Socle of an embedded comodule, expressed in the ambient coordinates."""
    s = socle(m)
    if m.embedding is None:
        return s
    emb = m.embedding
    return span(m.field, emb.cols, (s.basis @ emb).entries) if s.dim else Subspace.zero(m.field, emb.cols)


def graded_envelope_check(c: Coalgebra, simple_split: Sequence[Subspace]) -> Report:
    """Compare gr E(S) with the envelope of S computed over gr C, for each piece S.

    Both sides are compared degreewise by dimension and through their socles;
    no isomorphism is constructed.
    """
    rep = Report(f"graded envelopes{' ' + c.name if c.name else ''}")
    grc = associated_graded(c)
    envs = injective_decomposition(c, simple_split)
    gsplit = [span(c.field, c.dim, [grc.to_graded_coords(r) for r in s.rows]) for s in simple_split]
    genvs = injective_decomposition(grc.coalgebra, gsplit)
    for idx, (s, env, gs, genv) in enumerate(zip(simple_split, envs, gsplit, genvs)):
        gr_env = associated_graded_comodule(env, grc)
        dims = [0] * (max(gr_env.degrees, default=0) + 1)
        for d in gr_env.degrees:
            dims[d] += 1
        other = poincare(genv)
        rep.add(f"S{idx}: dims gr E(S)", dims)
        rep.add(f"S{idx}: dims E_gr(S)", list(other.coefficients))
        if tuple(dims) != other.coefficients:
            rep.fail(f"S{idx}: gr E(S) has dims {dims}, envelope over gr C has {list(other.coefficients)}")
        if socle_in_ambient(env) != s:
            rep.fail(f"S{idx}: socle of E(S) is not S")
        if socle_in_ambient(genv) != gs:
            rep.fail(f"S{idx}: socle of the graded envelope is not S")
        if socle(gr_env).dim != s.dim:
            rep.fail(f"S{idx}: socle of gr E(S) has dim {socle(gr_env).dim}, expected {s.dim}")
    rep.add("dims E(S)", sorted(e.dim for e in envs))
    rep.add("dims E_gr(S)", sorted(e.dim for e in genvs))
    if sorted(e.dim for e in envs) != sorted(e.dim for e in genvs):
        rep.fail("envelope dimension multisets differ between C and gr C")
    return rep
