"""Standard instances: group algebras, Sweedler, Taft, quantum linear space
bosonizations and random path coalgebras.  Every builder validates its output."""

from __future__ import annotations

import random
from typing import Sequence

from .braided import FiniteAbelianGroup, YDRealization, build_qls_bosonization
from .coalg import Algebra, Coalgebra, _accumulate, _clean, transport_coalgebra
from .comod import Comodule
from .errors import BadParams, CofrobError
from .exactla import Echelon, Matrix, inverse
from .hopf import HopfAlgebra, validate_hopf
from .scalar import CycloField, field, natural_field, primitive_root

__all__ = [
    "group_algebra",
    "sweedler",
    "taft",
    "qls_bosonization",
    "path_coalgebra",
    "random_path_coalgebra",
    "random_invertible",
    "hopf_from_generators",
    "transport_comodule",
    "build",
    "BUILDERS",
    "SWEEDLER_TO_BOSONIZATION",
    "taft_to_bosonization",
]


def _unit(fld, n, k):
    return [fld.one if i == k else fld.zero for i in range(n)]


def _check(h: HopfAlgebra) -> HopfAlgebra:
    rep = validate_hopf(h)
    if not rep.ok:
        raise CofrobError(f"builder produced an invalid Hopf algebra: {rep.violations[:3]}")
    return h


def hopf_from_generators(fld: CycloField, dim: int, mult: dict, unit_idx: int, counit,
                         gens_delta: dict, s_gen, words, name: str | None = None) -> HopfAlgebra:
    """Extend Delta multiplicatively and S anti-multiplicatively from generators.

    ``words[k]`` lists generator indices whose ordered product is exactly e_k;
    ``s_gen(algebra)`` returns S on each generator as a sparse dict.
    """
    alg = Algebra(fld, dim, mult, _unit(fld, dim, unit_idx), name=name)
    one = {(unit_idx, unit_idx): fld.one}

    def tensor_mul(x: dict, y: dict) -> dict:
        out: dict = {}
        for (a, b), s in x.items():
            for (c, d), t in y.items():
                st = s * t
                left = alg.basis_product(a, c)
                if not left:
                    continue
                right = alg.basis_product(b, d)
                for k1, u in left.items():
                    for k2, v in right.items():
                        _accumulate(out, (k1, k2), st * u * v)
        return _clean(out)

    def vec_mul(x: dict, y: dict) -> dict:
        out: dict = {}
        for a, s in x.items():
            for b, t in y.items():
                for k, u in alg.basis_product(a, b).items():
                    _accumulate(out, k, s * t * u)
        return _clean(out)

    sg = s_gen(alg)
    delta = []
    cols = []
    for w in words:
        d = one
        s = {unit_idx: fld.one}
        for gen in w:
            d = tensor_mul(d, gens_delta[gen])
            s = vec_mul(sg[gen], s)
        delta.append(d)
        cols.append(s)
    coal = Coalgebra(fld, dim, delta, counit, name=name)
    ant = Matrix._trusted(fld, tuple(tuple(cols[k].get(r, fld.zero) for k in range(dim)) for r in range(dim)), dim)
    return HopfAlgebra(coal, alg, ant, name=name)


# --------------------------------------------------------------------------
# group algebras


def group_algebra(factors: Sequence[int], fld: CycloField | None = None) -> HopfAlgebra:
    """kG for G = Z/d_1 x ... x Z/d_s; the field defaults to Q(zeta_exponent)."""
    grp = FiniteAbelianGroup(factors)
    fld = fld or natural_field(grp.exponent)
    elems = grp.elements()
    n = len(elems)
    delta = [{(k, k): fld.one} for k in range(n)]
    mult = {(i, j): {grp.index(grp.add(g, h)): fld.one} for i, g in enumerate(elems) for j, h in enumerate(elems)}
    ident = grp.index(grp.identity())
    ant = [[fld.zero] * n for _ in range(n)]
    for k, g in enumerate(elems):
        ant[grp.index(grp.neg(g))][k] = fld.one
    name = "k[" + "x".join(f"C{d}" for d in factors) + "]" if factors else "k"
    h = HopfAlgebra(Coalgebra(fld, n, delta, [fld.one] * n, name=name),
                    Algebra(fld, n, mult, _unit(fld, n, ident), name=name),
                    Matrix(fld, ant), name=name)
    z = primitive_root(fld, grp.exponent)
    h.grouplikes = [_unit(fld, n, k) for k in range(n)]
    h.dual_grouplikes = [[z ** grp.char_exponent(c, g) for g in elems] for c in elems]
    h.grading = tuple(0 for _ in range(n))
    h.basis_labels = tuple("g" + "".join(map(str, g)) for g in elems)
    return _check(h)


# --------------------------------------------------------------------------
# Sweedler and Taft


# Bosonization basis (1, g, x, xg) written in the Sweedler basis (1, g, x, gx): xg = -gx.
SWEEDLER_TO_BOSONIZATION = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1))


def sweedler() -> HopfAlgebra:
    """H_4 on the basis (1, g, x, gx): g^2 = 1, x^2 = 0, xg = -gx."""
    fld = field(1)
    o, m, z = fld.one, -fld.one, fld.zero
    delta = [
        {(0, 0): o},
        {(1, 1): o},
        {(2, 0): o, (1, 2): o},
        {(3, 1): o, (0, 3): o},
    ]
    table = {
        (1, 1): {0: o}, (1, 2): {3: o}, (1, 3): {2: o},
        (2, 1): {3: m}, (3, 1): {2: m},
    }
    mult = {}
    for i in range(4):
        mult[(0, i)] = {i: o}
        mult[(i, 0)] = {i: o}
    mult.update(table)
    # S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    ant = [[o, z, z, z], [z, o, z, z], [z, z, z, o], [z, z, m, z]]
    h = HopfAlgebra(Coalgebra(fld, 4, delta, [o, o, z, z], name="sweedler"),
                    Algebra(fld, 4, mult, [o, z, z, z], name="sweedler"),
                    Matrix(fld, ant), name="sweedler")
    h.grouplikes = [_unit(fld, 4, 0), _unit(fld, 4, 1)]
    h.dual_grouplikes = [[o, o, z, z], [o, m, z, z]]
    h.grading = (0, 0, 1, 1)
    h.basis_labels = ("1", "g", "x", "gx")
    return _check(h)


def taft(n: int) -> HopfAlgebra:
    """T_n on the basis g^i x^j (index i*n + j): g^n = 1, x^n = 0, gx = zeta xg."""
    if n < 2:
        raise BadParams("Taft algebra needs N >= 2")
    fld = natural_field(n)
    q = primitive_root(fld, n)
    qinv = q ** -1
    qp = [qinv ** k for k in range(n)]
    dim = n * n
    mult = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j + l >= n:
                        continue
                    # x^j g^k = q^{-jk} g^k x^j
                    mult[(i * n + j, k * n + l)] = {((i + k) % n) * n + j + l: qp[(j * k) % n]}
    g_idx, x_idx = n, 1
    gens_delta = {g_idx: {(g_idx, g_idx): fld.one}, x_idx: {(x_idx, 0): fld.one, (g_idx, x_idx): fld.one}}

    def s_gen(alg):
        ginv = (n - 1) * n
        return {g_idx: {ginv: fld.one},
                x_idx: {k: -v for k, v in alg.basis_product(ginv, x_idx).items()}}

    words = [[g_idx] * i + [x_idx] * j for i in range(n) for j in range(n)]
    counit = [fld.one if j == 0 else fld.zero for i in range(n) for j in range(n)]
    name = f"taft{n}"
    h = hopf_from_generators(fld, dim, mult, 0, counit, gens_delta, s_gen, words, name=name)
    h.grouplikes = [_unit(fld, dim, i * n) for i in range(n)]
    h.dual_grouplikes = [[q ** (c * i) if j == 0 else fld.zero for i in range(n) for j in range(n)]
                         for c in range(n)]
    h.grading = tuple(j for i in range(n) for j in range(n))
    h.basis_labels = tuple(("g^%d" % i if i else "") + ("x^%d" % j if j else "") or "1"
                           for i in range(n) for j in range(n))
    return _check(h)


def taft_to_bosonization(n: int) -> Matrix:
    """Rows: the bosonization basis x^a g^i written in the Taft basis, x^a g^i = zeta^(-ai) g^i x^a."""
    fld = natural_field(n)
    qinv = primitive_root(fld, n) ** -1
    rows = []
    for a in range(n):
        for i in range(n):
            r = [fld.zero] * (n * n)
            r[i * n + a] = qinv ** (a * i)
            rows.append(r)
    return Matrix(fld, rows)


def qls_bosonization(factors: Sequence[int], grouplikes, characters, cap: int | None = None) -> HopfAlgebra:
    grp = FiniteAbelianGroup(factors)
    r = YDRealization(grp, tuple(tuple(g) for g in grouplikes), tuple(tuple(c) for c in characters))
    h = build_qls_bosonization(r) if cap is None else build_qls_bosonization(r, cap=cap)
    return _check(h)


# --------------------------------------------------------------------------
# path coalgebras


def path_coalgebra(nverts: int, arrows: Sequence[tuple], max_len: int = 3,
                   fld: CycloField | None = None, name: str | None = None) -> Coalgebra:
    """Paths of length <= max_len; Delta(p) = sum over splittings p = p1 p2."""
    fld = fld or field(1)
    frontier = [((), v, v) for v in range(nverts)]
    arrow_paths = []
    for _ in range(max_len):
        nxt = []
        for p, s, t in frontier:
            for a, (src, tgt) in enumerate(arrows):
                if src == t:
                    nxt.append((p + (a,), s, tgt))
        arrow_paths.extend(nxt)
        frontier = nxt
    keys = [("v", v) for v in range(nverts)] + [("p", p) for p, s, t in arrow_paths]
    ends = {("v", v): (v, v) for v in range(nverts)}
    ends.update({("p", p): (s, t) for p, s, t in arrow_paths})
    index = {k: i for i, k in enumerate(keys)}

    def key_of(seq, at):
        return ("p", seq) if seq else ("v", at)

    delta = []
    for k in keys:
        if k[0] == "v":
            delta.append({(index[k], index[k]): fld.one})
            continue
        p = k[1]
        s, t = ends[k]
        terms = {}
        for cut in range(len(p) + 1):
            mid = arrows[p[cut - 1]][1] if cut else s
            left = key_of(p[:cut], s if cut == 0 else mid)
            right = key_of(p[cut:], mid)
            terms[(index[left], index[right])] = fld.one
        delta.append(terms)
    counit = [fld.one if k[0] == "v" else fld.zero for k in keys]
    return Coalgebra(fld, len(keys), delta, counit, name=name)


def random_invertible(rng: random.Random, fld: CycloField, n: int, span: int = 2) -> Matrix:
    while True:
        rows = [[fld(rng.randint(-span, span)) for _ in range(n)] for _ in range(n)]
        if len(Echelon(fld, n).extend(rows)) == n:
            return Matrix(fld, rows)


def random_path_coalgebra(seed: int, max_dim: int = 8, scramble: bool = True) -> Coalgebra:
    """Seeded random truncated path coalgebra of dim <= max_dim, optionally in a random basis."""
    rng = random.Random(seed)
    fld = field(1)
    while True:
        nverts = rng.randint(1, 3)
        narrows = rng.randint(0, 4)
        arrows = [(rng.randrange(nverts), rng.randrange(nverts)) for _ in range(narrows)]
        max_len = rng.randint(1, 3)
        c = path_coalgebra(nverts, arrows, max_len, fld, name=f"path{seed}")
        if c.dim <= max_dim:
            break
    nv = sum(1 for e in c.counit if e)
    vertices = [_unit(fld, c.dim, v) for v in range(nv)]
    if scramble and c.dim > 1:
        basis = random_invertible(rng, fld, c.dim)
        inv = inverse(basis)
        c = transport_coalgebra(c, basis, inv, name=c.name)
        vertices = [list(inv.entries[v]) for v in range(nv)]
    c.grouplikes = vertices
    return c


def transport_comodule(m: Comodule, basis: Matrix, name: str | None = None) -> Comodule:
    """The same comodule in the basis u_a = sum_k basis[a][k] m_k (coalgebra basis unchanged)."""
    inv = inverse(basis)
    rho = []
    for a in range(m.dim):
        acc: dict = {}
        for k, bk in enumerate(basis.entries[a]):
            if not bk:
                continue
            for (i, j), s in m.rho[k].items():
                for p, x in enumerate(inv.entries[i]):
                    if x:
                        _accumulate(acc, (p, j), bk * s * x)
        rho.append(_clean(acc))
    return Comodule(m.over, m.dim, rho, name=name)


# --------------------------------------------------------------------------
# registry used by the model loader and the CLI


def _ints(v) -> list:
    if isinstance(v, (list, tuple)):
        return [int(x) for x in v]
    s = str(v).strip().strip("[]()")
    return [int(x) for x in s.replace(";", ",").split(",") if x.strip()] if s else []


def _vectors(v) -> list:
    """'1,0;0,1' or [[1,0],[0,1]] -> list of int tuples."""
    if isinstance(v, (list, tuple)):
        return [tuple(int(x) for x in r) for r in v]
    return [tuple(int(x) for x in part.split(",") if x.strip()) for part in str(v).split(";") if part.strip()]


def build(name: str, params: dict | None = None):
    params = dict(params or {})
    try:
        if name in ("group_algebra", "group"):
            return group_algebra(_ints(params.get("G", params.get("factors", "2"))))
        if name == "sweedler":
            return sweedler()
        if name == "taft":
            n = int(params.get("N", 3))
            return sweedler() if n == 2 and params.get("sweedler") else taft(n)
        if name in ("qls_bosonization", "qls"):
            factors = _ints(params.get("G", "2"))
            if "g" in params:
                gs = _vectors(params["g"])
                cs = _vectors(params["chi"])
            else:
                theta = int(params.get("theta", 1))
                gs = [(1,) * len(factors)] * theta
                cs = [(1,) * len(factors)] * theta
                if theta == 2 and len(factors) == 1:
                    cs = [(1,), (factors[0] - 1,)]
            cap = int(params["cap"]) if "cap" in params else None
            return qls_bosonization(factors, gs, cs, cap=cap)
        if name in ("path", "random_path"):
            return random_path_coalgebra(int(params.get("seed", 0)), int(params.get("max_dim", 8)),
                                         str(params.get("scramble", "1")) not in ("0", "false", "no"))
    except (ValueError, TypeError, KeyError) as exc:
        raise BadParams(f"bad parameters for builder {name!r}: {exc}") from exc
    raise BadParams(f"unknown builder {name!r}")


BUILDERS = ("group_algebra", "sweedler", "taft", "qls_bosonization", "random_path")
