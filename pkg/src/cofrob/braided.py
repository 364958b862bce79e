"""Diagonal braidings, Cartan data and their realizations over finite abelian
groups, the Nichols dimension formula for finite Cartan type, and explicit
bosonizations of quantum linear spaces."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BadParams, GroupTooLarge, NotQLS, OrderMismatch
from .scalar import CycloField, Scalar, field, natural_field, order_of_unity, primitive_root, promote

__all__ = [
    "FiniteAbelianGroup",
    "BraidingMatrix",
    "CartanDatum",
    "YDRealization",
    "FiniteTypeComponent",
    "braiding_from_realization",
    "cartan_datum",
    "classify_finite_type",
    "positive_root_count",
    "nichols_dimension_cartan",
    "is_quantum_linear_space",
    "realize_over_cyclic",
    "realize_over_group",
    "build_qls_bosonization",
    "rank2_braiding",
]

CYCLIC_CAP = 10 ** 4
CANDIDATE_CAP = 10 ** 7
BOSONIZATION_CAP = 4096


class FiniteAbelianGroup:
    """Z/d_1 x ... x Z/d_s (any positive d_i); elements are exponent tuples."""

    def __init__(self, factors: Sequence[int]):
        factors = tuple(int(d) for d in factors)
        if any(d < 1 for d in factors):
            raise BadParams("cyclic factors must be positive")
        self.factors = factors
        self.order = math.prod(factors)
        self.exponent = math.lcm(*factors) if factors else 1

    def __repr__(self):
        return f"FiniteAbelianGroup({list(self.factors)})"

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def elements(self) -> list:
        return list(itertools.product(*(range(d) for d in self.factors)))

    def normalize(self, g) -> tuple:
        if len(g) != len(self.factors):
            raise BadParams(f"element {tuple(g)} has wrong length for {self}")
        return tuple(int(x) % d for x, d in zip(g, self.factors))

    def index(self, g) -> int:
        idx = 0
        for x, d in zip(self.normalize(g), self.factors):
            idx = idx * d + x
        return idx

    def identity(self) -> tuple:
        return tuple(0 for _ in self.factors)

    def add(self, g, h) -> tuple:
        return tuple((a + b) % d for a, b, d in zip(g, h, self.factors))

    def neg(self, g) -> tuple:
        return tuple((-a) % d for a, d in zip(g, self.factors))

    def char_exponent(self, c, g) -> int:
        """chi_c(g) = zeta_E ^ (returned value), E the exponent."""
        e = self.exponent
        return sum((e // d) * a * b for a, b, d in zip(c, g, self.factors)) % e


@dataclass(frozen=True)
class BraidingMatrix:
    """q_ij with c(x_i (x) x_j) = q_ij x_j (x) x_i."""

    q: tuple

    def __post_init__(self):
        q = tuple(tuple(r) for r in self.q)
        object.__setattr__(self, "q", q)
        t = len(q)
        if any(len(r) != t for r in q):
            raise BadParams("braiding matrix must be square")
        flds = {x.field for r in q for x in r}
        if len(flds) > 1:
            raise BadParams("braiding entries live in different fields")
        for i, r in enumerate(q):
            for j, x in enumerate(r):
                if order_of_unity(x) is None:
                    raise BadParams(f"q[{i}][{j}] is not a root of unity")
            if r[i] == 1:
                raise BadParams(f"q[{i}][{i}] = 1 is excluded")

    @property
    def theta(self) -> int:
        return len(self.q)

    @property
    def field(self) -> CycloField:
        return self.q[0][0].field if self.q else field(1)

    def orders(self) -> list:
        return [order_of_unity(self.q[i][i]) for i in range(self.theta)]


@dataclass(frozen=True)
class CartanDatum:
    a: tuple

    def __post_init__(self):
        a = tuple(tuple(int(x) for x in r) for r in self.a)
        object.__setattr__(self, "a", a)
        for i, r in enumerate(a):
            if len(r) != len(a):
                raise BadParams("Cartan matrix must be square")
            if r[i] != 2:
                raise BadParams("Cartan diagonal must be 2")
            if any(x > 0 for j, x in enumerate(r) if j != i):
                raise BadParams("off-diagonal Cartan entries must be <= 0")

    @property
    def theta(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class YDRealization:
    """Group-likes g_i and characters chi_i (exponent vectors) with chi_j(g_i) = q_ij."""

    group: FiniteAbelianGroup
    grouplikes: tuple
    characters: tuple

    def __post_init__(self):
        g = self.group
        object.__setattr__(self, "grouplikes", tuple(g.normalize(x) for x in self.grouplikes))
        object.__setattr__(self, "characters", tuple(g.normalize(x) for x in self.characters))
        if len(self.grouplikes) != len(self.characters):
            raise BadParams("need as many characters as group-likes")

    @property
    def theta(self) -> int:
        return len(self.grouplikes)


@dataclass(frozen=True)
class FiniteTypeComponent:
    label: str
    vertices: tuple  # vertices[t] is the original index of catalogue vertex t

    @property
    def series(self) -> str:
        return self.label.split("_")[0]

    @property
    def rank(self) -> int:
        return len(self.vertices)


def braiding_from_realization(r: YDRealization, fld: CycloField | None = None) -> BraidingMatrix:
    e = r.group.exponent
    fld = fld or natural_field(e)
    z = primitive_root(fld, e)
    q = [[z ** r.group.char_exponent(c, g) for c in r.characters] for g in r.grouplikes]
    return BraidingMatrix(tuple(tuple(x) for x in q))


# --------------------------------------------------------------------------
# Cartan data and finite type


def cartan_datum(q: BraidingMatrix) -> CartanDatum | None:
    """a_ij in (-ord q_ii, 0] with q_ij q_ji = q_ii^a_ij, or None."""
    t = q.theta
    a = [[2 if i == j else 0 for j in range(t)] for i in range(t)]
    for i in range(t):
        n = order_of_unity(q.q[i][i])
        for j in range(t):
            if i == j:
                continue
            target = q.q[i][j] * q.q[j][i]
            p = q.field.one
            inv = q.q[i][i] ** -1
            for k in range(n):
                if p == target:
                    a[i][j] = -k
                    break
                p = p * inv
            else:
                return None
    return CartanDatum(tuple(tuple(r) for r in a))


def _catalogue(series: str, n: int):
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if series == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif series == "B":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -1, -2)
    elif series == "C":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 2, n - 1, -2, -1)
    elif series == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif series == "E":
        chain = [0, 2] + list(range(3, n))
        for x, y in zip(chain, chain[1:]):
            link(x, y)
        link(1, 3)
    elif series == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif series == "G":
        link(0, 1, -1, -3)
    return a


def positive_root_count(label: str) -> int:
    series, n = label.split("_")
    n = int(n)
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[series]


def _matches(a, verts, series, n) -> bool:
    cat = _catalogue(series, n)
    return all(a[verts[s]][verts[t]] == cat[s][t] for s in range(n) for t in range(n))


def _path_from(adj, start) -> list:
    path, prev = [start], None
    while True:
        nxt = [v for v in adj[path[-1]] if v != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _arm(adj, center, first) -> list:
    arm, prev = [first], center
    while True:
        nxt = [v for v in adj[arm[-1]] if v != prev]
        if not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def _classify_component(a, comp) -> FiniteTypeComponent | None:
    n = len(comp)
    if n == 1:
        return FiniteTypeComponent("A_1", tuple(comp))
    adj = {v: [w for w in comp if w != v and a[v][w] != 0] for v in comp}
    edges = [(v, w) for v in comp for w in adj[v] if v < w]
    if len(edges) != n - 1:
        return None  # contains a cycle
    mult = {(v, w): a[v][w] * a[w][v] for v, w in edges}
    if any(m not in (1, 2, 3) for m in mult.values()):
        return None
    degs = {v: len(adj[v]) for v in comp}
    ends = sorted(v for v in comp if degs[v] == 1)
    candidates = []
    if max(degs.values()) <= 2:
        for e in ends:
            path = _path_from(adj, e)
            if all(m == 1 for m in mult.values()):
                candidates.append(("A", path))
            else:
                for s in ("B", "C", "F", "G"):
                    candidates.append((s, path))
    elif all(m == 1 for m in mult.values()):
        branch = [v for v in comp if degs[v] == 3]
        if len(branch) != 1 or max(degs.values()) > 3:
            return None
        b = branch[0]
        arms = sorted((_arm(adj, b, w) for w in sorted(adj[b])), key=len)
        lens = tuple(len(x) for x in arms)
        if lens[0] == 1 and lens[1] == 1:
            long = arms[2]
            candidates.append(("D", list(reversed(long)) + [b, arms[0][0], arms[1][0]]))
        elif lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
            short, mid, long = arms
            order = [mid[1], short[0], mid[0], b] + long
            candidates.append(("E", order))
    for series, verts in candidates:
        if series == "F" and n != 4 or series == "G" and n != 2:
            continue
        if series == "E" and n not in (6, 7, 8):
            continue
        if series == "D" and n < 4:
            continue
        if _matches(a, verts, series, n):
            return FiniteTypeComponent(f"{series}_{n}", tuple(verts))
    return None


def classify_finite_type(datum: CartanDatum) -> list | None:
    """Finite-type components in order of their least vertex, or None (NotFinite)."""
    a = datum.a
    t = datum.theta
    for i in range(t):
        for j in range(t):
            if (a[i][j] == 0) != (a[j][i] == 0):
                return None
    seen: set = set()
    comps = []
    for v in range(t):
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in range(t):
                if y != x and a[x][y] != 0 and y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        c = _classify_component(a, comp)
        if c is None:
            return None
        out.append(c)
    return out


def nichols_dimension_cartan(q: BraidingMatrix, datum: CartanDatum | None = None) -> int | None:
    """prod over components of N^|Phi+|, under the common-odd-order hypotheses."""
    datum = datum if datum is not None else cartan_datum(q)
    if datum is None:
        return None
    comps = classify_finite_type(datum)
    if comps is None:
        return None
    orders = q.orders()
    total = 1
    for c in comps:
        ns = {orders[v] for v in c.vertices}
        if len(ns) != 1:
            return None
        n = ns.pop()
        # rank one is the truncated polynomial algebra k[x]/(x^N) for any N
        if c.label != "A_1":
            if n % 2 == 0:
                return None
            if c.series == "G" and n % 3 == 0:
                return None
        total *= n ** positive_root_count(c.label)
    return total


def is_quantum_linear_space(q: BraidingMatrix) -> bool:
    t = q.theta
    for i in range(t):
        n = order_of_unity(q.q[i][i])
        if n is None or n < 2:
            return False
        for j in range(i + 1, t):
            if q.q[i][j] * q.q[j][i] != 1:
                return False
    return True


# --------------------------------------------------------------------------
# realizations


def _discrete_logs(q: BraidingMatrix, m: int) -> list | None:
    """k_ij with q_ij = zeta_m^k_ij, or None if some order does not divide m."""
    big = field(math.lcm(q.field.conductor, m))
    z = primitive_root(big, m)
    table = {}
    p = big.one
    for k in range(m):
        table[p] = k
        p = p * z
    out = []
    for row in q.q:
        r = []
        for x in row:
            k = table.get(promote(x, big))
            if k is None:
                return None
            r.append(k)
        out.append(r)
    return out


def _solve_column(bs, ks, m):
    """Least c in [0, m) with b_i c = k_i mod m for all i, or None."""
    b0, k0 = bs[0], ks[0]
    g = math.gcd(b0, m)
    if k0 % g:
        return None
    step = m // g
    c0 = (k0 // g) * pow(b0 // g, -1, step) % step if step > 1 else 0
    for c in range(c0, m, step):
        if all((b * c - k) % m == 0 for b, k in zip(bs[1:], ks[1:])):
            return c
    return None


def realize_over_cyclic(q: BraidingMatrix, m: int, cap: int = CYCLIC_CAP,
                        candidate_cap: int = CANDIDATE_CAP) -> YDRealization | None:
    """Lexicographically least b in (Z/m)^theta admitting characters c; None = exhaustive no."""
    if m < 1:
        raise BadParams("m must be positive")
    if m > cap:
        raise GroupTooLarge(f"m = {m} exceeds cap {cap}")
    for i, row in enumerate(q.q):
        for j, x in enumerate(row):
            if m % order_of_unity(x):
                raise OrderMismatch(f"order of q[{i}][{j}] does not divide {m}")
    t = q.theta
    if m ** t > candidate_cap:
        raise GroupTooLarge(f"{m}^{t} candidates exceed cap {candidate_cap}")
    ks = _discrete_logs(q, m)
    for b in itertools.product(range(m), repeat=t):
        cs = []
        for j in range(t):
            c = _solve_column(b, [ks[i][j] for i in range(t)], m)
            if c is None:
                break
            cs.append(c)
        else:
            grp = FiniteAbelianGroup([m])
            return YDRealization(grp, tuple((x,) for x in b), tuple((c,) for c in cs))
    return None


def realize_over_group(q: BraidingMatrix, grp: FiniteAbelianGroup, cap: int = CANDIDATE_CAP,
                       count: bool = False):
    """First witness over grp in lexicographic order of group-like tuples.

    With ``count=True`` returns ``(witness, number_of_witnesses)``.
    """
    t = q.theta
    if t == 0:
        w = YDRealization(grp, (), ())
        return (w, 1) if count else w
    ks = _discrete_logs(q, grp.exponent)
    if ks is None:
        return (None, 0) if count else None
    elems = grp.elements()
    if len(elems) ** t > cap:
        raise GroupTooLarge(f"{len(elems)}^{t} candidates exceed cap {cap}")
    first = None
    total = 0
    for gs in itertools.product(elems, repeat=t):
        table: dict = {}
        for c in elems:
            key = tuple(grp.char_exponent(c, g) for g in gs)
            if key in table:
                table[key][1] += 1
            else:
                table[key] = [c, 1]
        cols = [table.get(tuple(ks[i][j] for i in range(t))) for j in range(t)]
        if any(x is None for x in cols):
            continue
        if first is None:
            first = YDRealization(grp, gs, tuple(x[0] for x in cols))
            if not count:
                return first
        total += math.prod(x[1] for x in cols)
    return (first, total) if count else first


def rank2_braiding(kind: str, p: int, x: int, u: int = 1) -> BraidingMatrix:
    """Rank-2 Cartan braidings over Q(zeta_p) with q_22 = zeta_p^u and q_12 = zeta_p^x."""
    fld = field(p)
    z = fld.zeta(1)
    q22 = z ** u
    if kind == "A2":
        q11, prod = q22, q22 ** -1
    elif kind == "B2":
        q11, prod = q22 ** 2, q22 ** -2
    elif kind == "G2":
        q11 = q22 ** 3
        prod = q11 ** -1
    else:
        raise BadParams(f"unknown rank-2 type {kind!r}")
    q12 = z ** x
    q21 = prod * q12 ** -1
    return BraidingMatrix(((q11, q12), (q21, q22)))


# --------------------------------------------------------------------------
# bosonization of quantum linear spaces


def _q_binomial_row(n: int, q: Scalar) -> list:
    """[n choose k]_q for k = 0..n."""
    row = [q.field.one]
    for m in range(1, n + 1):
        new = [q.field.one] * (m + 1)
        for k in range(1, m):
            new[k] = row[k - 1] + q ** k * row[k]
        row = new
    return row


def build_qls_bosonization(r: YDRealization, cap: int = BOSONIZATION_CAP, fld: CycloField | None = None):
    """R # kG for the quantum linear space of the realization.

    Basis x^a g in lexicographic order of (a_1, ..., a_theta, index of g).
    """
    from .builders import hopf_from_generators

    grp = r.group
    e = grp.exponent
    fld = fld or natural_field(e)
    q = braiding_from_realization(r, fld)
    if not is_quantum_linear_space(q):
        raise NotQLS("braiding is not of quantum linear space type")
    ns = q.orders()
    t = r.theta
    dim = grp.order * math.prod(ns)
    if dim > cap:
        raise GroupTooLarge(f"bosonization of dim {dim} exceeds cap {cap}")
    z = primitive_root(fld, e)
    zpow = [z ** k for k in range(e)]
    elems = grp.elements()
    monos = list(itertools.product(*(range(n) for n in ns)))
    basis = [(a, g) for a in monos for g in elems]
    index = {b: k for k, b in enumerate(basis)}
    chi = [[grp.char_exponent(c, g) for g in elems] for c in r.characters]
    gidx = [grp.index(g) for g in r.grouplikes]
    # q_ji = chi_i(g_j)
    qexp = [[grp.char_exponent(r.characters[i], r.grouplikes[j]) for i in range(t)] for j in range(t)]

    mult = {}
    for p, (a, g) in enumerate(basis):
        gi = grp.index(g)
        for s, (b, h) in enumerate(basis):
            if any(x + y >= n for x, y, n in zip(a, b, ns)):
                continue
            ex = sum(b[i] * chi[i][gi] for i in range(t))
            ex += sum(a[j] * b[i] * qexp[j][i] for i in range(t) for j in range(i + 1, t))
            k = index[(tuple(x + y for x, y in zip(a, b)), grp.add(g, h))]
            mult[(p, s)] = {k: zpow[ex % e]}

    zero_a = tuple(0 for _ in ns)
    unit_idx = index[(zero_a, grp.identity())]

    def x_idx(i):
        a = tuple(1 if j == i else 0 for j in range(t))
        return index[(a, grp.identity())]

    def g_idx(g):
        return index[(zero_a, g)]

    gens_delta = {}
    for g in elems:
        gens_delta[g_idx(g)] = {(g_idx(g), g_idx(g)): fld.one}
    for i in range(t):
        gens_delta[x_idx(i)] = {(x_idx(i), unit_idx): fld.one, (g_idx(r.grouplikes[i]), x_idx(i)): fld.one}
    words = []
    for a, g in basis:
        w = [x_idx(i) for i in range(t) for _ in range(a[i])]
        words.append(w + [g_idx(g)])
    counit = [fld.one if a == zero_a else fld.zero for a, g in basis]

    def s_gen(alg):
        out = {}
        for g in elems:
            out[g_idx(g)] = {g_idx(grp.neg(g)): fld.one}
        for i in range(t):
            ginv = g_idx(grp.neg(r.grouplikes[i]))
            out[x_idx(i)] = {k: -v for k, v in alg.basis_product(ginv, x_idx(i)).items()}
        return out

    name = f"qls G={list(grp.factors)} theta={t}"
    h = hopf_from_generators(fld, dim, mult, unit_idx, counit, gens_delta, s_gen, words, name=name)
    h.grouplikes = [_unit_vector(fld, dim, g_idx(g)) for g in elems]
    h.dual_grouplikes = [[zpow[grp.char_exponent(c, g)] if a == zero_a else fld.zero for a, g in basis]
                         for c in elems]
    h.grading = tuple(sum(a) for a, g in basis)
    h.basis_labels = tuple(_label(a, g, grp) for a, g in basis)
    h.realization = r
    return h


def _unit_vector(fld, n, k):
    return [fld.one if i == k else fld.zero for i in range(n)]


def _label(a, g, grp) -> str:
    parts = [f"x{i + 1}^{n}" if n > 1 else f"x{i + 1}" for i, n in enumerate(a) if n]
    gl = "g" + "".join(str(x) for x in g) if grp.factors else ""
    if any(g):
        parts.append(gl)
    return "*".join(parts) if parts else "1"
