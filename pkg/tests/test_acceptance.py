"""Acceptance run: one PASS/FAIL line per criterion.

Runs under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

import functools
import sys
import time

import pytest

from cofrob.braided import (
    FiniteAbelianGroup,
    YDRealization,
    build_qls_bosonization,
    rank2_braiding,
    realize_over_cyclic,
)
from cofrob.builders import (
    SWEEDLER_TO_BOSONIZATION,
    build,
    group_algebra,
    random_path_coalgebra,
    sweedler,
    taft,
    taft_to_bosonization,
)
from cofrob.coalg import associated_graded, coradical, coradical_filtration, validate_coalgebra
from cofrob.comod import (
    graded_envelope_check,
    injective_decomposition,
    layer_coaction_violations,
    loewy_series,
    poincare,
    regular_comodule,
)
from cofrob.exactla import Matrix, span
from cofrob.hopf import (
    coradical_is_hopf_subalgebra,
    default_family,
    diagram,
    gr_hopf,
    hopf_socle,
    integral,
    integral_vanishing_profile,
    is_antipode_stable,
    is_subalgebra,
    poincare_duality_check,
    transport_hopf,
    validate_hopf,
)

PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31)


@functools.cache
def hopf_instances():
    return {
        "sweedler": sweedler(),
        "taft3": taft(3),
        "qls27": build("qls", {"G": "3", "theta": "2"}),
        "kC2": group_algebra([2]),
        "k(C2xC3)": group_algebra([2, 3]),
    }


@functools.cache
def path_instances(n=20):
    return tuple(random_path_coalgebra(seed, max_dim=8) for seed in range(n))


def pointed_trio():
    h = hopf_instances()
    return {k: h[k] for k in ("sweedler", "taft3", "qls27")}


def all_coalgebras():
    out = [(name, h.coalgebra) for name, h in hopf_instances().items()]
    out += [(f"path{seed}", c) for seed, c in enumerate(path_instances())]
    return out


def _envelopes(h):
    pieces = default_family(h).split()
    envs = injective_decomposition(h.coalgebra, pieces)
    unit_line = span(h.field, h.dim, [h.algebra.unit])
    t = next(i for i, s in enumerate(pieces) if s == unit_line)
    return pieces, envs, t


def criterion_1():
    bad = []
    for name, c in all_coalgebras():
        if coradical_filtration(c, "perp") != coradical_filtration(c, "wedge"):
            bad.append(f"{name}: coradical routes differ")
        m = regular_comodule(c)
        if loewy_series(m, "ann") != loewy_series(m, "preimage"):
            bad.append(f"{name}: Loewy routes differ")
    return not bad, bad or f"{len(all_coalgebras())} coalgebras, both route pairs agree"


def criterion_2():
    bad = [name for name, c in all_coalgebras() if layer_coaction_violations(regular_comodule(c))]
    return not bad, bad or "rho(M_n) inside sum M_i (x) C_(n-i) on every instance"


def criterion_3():
    bad = []
    for name, h in pointed_trio().items():
        rep = graded_envelope_check(h.coalgebra, default_family(h).split())
        bad += [f"{name}: {v}" for v in rep.violations]
    return not bad, bad or "gr E(S) and E_gr(S) agree degreewise, socles match"


def criterion_4():
    bad = []
    expected = {"sweedler": (1, 2), "taft3": (2, 3), "qls27": (4, 9)}
    for name, h in hopf_instances().items():
        for side in ("left", "right"):
            if integral(h, side).dimension != 1:
                bad.append(f"{name}: {side} integral dim != 1")
        if coradical_is_hopf_subalgebra(h):
            length = coradical_filtration(h.coalgebra).length
            dg = diagram(h)
            if length != dg.top:
                bad.append(f"{name}: length {length} != top(R) {dg.top}")
            if name in expected and (length, dg.dim) != expected[name]:
                bad.append(f"{name}: (length, dim R) = {(length, dg.dim)}")
    if hopf_instances()["qls27"].dim != 27:
        bad.append("qls27 has the wrong dimension")
    return not bad, bad or "integral dim 1 everywhere; (1,2), (2,3), (4,9) for the pointed trio"


def criterion_5():
    bad = []
    for name, h in pointed_trio().items():
        bad += [f"{name}: {v}" for v in poincare_duality_check(h, default_family(h)).violations]
    _, envs, t = _envelopes(hopf_instances()["qls27"])
    ek = poincare(envs[t]).coefficients
    if ek != (1, 2, 3, 2, 1):
        bad.append(f"qls27: l(E(k)) = {ek}")
    return not bad, bad or "palindromic, l(E(S)) = l(R) dim S; qls27 l(E(k)) = (1,2,3,2,1)"


def criterion_6():
    bad = []
    for name, h in pointed_trio().items():
        pieces, envs, t = _envelopes(h)
        for s, e in zip(pieces, envs):
            if e.dim != envs[t].dim * s.dim:
                bad.append(f"{name}: dim E(S) = {e.dim}, dim E(k) dim S = {envs[t].dim * s.dim}")
    return not bad, bad or "dim E(S) = dim E(k) dim S for every simple"


def criterion_7():
    bad = []
    for name in ("sweedler", "taft3"):
        h = hopf_instances()[name]
        s = hopf_socle(h, default_family(h))
        if s != coradical(h.coalgebra):
            bad.append(f"{name}: hopf socle != H_0")
        if not (is_subalgebra(h, s) and is_antipode_stable(h, s)):
            bad.append(f"{name}: hopf socle not closed")
    return not bad, bad or "hopf socle = H_0, closed under product and antipode"


def criterion_8():
    bad, seen = [], {}
    for name, h in hopf_instances().items():
        if coradical_filtration(h.coalgebra).length >= 1:
            seen[name] = integral_vanishing_profile(h)
            if seen[name] < 0:
                bad.append(f"{name}: profile {seen[name]} < 0")
    return not bad, bad or f"profiles {seen}"


def _realizable(kind, p):
    return any(realize_over_cyclic(rank2_braiding(kind, p, x), p) is not None for x in range(p))


def criterion_9():
    rules = {"A2": 3, "B2": 4, "G2": 3}
    bad = []
    for kind, k in rules.items():
        for p in PRIMES:
            if _realizable(kind, p) != (p % k == 1):
                bad.append(f"{kind} p={p}")
    return not bad, bad or "A2, G2 iff p = 1 mod 3; B2 iff p = 1 mod 4 (exhaustive)"


def criterion_10():
    bad = []
    r2 = YDRealization(FiniteAbelianGroup([2]), ((1,),), ((1,),))
    bos2 = build_qls_bosonization(r2)
    if not transport_hopf(bos2, Matrix(bos2.field, SWEEDLER_TO_BOSONIZATION)).same_structure(sweedler()):
        bad.append("C2 bosonization != Sweedler")
    r3 = YDRealization(FiniteAbelianGroup([3]), ((1,),), ((1,),))
    if not transport_hopf(taft(3), taft_to_bosonization(3)).same_structure(build_qls_bosonization(r3)):
        bad.append("C3 bosonization != Taft T_3")
    return not bad, bad or "Sweedler and T_3 reproduced under the basis maps"


BIPRODUCTS = (
    ([2], [(1,)], [(1,)]),
    ([3], [(1,)], [(1,)]),
    ([4], [(1,)], [(1,)]),
    ([5], [(1,)], [(2,)]),
    ([3], [(1,), (1,)], [(1,), (2,)]),
    ([2, 2], [(1, 0), (0, 1)], [(1, 0), (0, 1)]),
    ([2, 2], [(1, 0), (1, 0)], [(1, 0), (1, 1)]),
    ([4], [(2,)], [(1,)]),
)


def criterion_11():
    bad = []
    for seed in range(100):
        c = random_path_coalgebra(seed, max_dim=8)
        if not validate_coalgebra(c).ok:
            bad.append(f"seed {seed}: coalgebra invalid")
        elif not validate_coalgebra(associated_graded(c).coalgebra).ok:
            bad.append(f"seed {seed}: gr invalid")
    for factors, gs, chis in BIPRODUCTS:
        r = YDRealization(FiniteAbelianGroup(factors), tuple(gs), tuple(chis))
        h = build_qls_bosonization(r)
        if not validate_hopf(h).ok:
            bad.append(f"biproduct {factors} {gs} {chis} invalid")
        elif not validate_hopf(gr_hopf(h)).ok:
            bad.append(f"gr of biproduct {factors} {gs} {chis} invalid")
    return not bad, bad or f"100 path seeds and {len(BIPRODUCTS)} biproducts valid, gr outputs revalidate"


CRITERIA = [
    (1, "route equivalence", criterion_1),
    (2, "Loewy layers inside the filtration tensor", criterion_2),
    (3, "gr of envelopes vs envelopes over gr C", criterion_3),
    (4, "integral dim 1, length = top degree of R", criterion_4),
    (5, "Poincare duality", criterion_5),
    (6, "dim E(S) = dim E(k) dim S", criterion_6),
    (7, "hopf socle", criterion_7),
    (8, "integral vanishing floor", criterion_8),
    (9, "rank-2 congruences", criterion_9),
    (10, "bosonization regression", criterion_10),
    (11, "axiom fuzzing", criterion_11),
]


def _line(num, title, fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t0
    shown = detail if isinstance(detail, str) else "; ".join(detail[:5])
    return ok, dt, f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d} {title} ({dt:.2f}s): {shown}"


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, fn, capsys):
    ok, dt, line = _line(num, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert dt < 10, f"criterion {num} took {dt:.1f}s"


if __name__ == "__main__":
    results = [_line(*c) for c in CRITERIA]
    for _, _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _, _ in results) else 1)
