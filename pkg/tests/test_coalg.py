import pytest
from hypothesis import given, strategies as st

from cofrob.builders import path_coalgebra, random_path_coalgebra
from cofrob.coalg import (
    Coalgebra,
    associated_graded,
    coalgebra_filtration_violations,
    coradical,
    coradical_filtration,
    dual_algebra,
    grouplike_check,
    ideal_powers,
    is_subcoalgebra,
    jacobson_radical,
    validate_algebra,
    validate_coalgebra,
    wedge,
)
from cofrob.errors import AmbientMismatch
from cofrob.exactla import Subspace
from cofrob.scalar import field

Q = field(1)


def basis(n, *idx, fld=Q):
    return Subspace.coordinate(fld, n, idx)


def test_validate_builders(kc2, h4, t3):
    for h in (kc2, h4, t3):
        assert validate_coalgebra(h.coalgebra).ok


def test_perturbed_group_coalgebra_flagged(kc2):
    c = kc2.coalgebra
    delta = [dict(r) for r in c.delta]
    delta[1][(1, 1)] = delta[1].get((1, 1), c.field.zero) + 1
    bad = Coalgebra(c.field, 2, delta, c.counit)
    rep = validate_coalgebra(bad)
    # 2 g(x)g is still coassociative; the counit law is what breaks
    assert not rep.ok
    assert any("counit" in v for v in rep.violations)
    delta = [dict(r) for r in c.delta]
    delta[1][(0, 1)] = c.field.one
    rep = validate_coalgebra(Coalgebra(c.field, 2, delta, c.counit))
    assert any("coassociativity" in v for v in rep.violations)


def test_dual_algebras(kc2, h4):
    a = dual_algebra(kc2.coalgebra)
    assert a.dim == 2 and validate_algebra(a).ok
    for i in range(2):
        for j in range(2):
            assert a.basis_product(i, j) == a.basis_product(j, i)
    assert jacobson_radical(a).dim == 0
    ah = dual_algebra(h4.coalgebra)
    assert validate_algebra(ah).ok
    assert jacobson_radical(ah).dim == 2
    one = Coalgebra(Q, 1, [{(0, 0): 1}], [1])
    k = dual_algebra(one)
    assert k.dim == 1 and k.basis_product(0, 0) == {0: Q.one}


def test_radical_nilpotency(h4, t3):
    a = dual_algebra(h4.coalgebra)
    j = jacobson_radical(a)
    assert [p.dim for p in ideal_powers(a, j)][-1] == 0
    assert jacobson_radical(dual_algebra(t3.coalgebra)).dim == 6


def test_coradicals(kc2, h4, t3):
    assert coradical(kc2.coalgebra).is_full()
    assert coradical(h4.coalgebra) == basis(4, 0, 1)
    assert coradical(t3.coalgebra) == basis(9, 0, 3, 6, fld=t3.field)


def test_wedge(kc2, h4):
    c = kc2.coalgebra
    assert wedge(c, coradical(c), coradical(c)).is_full()
    assert wedge(h4.coalgebra, basis(4, 0, 1), basis(4, 0, 1)).is_full()
    z = Subspace.zero(Q, 4)
    assert wedge(h4.coalgebra, z, z).dim == 0
    with pytest.raises(AmbientMismatch):
        wedge(h4.coalgebra, z, Subspace.zero(Q, 3))


@pytest.mark.parametrize("route", ["perp", "wedge"])
def test_filtration_examples(route, kc2, h4, t3):
    assert coradical_filtration(kc2.coalgebra, route).length == 0
    f = coradical_filtration(h4.coalgebra, route)
    assert f.length == 1 and f.dims == (2, 4)
    assert coradical_filtration(t3.coalgebra, route).dims == (3, 6, 9)


def test_filtration_terms_are_subcoalgebras(t3, qls27):
    for h in (t3, qls27):
        f = coradical_filtration(h.coalgebra)
        assert all(is_subcoalgebra(h.coalgebra, s) for s in f.chain)
        assert coalgebra_filtration_violations(h.coalgebra, f) == []


def test_route_equivalence_on_paths(paths):
    for c in paths:
        assert coradical_filtration(c, "perp") == coradical_filtration(c, "wedge")


def test_associated_graded(kc2, h4, t3):
    g = associated_graded(kc2.coalgebra)
    assert g.degree_dims == (2,)
    for h, dims in ((h4, (2, 2)), (t3, (3, 3, 3))):
        g = associated_graded(h.coalgebra)
        assert g.degree_dims == dims
        assert validate_coalgebra(g.coalgebra).ok
        # gr of a graded coalgebra keeps the same degree profile
        assert associated_graded(g.coalgebra).degree_dims == dims


def test_grouplikes(kc2, h4):
    assert grouplike_check(kc2.coalgebra, [1, 0])
    assert grouplike_check(h4.coalgebra, [0, 1, 0, 0])
    assert not grouplike_check(h4.coalgebra, [0, 0, 1, 0])
    assert not grouplike_check(h4.coalgebra, [0, 0, 0, 0])


def test_path_coalgebra_shape():
    # quiver 0 -> 1 -> 2 : vertices, two arrows, one path of length 2
    c = path_coalgebra(3, [(0, 1), (1, 2)], max_len=3)
    assert c.dim == 6
    assert validate_coalgebra(c).ok
    assert coradical_filtration(c).dims == (3, 5, 6)


@given(st.integers(0, 10_000))
def test_random_paths_valid_and_gr_stable(seed):
    c = random_path_coalgebra(seed)
    assert validate_coalgebra(c).ok
    f = coradical_filtration(c)
    g = associated_graded(c)
    assert validate_coalgebra(g.coalgebra).ok
    assert g.degree_dims == f.layers()
    assert associated_graded(g.coalgebra).degree_dims == g.degree_dims
