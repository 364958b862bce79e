import pytest

from cofrob.builders import sweedler
from cofrob.coalg import coradical
from cofrob.comod import Comodule, validate_comodule
from cofrob.errors import CoradicalNotHopfSubalgebra
from cofrob.exactla import Matrix
from cofrob.hopf import (
    HopfAlgebra,
    cofrobenius_report,
    chevalley_criteria,
    coradical_is_hopf_subalgebra,
    default_family,
    degree_zero_projection_report,
    diagram,
    dual_hopf,
    gr_hopf,
    hopf_socle,
    integral,
    integral_vanishing_profile,
    is_antipode_stable,
    is_subalgebra,
    poincare_duality_check,
    tensor_comodule,
    validate_hopf,
)

GOLDEN_LEFT = {
    "k[C2]": (1, 0),
    "sweedler": (0, 0, 0, 1),
    "taft3": (0, 0, 0, 0, 0, 1, 0, 0, 0),
}
GOLDEN_RIGHT = {
    "k[C2]": (1, 0),
    "sweedler": (0, 0, 1, 0),
    "taft3": (0, 0, 1, 0, 0, 0, 0, 0, 0),
}


def grouplike_comodule(h, k):
    return Comodule(h.coalgebra, 1, [{(0, k): 1}])


def satisfies_integral_law(h, t, side):
    """h_1 T(h_2) = T(h) 1 (left) or T(h_1) h_2 = T(h) 1 (right) on every basis vector."""
    fld = h.field
    unit = h.algebra.unit
    for k in range(h.dim):
        lhs = [fld.zero] * h.dim
        for (i, j), s in h.coalgebra.delta[k].items():
            out, arg = (i, j) if side == "left" else (j, i)
            lhs[out] = lhs[out] + s * t[arg]
        if any(lhs[x] != t[k] * unit[x] for x in range(h.dim)):
            return False
    return True


def test_validate_builders(kc2, kc6, kc2c3, h4, t3, qls27):
    for h in (kc2, kc6, kc2c3, h4, t3, qls27):
        assert validate_hopf(h).ok, h.name


def test_identity_antipode_flagged(h4):
    bad = HopfAlgebra(h4.coalgebra, h4.algebra, Matrix.identity(h4.field, 4))
    rep = validate_hopf(bad)
    assert not rep.ok
    assert any("S(h_1) h_2" in v for v in rep.violations)


def test_duals(kc2, h4, t3):
    d = dual_hopf(kc2)
    assert d.dim == 2 and validate_hopf(d).ok
    assert coradical(d.coalgebra).is_full()
    d4 = dual_hopf(h4)
    assert validate_hopf(d4).ok
    assert coradical(d4.coalgebra).dim == 2
    for h in (kc2, h4, t3):
        assert dual_hopf(dual_hopf(h)).same_structure(h)


@pytest.mark.parametrize("name", ["kc2", "h4", "t3"])
@pytest.mark.parametrize("side", ["left", "right"])
def test_integrals(name, side, request):
    h = request.getfixturevalue(name)
    space = integral(h, side)
    assert space.dimension == 1
    golden = (GOLDEN_LEFT if side == "left" else GOLDEN_RIGHT)[h.name]
    assert tuple(space.basis[0]) == golden
    assert satisfies_integral_law(h, space.basis[0], side)


def test_integral_qls(qls27):
    for side in ("left", "right"):
        space = integral(qls27, side)
        assert space.dimension == 1
        assert satisfies_integral_law(qls27, space.basis[0], side)


def test_vanishing_profile(kc2, h4, t3, qls27):
    assert integral_vanishing_profile(kc2) == -1
    assert integral_vanishing_profile(h4) >= 0
    assert integral_vanishing_profile(t3) >= 0
    assert integral_vanishing_profile(qls27) >= 0


def test_tensor_comodules(kc6, h4):
    one = grouplike_comodule(h4, 0)
    g = grouplike_comodule(h4, 1)
    gg = tensor_comodule(h4, g, g)
    assert validate_comodule(gg).ok
    assert gg.rho == one.rho
    assert tensor_comodule(h4, one, g).rho == g.rho
    # in C_6 the group-likes are the basis vectors g^0..g^5
    t = tensor_comodule(kc6, grouplike_comodule(kc6, 2), grouplike_comodule(kc6, 3))
    assert t.rho == grouplike_comodule(kc6, 5).rho
    m = Comodule(h4.coalgebra, 4, h4.coalgebra.delta)
    assert tensor_comodule(h4, one, m).rho == m.rho


def test_hopf_socle(kc2, h4, t3):
    assert hopf_socle(kc2, default_family(kc2)).is_full()
    for h in (h4, t3):
        s = hopf_socle(h, default_family(h))
        assert s == coradical(h.coalgebra)
        assert is_subalgebra(h, s) and is_antipode_stable(h, s)


def test_coradical_is_hopf_subalgebra(kc2, kc2c3, h4, t3, qls27):
    assert all(coradical_is_hopf_subalgebra(h) for h in (kc2, kc2c3, h4, t3, qls27))
    assert coradical(kc2c3.coalgebra).is_full()
    assert len(default_family(kc2c3)) == 6


@pytest.mark.parametrize("name,dims", [("kc2", (2,)), ("h4", (2, 2)), ("t3", (3, 3, 3))])
def test_gr_hopf(name, dims, request):
    h = request.getfixturevalue(name)
    g = gr_hopf(h)
    assert validate_hopf(g).ok
    assert tuple(g.degrees.count(n) for n in range(len(dims))) == dims
    assert degree_zero_projection_report(g).ok


def test_gr_of_cosemisimple_is_itself(kc2):
    assert gr_hopf(kc2).same_structure(kc2)


@pytest.mark.parametrize("name,dims", [("kc2", (1,)), ("h4", (1, 1)), ("t3", (1, 1, 1)),
                                       ("qls27", (1, 2, 3, 2, 1))])
def test_diagram(name, dims, request):
    h = request.getfixturevalue(name)
    dg = diagram(h)
    assert dg.degree_dims == dims
    assert dg.dim * coradical(h.coalgebra).dim == h.dim


@pytest.mark.parametrize("name,length,dim_r", [("kc2", 0, 1), ("h4", 1, 2), ("t3", 2, 3), ("qls27", 4, 9)])
def test_cofrobenius(name, length, dim_r, request):
    h = request.getfixturevalue(name)
    rep = cofrobenius_report(h)
    assert rep.ok, rep.violations
    assert rep.items["filtration length"] == length
    assert rep.items["integral dim (left)"] == 1
    assert rep.items["dim R"] == dim_r
    assert rep.items["top degree of R"] == length


@pytest.mark.parametrize("name", ["kc2", "h4", "t3"])
def test_chevalley_all_false(name, request):
    h = request.getfixturevalue(name)
    rep = chevalley_criteria(h, default_family(h))
    for key in ("(a)", "(b)", "(c)", "(d)"):
        val = next(v for k, v in rep.items.items() if k.startswith(key))
        assert val is False


@pytest.mark.parametrize("name,series", [("h4", "1, 1"), ("t3", "1, 1, 1"), ("qls27", "1, 2, 3, 2, 1")])
def test_poincare_duality(name, series, request):
    h = request.getfixturevalue(name)
    rep = poincare_duality_check(h, default_family(h))
    assert rep.ok, rep.violations
    ek = [v for k, v in rep.items.items() if k.startswith("l(E(")]
    assert ek and all(series.replace(" ", "") in str(v).replace(" ", "") for v in ek)


def test_duality_needs_hopf_coradical(monkeypatch):
    import cofrob.hopf as hopf_mod
    h = sweedler()
    monkeypatch.setattr(hopf_mod, "coradical_is_hopf_subalgebra", lambda _h: False)
    with pytest.raises(CoradicalNotHopfSubalgebra):
        poincare_duality_check(h, default_family(h))
