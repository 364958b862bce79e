import pytest

from cofrob.braided import (
    BraidingMatrix,
    CartanDatum,
    FiniteAbelianGroup,
    YDRealization,
    braiding_from_realization,
    build_qls_bosonization,
    cartan_datum,
    classify_finite_type,
    is_quantum_linear_space,
    nichols_dimension_cartan,
    positive_root_count,
    rank2_braiding,
    realize_over_cyclic,
    realize_over_group,
)
from cofrob.builders import SWEEDLER_TO_BOSONIZATION, sweedler, taft, taft_to_bosonization
from cofrob.coalg import coradical_filtration
from cofrob.errors import BadParams, GroupTooLarge, OrderMismatch
from cofrob.exactla import Matrix
from cofrob.hopf import transport_hopf, validate_hopf
from cofrob.scalar import field, order_of_unity, root_of_unity


def z(n, k=1):
    return root_of_unity(field(n), k)


def cyclic_real(m, gs, chis):
    return YDRealization(FiniteAbelianGroup([m]), tuple((g,) for g in gs), tuple((c,) for c in chis))


def test_braiding_from_realization():
    q = braiding_from_realization(cyclic_real(2, [1], [1]))
    assert q.q == ((-1,),)
    q = braiding_from_realization(cyclic_real(3, [1], [1]))
    assert q.q == ((z(3),),)
    q = braiding_from_realization(cyclic_real(3, [1, 1], [1, 2]))
    assert q.q[0][1] * q.q[1][0] == 1


def test_braiding_rejects_bad_entries():
    with pytest.raises(BadParams):
        BraidingMatrix(((field(1).one,),))
    with pytest.raises(BadParams):
        BraidingMatrix(((field(1)(2),),))


def test_cartan_data():
    qls = braiding_from_realization(cyclic_real(3, [1, 1], [1, 2]))
    assert cartan_datum(qls).a == ((2, 0), (0, 2))
    for p in (5, 7):
        assert cartan_datum(rank2_braiding("A2", p, 1)).a == ((2, -1), (-1, 2))
    assert cartan_datum(rank2_braiding("B2", 7, 1)).a == ((2, -1), (-2, 2))
    assert cartan_datum(rank2_braiding("G2", 7, 1)).a == ((2, -1), (-3, 2))
    # q_12 q_21 = zeta_12 is not a power of q_11 = -1
    w, one = z(12), field(12).one
    assert cartan_datum(BraidingMatrix(((-one, w), (one, w ** 4)))) is None


def test_classify():
    def labels(a):
        comps = classify_finite_type(CartanDatum(a))
        return None if comps is None else sorted(c.label for c in comps)

    assert labels([[2, -1], [-1, 2]]) == ["A_2"]
    assert labels([[2, -1], [-3, 2]]) == ["G_2"]
    assert labels([[2, -2], [-2, 2]]) is None
    assert labels([[2, 0], [0, 2]]) == ["A_1", "A_1"]
    assert labels([[2, -1, 0], [-1, 2, -1], [0, -2, 2]]) == ["B_3"]
    assert labels([[2, -1, 0], [-1, 2, -2], [0, -1, 2]]) == ["C_3"]
    d4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
    assert labels(d4) == ["D_4"]
    assert labels([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]) is None


def test_positive_roots():
    assert [positive_root_count(x) for x in ("A_1", "A_2", "B_2", "G_2", "D_4", "E_8")] == [1, 3, 4, 6, 12, 120]


def test_nichols_dimensions():
    assert nichols_dimension_cartan(BraidingMatrix(((-field(1).one,),))) == 2
    qls = braiding_from_realization(cyclic_real(3, [1, 1], [1, 2]))
    assert nichols_dimension_cartan(qls) == 9
    a2 = rank2_braiding("A2", 5, 1)
    assert nichols_dimension_cartan(a2, cartan_datum(a2)) == 125


def test_quantum_linear_space():
    assert is_quantum_linear_space(BraidingMatrix(((-field(1).one,),)))
    assert not is_quantum_linear_space(rank2_braiding("A2", 7, 2))
    assert is_quantum_linear_space(braiding_from_realization(cyclic_real(3, [1, 1], [1, 2])))


def test_realize_cyclic():
    w = realize_over_cyclic(BraidingMatrix(((z(3),),)), 3)
    assert w.grouplikes == ((1,),) and w.characters == ((1,),)
    for x in range(7):
        if (w := realize_over_cyclic(rank2_braiding("A2", 7, x), 7)) is not None:
            break
    assert w is not None
    assert braiding_from_realization(w, field(7)).q == rank2_braiding("A2", 7, x).q
    assert all(realize_over_cyclic(rank2_braiding("A2", 5, x), 5) is None for x in range(5))


def test_realize_cyclic_errors():
    with pytest.raises(OrderMismatch):
        realize_over_cyclic(BraidingMatrix(((z(3),),)), 4)
    with pytest.raises(GroupTooLarge):
        realize_over_cyclic(BraidingMatrix(((z(3),),)), 30, cap=10)


def test_realize_over_group():
    sw = BraidingMatrix(((-field(1).one,),))
    assert realize_over_group(sw, FiniteAbelianGroup([1])) is None
    w = realize_over_group(sw, FiniteAbelianGroup([2]))
    assert w.grouplikes == ((1,),) and w.characters == ((1,),)
    qls = braiding_from_realization(cyclic_real(3, [1, 1], [1, 2]))
    w, count = realize_over_group(qls, FiniteAbelianGroup([3, 3]), count=True)
    assert w is not None and count > 0
    assert braiding_from_realization(w, field(3)).q == qls.q


def test_bosonization_matches_sweedler():
    bos = build_qls_bosonization(cyclic_real(2, [1], [1]))
    assert bos.dim == 4 and validate_hopf(bos).ok
    sw = sweedler()
    assert transport_hopf(bos, Matrix(bos.field, SWEEDLER_TO_BOSONIZATION)).same_structure(sw)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bosonization_matches_taft(n):
    bos = build_qls_bosonization(cyclic_real(n, [1], [1]))
    t = taft(n)
    assert bos.dim == n * n
    assert transport_hopf(t, taft_to_bosonization(n)).same_structure(bos)


def test_qls27(qls27):
    assert qls27.dim == 27
    assert coradical_filtration(qls27.coalgebra).length == 4
    assert order_of_unity(qls27.field.zeta()) == 3
