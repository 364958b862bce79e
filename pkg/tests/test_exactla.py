import pytest
from hypothesis import given, strategies as st

from cofrob.errors import AmbientMismatch, DimensionMismatch, NotASubspace
from cofrob.exactla import (
    Matrix,
    Subspace,
    apply,
    intersect,
    kernel,
    preimage,
    quotient_basis,
    rref,
    span,
    sum_spaces,
)
from cofrob.scalar import field

Q = field(1)


def M(rows, cols=None):
    return Matrix(Q, rows, cols)


def e(i, n=2):
    return [1 if j == i else 0 for j in range(n)]


def test_rref_examples():
    assert rref(Matrix.identity(Q, 3)) == Matrix.identity(Q, 3)
    assert rref(M([[2, 4], [1, 2]])) == M([[1, 2], [0, 0]])
    assert rref(M([[0, 1], [1, 0]])) == M([[1, 0], [0, 1]])


def test_kernel_examples():
    assert kernel(M([[0, 0], [0, 0]])) == Subspace.full(Q, 2)
    assert kernel(Matrix.identity(Q, 2)).dim == 0
    assert kernel(M([[1, 1]])) == span(Q, 2, [[1, -1]])


def test_lattice_examples():
    a = span(Q, 2, [e(0)])
    zero = Subspace.zero(Q, 2)
    assert sum_spaces(a, zero) == a
    assert intersect(a, a) == a
    assert intersect(a, span(Q, 2, [e(1)])).dim == 0
    with pytest.raises(AmbientMismatch):
        sum_spaces(a, Subspace.zero(Q, 3))


def test_preimage_examples():
    t = span(Q, 2, [e(0)])
    assert preimage(Matrix.identity(Q, 2), t) == t
    assert preimage(Matrix.zeros(Q, 2, 2), t) == Subspace.full(Q, 2)
    assert preimage(M([[1, 0], [0, 0]]), t) == Subspace.full(Q, 2)
    with pytest.raises(DimensionMismatch):
        preimage(Matrix.identity(Q, 3), t)


def test_quotient_basis_examples():
    v = Subspace.full(Q, 2)
    assert quotient_basis(v, v).rows == 0
    assert quotient_basis(v, span(Q, 2, [e(0)])).entries == ((0, 1),)
    v2 = span(Q, 2, [[1, 1], [1, -1]])
    w = span(Q, 2, [[1, 1]])
    reps = quotient_basis(v2, w)
    assert reps.rows == 1 and not w.contains(reps.entries[0])
    with pytest.raises(NotASubspace):
        quotient_basis(w, v)


small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_dim=10):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return M(rows, c)


@st.composite
def subspaces(draw, n):
    k = draw(st.integers(0, n))
    rows = draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=k, max_size=k))
    return span(Q, n, rows)


@given(matrices())
def test_rank_nullity(m):
    assert m.rank() + kernel(m).dim == m.cols
    for v in kernel(m).rows:
        assert not any(apply(m, v))


@given(st.data())
def test_dimension_formula_and_modular_law(data):
    n = data.draw(st.integers(1, 6))
    a, b, c = (data.draw(subspaces(n)) for _ in range(3))
    assert a.dim + b.dim == sum_spaces(a, b).dim + intersect(a, b).dim
    if a <= c:
        assert sum_spaces(a, intersect(b, c)) == intersect(sum_spaces(a, b), c)


@given(st.data())
def test_preimage_pushforward(data):
    m = data.draw(matrices(6))
    t = data.draw(subspaces(m.rows))
    pre = preimage(m, t)
    for v in pre.rows:
        assert t.contains(apply(m, v))
    # maximality: anything mapping into t lies in the preimage
    for v in kernel(m).rows:
        assert pre.contains(v)


@given(st.data())
def test_rref_canonical(data):
    n = data.draw(st.integers(1, 5))
    a = data.draw(subspaces(n))
    shuffled = list(reversed(a.rows)) + [[2 * x for x in r] for r in a.rows]
    assert span(Q, n, shuffled) == a
