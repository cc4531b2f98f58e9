import pytest
from hypothesis import given, settings, strategies as st

from tanglehom.intlinalg import (AbelianGroup, DimensionError, IntMatrix, cokernel_group, determinant,
                                 format_matrix_text, parse_matrix_text, smith_normal_form, torsion_order)


def matrices(max_dim=5, bound=30):
    return st.integers(1, max_dim).flatmap(lambda r: st.integers(1, max_dim).flatmap(
        lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


@settings(max_examples=500, deadline=None)
@given(matrices())
def test_snf_certificate(rows):
    m = IntMatrix.from_rows(rows)
    r = smith_normal_form(m)
    assert r.u @ m @ r.v == r.diagonal_matrix()
    assert abs(determinant(r.u)) == 1
    assert abs(determinant(r.v)) == 1
    assert len(r.d) == min(m.rows, m.cols)
    assert all(x >= 0 for x in r.d)
    # divisibility chain; zeros only at the end
    assert all((b % a == 0) if a else b == 0 for a, b in zip(r.d, r.d[1:]))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_snf_product_is_determinant(rows):
    m = IntMatrix.from_rows(rows)
    d = smith_normal_form(m).d
    prod = 1
    for x in d:
        prod *= x
    assert prod == abs(determinant(m))


def test_two_curve_relations():
    r = smith_normal_form(IntMatrix.from_rows([[1, 2, 0, 0], [2, 1, 0, 0]]))
    assert r.d == (1, 3)
    g = cokernel_group(IntMatrix.from_rows([[1, 2, 0, 0], [2, 1, 0, 0]]), 4)
    assert g == AbelianGroup(2, (3,))
    assert str(g) == "Z^2 + Z/3"
    assert torsion_order(g) == 3


@pytest.mark.parametrize("rows, d", [
    ([[2, 4], [6, 8]], (2, 4)),
    ([[0, 0], [0, 0]], (0, 0)),
    ([[6]], (6,)),
    ([[2, 0], [0, 3]], (1, 6)),
    ([[0, 5]], (5,)),
])
def test_snf_examples(rows, d):
    assert smith_normal_form(IntMatrix.from_rows(rows)).d == d


def test_empty_matrix_rejected():
    with pytest.raises(DimensionError):
        smith_normal_form(IntMatrix(0, 0, ()))


def test_ragged_rows_rejected():
    with pytest.raises(DimensionError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_cokernel_free_and_trivial():
    assert str(cokernel_group(IntMatrix(0, 3, ()), 3)) == "Z^3"
    assert str(cokernel_group(IntMatrix.from_rows([[1]]), 1)) == "0"
    assert str(cokernel_group(IntMatrix.from_rows([[0]]), 1)) == "Z"


def test_group_canonical_form():
    assert AbelianGroup.from_invariants(0, [2, 3]) == AbelianGroup(0, (6,))
    assert AbelianGroup.from_invariants(1, [4, 2, 0, 1]) == AbelianGroup(2, (2, 4))
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 6))
    assert AbelianGroup(0).is_trivial()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 3), st.lists(st.integers(0, 40), max_size=5))
def test_group_from_diagonal_relations(rank, orders):
    n = len(orders)
    rows = [[orders[i] if i == j else 0 for j in range(n + rank)] for i in range(n)]
    g = cokernel_group(IntMatrix.from_rows(rows), n + rank) if n else AbelianGroup(rank)
    assert g == AbelianGroup.from_invariants(rank, orders)


def test_determinant():
    assert determinant(IntMatrix.from_rows([[2, 1], [1, 2]])) == 3
    assert determinant(IntMatrix(0, 0, ())) == 1
    assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1


def test_matrix_text_round_trip():
    m = IntMatrix.from_rows([[1, -2], [30, 4]])
    assert parse_matrix_text(format_matrix_text(m)) == m
    assert parse_matrix_text("1 2 0 0 / 2 1 0 0  # comment") == IntMatrix.from_rows([[1, 2, 0, 0], [2, 1, 0, 0]])
    with pytest.raises(ValueError):
        parse_matrix_text("1 x")
