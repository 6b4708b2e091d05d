import pytest
from hypothesis import given, strategies as st

from srfr.field import PrimeField
from srfr.order import (
    Monomial,
    MonomialFamily,
    MonomialStream,
    initial_term,
    is_ordered_weak_popov,
    is_reduced,
    is_weak_popov,
    leading_matrix,
    pivot,
    rdeg,
    stop_compare,
)
from srfr.poly import NEG_INF, Polynomial

F = PrimeField(11)
Z, ONE = Polynomial.zero(F), Polynomial.one(F)


def P(*c):
    return Polynomial(F, list(c))


def test_rdeg_examples():
    assert rdeg((Z, Z, P(10, 9, 4)), (-2, -2, -3)) == -1
    assert rdeg((ONE, Z), (0, 0)) == 0
    assert rdeg((P(0, 1), ONE, Z), (0, 2, 4)) == 2
    assert rdeg((Z, Z), (5, 1)) == NEG_INF


def test_stop_compare():
    s = (0, 2, 4)
    assert stop_compare(Monomial(0, 1), Monomial(3, 0), s) == -1
    assert stop_compare(Monomial(2, 1), Monomial(2, 1), s) == 0
    assert stop_compare(Monomial(1, 1), Monomial(1, 0), (0, 0)) == 1


def test_stream_prefix():
    stream = MonomialStream((0, 2, 4))
    got = [str(next(stream)) for _ in range(9)]
    assert got == ["e1", "xe1", "x^2e1", "e2", "x^3e1", "xe2", "x^4e1", "x^2e2", "e3"]


def test_stream_single_index_and_close():
    stream = MonomialStream((0,))
    assert [next(stream).degree for _ in range(4)] == [0, 1, 2, 3]
    stream = MonomialStream((3, -1, -1))
    assert next(stream) == Monomial(0, 1)
    stream.close(1)
    assert next(stream) == Monomial(0, 2)
    assert stream.open_indices == [0, 2]


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
def test_stream_is_sorted_and_exhaustive(shift):
    stream = MonomialStream(shift)
    first = [next(stream) for _ in range(30)]
    keys = [m.key(shift) for m in first]
    assert keys == sorted(keys) and len(set(first)) == 30
    assert first[0].index == min(range(len(shift)), key=lambda j: (shift[j], j))


def test_pivot_examples():
    s = (-2, -2, -3)
    p = (P(5, 9), P(9, 3), P(3, 8))
    piv = pivot(p, s)
    assert piv.index == 1 and piv.degree == 1
    assert initial_term(p, s)[0].index == piv.index
    assert pivot((Z, Z, ONE), (7, 0, -5)).index == 2
    assert pivot((P(0, 1), P(0, 1)), (0, 0)).index == 1
    with pytest.raises(ValueError):
        pivot((Z, Z), (0, 0))


def test_leading_matrix():
    I = [(ONE, Z), (Z, ONE)]
    assert leading_matrix(I, (0, 0)).tolist() == [[1, 0], [0, 1]]
    assert leading_matrix([(P(1, 1), ONE)], (0, 0)).tolist() == [[1, 0]]


def test_popov_predicates():
    I = [(ONE, Z), (Z, ONE)]
    assert is_reduced(I, (0, 0)) and is_weak_popov(I, (0, 0)) and is_ordered_weak_popov(I, (0, 0))
    same = [(ONE, P(0, 1)), (Z, P(0, 1))]
    assert not is_weak_popov(same, (0, 0))
    swapped = [(Z, ONE), (ONE, Z)]
    assert is_weak_popov(swapped, (0, 0)) and not is_ordered_weak_popov(swapped, (0, 0))


def test_family():
    fam = MonomialFamily((2, 0, 1))
    assert len(fam) == 3
    assert Monomial(1, 0) in fam and Monomial(0, 1) not in fam and Monomial(0, 5) not in fam
    assert fam.sorted((0, 0, -5))[0] == Monomial(0, 2)
    with pytest.raises(ValueError):
        MonomialFamily((-1,))
