import pytest
from hypothesis import given, strategies as st

from srfr.field import PrimeField
from srfr.poly import NEG_INF, Polynomial, extended_euclidean, gcd, interpolate, inverse_mod, vanishing_poly

F7 = PrimeField(7)
coeff_lists = st.lists(st.integers(0, 6), max_size=8)


def P(F, *c):
    return Polynomial(F, list(c))


def test_difference_of_squares(F11):
    assert P(F11, 1, 1) * P(F11, -1, 1) == P(F11, 10, 0, 1)


def test_product_mod_hand_computed(F11):
    a = P(F11, 2, 1, 8, 1)
    # 4x^3 + 5x^2 + 5x + 1 minus 4a, worked by hand
    assert (P(F11, 2, 2, 2) * P(F11, 6, 2)) % a == P(F11, 4, 1, 6)


def test_divmod_self(F11):
    a = P(F11, 2, 1, 8, 1)
    assert divmod(a, a) == (Polynomial.one(F11), Polynomial.zero(F11))


def test_zero_degree_and_printing(F11):
    assert Polynomial.zero(F11).degree == NEG_INF
    assert P(F11, 0, 0, 0).is_zero()
    assert str(P(F11, 7, 9, 1)) == "x^2 + 9*x + 7"
    assert str(Polynomial.zero(F11)) == "0"


@given(coeff_lists, coeff_lists.filter(lambda c: any(c)))
def test_division_identity(a, b):
    A, B = Polynomial(F7, a), Polynomial(F7, b)
    q, r = divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


def test_gcd_cases(F11):
    a = P(F11, 2, 1, 8, 1)
    assert gcd(a, Polynomial.zero(F11)) == a.monic()
    assert gcd(P(F11, -1, 0, 1), P(F11, -1, 1)) == P(F11, -1, 1)
    assert gcd(P(F11, 0, 3), P(F11, 0, 0, 5)) == P(F11, 0, 1)


@given(st.lists(st.integers(0, 6), min_size=6, max_size=6), st.lists(st.integers(0, 6), min_size=4, max_size=4))
def test_bezout_along_remainder_sequence(a, b):
    A = Polynomial(F7, a + [1])
    B = Polynomial(F7, b + [1])
    for r, s, t in extended_euclidean(A, B):
        assert s * A + t * B == r


def test_inverse_mod(F11):
    a = P(F11, 2, 1, 8, 1)
    d = P(F11, 2, 2, 2)
    assert (d * inverse_mod(d, a)) % a == Polynomial.one(F11)
    with pytest.raises(ValueError):
        inverse_mod(P(F11, -2, 1), a)  # x - 2 divides a


def test_vanishing_poly(F11):
    assert vanishing_poly(F11, [2, 4, 8]) == P(F11, 2, 1, 8, 1)
    assert vanishing_poly(F11, []) == Polynomial.one(F11)
    assert vanishing_poly(F11, [0]) == P(F11, 0, 1)


def test_interpolate_roundtrip(counterexample):
    F, a, v, d = counterexample["F"], counterexample["a"], counterexample["v"], counterexample["d"]
    u1 = (v[0] * inverse_mod(d, a)) % a
    pts = [(x, u1.evaluate(x)) for x in (2, 4, 8)]
    assert interpolate(F, pts) == u1 == counterexample["u"][0]


def test_interpolate_trivial(F11):
    assert interpolate(F11, [(3, 5)]) == Polynomial.constant(F11, 5)
    assert interpolate(F11, [(1, 0), (2, 0), (5, 0)]).is_zero()
    with pytest.raises(ValueError):
        interpolate(F11, [(1, 0), (1, 2)])


@given(st.lists(st.integers(0, 6), max_size=7))
def test_interpolation_through_evaluations(c):
    q = Polynomial(F7, c)
    assert interpolate(F7, [(x, q.evaluate(x)) for x in range(7)]) == q
