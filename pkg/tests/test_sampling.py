import pytest

from srfr.field import PrimeField
from srfr.poly import Polynomial
from srfr.sampling import random_coprime, random_divisor_chain, random_points, trial_rng

F = PrimeField(7)


def test_streams_are_reproducible_and_distinct():
    a = trial_rng(1, 5).integers(0, 1 << 30, size=4).tolist()
    assert a == trial_rng(1, 5).integers(0, 1 << 30, size=4).tolist()
    assert a != trial_rng(1, 6).integers(0, 1 << 30, size=4).tolist()
    assert a != trial_rng(2, 5).integers(0, 1 << 30, size=4).tolist()


@pytest.mark.parametrize("degrees", [(3, 3, 1), (6, 1, 0), (2,), (0, 0)])
def test_divisor_chain(degrees):
    chain = random_divisor_chain(trial_rng(0, 0), F, degrees)
    assert tuple(a.degree for a in chain) == degrees
    assert all(a.leading == 1 for a in chain)
    assert all((big % small).is_zero() for big, small in zip(chain, chain[1:]))


def test_divisor_chain_needs_sorted_degrees():
    with pytest.raises(ValueError):
        random_divisor_chain(trial_rng(0, 0), F, (1, 2))


def test_points_and_coprime():
    rng = trial_rng(0, 0)
    pts = random_points(rng, F, 7)
    assert sorted(pts) == list(range(7))
    with pytest.raises(ValueError):
        random_points(rng, F, 8)
    a = Polynomial(F, [0, 1])  # x
    d = random_coprime(rng, F, 3, [a])
    assert d.coeff(0) != 0
