from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from srfr.field import PrimeField
from srfr.poly import Polynomial

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).parent / "data"


@pytest.fixture
def F11():
    return PrimeField(11)


@pytest.fixture
def counterexample():
    """Two equal moduli over F_11 whose SRFR instance has a rank-2 solution space."""
    F = PrimeField(11)
    a = Polynomial(F, [2, 1, 8, 1])
    v = (Polynomial(F, [6, 2]), Polynomial(F, [2, 8]))
    d = Polynomial(F, [2, 2, 2])
    u = (Polynomial(F, [7, 9, 1]), Polynomial(F, [6, 3, 4]))
    # the two published solutions, reordered as (v_1, v_2, d)
    sols = [
        (Polynomial.zero(F), Polynomial.zero(F), Polynomial(F, [10, 9, 4])),
        (Polynomial(F, [5, 9]), Polynomial(F, [9, 3]), Polynomial(F, [3, 8])),
    ]
    return {"F": F, "a": a, "v": v, "d": d, "u": u, "N": (2, 2), "D": 3, "solutions": sols}
