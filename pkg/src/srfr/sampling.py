"""Seeded random instances.

Every trial gets its own Philox stream derived from ``(seed, trial_id)`` via
numpy's ``SeedSequence``; streams are independent of execution order, so a
trial can be replayed on its own.
"""

from __future__ import annotations

import numpy as np

from .field import PrimeField
from .poly import Polynomial, gcd


def trial_rng(seed: int, trial_id: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), int(trial_id)])))


def random_scalars(rng: np.random.Generator, field: PrimeField, size: int, nonzero: bool = False) -> list[int]:
    if nonzero:
        return (rng.integers(1, field.p, size=size, dtype=np.int64)).tolist()
    return rng.integers(0, field.p, size=size, dtype=np.int64).tolist()


def random_poly(rng: np.random.Generator, field: PrimeField, bound: int) -> Polynomial:
    """Uniform polynomial of degree < bound."""
    return Polynomial(field, random_scalars(rng, field, max(bound, 0)))


def random_monic(rng: np.random.Generator, field: PrimeField, degree: int) -> Polynomial:
    return Polynomial(field, random_scalars(rng, field, degree) + [1])


def random_divisor_chain(rng: np.random.Generator, field: PrimeField, degrees) -> list[Polynomial]:
    """Random monic ``a_1, ..., a_n`` of the given degrees with ``a_n | ... | a_1``.

    ``degrees`` must be non-increasing; such moduli are the invariant factors
    of the quotient module they present.
    """
    degrees = [int(f) for f in degrees]
    if any(a < b for a, b in zip(degrees, degrees[1:])):
        raise ValueError("degrees of a divisor chain must be non-increasing")
    chain: list[Polynomial] = []
    below = 0
    for f in reversed(degrees):
        step = random_monic(rng, field, f - below)
        chain.append(step if not chain else chain[-1] * step)
        below = f
    return chain[::-1]


def random_points(rng: np.random.Generator, field: PrimeField, count: int) -> list[int]:
    if count > field.p:
        raise ValueError(f"cannot pick {count} distinct points in F_{field.p}")
    return [int(x) for x in rng.choice(field.p, size=count, replace=False)]


def random_coprime(rng: np.random.Generator, field: PrimeField, bound: int, moduli, max_tries: int = 1000) -> Polynomial:
    """Random nonzero polynomial of degree < bound coprime to every modulus."""
    for _ in range(max_tries):
        d = random_poly(rng, field, bound)
        if not d.is_zero() and all(gcd(d, a).degree == 0 for a in moduli):
            return d
    raise RuntimeError("could not sample a denominator coprime to the moduli")


def random_poly_matrix(rng: np.random.Generator, field: PrimeField, rows: int, cols: int, bound: int):
    return [tuple(random_poly(rng, field, bound) for _ in range(cols)) for _ in range(rows)]
