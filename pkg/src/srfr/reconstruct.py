"""Rational function reconstruction: scalar (RFR), vector (VRFR) and simultaneous (SRFR).

SRFR solutions ``(v_1, ..., v_n, d)`` are the relations of ``R_u = [Id_n; -u]``
modulo ``<a_i e_i>`` of negative row degree for the shift
``(-N_1, ..., -N_n, -D)``.  Solution vectors are always ordered with the
numerators first and the denominator last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import ScalarMatrix
from .order import PolyVector
from .poly import Polynomial, extended_euclidean, gcd
from .relation import ModuliSet, RelationBasis, relation_basis


@dataclass(frozen=True)
class RFRResult:
    v: Polynomial
    d: Polynomial
    reduced: bool
    """True when ``gcd(d, a) == 1`` and ``deg d < D``, so ``v/d = u mod a``."""


def rfr(u: Polynomial, a: Polynomial, N: int, D: int) -> RFRResult:
    """Minimal solution of ``v = d u mod a``, ``deg v < N``, ``deg d < D`` via the EEA.

    The denominator is normalized monic.
    """
    if N < 1 or D < 1:
        raise ValueError("degree bounds must be positive")
    F = a.field
    u = u % a
    if u.is_zero():
        r, t = u, Polynomial.one(F)
    else:
        rows = extended_euclidean(a, u)
        hit = next((row for row in rows[1:] if row[0].degree < N), None)
        if hit is not None:
            r, _, t = hit
        else:
            # every nonzero remainder is too large: the next one is 0
            r, t = Polynomial.zero(F), a // rows[-1][0]
    c = F.inv(t.leading)
    r, t = r * c, t * c
    reduced = (not t.is_zero()) and t.degree < D and gcd(t, a).degree == 0
    return RFRResult(r, t, reduced)


def vrfr(u: Sequence[Polynomial], a: Sequence[Polynomial], N: Sequence[int], D: Sequence[int]) -> list[RFRResult]:
    """Componentwise RFR with per-component bounds."""
    if not len(u) == len(a) == len(N) == len(D):
        raise ValueError("component counts differ")
    return [rfr(*args) for args in zip(u, a, N, D)]


def build_Ru(u: Sequence[Polynomial]) -> list[PolyVector]:
    """The ``(n+1) x n`` matrix ``[Id_n; -u]``."""
    n = len(u)
    if n < 1:
        raise ValueError("need at least one component")
    F = u[0].field
    one, zero = Polynomial.one(F), Polynomial.zero(F)
    rows = [tuple(one if i == j else zero for j in range(n)) for i in range(n)]
    rows.append(tuple(-q for q in u))
    return rows


@dataclass(frozen=True)
class SRFRInstance:
    mods: ModuliSet
    u: tuple[Polynomial, ...]
    N: tuple[int, ...]
    D: int

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "N", tuple(int(x) for x in self.N))
        f = self.mods.degrees
        n = len(f)
        if len(self.u) != n or len(self.N) != n:
            raise ValueError("u, N and moduli must have the same length")
        if any(not 0 < Ni <= fi for Ni, fi in zip(self.N, f)):
            raise ValueError(f"need 0 < N_i <= f_i, got N={self.N}, f={f}")
        if not 0 < self.D <= max(f):
            raise ValueError(f"need 0 < D <= max f_i, got D={self.D}")
        if any(ui.degree >= fi for ui, fi in zip(self.u, f)):
            raise ValueError("need deg u_i < f_i")

    @property
    def field(self):
        return self.mods.field

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def shift(self) -> tuple[int, ...]:
        return tuple(-x for x in self.N) + (-self.D,)

    @property
    def bounds(self) -> tuple[int, ...]:
        """Exclusive degree bounds of (v_1, ..., v_n, d)."""
        return self.N + (self.D,)

    def count_balanced(self) -> bool:
        """Equations equal unknowns minus one: ``sum f = sum N + D - 1``."""
        return sum(self.mods.degrees) == sum(self.N) + self.D - 1


def verify_solution(inst: SRFRInstance, cand: Sequence[Polynomial]) -> bool:
    """``v_i = d u_i mod a_i`` for all i and the degree bounds hold."""
    if len(cand) != inst.n + 1:
        raise ValueError(f"candidate must have {inst.n + 1} components")
    *v, d = cand
    if any(q.degree >= b for q, b in zip(cand, inst.bounds)):
        return False
    return all(((vi - d * ui) % ai).is_zero() for vi, ui, ai in zip(v, inst.u, inst.mods.moduli))


@dataclass
class SolutionSpace:
    instance: SRFRInstance
    basis: RelationBasis
    generators: list[PolyVector]
    row_degrees: tuple[int, ...]
    """Shifted row degrees of ``generators`` (all negative)."""

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def kdim(self) -> int:
        return -sum(self.row_degrees)

    @property
    def minimal(self) -> PolyVector | None:
        if not self.generators:
            return None
        i = min(range(len(self.generators)), key=lambda k: self.row_degrees[k])
        return self.generators[i]

    @property
    def unique(self) -> bool:
        return self.rank == 1

    def k_basis(self) -> list[PolyVector]:
        """Basis of S_u as a K-vector space: ``x^k g`` for ``k < -rdeg(g)``."""
        return [tuple(q.shift(k) for q in g) for g, r in zip(self.generators, self.row_degrees) for k in range(-r)]

    def _coeff_vector(self, vec: Sequence[Polynomial]) -> list[int]:
        out = []
        for q, b in zip(vec, self.instance.bounds):
            out.extend(q.coeff(i) for i in range(b))
        return out

    def contains(self, cand: Sequence[Polynomial]) -> bool:
        """Whether ``cand`` lies in the K-span of the solution space."""
        if not verify_solution(self.instance, cand):
            return False
        rows = [self._coeff_vector(g) for g in self.k_basis()]
        F = self.instance.field
        if not rows:
            return all(q.is_zero() for q in cand)
        base = ScalarMatrix(F, rows).rank()
        return ScalarMatrix(F, rows + [self._coeff_vector(cand)]).rank() == base


def srfr_solve(inst: SRFRInstance) -> SolutionSpace:
    """All solutions of the SRFR instance as a K[x]-module basis."""
    shift = inst.shift
    basis = relation_basis(build_Ru(inst.u), inst.mods, shift)
    gens, degs = [], []
    for row, rho in zip(basis.rows, basis.row_degrees):
        if rho < 0:
            if not verify_solution(inst, row):
                raise RuntimeError("relation basis produced a non-solution")
            gens.append(row)
            degs.append(rho)
    return SolutionSpace(inst, basis, gens, tuple(degs))

