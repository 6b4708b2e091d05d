"""Relation modules ``A = {p in K[x]^m : p M = 0 mod <a_1 e_1, ..., a_n e_n>}``.

The s-ordered weak Popov basis is found by walking the monomials of K[x]^m in
s-TOP order and eliminating their images in ``K = K[x]^n / M``: the first
monomial ``x^d e_j`` whose image depends on the images of smaller monomials
yields the basis row with pivot ``(j, d)``, and index ``j`` is then closed.
Accepted (independent) monomials form the row rank profile ``F_delta``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .field import PrimeField
from .linalg import _dtype, rref
from .order import Monomial, MonomialFamily, MonomialStream, PolyVector
from .poly import Polynomial, _add, _mod, _trim


class CapExceeded(RuntimeError):
    """The brute-force oracle's degree cap was too small to expose every pivot."""


class ModuliSet:
    """Diagonal moduli ``a_1, ..., a_n`` presenting ``K[x]^n / <a_i e_i>``."""

    def __init__(self, moduli: Sequence[Polynomial]):
        moduli = tuple(moduli)
        if not moduli:
            raise ValueError("need at least one modulus")
        if any(a.is_zero() for a in moduli):
            raise ValueError("moduli must be nonzero")
        self.field: PrimeField = moduli[0].field
        self.moduli = moduli
        self._monic = tuple(list(a.monic().coeffs) for a in moduli)
        self.degrees = tuple(int(a.degree) for a in moduli)
        offsets = [0]
        for f in self.degrees:
            offsets.append(offsets[-1] + f)
        self.offsets = tuple(offsets)

    @property
    def n(self) -> int:
        return len(self.moduli)

    @property
    def total(self) -> int:
        """``Sigma = sum f_i = dim_K K[x]^n / M``."""
        return self.offsets[-1]

    def sorted_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees, reverse=True))

    def padded_degrees(self, m: int) -> tuple[int, ...]:
        return self.degrees + (0,) * max(0, m - self.n)

    def reduce(self, q: Sequence[Polynomial]) -> tuple[Polynomial, ...]:
        if len(q) != self.n:
            raise ValueError(f"expected {self.n} components, got {len(q)}")
        p = self.field.p
        return tuple(Polynomial._raw(self.field, _mod(c.coeffs, a, p)) for c, a in zip(q, self._monic))

    def flatten(self, coords: Sequence[Sequence[int]]) -> list[int]:
        """Coordinates on the basis ``{x^i e_j}_{i < f_j}``, j outer and i inner."""
        out = []
        for c, f in zip(coords, self.degrees):
            out.extend(c)
            out.extend([0] * (f - len(c)))
        return out

    def __eq__(self, other):
        return isinstance(other, ModuliSet) and self.moduli == other.moduli

    def __repr__(self):
        return f"ModuliSet({[str(a) for a in self.moduli]}, p={self.field.p})"


@dataclass(frozen=True)
class Residue:
    """An element of ``K[x]^n / M`` with ``deg coords_i < f_i``."""

    coords: tuple[Polynomial, ...]
    mods: ModuliSet

    def flat(self) -> list[int]:
        return self.mods.flatten([c.coeffs for c in self.coords])

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)


def _check_matrix(M: Sequence[Sequence[Polynomial]], mods: ModuliSet) -> None:
    for row in M:
        if len(row) != mods.n:
            raise ValueError(f"matrix rows must have {mods.n} entries, got {len(row)}")


def residue(p: Sequence[Polynomial], M: Sequence[Sequence[Polynomial]], mods: ModuliSet) -> Residue:
    """Image of ``p`` under ``p -> p M mod <a_i e_i>``."""
    _check_matrix(M, mods)
    if len(p) != len(M):
        raise ValueError(f"vector of length {len(p)} against {len(M)} matrix rows")
    F = mods.field
    acc = [Polynomial.zero(F)] * mods.n
    for pi, row in zip(p, M):
        if pi.coeffs:
            acc = [s + pi * mij for s, mij in zip(acc, row)]
    return Residue(mods.reduce(acc), mods)


class Eliminator:
    """Incremental Gaussian elimination of flat residues with combination trails.

    Each accepted vector is stored reduced against the earlier ones together with
    its trail: the coefficients expressing it in terms of the accepted monomials'
    original images.
    """

    def __init__(self, p: int, width: int):
        self.p = p
        self.width = width
        self.monomials: list[Monomial] = []
        self._rows: list[tuple[int, list[int], list[int]]] = []  # (pivot col, vec, trail)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def insert(self, mon: Monomial, vec: Sequence[int]) -> dict[Monomial, int] | None:
        """Add the image ``vec`` of ``mon``.

        Returns ``None`` if it is independent (``mon`` is accepted), otherwise the
        relation ``{monomial: coefficient}`` with coefficient 1 on ``mon``.
        """
        p = self.p
        v = list(vec)
        coefs = []
        for c, row, _ in self._rows:
            k = v[c]
            coefs.append(k)
            if k:
                v = [(x - k * y) % p for x, y in zip(v, row)]
        k = len(self.monomials)
        combo = [0] * (k + 1)
        combo[k] = 1
        for ck, (_, _, trail) in zip(coefs, self._rows):
            if ck:
                for i, t in enumerate(trail):
                    if t:
                        combo[i] = (combo[i] - ck * t) % p
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return {m: c for m, c in zip(self.monomials + [mon], combo) if c}
        inv = pow(v[lead], -1, p)
        self._rows.append((lead, [x * inv % p for x in v], [c * inv % p for c in combo]))
        self.monomials.append(mon)
        return None

    def is_independent(self, vec: Sequence[int]) -> bool:
        v = list(vec)
        for c, row, _ in self._rows:
            k = v[c]
            if k:
                v = [(x - k * y) % self.p for x, y in zip(v, row)]
        return any(v)


@dataclass
class RelationBasis:
    """s-ordered weak Popov basis of a relation module.

    ``rows[j]`` has s-pivot index ``j`` and pivot degree ``pivot_degrees[j]``,
    with a monic pivot entry.
    """

    rows: list[PolyVector]
    pivot_degrees: tuple[int, ...]
    shift: tuple[int, ...]
    profile: list[Monomial] = dc_field(repr=False)

    @property
    def row_degrees(self) -> tuple[int, ...]:
        return tuple(d + s for d, s in zip(self.pivot_degrees, self.shift))

    @property
    def rank(self) -> int:
        """``rank(Mo_M) = sum delta_i``."""
        return sum(self.pivot_degrees)

    @property
    def family(self) -> MonomialFamily:
        return MonomialFamily(self.pivot_degrees)

    @property
    def m(self) -> int:
        return len(self.rows)


def _mulx_mod(c: list[int], a: list[int], p: int) -> list[int]:
    # a is monic; c has deg < deg a
    f = len(a) - 1
    if f <= 0:
        return []
    c = [0] + c
    if len(c) > f:
        top = c[f]
        c = c[:f]
        if top:
            c = [(x - top * y) % p for x, y in zip(c, a)]
    return _trim(c)


def relation_basis(M: Sequence[Sequence[Polynomial]], mods: ModuliSet, shift: Sequence[int]) -> RelationBasis:
    """s-ordered weak Popov basis of the relation module of ``M`` modulo ``mods``."""
    _check_matrix(M, mods)
    m = len(M)
    shift = tuple(int(s) for s in shift)
    if len(shift) != m:
        raise ValueError(f"shift of length {len(shift)} for {m} rows")
    F = mods.field
    p = F.p
    monic = mods._monic
    # images of x^d e_j, advanced one degree each time index j is visited
    current = [[_mod(q.coeffs, a, p) for q, a in zip(row, monic)] for row in M]
    elim = Eliminator(p, mods.total)
    rows: list = [None] * m
    delta: list = [None] * m
    stream = MonomialStream(shift)
    remaining = m
    for mon in stream:
        j = mon.index
        rel = elim.insert(mon, mods.flatten(current[j]))
        if rel is None:
            current[j] = [_mulx_mod(c, a, p) for c, a in zip(current[j], monic)]
            continue
        entries: list[list[int]] = [[] for _ in range(m)]
        for mo, c in rel.items():
            entries[mo.index] = _add(entries[mo.index], [0] * mo.degree + [c], p)
        rows[j] = tuple(Polynomial._raw(F, e) for e in entries)
        delta[j] = mon.degree
        stream.close(j)
        remaining -= 1
        if remaining == 0:
            break
    return RelationBasis(rows, tuple(delta), shift, list(elim.monomials))


def row_rank_profile(M, mods: ModuliSet, shift: Sequence[int]) -> MonomialFamily:
    return relation_basis(M, mods, shift).family


@dataclass(frozen=True)
class BruteForceProfile:
    monomials: frozenset[Monomial]
    pivot_degrees: tuple[int, ...]
    rank: int

    @property
    def family(self) -> MonomialFamily:
        return MonomialFamily(self.pivot_degrees)


def default_degree_cap(mods: ModuliSet, shift: Sequence[int]) -> int:
    # every index gets at least Sigma + 1 monomials inside the exact prefix
    return mods.total + (max(shift) - min(shift)) + 1


def monomial_images(M, mods: ModuliSet, degree_cap: int) -> dict[Monomial, list[int]]:
    """Flat images of ``x^d e_j M`` for ``d < degree_cap`` by direct multiplication.

    Independent of any shift, so one table serves every shift of a sweep.
    """
    _check_matrix(M, mods)
    F = mods.field
    out = {}
    for j, row in enumerate(M):
        for d in range(degree_cap):
            xd = Polynomial.monomial(F, d)
            out[Monomial(d, j)] = mods.flatten([c.coeffs for c in mods.reduce([xd * q for q in row])])
    return out


def brute_force_rrp(
    M,
    mods: ModuliSet,
    shift: Sequence[int],
    degree_cap: int | None = None,
    images: dict[Monomial, list[int]] | None = None,
) -> BruteForceProfile:
    """Row rank profile of the explicitly materialized ordered matrix ``Mo_M``.

    Rows ``x^d e_j`` for ``d < degree_cap`` are built by direct polynomial
    arithmetic (or taken from ``images``, see :func:`monomial_images`), sorted
    in s-TOP order, and the lexicographically first independent rows are read
    off the pivots of ``rref(Mo_M^T)``.  Only the prefix of rows below the
    smallest omitted monomial is trusted; if some index has no dependent
    monomial there, :class:`CapExceeded` is raised.
    """
    _check_matrix(M, mods)
    m = len(M)
    shift = tuple(int(s) for s in shift)
    if degree_cap is None:
        degree_cap = default_degree_cap(mods, shift)
    F = mods.field
    if images is None or any(Monomial(degree_cap - 1, j) not in images for j in range(m)):
        images = monomial_images(M, mods, degree_cap)
    mons = sorted((Monomial(d, j) for j in range(m) for d in range(degree_cap)), key=lambda mo: mo.key(shift))
    first_missing = min((degree_cap + shift[j], j) for j in range(m))
    mons = [mo for mo in mons if mo.key(shift) < first_missing]
    if mods.total == 0 or not mons:
        independent: tuple[int, ...] = ()
    else:
        rows = [images[mo] for mo in mons]
        independent = rref(np.array(rows, dtype=_dtype(F.p)).T, F.p).pivots
    chosen = frozenset(mons[i] for i in independent)
    delta = []
    for j in range(m):
        d = 0
        while Monomial(d, j) in chosen:
            d += 1
        if Monomial(d, j).key(shift) >= first_missing:
            raise CapExceeded(f"degree cap {degree_cap} too small for index {j}")
        delta.append(d)
    return BruteForceProfile(chosen, tuple(delta), len(chosen))


def solution_dim(basis: RelationBasis, r: int = 0) -> int:
    """``dim_K {p in A : rdeg_s(p) < r} = sum_{rho_i < r} (r - rho_i)``."""
    return sum(r - rho for rho in basis.row_degrees if rho < r)


def family_images(M, mods: ModuliSet, family: MonomialFamily) -> list[list[int]]:
    """Flat images of ``x^i e_j M`` for the monomials of ``family``."""
    table = monomial_images(M, mods, max(family.cutoffs, default=0))
    return [table[mo] for mo in family]


def family_independent(M, mods: ModuliSet, family: MonomialFamily) -> bool:
    """Whether ``{mon * M : mon in family}`` is linearly independent in K[x]^n / M."""
    elim = Eliminator(mods.field.p, mods.total)
    for mo, vec in zip(family, family_images(M, mods, family)):
        if elim.insert(mo, vec) is not None:
            return False
    return True


def poly_matrix(field: PrimeField, rows) -> list[PolyVector]:
    """Build a polynomial matrix from nested coefficient lists (low to high)."""
    return [tuple(q if isinstance(q, Polynomial) else Polynomial(field, q) for q in row) for row in rows]


def apply_vector(p: Sequence[Polynomial], M) -> tuple[Polynomial, ...]:
    """The product ``p M`` without reduction."""
    F = p[0].field
    n = len(M[0])
    acc = [Polynomial.zero(F)] * n
    for pi, row in zip(p, M):
        acc = [s + pi * q for s, q in zip(acc, row)]
    return tuple(acc)


__all__ = [
    "BruteForceProfile",
    "CapExceeded",
    "Eliminator",
    "ModuliSet",
    "RelationBasis",
    "Residue",
    "apply_vector",
    "brute_force_rrp",
    "default_degree_cap",
    "family_images",
    "family_independent",
    "monomial_images",
    "poly_matrix",
    "relation_basis",
    "residue",
    "row_rank_profile",
    "solution_dim",
]
