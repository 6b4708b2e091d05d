"""Shifted degrees, pivots, the s-TOP monomial order and weak Popov predicates.

Vectors of polynomials (``PolyVector``) are plain tuples of
:class:`~srfr.poly.Polynomial`; polynomial matrices are sequences of such rows.
Indices are 0-based throughout: the monomial ``x^d e_j`` of K[x]^m is
``Monomial(d, j)`` with ``0 <= j < m``.  Shifts are integer sequences and may be
negative.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .linalg import ScalarMatrix
from .poly import NEG_INF, Polynomial

PolyVector = tuple  # tuple[Polynomial, ...]


@dataclass(frozen=True)
class Monomial:
    degree: int
    index: int

    def __post_init__(self):
        if self.degree < 0 or self.index < 0:
            raise ValueError(f"invalid monomial x^{self.degree} e_{self.index}")

    def key(self, shift: Sequence[int]) -> tuple[int, int]:
        """Sort key of the s-TOP order: (degree + shift, index)."""
        return (self.degree + shift[self.index], self.index)

    def __str__(self):
        x = "" if self.degree == 0 else ("x" if self.degree == 1 else f"x^{self.degree}")
        return f"{x}e{self.index + 1}"


def stop_compare(m1: Monomial, m2: Monomial, shift: Sequence[int]) -> int:
    """Three-way s-TOP comparison: -1, 0 or 1."""
    k1, k2 = m1.key(shift), m2.key(shift)
    return (k1 > k2) - (k1 < k2)


class MonomialStream:
    """Increasing enumeration of the monomials of K[x]^m under s-TOP.

    Indices can be dropped with :meth:`close`, after which no further monomial
    of that index is produced.
    """

    def __init__(self, shift: Sequence[int]):
        self.shift = tuple(int(s) for s in shift)
        self._heap = [(s, j, 0) for j, s in enumerate(self.shift)]
        heapq.heapify(self._heap)
        self._closed: set[int] = set()

    def __iter__(self):
        return self

    def __next__(self) -> Monomial:
        while self._heap:
            key, j, d = heapq.heappop(self._heap)
            if j in self._closed:
                continue
            heapq.heappush(self._heap, (key + 1, j, d + 1))
            return Monomial(d, j)
        raise StopIteration

    def close(self, index: int) -> None:
        self._closed.add(index)

    @property
    def open_indices(self) -> list[int]:
        return [j for j in range(len(self.shift)) if j not in self._closed]


def monomial_stream(shift: Sequence[int]) -> MonomialStream:
    return MonomialStream(shift)


@dataclass(frozen=True)
class MonomialFamily:
    """The staircase family ``F_d = {x^i e_j : i < d_j}``."""

    cutoffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cutoffs", tuple(int(d) for d in self.cutoffs))
        if any(d < 0 for d in self.cutoffs):
            raise ValueError("family cutoffs must be nonnegative")

    def __contains__(self, mon: Monomial) -> bool:
        return mon.index < len(self.cutoffs) and mon.degree < self.cutoffs[mon.index]

    def __len__(self) -> int:
        return sum(self.cutoffs)

    def __iter__(self) -> Iterator[Monomial]:
        for j, d in enumerate(self.cutoffs):
            for i in range(d):
                yield Monomial(i, j)

    def sorted(self, shift: Sequence[int]) -> list[Monomial]:
        return sorted(self, key=lambda mon: mon.key(shift))

    def as_set(self) -> frozenset[Monomial]:
        return frozenset(self)


def _check_len(p: Sequence, shift: Sequence[int]) -> None:
    if len(p) != len(shift):
        raise ValueError(f"vector of length {len(p)} with shift of length {len(shift)}")


def rdeg(p: Sequence[Polynomial], shift: Sequence[int]):
    """Shifted row degree ``max(deg p_i + s_i)``; ``NEG_INF`` for the zero vector."""
    _check_len(p, shift)
    return max((q.degree + s for q, s in zip(p, shift) if q.coeffs), default=NEG_INF)


def rdeg_matrix(P: Sequence[Sequence[Polynomial]], shift: Sequence[int]) -> list:
    return [rdeg(row, shift) for row in P]


class Pivot(NamedTuple):
    index: int
    entry: Polynomial
    degree: int


def pivot(p: Sequence[Polynomial], shift: Sequence[int]) -> Pivot:
    """s-pivot of a nonzero vector: the last position achieving its row degree."""
    r = rdeg(p, shift)
    if r == NEG_INF:
        raise ValueError("the zero vector has no pivot")
    j = max(i for i, (q, s) in enumerate(zip(p, shift)) if q.coeffs and q.degree + s == r)
    return Pivot(j, p[j], p[j].degree)


def initial_term(p: Sequence[Polynomial], shift: Sequence[int]) -> tuple[Monomial, int]:
    """The s-TOP greatest term of ``p`` as (monomial, coefficient)."""
    _check_len(p, shift)
    best = None
    for j, q in enumerate(p):
        if q.coeffs:
            mon = Monomial(q.degree, j)
            if best is None or mon.key(shift) > best.key(shift):
                best = mon
    if best is None:
        raise ValueError("the zero vector has no initial term")
    return best, p[best.index].leading


def leading_matrix(P: Sequence[Sequence[Polynomial]], shift: Sequence[int]) -> ScalarMatrix:
    """Entry (i, j) is the coefficient of degree ``rdeg_s(P_i) - s_j`` in ``P_ij``."""
    if not P:
        raise ValueError("empty matrix")
    field = P[0][0].field
    out = []
    for row in P:
        r = rdeg(row, shift)
        if r == NEG_INF:
            raise ValueError("leading matrix undefined for a zero row")
        out.append([q.coeff(r - s) for q, s in zip(row, shift)])
    return ScalarMatrix(field, out)


def is_reduced(P, shift) -> bool:
    """s-row reduced: the leading matrix has full row rank."""
    return leading_matrix(P, shift).rank() == len(P)


def is_weak_popov(P, shift) -> bool:
    idx = [pivot(row, shift).index for row in P]
    return len(set(idx)) == len(idx)


def is_ordered_weak_popov(P, shift) -> bool:
    idx = [pivot(row, shift).index for row in P]
    return all(a < b for a, b in zip(idx, idx[1:]))
