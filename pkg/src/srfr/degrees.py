"""Achievable pivot degrees of relation modules and their generic values.

* :func:`feasible` - prefix-sum dominance test deciding whether some ``M`` makes
  ``F_d`` independent.
* :func:`generic_pivot_degrees` - the lex-smallest feasible family of a given
  cardinality, built greedily along the s-TOP order.
* :func:`nice_form` - closed form ``(p+1, ..., p+1, p, ..., p)`` of the generic
  row degrees and the conditions under which it holds.
* :func:`witness_matrix` / :func:`srfr_witness` - explicit block-Krylov
  matrices realizing a feasible ``F_d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import NamedTuple, Sequence

from .field import PrimeField
from .order import Monomial, MonomialFamily, MonomialStream, PolyVector
from .poly import Polynomial
from .relation import ModuliSet, family_independent


def _pad(v: Sequence[int], m: int) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    if len(v) > m:
        raise ValueError(f"vector of length {len(v)} does not fit in {m} components")
    return v + (0,) * (m - len(v))


def feasible(d: Sequence[int], f: Sequence[int]) -> bool:
    """True iff the decreasing rearrangement of ``d`` is prefix-dominated by ``f``.

    ``f`` is padded with zeros to the length of ``d``.
    """
    if any(x < 0 for x in d):
        raise ValueError("degree vectors must be nonnegative")
    ds = sorted((int(x) for x in d), reverse=True)
    fs = sorted(_pad(f, len(ds)), reverse=True)
    return all(a <= b for a, b in zip(accumulate(ds), accumulate(fs)))


@dataclass(frozen=True)
class PredictedProfile:
    pivot_degrees: tuple[int, ...]
    row_degrees: tuple[int, ...]
    rank: int
    selection: tuple[tuple[Monomial, bool], ...]
    """Monomials visited in s-TOP order and whether each was taken."""

    @property
    def family(self) -> MonomialFamily:
        return MonomialFamily(self.pivot_degrees)


def generic_pivot_degrees(f: Sequence[int], shift: Sequence[int], r: int | None = None) -> PredictedProfile:
    """Pivot degrees ``delta_r`` of the lex-min feasible family of ``r`` monomials.

    ``r`` defaults to ``sum(f)``, the generic rank.
    """
    m = len(shift)
    fp = _pad(f, m)
    total = sum(fp)
    if r is None:
        r = total
    if not 0 <= r <= total:
        raise ValueError(f"rank {r} outside [0, {total}]")
    d = [0] * m
    trace = []
    taken = 0
    stream = MonomialStream(shift)
    while taken < r:
        try:
            mon = next(stream)
        except StopIteration:
            raise RuntimeError("greedy selection ran out of monomials") from None
        j = mon.index
        d[j] += 1
        if feasible(d, fp):
            taken += 1
            trace.append((mon, True))
        else:
            # feasibility only gets harder as d grows, so index j is done
            d[j] -= 1
            stream.close(j)
            trace.append((mon, False))
    delta = tuple(d)
    return PredictedProfile(delta, tuple(x + s for x, s in zip(delta, shift)), r, tuple(trace))


class NiceForm(NamedTuple):
    row_degrees: tuple[int, ...]
    applies: bool
    failed: tuple[str, ...]
    quotient: int
    remainder: int


def nice_form(f: Sequence[int], shift: Sequence[int]) -> NiceForm:
    """Candidate generic row degrees from ``sum(f_i + s_i) = p*m + u``.

    The candidate is ``u`` entries ``p+1`` followed by ``m-u`` entries ``p``.
    ``failed`` lists the conditions that do not hold:

    * ``"quotient-bound"``: ``p >= max(s)``;
    * ``"prefix-bound"``: prefix sums of the candidate stay below those of ``f + s``;
    * ``"dominance"``: the implied pivot degrees ``candidate - s``, once sorted,
      are prefix-dominated by ``f``.  ``prefix-bound`` checks prefixes in index order
      only, which is enough when ``candidate - s`` is non-increasing but not in
      general (e.g. ``f=(1,1)``, ``s=(0,-2)``).

    When nothing fails the candidate is checked against
    :func:`generic_pivot_degrees`.
    """
    m = len(shift)
    fp = _pad(f, m)
    if any(a < b for a, b in zip(fp, fp[1:])):
        raise ValueError("f must be non-increasing")
    fs = [a + s for a, s in zip(fp, shift)]
    q, u = divmod(sum(fs), m)
    cand = tuple([q + 1] * u + [q] * (m - u))
    failed = []
    if q < max(shift):
        failed.append("quotient-bound")
    if any(a > b for a, b in zip(accumulate(cand[:-1]), accumulate(fs[:-1]))):
        failed.append("prefix-bound")
    if not failed and not feasible([c - s for c, s in zip(cand, shift)], fp):
        failed.append("dominance")
    applies = not failed
    if applies:
        got = generic_pivot_degrees(fp, shift).row_degrees
        if got != cand:
            raise RuntimeError(f"closed form {cand} disagrees with greedy profile {got}")
    return NiceForm(cand, applies, tuple(failed), q, u)


class Borrow(NamedTuple):
    """Columns ``x^start u_source .. x^(start+count-1) u_source`` placed in block
    ``block`` at positions ``offset..``; they extend to ``x^shift u_source``."""

    block: int
    source: int
    start: int
    count: int
    offset: int
    shift: int


@dataclass(frozen=True)
class KrylovWitness:
    M: list[PolyVector]
    family: MonomialFamily
    trace: tuple[Borrow, ...]
    independent: bool
    u: tuple[Polynomial, ...] | None = None


def _borrow_plan(f: Sequence[int], d: Sequence[int]) -> list[Borrow]:
    m = len(d)
    fp = _pad(f, m)
    used = [0] * m
    plan = []
    for j in range(m):
        own = min(fp[j], d[j])
        used[j] = own
        need = d[j] - own
        offset = own
        for src in range(j):
            if need == 0:
                break
            avail = fp[src] - used[src]
            if avail <= 0:
                continue
            t = min(avail, need)
            sh = used[src] - offset
            if sh < 0:
                raise ValueError(f"negative Krylov offset for block {j} from block {src}")
            plan.append(Borrow(j, src, used[src], t, offset, sh))
            used[src] += t
            offset += t
            need -= t
        if need:
            raise ValueError(f"block {j} cannot borrow enough columns; d is not feasible")
    return plan


def _krylov_rows(field: PrimeField, n: int, d: Sequence[int], plan: Sequence[Borrow]) -> list[PolyVector]:
    one = Polynomial.one(field)
    rows = []
    for j in range(len(d)):
        row = [Polynomial.zero(field)] * n
        if j < n:
            row[j] = one
        for b in plan:
            if b.block == j:
                row[b.source] = row[b.source] + Polynomial.monomial(field, b.shift)
        rows.append(tuple(row))
    return rows


def _default_mods(field: PrimeField, f: Sequence[int]) -> ModuliSet:
    return ModuliSet([Polynomial.monomial(field, fi) for fi in f])


def witness_matrix(
    f: Sequence[int], d: Sequence[int], field: PrimeField, mods: ModuliSet | None = None
) -> KrylovWitness:
    """Matrix ``M`` with rows ``v_j`` such that ``{x^i v_j : i < d_j}`` is independent.

    ``f`` (length n) and ``d`` (length m >= n) must both be non-increasing and
    ``d`` feasible for ``f``.  Independence is checked modulo ``mods`` (default
    ``x^f_i``).
    """
    f = tuple(int(x) for x in f)
    d = tuple(int(x) for x in d)
    n, m = len(f), len(d)
    if m < n:
        raise ValueError("need at least as many rows as moduli")
    if any(a < b for a, b in zip(f, f[1:])) or any(a < b for a, b in zip(d, d[1:])):
        raise ValueError("f and d must be non-increasing")
    if not feasible(d, f):
        raise ValueError(f"d={d} is not feasible for f={f}")
    if mods is None:
        mods = _default_mods(field, f)
    elif mods.degrees != f:
        raise ValueError("moduli degrees do not match f")
    plan = _borrow_plan(f, d)
    M = _krylov_rows(field, n, d, plan)
    fam = MonomialFamily(d)
    return KrylovWitness(M, fam, tuple(plan), family_independent(M, mods, fam))


def srfr_witness(
    f: Sequence[int], N: Sequence[int], D: int, field: PrimeField, mods: ModuliSet | None = None
) -> KrylovWitness:
    """An instance ``u`` whose matrix ``[Id; -u]`` realizes ``F_(N_1..N_n, D-1)``.

    Requires ``0 < N_i <= f_i``, ``0 < D <= min(f) + 1`` and
    ``sum(f) == sum(N) + D - 1``.  The returned ``u`` has ``deg u_i < f_i``.
    """
    f = tuple(int(x) for x in f)
    N = tuple(int(x) for x in N)
    n = len(f)
    if len(N) != n:
        raise ValueError("f and N lengths differ")
    if any(not 0 < a <= b for a, b in zip(N, f)):
        raise ValueError("need 0 < N_i <= f_i")
    if not 0 < D or D - 1 > min(f):
        raise ValueError("need 0 < D and D - 1 <= min f_i")
    if sum(f) != sum(N) + D - 1:
        raise ValueError("need sum(f) == sum(N) + D - 1")
    if mods is None:
        mods = _default_mods(field, f)
    elif mods.degrees != f:
        raise ValueError("moduli degrees do not match f")
    d = N + (D - 1,)
    plan = _borrow_plan(f, d)
    M = _krylov_rows(field, n, d, plan)
    u = tuple(-q for q in M[n])
    fam = MonomialFamily(d)
    return KrylovWitness(M, fam, tuple(plan), family_independent(M, mods, fam), u)
