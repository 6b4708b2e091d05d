"""Decoding evaluation codes of rational functions with errors.

A codeword is the evaluation of a reduced vector fraction ``v/d`` at distinct
points; some columns may be corrupted.  With ``Lambda`` the error locator, the
pair ``(Lambda v, Lambda d)`` solves an SRFR instance built from the
interpolants of the received rows, with bounds ``N + eps`` and ``D + eps``.
Reed-Solomon (n = 1, D = 1) and interleaved Reed-Solomon (D = 1) codes are
special cases, as is polynomial linear system solving with a faulty black box.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .field import PrimeField
from .linalg import ScalarMatrix, SingularMatrixError, solve_linear
from .poly import Polynomial, gcd, interpolate, vanishing_poly
from .reconstruct import SRFRInstance, srfr_solve
from .relation import ModuliSet
from .sampling import random_scalars


@dataclass(frozen=True)
class EvalParams:
    field: PrimeField
    alphas: tuple[int, ...]
    n: int
    N: int
    D: int
    eps: int

    def __post_init__(self):
        p = self.field.p
        object.__setattr__(self, "alphas", tuple(int(a) % p for a in self.alphas))
        f = len(self.alphas)
        if len(set(self.alphas)) != f:
            raise ValueError("evaluation points must be pairwise distinct")
        if self.n < 1:
            raise ValueError("need n >= 1")
        if not (0 < self.N < f and 0 < self.D < f and 0 <= self.eps < f):
            raise ValueError(f"need 0 < N, D < f and 0 <= eps < f (f={f})")

    @property
    def f(self) -> int:
        return len(self.alphas)


@dataclass(frozen=True)
class ErrorPattern:
    """Nonzero error columns ``values[j]`` (length n) at positions ``j``."""

    values: dict[int, tuple[int, ...]] = dc_field(default_factory=dict)

    def __post_init__(self):
        for j, col in self.values.items():
            if not any(col):
                raise ValueError(f"error column {j} is zero")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.values))

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class ReceivedWord:
    field: PrimeField
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def f(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def diff_columns(self, other: ReceivedWord) -> list[int]:
        return [j for j in range(self.f) if self.column(j) != other.column(j)]


def encode(v: Sequence[Polynomial], d: Polynomial, alphas: Iterable[int]) -> ReceivedWord:
    """Columns ``v(alpha_j) / d(alpha_j)``."""
    F = d.field
    alphas = list(alphas)
    dens = [d.evaluate(a) for a in alphas]
    if any(x == 0 for x in dens):
        raise ValueError("denominator vanishes at an evaluation point")
    inv = [F.inv(x) for x in dens]
    rows = tuple(tuple(vi.evaluate(a) * iv % F.p for a, iv in zip(alphas, inv)) for vi in v)
    return ReceivedWord(F, rows)


def inject_errors(word: ReceivedWord, pattern: ErrorPattern) -> ReceivedWord:
    p = word.field.p
    rows = [list(r) for r in word.rows]
    for j, col in pattern.values.items():
        if len(col) != word.n:
            raise ValueError("error column length differs from interleaving depth")
        for i, e in enumerate(col):
            rows[i][j] = (rows[i][j] + e) % p
    return ReceivedWord(word.field, tuple(tuple(r) for r in rows))


def random_error_pattern(
    rng: np.random.Generator,
    field: PrimeField,
    n: int,
    f: int,
    size: int,
    support: Sequence[int] | None = None,
    mode: str = "full",
) -> ErrorPattern:
    """Errors on ``size`` random positions (or on ``support``).

    ``mode="full"`` draws each column uniformly among nonzero vectors of K^n;
    ``mode="sparse"`` corrupts a single random entry per column.
    """
    if support is None:
        support = sorted(int(j) for j in rng.choice(f, size=size, replace=False))
    values = {}
    for j in support:
        if mode == "full":
            col = [0] * n
            while not any(col):
                col = random_scalars(rng, field, n)
        elif mode == "sparse":
            col = [0] * n
            col[int(rng.integers(0, n))] = random_scalars(rng, field, 1, nonzero=True)[0]
        else:
            raise ValueError(f"unknown error mode {mode!r}")
        values[int(j)] = tuple(col)
    return ErrorPattern(values)


def normalize_fraction(v: Sequence[Polynomial], d: Polynomial) -> tuple[tuple[Polynomial, ...], Polynomial]:
    """Reduce ``v/d`` and make the denominator monic."""
    if d.is_zero():
        raise ZeroDivisionError("zero denominator")
    g = gcd(d, *v)
    d = d // g
    c = d.field.inv(d.leading)
    return tuple((q // g) * c for q in v), d * c


@dataclass
class DecodeResult:
    v: tuple[Polynomial, ...] | None
    d: Polynomial | None
    success: bool
    lambda_degree: int
    error_positions: tuple[int, ...]
    rank: int
    kdim: int

    @property
    def ambiguous(self) -> bool:
        """More than one K[x]-independent solution of the key equation."""
        return self.rank > 1

    def matches(self, v: Sequence[Polynomial], d: Polynomial) -> bool:
        if not self.success:
            return False
        tv, td = normalize_fraction(v, d)
        return tv == self.v and td == self.d


def srfrwe_solve(word: ReceivedWord, params: EvalParams) -> DecodeResult:
    """Decode a received word via the SRFR key equation."""
    F = params.field
    n, N, D, eps = params.n, params.N, params.D, params.eps
    if word.n != n or word.f != params.f:
        raise ValueError("received word shape does not match parameters")
    alphas = params.alphas
    u = [interpolate(F, zip(alphas, row)) for row in word.rows]
    a = vanishing_poly(F, alphas)
    inst = SRFRInstance(ModuliSet([a] * n), u, (N + eps,) * n, D + eps)
    space = srfr_solve(inst)
    fail = DecodeResult(None, None, False, 0, (), space.rank, space.kdim)
    g_min = space.minimal
    if g_min is None or g_min[n].is_zero():
        return fail
    phi, psi = g_min[:n], g_min[n]
    lam = gcd(psi, *phi)
    v = tuple(q // lam for q in phi)
    d = psi // lam
    c = F.inv(d.leading)
    v, d = tuple(q * c for q in v), d * c
    if any(q.degree >= N for q in v) or d.degree >= D:
        return fail
    dens = [d.evaluate(x) for x in alphas]
    if any(x == 0 for x in dens):
        return fail
    bad = []
    for j, (x, den) in enumerate(zip(alphas, dens)):
        inv = F.inv(den)
        if any(q.evaluate(x) * inv % F.p != row[j] for q, row in zip(v, word.rows)):
            bad.append(j)
    if len(bad) > eps:
        return fail
    return DecodeResult(v, d, True, int(lam.degree), tuple(bad), space.rank, space.kdim)


# -- polynomial linear systems -------------------------------------------------


def poly_det(A: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant by the Leibniz formula (desk-scale n only)."""
    n = len(A)
    F = A[0][0].field
    total = Polynomial.zero(F)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Polynomial.one(F)
        for i, j in enumerate(perm):
            term = term * A[i][j]
        total = total - term if inversions % 2 else total + term
    return total


def _minor(A, i: int, j: int):
    return [tuple(q for c, q in enumerate(row) if c != j) for r, row in enumerate(A) if r != i]


def adjugate(A: Sequence[Sequence[Polynomial]]) -> list[tuple[Polynomial, ...]]:
    n = len(A)
    F = A[0][0].field
    if n == 1:
        return [(Polynomial.one(F),)]
    # adj(A)[i][j] = (-1)^(i+j) det(minor(A, j, i))
    return [
        tuple((poly_det(_minor(A, j, i)) * (-1 if (i + j) % 2 else 1)) for j in range(n))
        for i in range(n)
    ]


def cramer_solve(A, b: Sequence[Polynomial]) -> tuple[tuple[Polynomial, ...], Polynomial]:
    """Reduced ``A^{-1} b = v/d`` with monic ``d``."""
    det = poly_det(A)
    if det.is_zero():
        raise SingularMatrixError(-1, len(A))
    adj = adjugate(A)
    F = det.field
    v = []
    for row in adj:
        acc = Polynomial.zero(F)
        for q, bj in zip(row, b):
            acc = acc + q * bj
        v.append(acc)
    return normalize_fraction(v, det)


@dataclass
class BlackBoxPLS:
    """Evaluated solver for ``A(x) y = b(x)`` that corrupts answers at ``faults``.

    ``faults`` maps an evaluation point to the nonzero error vector added to the
    correct answer there.
    """

    A: list[tuple[Polynomial, ...]]
    b: tuple[Polynomial, ...]
    faults: dict[int, tuple[int, ...]] = dc_field(default_factory=dict)

    @property
    def field(self) -> PrimeField:
        return self.b[0].field

    @property
    def n(self) -> int:
        return len(self.b)

    def evaluate(self, alpha: int) -> tuple[int, ...]:
        """``A(alpha)^{-1} b(alpha)`` plus any injected fault.

        Raises :class:`SingularMatrixError` when ``A(alpha)`` is singular.
        """
        F = self.field
        Aa = ScalarMatrix(F, [[q.evaluate(alpha) for q in row] for row in self.A])
        y = solve_linear(Aa, [q.evaluate(alpha) for q in self.b])
        e = self.faults.get(int(alpha) % F.p)
        if e is not None:
            y = [(yi + ei) % F.p for yi, ei in zip(y, e)]
        return tuple(y)


@dataclass
class PLSResult:
    decode: DecodeResult
    alphas: tuple[int, ...]
    skipped: tuple[int, ...]
    expected: tuple[tuple[Polynomial, ...], Polynomial]

    @property
    def matches(self) -> bool:
        return self.decode.matches(*self.expected)


def plswe_pipeline(box: BlackBoxPLS, params: EvalParams, spare: Iterable[int] = ()) -> PLSResult:
    """Query the black box at ``params.alphas``, decode, compare with Cramer.

    Points where ``A`` is singular are skipped and replaced by the next unused
    point of ``spare``.
    """
    spare = iter(spare)
    used: list[int] = []
    skipped: list[int] = []
    cols: list[tuple[int, ...]] = []
    queue = list(params.alphas)
    while queue:
        alpha = queue.pop(0)
        try:
            cols.append(box.evaluate(alpha))
            used.append(alpha)
        except SingularMatrixError:
            skipped.append(alpha)
            for cand in spare:
                if cand not in used and cand not in queue and cand not in skipped:
                    queue.append(cand)
                    break
            else:
                raise ValueError(f"no spare evaluation point left to replace {alpha}") from None
    rows = tuple(tuple(c[i] for c in cols) for i in range(box.n))
    p2 = EvalParams(params.field, tuple(used), params.n, params.N, params.D, params.eps)
    result = srfrwe_solve(ReceivedWord(params.field, rows), p2)
    return PLSResult(result, tuple(used), tuple(skipped), cramer_solve(box.A, box.b))
