"""Dense univariate polynomials over a prime field.

Coefficients are canonical ints, lowest degree first, with no trailing zeros.
The zero polynomial has an empty coefficient tuple and degree ``NEG_INF``.

The ``_`` prefixed helpers work on raw coefficient lists and are what the hot
loops of the relation-basis code call directly.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .field import FieldElement, PrimeField

NEG_INF = -math.inf


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = (out[i] + y) % p
    return _trim(out)


def _sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def _scale(a: Sequence[int], c: int, p: int) -> list[int]:
    c %= p
    if c == 0:
        return []
    return [x * c % p for x in a]


def _mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] % p
        if c:
            c = c * inv % p
            q[k - db] = c
            for j in range(db + 1):
                r[k - db + j] = (r[k - db + j] - c * b[j]) % p
    return _trim(q), _trim(r[:db])


def _mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return _divmod(a, b, p)[1]


def _eval(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


class Polynomial:
    """Immutable polynomial in F_p[x]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable = ()):
        self.field = field
        p = field.p
        c = [int(x) % p for x in coeffs]
        self.coeffs = tuple(_trim(c))

    @classmethod
    def _raw(cls, field: PrimeField, coeffs: list[int]) -> Polynomial:
        # coeffs already reduced and trimmed
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def zero(cls, field: PrimeField) -> Polynomial:
        return cls._raw(field, [])

    @classmethod
    def one(cls, field: PrimeField) -> Polynomial:
        return cls._raw(field, [1])

    @classmethod
    def constant(cls, field: PrimeField, c) -> Polynomial:
        return cls(field, [int(c)])

    @classmethod
    def monomial(cls, field: PrimeField, degree: int, coeff=1) -> Polynomial:
        return cls(field, [0] * degree + [int(coeff)])

    @classmethod
    def x(cls, field: PrimeField) -> Polynomial:
        return cls._raw(field, [0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def monic(self) -> Polynomial:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return Polynomial._raw(self.field, _scale(self.coeffs, self.field.inv(self.coeffs[-1]), self.field.p))

    def _other(self, other) -> tuple[int, ...]:
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other.coeffs
        if isinstance(other, (int, FieldElement)):
            v = int(other) % self.field.p
            return (v,) if v else ()
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        return Polynomial._raw(self.field, _add(self.coeffs, self._other(other), self.field.p))

    __radd__ = __add__

    def __sub__(self, other):
        return Polynomial._raw(self.field, _sub(self.coeffs, self._other(other), self.field.p))

    def __rsub__(self, other):
        return Polynomial._raw(self.field, _sub(self._other(other), self.coeffs, self.field.p))

    def __neg__(self):
        return Polynomial._raw(self.field, _sub((), self.coeffs, self.field.p))

    def __mul__(self, other):
        return Polynomial._raw(self.field, _mul(self.coeffs, self._other(other), self.field.p))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.one(self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        q, r = _divmod(self.coeffs, self._other(other), self.field.p)
        return Polynomial._raw(self.field, q), Polynomial._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def shift(self, k: int) -> Polynomial:
        """Multiply by x**k (k >= 0)."""
        if not self.coeffs:
            return self
        return Polynomial._raw(self.field, [0] * k + list(self.coeffs))

    def __call__(self, x):
        return FieldElement(self.field, _eval(self.coeffs, int(x), self.field.p))

    def evaluate(self, x) -> int:
        return _eval(self.coeffs, int(x), self.field.p)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self.coeffs == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self}, p={self.field.p})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


def extended_euclidean(a: Polynomial, b: Polynomial) -> list[tuple[Polynomial, Polynomial, Polynomial]]:
    """Remainder sequence of the extended Euclidean algorithm.

    Returns rows ``(r_i, s_i, t_i)`` with ``s_i*a + t_i*b == r_i``, starting with
    ``(a, 1, 0)`` and ``(b, 0, 1)`` and stopping at the last nonzero remainder.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("extended_euclidean of two zero polynomials")
    F = a.field
    p = F.p
    rows = [(list(a.coeffs), [1], []), (list(b.coeffs), [], [1])]
    if b.is_zero():
        rows.pop()
    else:
        while True:
            (r0, s0, t0), (r1, s1, t1) = rows[-2], rows[-1]
            q, r2 = _divmod(r0, r1, p)
            if not r2:
                break
            rows.append((r2, _sub(s0, _mul(q, s1, p), p), _sub(t0, _mul(q, t1, p), p)))
    return [tuple(Polynomial._raw(F, c) for c in row) for row in rows]


def gcd(*polys: Polynomial) -> Polynomial:
    """Monic gcd; the gcd of only zero polynomials is zero."""
    if not polys:
        raise ValueError("gcd of nothing")
    F = polys[0].field
    g: list[int] = []
    for q in polys:
        a, b = g, list(q.coeffs)
        while b:
            a, b = b, _mod(a, b, F.p)
        g = a
    return Polynomial._raw(F, g).monic()


def inverse_mod(a: Polynomial, m: Polynomial) -> Polynomial:
    """Inverse of ``a`` modulo ``m``; raises ValueError if not coprime."""
    if m.degree == 0:
        return Polynomial.zero(a.field)
    rows = extended_euclidean(m, a % m)
    r, _, t = rows[-1]
    if r.degree != 0:
        raise ValueError("polynomial not invertible modulo m")
    return (t * a.field.inv(r.leading)) % m


def vanishing_poly(field: PrimeField, alphas: Iterable) -> Polynomial:
    """Monic polynomial whose roots are exactly the distinct points ``alphas``."""
    pts = [int(a) % field.p for a in alphas]
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be pairwise distinct")
    c = [1]
    for a in pts:
        c = _mul(c, [(-a) % field.p, 1], field.p)
    return Polynomial._raw(field, c)


def interpolate(field: PrimeField, points: Iterable[tuple]) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points`` (Newton form)."""
    pts = [(int(x) % field.p, int(y) % field.p) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissas must be pairwise distinct")
    p = field.p
    # divided differences, in place
    dd = [y for _, y in pts]
    n = len(pts)
    for k in range(1, n):
        for i in range(n - 1, k - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) * pow(xs[i] - xs[i - k], -1, p) % p
    c: list[int] = []
    for i in range(n - 1, -1, -1):
        c = _add(_mul(c, [(-xs[i]) % p, 1], p), [dd[i]], p)
    return Polynomial._raw(field, c)
