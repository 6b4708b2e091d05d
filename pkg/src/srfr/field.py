"""Prime fields F_p and their elements.

Polynomials and matrices elsewhere in the package store coefficients as plain
canonical ``int`` residues for speed; :class:`FieldElement` is the user-facing
scalar type and interoperates with ints.
"""

from __future__ import annotations

from functools import total_ordering

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field of integers modulo a prime ``p`` (``p = 2`` included)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        p = int(p)
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        self.p = p

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __len__(self):
        return self.p

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("0 has no inverse")
        # pow(., -1, p) runs the integer extended Euclidean algorithm
        return pow(value, -1, self.p)

    def elements(self):
        return [FieldElement(self, v) for v in range(self.p)]


def _value(x, field: PrimeField) -> int:
    if isinstance(x, FieldElement):
        if x.field != field:
            raise ValueError("elements of different fields")
        return x.value
    return int(x) % field.p


@total_ordering
class FieldElement:
    """An element of F_p, kept as its canonical residue in ``[0, p)``."""

    __slots__ = ("field", "value")

    def __init__(self, field: PrimeField, value):
        self.field = field
        self.value = _value(value, field)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __add__(self, other):
        return FieldElement(self.field, self.value + _value(other, self.field))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.value - _value(other, self.field))

    def __rsub__(self, other):
        return FieldElement(self.field, _value(other, self.field) - self.value)

    def __mul__(self, other):
        if not isinstance(other, (int, FieldElement)):
            return NotImplemented
        return FieldElement(self.field, self.value * _value(other, self.field))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, -self.value)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * FieldElement(self.field, self.field.inv(_value(other, self.field)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, _value(other, self.field)) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(self.field, pow(self.value, k, self.field.p))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __lt__(self, other):
        return self.value < _value(other, self.field)

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"
