"""Exact coefficient fields: the rationals (characteristic 0) and prime fields.

Elements are plain Python numbers.  In characteristic 0 they are ``int`` or
``fractions.Fraction`` (a Fraction with denominator 1 is collapsed to an
``int`` by :meth:`Field.__call__`); in characteristic ``p`` they are ``int``
residues in ``range(p)``.  The algebraic closure is never built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError

MAX_CHARACTERISTIC = 2**61


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """The field Q (``characteristic=0``) or F_p (``characteristic=p``)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if not isinstance(p, int) or isinstance(p, bool):
            raise FieldError(f"characteristic must be an integer, got {p!r}")
        if p < 0:
            raise FieldError(f"characteristic must be nonnegative, got {p}")
        if p != 0:
            if p >= MAX_CHARACTERISTIC:
                raise FieldError(f"characteristic {p} exceeds 2^61")
            if not is_prime(p):
                raise FieldError(f"characteristic {p} is not prime")

    @property
    def p(self) -> int:
        return self.characteristic

    def __call__(self, value) -> int | Fraction:
        """Coerce an int or Fraction into the field."""
        p = self.characteristic
        if isinstance(value, bool):
            value = int(value)
        if p == 0:
            if isinstance(value, Fraction):
                return value.numerator if value.denominator == 1 else value
            if isinstance(value, int):
                return value
            raise FieldError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return value % p
        if isinstance(value, Fraction):
            den = value.denominator % p
            if den == 0:
                raise FieldError(f"denominator of {value} vanishes in GF({p})")
            return value.numerator * pow(den, -1, p) % p
        raise FieldError(f"cannot coerce {value!r} into GF({p})")

    def reduce(self, value):
        """Cheap normalisation of a value produced by ring operations."""
        if self.characteristic:
            return value % self.characteristic
        return value

    def inv(self, a):
        p = self.characteristic
        if p:
            a %= p
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(a, -1, p)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        r = Fraction(1) / a
        return r.numerator if r.denominator == 1 else r

    def div(self, a, b):
        p = self.characteristic
        if p:
            return a * self.inv(b) % p
        if b == 0:
            raise ZeroDivisionError("division by 0")
        r = Fraction(a) / b
        return r.numerator if r.denominator == 1 else r

    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def signed(self, a) -> int | Fraction:
        """Representative of ``a`` with the smallest absolute value (for printing)."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a


QQ = Field(0)
