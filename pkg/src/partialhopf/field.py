"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values.  Prime field
scalars are :class:`Mod` instances that refuse to mix with other primes or
with non-integral rationals, so that a whole computation stays inside the
field it declared.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import FieldMismatchError, StructuralError, UnsupportedFieldError


class Mod:
    """Residue class modulo a prime ``p``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _other(self, other) -> int:
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine GF({self.p}) and GF({other.p}) scalars")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"cannot combine GF({self.p}) scalar with rational {other}")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        o %= self.p
        if o == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, Fraction):
            if other.denominator != 1:
                return False
            return self.value == other.numerator % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return f"{self.value} mod {self.p}"


Scalar = Union[Fraction, Mod]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")
_MOD_RE = re.compile(r"^\s*(-?\d+)\s+mod\s+(\d+)\s*$")


class Field:
    """Common interface of :class:`RationalField` and :class:`PrimeField`."""

    char: int = 0

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def __call__(self, x) -> Scalar:  # pragma: no cover - abstract
        raise NotImplementedError

    def contains(self, x) -> bool:  # pragma: no cover - abstract
        raise NotImplementedError

    def check(self, x) -> Scalar:
        if not self.contains(x):
            raise FieldMismatchError(f"scalar {x!r} does not belong to {self}")
        return x

    def divides_char(self, n: int) -> bool:
        """True if the characteristic divides ``n`` (so ``n`` is zero in the field)."""
        return self.char != 0 and n % self.char == 0

    def require_invertible(self, n: int, what: str = "the group order") -> None:
        if self.divides_char(n):
            raise UnsupportedFieldError(f"char {self.char} divides {what} ({n})")

    def format(self, x) -> str:  # pragma: no cover - abstract
        raise NotImplementedError

    def parse(self, s):
        return self(s)


class RationalField(Field):
    char = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            return Fraction(int(x))
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Mod):
            raise FieldMismatchError(f"GF({x.p}) scalar {x} used in a rational computation")
        if isinstance(x, str):
            m = _RATIONAL_RE.match(x)
            if not m:
                raise StructuralError(f"cannot parse rational scalar {x!r}")
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise StructuralError(f"zero denominator in {x!r}")
            return Fraction(int(m.group(1)), den)
        raise StructuralError(f"unsupported scalar {x!r}")

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def format(self, x) -> str:
        x = self(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def spec(self) -> str:
        return "q"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise StructuralError(f"{p} is not prime")
        self.char = p
        self.p = p

    def __call__(self, x) -> Mod:
        p = self.p
        if isinstance(x, Mod):
            if x.p != p:
                raise FieldMismatchError(f"GF({x.p}) scalar used in GF({p}) computation")
            return x
        if isinstance(x, bool):
            return Mod(int(x), p)
        if isinstance(x, int):
            return Mod(x, p)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return Mod(x.numerator * pow(x.denominator, -1, p), p)
        if isinstance(x, str):
            m = _MOD_RE.match(x)
            if m:
                if int(m.group(2)) != p:
                    raise FieldMismatchError(f"scalar {x!r} is not in GF({p})")
                return Mod(int(m.group(1)), p)
            m = _RATIONAL_RE.match(x)
            if m:
                den = int(m.group(2)) if m.group(2) else 1
                return self(Fraction(int(m.group(1)), den))
            raise StructuralError(f"cannot parse GF({p}) scalar {x!r}")
        raise StructuralError(f"unsupported scalar {x!r}")

    def contains(self, x) -> bool:
        return isinstance(x, Mod) and x.p == self.p

    def format(self, x) -> str:
        return f"{self(x).value} mod {self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def spec(self) -> str:
        return f"gf:{self.p}"


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str) -> Field:
    """Parse ``"q"`` or ``"gf:<p>"``."""
    s = spec.strip().lower()
    if s in ("q", "qq", "rational", "rationals"):
        return QQ
    if s.startswith("gf:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise StructuralError(f"bad field spec {spec!r}") from None
        return GF(p)
    raise StructuralError(f"bad field spec {spec!r}; expected 'q' or 'gf:<p>'")
