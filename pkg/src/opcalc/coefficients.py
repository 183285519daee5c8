"""Exact coefficient fields: the rationals and prime fields.

Rationals are represented by :class:`fractions.Fraction` (arbitrary precision,
always reduced, positive denominator).  Elements of F_p are :class:`ModP`
residues.  Everything downstream only uses the arithmetic operators, so both
kinds of scalar can flow through the same code.
"""

from __future__ import annotations

import random
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Raised when scalars of different fields are combined."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class ModP:
    """Residue class modulo a prime, kept in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"cannot combine F_{self.p} and Q")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """Common interface of the coefficient fields."""

    characteristic: int

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def spec(self) -> str:
        raise NotImplementedError

    def random(self, rng: random.Random, bound: int = 3):
        """A random scalar with small numerator/denominator (or residue)."""
        raise NotImplementedError

    def invertible(self, n: int) -> bool:
        """Whether the integer ``n`` is a unit in this field."""
        return self.characteristic == 0 or n % self.characteristic != 0

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec() == other.spec()

    def __hash__(self):
        return hash(self.spec())

    def __repr__(self):
        return f"<Field {self.spec()}>"


class Rationals(Field):
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, ModP):
            raise FieldMismatchError("cannot coerce an F_p residue into Q")
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise TypeError("floating point scalars are not accepted")
        return Fraction(x)

    def parse(self, text):
        text = str(text).strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {text!r}") from exc

    def format(self, a):
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def spec(self):
        return "Q"

    def random(self, rng, bound=3):
        num = rng.randint(-bound, bound)
        den = rng.randint(1, bound)
        return Fraction(num, den)


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldMismatchError(f"cannot coerce F_{x.p} into F_{self.p}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes in F_{self.p}")
            return ModP(x.numerator, self.p) / x.denominator
        if isinstance(x, float):
            raise TypeError("floating point scalars are not accepted")
        return ModP(int(x), self.p)

    def parse(self, text):
        text = str(text).strip()
        if "/" in text:
            return self(Fraction(text))
        try:
            return ModP(int(text), self.p)
        except ValueError as exc:
            raise ValueError(f"not an integer residue: {text!r}") from exc

    def format(self, a):
        return str(self(a).v)

    def spec(self):
        return f"Fp:{self.p}"

    def random(self, rng, bound=3):
        return ModP(rng.randrange(self.p), self.p)


QQ = Rationals()


def parse_field(spec: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    spec = spec.strip()
    if spec in ("Q", "QQ"):
        return QQ
    if spec.startswith("Fp:"):
        try:
            p = int(spec[3:])
        except ValueError as exc:
            raise ValueError(f"bad prime in field spec {spec!r}") from exc
        return PrimeField(p)
    raise ValueError(f"unknown field {spec!r}; expected 'Q' or 'Fp:<p>'")
