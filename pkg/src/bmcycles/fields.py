"""Exact coefficient fields: the rationals and prime fields."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class Fp:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.p = p
        if isinstance(v, Fraction):
            v = v.numerator * pow(v.denominator, -1, p)
        self.v = int(v) % p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, (int, Fraction)):
            return Fp(other, self.p).v
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pow__(self, k):
        if k < 0:
            return Fp(pow(pow(self.v, -1, self.p), -k, self.p), self.p)
        return Fp(pow(self.v, k, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.v == o

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def __int__(self):
        return self.v


class Field:
    """A coefficient field; ``char == 0`` means the rationals."""

    def __init__(self, char: int = 0):
        if char < 0 or (char and not _is_prime(char)):
            raise ValueError(f"field characteristic must be 0 or a prime, got {char}")
        self.char = char

    def __call__(self, x):
        if self.char:
            if isinstance(x, Fp):
                if x.p != self.char:
                    raise ValueError(f"mixing F_{x.p} and F_{self.char}")
                return x
            return Fp(x, self.char)
        if isinstance(x, Fp):
            raise ValueError("cannot coerce an F_p element into QQ")
        return Fraction(x)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def elements(self):
        if not self.char:
            raise ValueError("QQ is infinite")
        return [self(i) for i in range(self.char)]

    def random(self, rng, bound: int = 5):
        if self.char:
            return self(rng.randrange(self.char))
        return self(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))

    def __eq__(self, other):
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if not self.char else f"GF({self.char})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def parse_scalar(field: Field, s):
    """Coerce ints, Fractions and strings like ``"3/4"`` into ``field``."""
    if isinstance(s, str):
        s = Fraction(s.strip())
    return field(s)


def format_scalar(c) -> str | int:
    if isinstance(c, Fp):
        return c.v
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return c
