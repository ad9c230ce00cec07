"""Exact scalars: rationals, half-integers, multi-indices and Q(sqrt 2)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, total_ordering
from math import factorial

__all__ = [
    "Fraction",
    "HalfInt",
    "MultiIndex",
    "QSqrt2",
    "reciprocal_factorial",
    "format_fraction",
    "parse_fraction",
]


@lru_cache(maxsize=512)
def reciprocal_factorial(n: int) -> Fraction:
    """Return 1/n! for n >= 0 and exactly 0 for negative n."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str | int | Fraction) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    return Fraction(str(text).strip())


@total_ordering
class HalfInt:
    """A number n/2, stored as the integer n."""

    __slots__ = ("twice",)

    def __init__(self, value=0, *, twice: int | None = None):
        if twice is not None:
            object.__setattr__(self, "twice", int(twice))
            return
        if isinstance(value, HalfInt):
            object.__setattr__(self, "twice", value.twice)
            return
        if isinstance(value, str):
            value = Fraction(value.strip())
        q = Fraction(value) * 2
        if q.denominator != 1:
            raise ValueError(f"{value!r} is not a multiple of 1/2")
        object.__setattr__(self, "twice", q.numerator)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def to_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def _coerce(self, other) -> int:
        if isinstance(other, HalfInt):
            return other.twice
        return HalfInt(other).twice

    def __add__(self, other):
        return HalfInt(twice=self.twice + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(twice=self.twice - self._coerce(other))

    def __rsub__(self, other):
        return HalfInt(twice=self._coerce(other) - self.twice)

    def __neg__(self):
        return HalfInt(twice=-self.twice)

    def __mul__(self, k):
        if isinstance(k, int):
            return HalfInt(twice=self.twice * k)
        return self.to_fraction() * Fraction(k)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.twice == self._coerce(other)
        except (ValueError, TypeError):
            return NotImplemented

    def __lt__(self, other):
        return self.twice < self._coerce(other)

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def __int__(self):
        return self.to_int()

    def __str__(self):
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self):
        return f"HalfInt({str(self)!r})"


class MultiIndex(tuple):
    """Immutable integer vector with componentwise arithmetic."""

    def __new__(cls, components=()):
        comps = []
        for c in components:
            if isinstance(c, HalfInt):
                c = c.to_int()
            elif isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer component {c}")
                c = c.numerator
            elif not isinstance(c, int):
                raise TypeError(f"component {c!r} is not an integer")
            comps.append(int(c))
        return super().__new__(cls, comps)

    @classmethod
    def unit(cls, n: int, i: int) -> "MultiIndex":
        return cls(1 if j == i else 0 for j in range(n))

    @classmethod
    def zero(cls, n: int) -> "MultiIndex":
        return cls([0] * n)

    def _check(self, other):
        if len(other) != len(self):
            raise ValueError("length mismatch")

    def __add__(self, other):
        self._check(other)
        return MultiIndex(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._check(other)
        return MultiIndex(a - b for a, b in zip(self, other))

    def __neg__(self):
        return MultiIndex(-a for a in self)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return MultiIndex(k * a for a in self)

    __rmul__ = __mul__

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self)

    def __repr__(self):
        return f"MultiIndex({list(self)})"


class QSqrt2:
    """Exact element a + b*sqrt(2) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _lift(x) -> "QSqrt2":
        return x if isinstance(x, QSqrt2) else QSqrt2(x)

    def __add__(self, other):
        o = self._lift(other)
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return QSqrt2(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __mul__(self, other):
        o = self._lift(other)
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QSqrt2(1)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "QSqrt2":
        return QSqrt2(self.a, -self.b)

    def __truediv__(self, other):
        o = self._lift(other)
        norm = o.a * o.a - 2 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        num = self * o.conjugate()
        return QSqrt2(num.a / norm, num.b / norm)

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QSqrt2({format_fraction(self.a)}, {format_fraction(self.b)})"

    def __str__(self):
        if self.b == 0:
            return format_fraction(self.a)
        if self.a == 0:
            return f"{format_fraction(self.b)}*sqrt2"
        return f"{format_fraction(self.a)}+{format_fraction(self.b)}*sqrt2"
