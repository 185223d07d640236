"""Exact numbers ``a + b*sqrt(d)`` with rational ``a, b`` and squarefree ``d``.

Negative radicands are allowed: ``d = -m`` is stored as ``m`` with the
``imaginary`` flag set, meaning ``sqrt(-m) = i*sqrt(m)``.  Two values can be
added or multiplied only when they live in the same quadratic field (or one
of them is rational); that is all split characters of alternating groups
ever need.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


def squarefree_decomposition(d: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``d = s*s*r`` and ``r`` squarefree (sign kept in ``r``)."""
    if d == 0:
        return 0, 0
    sign = -1 if d < 0 else 1
    d = abs(d)
    s, r = 1, 1
    q = 2
    while q * q <= d:
        e = 0
        while d % q == 0:
            d //= q
            e += 1
        s *= q ** (e // 2)
        if e % 2:
            r *= q
        q += 1
    r *= d
    return s, sign * r


@total_ordering
class AlgebraicValue:
    __slots__ = ("a", "b", "m", "imaginary")

    def __init__(self, a=0, b=0, d: int = 0):
        """``a + b*sqrt(d)`` for any integer ``d``; the radicand is normalised."""
        a = Fraction(a)
        b = Fraction(b)
        s, r = squarefree_decomposition(d)
        b *= s
        if r == 1:
            a, b, r = a + b, Fraction(0), 0
        if b == 0 or r == 0:
            b, r = Fraction(0), 0
        self.a = a
        self.b = b
        self.m = abs(r)
        self.imaginary = r < 0

    @classmethod
    def sqrt(cls, d: int) -> "AlgebraicValue":
        return cls(0, 1, d)

    @property
    def radicand(self) -> int:
        return -self.m if self.imaginary else self.m

    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_real(self) -> bool:
        return not self.imaginary

    def _coerce(self, other) -> "AlgebraicValue":
        if isinstance(other, AlgebraicValue):
            return other
        if isinstance(other, (int, Fraction)):
            return AlgebraicValue(other)
        return NotImplemented

    def _field(self, other: "AlgebraicValue") -> int:
        if self.b == 0:
            return other.radicand
        if other.b == 0 or other.radicand == self.radicand:
            return self.radicand
        raise ValueError(f"values from different fields: sqrt({self.radicand}) and sqrt({other.radicand})")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return AlgebraicValue(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicValue(-self.a, -self.b, self.radicand)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self._field(other)
        return AlgebraicValue(self.a * other.a + self.b * other.b * d,
                              self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return AlgebraicValue(self.a / other, self.b / other, self.radicand)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = other.norm()
        return self * other.galois_conjugate() / norm

    def galois_conjugate(self) -> "AlgebraicValue":
        return AlgebraicValue(self.a, -self.b, self.radicand)

    def conjugate(self) -> "AlgebraicValue":
        """Complex conjugate."""
        return self.galois_conjugate() if self.imaginary else self

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.radicand

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b and (self.b == 0 or self.radicand == other.radicand)

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.radicand))

    def sign(self) -> int:
        """Exact sign of a real value."""
        if self.imaginary and self.b != 0:
            raise ValueError("sign of a non-real value")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        # opposite signs: compare a^2 with b^2*m
        diff = self.a * self.a - self.b * self.b * self.m
        return sa if diff > 0 else (sb if diff < 0 else 0)

    def __lt__(self, other):
        """Structural order ``(a, radicand, b)``, used for deterministic sorting."""
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.a, self.radicand, self.b)

    def __repr__(self):
        return f"AlgebraicValue({self})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.radicand})"
        if self.b == 1:
            tail = root
        elif self.b == -1:
            tail = "-" + root
        else:
            tail = f"{self.b}*{root}"
        if self.a == 0:
            return tail
        sign = "" if tail.startswith("-") else "+"
        return f"{self.a}{sign}{tail}"

    def to_json(self) -> dict:
        return {"a_num": self.a.numerator, "a_den": self.a.denominator,
                "b_num": self.b.numerator, "b_den": self.b.denominator,
                "m": self.m, "imaginary": self.imaginary}

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraicValue":
        d = -data["m"] if data["imaginary"] else data["m"]
        return cls(Fraction(data["a_num"], data["a_den"]), Fraction(data["b_num"], data["b_den"]), d)

    def to_sympy(self):
        import sympy
        return sympy.Rational(self.a.numerator, self.a.denominator) + \
            sympy.Rational(self.b.numerator, self.b.denominator) * sympy.sqrt(self.radicand)
