"""Exact arithmetic in the quadratic ring Z[sqrt(5)].

Elements are coefficient pairs (a, b) standing for a + b*sqrt(5), with
unbounded Python integers, so every ring operation is bit-exact.  The
downstream evaluators only ever divide by rational integers (powers of 2,
3 and 10), so exact division by an integer is the only division provided;
there is no field of fractions.
"""

from __future__ import annotations

from dataclasses import dataclass


class DivisibilityError(ArithmeticError):
    """Exact division by an integer failed; carries the remainders."""

    def __init__(self, value: QuadInt, divisor: int, rem_a: int, rem_b: int) -> None:
        super().__init__(
            f"{value} is not divisible by {divisor} "
            f"(remainders {rem_a} and {rem_b}*sqrt5)"
        )
        self.value = value
        self.divisor = divisor
        self.rem_a = rem_a
        self.rem_b = rem_b


@dataclass(frozen=True, slots=True, eq=False)
class QuadInt:
    """a + b*sqrt(5) in normal form; immutable and hashable."""

    a: int
    b: int = 0

    @staticmethod
    def _coerce(other: int | QuadInt) -> QuadInt | None:
        if isinstance(other, QuadInt):
            return other
        if isinstance(other, int):
            return QuadInt(other, 0)
        return None

    def __eq__(self, other: object) -> bool:
        v = self._coerce(other)  # type: ignore[arg-type]
        if v is None:
            return NotImplemented
        return self.a == v.a and self.b == v.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self.a, -self.b)

    def __add__(self, other: int | QuadInt) -> QuadInt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return QuadInt(self.a + v.a, self.b + v.b)

    __radd__ = __add__

    def __sub__(self, other: int | QuadInt) -> QuadInt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return QuadInt(self.a - v.a, self.b - v.b)

    def __rsub__(self, other: int | QuadInt) -> QuadInt:
        return (-self) + other

    def __mul__(self, other: int | QuadInt) -> QuadInt:
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        # (a + b*sqrt5)(c + d*sqrt5) = (ac + 5bd) + (ad + bc)*sqrt5
        return QuadInt(self.a * v.a + 5 * self.b * v.b, self.a * v.b + self.b * v.a)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> QuadInt:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = QuadInt(1, 0)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> QuadInt:
        """Galois conjugate: a + b*sqrt5 -> a - b*sqrt5 (a ring involution)."""
        return QuadInt(self.a, -self.b)

    def norm(self) -> int:
        """Field norm a^2 - 5*b^2 (multiplicative)."""
        return self.a * self.a - 5 * self.b * self.b

    def __str__(self) -> str:
        return f"{self.a}{self.b:+}*sqrt5"

    def __repr__(self) -> str:
        return f"QuadInt({self.a}, {self.b})"


def exact_div_int(value: QuadInt, divisor: int) -> QuadInt:
    """Divide both coefficients by a positive integer, exactly or not at all."""
    if not isinstance(divisor, int) or divisor <= 0:
        raise ValueError(f"divisor must be a positive integer, got {divisor!r}")
    qa, ra = divmod(value.a, divisor)
    qb, rb = divmod(value.b, divisor)
    if ra or rb:
        raise DivisibilityError(value, divisor, ra, rb)
    return QuadInt(qa, qb)
