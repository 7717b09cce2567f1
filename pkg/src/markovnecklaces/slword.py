"""Turn words on the trivalent dual graph and their 2x2 matrix products.

A closed curve retracts to a cyclic word in the letters L and R (left/right
turns).  Multiplying the corresponding unipotent matrices gives an
SL(2, Z) element whose integer trace determines the hyperbolic length of
the geodesic via 2*acosh(trace/2).  Traces are kept exact (unbounded
integers); floats appear only in the final length conversion.

A necklace [n1, ..., nk] encodes the word built from per-entry blocks: the
standard form uses blocks L(LR)^n R, the reduced form R(RL)^(n-1) L.  The
trace oracle multiplies per-block matrices with fast exponentiation and
never materializes the letter sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .necklace import Necklace, theta


@dataclass(frozen=True, slots=True)
class Mat2:
    """2x2 matrix (a b; c d); entries may be ints or ring elements."""

    a: object
    b: object
    c: object
    d: object

    @staticmethod
    def identity() -> Mat2:
        return Mat2(1, 0, 0, 1)

    def __mul__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, exponent: int) -> Mat2:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent!r}")
        result = Mat2.identity()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def transpose(self) -> Mat2:
        return Mat2(self.a, self.c, self.b, self.d)


L = Mat2(1, 1, 0, 1)
R = Mat2(1, 0, 1, 1)
_CORNER = Mat2(2, 1, 1, 1)  # L*R, the block base

_LETTERS = {"L": L, "R": R}


def word_from_necklace(n: Necklace, variant: str = "standard") -> str:
    """Letter word of a necklace: "L" + "LR"*v + "R" per entry (standard),
    or "R" + "RL"*(v-1) + "L" per entry (reduced, positive entries only)."""
    if variant == "standard":
        return "".join("L" + "LR" * v + "R" for v in n.entries)
    if variant == "reduced":
        if min(n.entries) < 1:
            raise ValueError("reduced words require positive entries")
        return "".join("R" + "RL" * (v - 1) + "L" for v in n.entries)
    raise ValueError(f"unknown variant {variant!r}")


def matrix_of_word(word: str) -> Mat2:
    """Left-to-right product of the letter matrices of ``word``."""
    if not word:
        raise ValueError("word must be nonempty")
    out = Mat2.identity()
    for pos, ch in enumerate(word):
        m = _LETTERS.get(ch)
        if m is None:
            raise ValueError(f"invalid letter {ch!r} at position {pos}")
        out = out * m
    assert out.det() == 1
    return out


def _block(v: int) -> Mat2:
    return L * (_CORNER ** v) * R


def trace_of_necklace(n: Necklace) -> int:
    """Trace of the standard word's matrix, via per-block fast exponentiation.

    Invariant under rotation of the necklace; equals three times the value
    of the subset-sum evaluator on family members.
    """
    prod = None
    for v in n.entries:
        b = _block(v)
        prod = b if prod is None else prod * b
    assert prod is not None and prod.det() == 1
    return prod.trace()


def theta_length(trace: int) -> float:
    """Hyperbolic length 2*acosh(trace/2) of the geodesic with given trace."""
    if trace < 2:
        raise ValueError(f"trace must be >= 2, got {trace}")
    if trace <= 2**52:
        return 2.0 * math.acosh(trace / 2)
    # acosh(t/2) = log(t) - 1/t^2 - ...; the correction is far below double
    # precision once t exceeds 2**52.
    return 2.0 * math.log(trace)


def trace_pair_check(n: Necklace) -> bool:
    """Trace identities tying the word variants together.

    (a) the standard word built from the {0,1} reduction of ``n`` (its theta
        image, read as exponents) has the same trace as the standard word of
        ``n`` itself;
    (b) the reduced word of ``n`` has the same trace as the standard word
        with exponents lowered by one, the mirror pair induced by R = L^T.
    """
    if min(n.entries) < 1:
        raise ValueError("trace_pair_check requires positive entries")
    same_reduction = trace_of_necklace(theta(n)) == trace_of_necklace(n)
    reduced = matrix_of_word(word_from_necklace(n, "reduced"))
    lowered = Necklace([v - 1 for v in n.entries])
    same_mirror = reduced.trace() == trace_of_necklace(lowered)
    return same_reduction and same_mirror
