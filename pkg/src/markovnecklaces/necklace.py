"""Necklaces of nonnegative integers: canonical form, predicates, bijections.

A necklace is the cyclic-equivalence class of a finite integer sequence.
Instances store the lexicographically least rotation (found with Booth's
linear-time algorithm), which makes cyclic classes hashable and directly
comparable.

The family of interest is the set of primitive small-variation necklaces of
positive integers together with all singletons [m]:

* *small variation*: any two cyclic blocks of equal size have sums that
  differ by at most 1;
* *primitive*: the sequence is not a repetition of a shorter one.

This family is in bijection with count parameters (x, y, m), gcd(x, y) = 1,
via the lower-stair (Christoffel) construction on the lattice segment from
(0, 0) to (x, y); singletons [m] correspond to (1, 0, m).  There is also a
run-length reduction onto {0,1}-necklaces, invertible and small-variation
preserving in both directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DomainError(ValueError):
    """A necklace is outside the admissible family; names the failed predicate."""


class NecklaceSyntaxError(ValueError):
    """Malformed necklace text; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


def _least_rotation(seq: Sequence[int]) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    s = list(seq) + list(seq)
    n = len(s)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


class Necklace:
    """Cyclic class of a nonempty sequence of nonnegative integers.

    Equality and hashing are those of the cyclic class: any two rotations of
    the same sequence construct equal values.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[int]) -> None:
        values = tuple(entries)
        if not values:
            raise ValueError("necklace needs at least one entry")
        for v in values:
            if not isinstance(v, int):
                raise ValueError(f"necklace entries must be integers, got {v!r}")
            if v < 0:
                raise ValueError(f"necklace entries must be nonnegative, got {v}")
        start = _least_rotation(values)
        object.__setattr__(self, "_entries", values[start:] + values[:start])

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Necklace is immutable")

    def __reduce__(self):
        return (Necklace, (self._entries,))

    @property
    def entries(self) -> tuple[int, ...]:
        return self._entries

    @property
    def k(self) -> int:
        """Number of entries."""
        return len(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Necklace):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __str__(self) -> str:
        return format_necklace(self)

    def __repr__(self) -> str:
        return f"Necklace({list(self._entries)})"


def canonicalize(seq: Iterable[int]) -> Necklace:
    """Canonical representative of the cyclic class of ``seq``."""
    return Necklace(seq)


@dataclass(frozen=True, slots=True)
class NecklaceParams:
    """Count parameters (x, y, m): x copies of m and y copies of m + 1.

    Admissible values are x, y, m > 0 with gcd(x, y) = 1, or the singleton
    branch x = 1, y = 0, m >= 0.
    """

    x: int
    y: int
    m: int

    def __post_init__(self) -> None:
        if self.x <= 0:
            raise ValueError(f"x must be positive, got {self.x}")
        if self.y < 0 or self.m < 0:
            raise ValueError(f"y and m must be nonnegative, got y={self.y}, m={self.m}")
        if self.y == 0:
            if self.x != 1:
                raise ValueError(f"y=0 requires x=1, got x={self.x}")
        else:
            if self.m == 0:
                raise ValueError("m must be positive when y > 0")
            if math.gcd(self.x, self.y) != 1:
                raise ValueError(f"gcd(x, y) must be 1, got gcd({self.x}, {self.y})")


def is_small_variation(n: Necklace) -> bool:
    """True iff all equal-size cyclic block sums differ by at most 1.

    Block sizes 1..k-1 suffice: a block of size s >= k is q whole periods
    (whose sums are all equal) plus a block of size s mod k, so the spread
    for size s equals the spread for s mod k.
    """
    e = n.entries
    k = len(e)
    if k == 1:
        return True
    prefix = [0] * (2 * k + 1)
    for i, v in enumerate(e + e):
        prefix[i + 1] = prefix[i] + v
    for size in range(1, k):
        lo = hi = prefix[size]
        for start in range(1, k):
            s = prefix[start + size] - prefix[start]
            if s < lo:
                lo = s
            elif s > hi:
                hi = s
        if hi - lo > 1:
            return False
    return True


def is_primitive(n: Necklace) -> bool:
    """True iff the minimal cyclic period equals the length."""
    e = n.entries
    k = len(e)
    for d in range(1, k):
        if k % d:
            continue
        if all(e[i] == e[i % d] for i in range(k)):
            return False
    return True


def is_member(n: Necklace) -> bool:
    """Membership in the admissible family (singletons, or primitive
    small-variation necklaces of positive integers)."""
    if n.k == 1:
        return True
    return min(n.entries) >= 1 and is_small_variation(n) and is_primitive(n)


def require_member(n: Necklace) -> None:
    """Raise DomainError naming the first failed membership predicate."""
    if n.k == 1:
        return
    if min(n.entries) < 1:
        raise DomainError(f"{n} is not admissible: entries must be positive")
    if not is_small_variation(n):
        raise DomainError(f"{n} is not admissible: not small variation")
    if not is_primitive(n):
        raise DomainError(f"{n} is not admissible: not primitive")


def theta(n: Necklace) -> Necklace:
    """Run-length reduction onto {0,1}-necklaces.

    Each entry v >= 1 becomes a block of v - 1 zeros followed by a single 1.
    Bijective onto {0,1}-necklaces containing a 1; preserves small variation
    in both directions.
    """
    out: list[int] = []
    for v in n.entries:
        if v < 1:
            raise ValueError(f"theta requires positive entries, got {v}")
        out.extend([0] * (v - 1))
        out.append(1)
    return Necklace(out)


def theta_inverse(n: Necklace) -> Necklace:
    """Inverse of :func:`theta`: entry = (zeros before each 1) + 1."""
    e = n.entries
    if any(v not in (0, 1) for v in e):
        raise ValueError(f"theta_inverse requires entries in {{0, 1}}, got {n}")
    ones = [i for i, v in enumerate(e) if v == 1]
    if not ones:
        raise ValueError("theta_inverse requires at least one 1")
    k = len(e)
    gaps = []
    for a, b in zip(ones, ones[1:] + [ones[0] + k]):
        gaps.append(b - a)
    return Necklace(gaps)


def stair_necklace(x: int, y: int, m: int) -> Necklace:
    """Necklace read off the highest lattice stair below the segment
    (0, 0)-(x, y): each horizontal unit contributes m, each vertical unit
    m + 1.  No coprimality requirement; non-coprime (x, y) yields the
    gcd-fold repetition of the primitive pattern.
    """
    if x <= 0 or y < 0 or m < 0:
        raise ValueError(f"need x > 0, y >= 0, m >= 0, got ({x}, {y}, {m})")
    n = x + y
    steps = [(i + 1) * y // n - i * y // n for i in range(n)]
    return Necklace([m + 1 if s else m for s in steps])


def from_params(params: NecklaceParams) -> Necklace:
    """The unique small-variation necklace with the given entry counts."""
    return stair_necklace(params.x, params.y, params.m)


def to_params(n: Necklace) -> NecklaceParams:
    """Inverse of :func:`from_params`; requires membership in the family."""
    require_member(n)
    if n.k == 1:
        return NecklaceParams(1, 0, n.entries[0])
    m = min(n.entries)
    x = sum(1 for v in n.entries if v == m)
    return NecklaceParams(x, n.k - x, m)


def enumerate_necklaces(max_m: int, max_xy: int) -> Iterator[Necklace]:
    """All family members with m <= max_m and x + y <= max_xy, each exactly
    once, ordered lexicographically by (m, x + y, y)."""
    if max_m < 1 or max_xy < 1:
        raise ValueError(f"bounds must be >= 1, got ({max_m}, {max_xy})")
    for m in range(max_m + 1):
        yield Necklace([m])
        if m == 0:
            continue
        for total in range(2, max_xy + 1):
            for y in range(1, total):
                x = total - y
                if math.gcd(x, y) == 1:
                    yield from_params(NecklaceParams(x, y, m))


def format_necklace(n: Necklace) -> str:
    return "[" + ",".join(str(v) for v in n.entries) + "]"


def parse_necklace(text: str) -> Necklace:
    """Parse "[n1,n2,...,nk]"; whitespace tolerated, any rotation accepted."""
    i = 0
    end = len(text)

    def skip_ws() -> None:
        nonlocal i
        while i < end and text[i].isspace():
            i += 1

    skip_ws()
    if i >= end or text[i] != "[":
        raise NecklaceSyntaxError("expected '['", i)
    i += 1
    values: list[int] = []
    while True:
        skip_ws()
        start = i
        while i < end and text[i].isdigit():
            i += 1
        if i == start:
            raise NecklaceSyntaxError("expected digit", i)
        values.append(int(text[start:i]))
        skip_ws()
        if i < end and text[i] == ",":
            i += 1
            continue
        if i < end and text[i] == "]":
            i += 1
            break
        raise NecklaceSyntaxError("expected ',' or ']'", i)
    skip_ws()
    if i != end:
        raise NecklaceSyntaxError(f"unexpected trailing {text[i]!r}", i)
    return Necklace(values)
