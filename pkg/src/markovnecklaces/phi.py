"""The necklace-to-integer map evaluated by independent exact methods.

For a necklace [n1, ..., nk] the value is

    (1 / (3 * 10^k * 2^(n1+...+nk))) *
        sum over subsets S of {1..k} of
            3^r(S) * 2^(k-r(S)) * (u+2)^|S| * (v+2)^|S^c| * u^(sum_S ni) * v^(sum_Sc ni)

where u = 3 + sqrt5 and v = 3 - sqrt5 (twice the eigenvalues of the corner
matrix LR, so the whole computation stays in Z[sqrt5]), and r(S) is the run
statistic: the sum over all cyclic runs of S and of its complement of
(run length - 1), with r(full) = r(empty) = k.

Two evaluators are provided and must agree bit-exactly:

* ``phi_literal``  - enumerates all 2^k subsets (the definition, verbatim);
* ``phi_transfer`` - multiplies k transfer matrices over Z[sqrt5] (linear
  in k), the closed form obtained by diagonalizing LR.

Both produce a numerator that must be a rational integer (zero sqrt5 part)
exactly divisible by 3 * 10^k * 2^sum; any failure is an internal bug, not
an input error.  A third, fully independent check lives in
:mod:`markovnecklaces.slword`: the value equals trace_of_necklace / 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import slword
from .necklace import Necklace, require_member
from .quadring import DivisibilityError, QuadInt, exact_div_int

# Twice the eigenvalues of the corner matrix LR = (2 1; 1 1); doubling keeps
# them in Z[sqrt5] at the cost of the 2^sum and 10^k denominator.
_EIG = QuadInt(3, 1)
_EIG_CONJ = QuadInt(3, -1)
_EIG_P2 = QuadInt(5, 1)
_EIG_CONJ_P2 = QuadInt(5, -1)

#: Largest k the subset enumerator accepts; 2^k terms are evaluated.
DEFAULT_SUBSET_CAP = 20


class SubsetCapError(ValueError):
    """k exceeds the subset-enumeration cap; use phi_transfer instead."""


class InconsistencyError(RuntimeError):
    """An exact identity failed (nonzero sqrt5 part, non-divisibility, or
    evaluator disagreement).  Always indicates a bug, never bad input."""


@dataclass(frozen=True, slots=True)
class SubsetMask:
    """Subset of positions {1..k}, encoded with bit i-1 for position i."""

    k: int
    bits: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0 <= self.bits < (1 << self.k):
            raise ValueError(f"bits {self.bits:#x} out of range for k={self.k}")

    @classmethod
    def from_positions(cls, k: int, positions) -> SubsetMask:
        bits = 0
        for p in positions:
            if not 1 <= p <= k:
                raise ValueError(f"position {p} out of range 1..{k}")
            bits |= 1 << (p - 1)
        return cls(k, bits)

    def positions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.k) if (self.bits >> i) & 1)


@dataclass(frozen=True, slots=True)
class PhiResult:
    """Value plus the exact intermediates the invariants are stated on."""

    value: int
    numerator: QuadInt
    k: int
    sum_n: int

    @property
    def denominator(self) -> int:
        return 3 * 10**self.k * 2**self.sum_n


def run_statistic(mask: SubsetMask) -> int:
    """Sum of (length - 1) over all cyclic runs of the subset and of its
    complement; k for the full and empty subsets."""
    k, bits = mask.k, mask.bits
    full = (1 << k) - 1
    if bits == 0 or bits == full:
        return k
    member = [(bits >> i) & 1 for i in range(k)]
    start = next(i for i in range(k) if member[i] != member[i - 1])
    total = 0
    run_len = 1
    for j in range(1, k):
        if member[(start + j) % k] == member[(start + j - 1) % k]:
            run_len += 1
        else:
            total += run_len - 1
            run_len = 1
    return total + run_len - 1


def _finish(numerator: QuadInt, k: int, sum_n: int) -> PhiResult:
    if numerator.b != 0:
        raise InconsistencyError(
            f"numerator {numerator} has nonzero sqrt5 coefficient"
        )
    denominator = 3 * 10**k * 2**sum_n
    try:
        quotient = exact_div_int(numerator, denominator)
    except DivisibilityError as exc:
        raise InconsistencyError(
            f"numerator {numerator} not divisible by {denominator}"
        ) from exc
    if quotient.a <= 0:
        raise InconsistencyError(f"nonpositive value {quotient.a}")
    return PhiResult(value=quotient.a, numerator=numerator, k=k, sum_n=sum_n)


def phi_literal(n: Necklace, cap: int = DEFAULT_SUBSET_CAP) -> PhiResult:
    """Evaluate by enumerating every subset of positions.

    Each subset contributes through only three statistics: its run
    statistic, its size, and its entry sum.  The loop tallies subsets per
    statistic triple; the ring products are formed once per distinct triple.
    """
    require_member(n)
    entries = n.entries
    k = len(entries)
    if k > cap:
        raise SubsetCapError(
            f"k={k} exceeds the subset-enumeration cap ({cap}); use phi_transfer"
        )
    total = sum(entries)

    main_pow = [QuadInt(1, 0)]
    conj_pow = [QuadInt(1, 0)]
    for _ in range(total):
        main_pow.append(main_pow[-1] * _EIG)
        conj_pow.append(conj_pow[-1] * _EIG_CONJ)
    main_p2_pow = [QuadInt(1, 0)]
    conj_p2_pow = [QuadInt(1, 0)]
    for _ in range(k):
        main_p2_pow.append(main_p2_pow[-1] * _EIG_P2)
        conj_p2_pow.append(conj_p2_pow[-1] * _EIG_CONJ_P2)
    pow3 = [3**r for r in range(k + 1)]
    pow2 = [2**r for r in range(k + 1)]

    # Subset sums via two half tables, so the hot loop is O(1) per mask.
    lo = k // 2
    lo_mask = (1 << lo) - 1
    lo_sum = [0] * (1 << lo)
    for m in range(1, 1 << lo):
        lsb = m & -m
        lo_sum[m] = lo_sum[m ^ lsb] + entries[lsb.bit_length() - 1]
    hi_sum = [0] * (1 << (k - lo))
    for m in range(1, 1 << (k - lo)):
        lsb = m & -m
        hi_sum[m] = hi_sum[m ^ lsb] + entries[lo + lsb.bit_length() - 1]

    shift = k - 1
    counts: dict[tuple[int, int, int], int] = {}
    for bits in range(1 << k):
        # r(S) = number of cyclically adjacent equal membership pairs; the
        # full and empty subsets come out as k, matching run_statistic.
        rot = (bits >> 1) | ((bits & 1) << shift)
        r = k - (bits ^ rot).bit_count()
        key = (r, bits.bit_count(), lo_sum[bits & lo_mask] + hi_sum[bits >> lo])
        counts[key] = counts.get(key, 0) + 1

    numerator = QuadInt(0, 0)
    for (r, size, subset_sum), count in counts.items():
        coeff = count * pow3[r] * pow2[k - r]
        term = (
            main_p2_pow[size]
            * conj_p2_pow[k - size]
            * main_pow[subset_sum]
            * conj_pow[total - subset_sum]
        )
        numerator = numerator + term * coeff
    return _finish(numerator, k, total)


def phi_transfer(n: Necklace) -> PhiResult:
    """Evaluate via the product of k transfer matrices over Z[sqrt5]."""
    require_member(n)
    entries = n.entries
    prod: slword.Mat2 | None = None
    for v in entries:
        main = _EIG**v
        conj = _EIG_CONJ**v
        step = slword.Mat2(
            _EIG_CONJ_P2 * conj * 3,
            _EIG_P2 * main * 2,
            _EIG_CONJ_P2 * conj * 2,
            _EIG_P2 * main * 3,
        )
        prod = step if prod is None else prod * step
    assert prod is not None
    return _finish(prod.trace(), len(entries), sum(entries))


def phi(n: Necklace, cap: int = DEFAULT_SUBSET_CAP, verify: bool = False) -> int:
    """Value of the map on a family member.

    Dispatches to the subset enumerator for k <= cap and to the transfer
    product beyond.  With ``verify=True`` every available evaluator plus the
    integer-matrix trace oracle are run and must agree bit-exactly.
    """
    if not verify:
        if n.k <= cap:
            return phi_literal(n, cap=cap).value
        return phi_transfer(n).value

    results: dict[str, int] = {}
    if n.k <= cap:
        results["literal"] = phi_literal(n, cap=cap).value
    results["transfer"] = phi_transfer(n).value
    trace = slword.trace_of_necklace(n)
    if trace % 3:
        raise InconsistencyError(f"trace {trace} of {n} is not divisible by 3")
    results["oracle"] = trace // 3
    if len(set(results.values())) != 1:
        raise InconsistencyError(f"evaluator disagreement on {n}: {results}")
    return results["transfer"]
