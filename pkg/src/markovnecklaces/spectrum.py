"""The simple length spectrum of the modular torus, with exact bookkeeping.

Every simple closed geodesic corresponds to a family necklace; its length is
2*acosh(3*v/2) where v is the necklace's integer value.  The two shortest
classes (the singletons [0] and [1]) occur with multiplicity 6, every other
family member with multiplicity 12.

The scanner enumerates all family members with value <= bound through the
(x, y, m) parameter bijection.  Loop extents are provably sufficient: every
word block with exponent v has top-left matrix entry >= 2^(v+1), so the
trace is at least 2^(sum + k) and the value at least 2^(sum + k)/3.  On top
of that hard cap, the monotonicity the pruning conceptually relies on
(values increase along m for fixed counts and along x + y for fixed m) is
asserted on every step actually observed; a violation raises
EnumerationIncomplete instead of silently dropping necklaces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .markov import markov_numbers
from .necklace import Necklace, NecklaceParams, from_params
from .phi import phi
from .slword import theta_length

_SINGLETON_MULTIPLICITY = 6
_GENERIC_MULTIPLICITY = 12
_SINGLETON_SOURCES = (Necklace([0]), Necklace([1]))


class EnumerationIncomplete(RuntimeError):
    """An asserted pruning-monotonicity relation failed; the scan would not
    be exhaustive and is aborted instead."""


@dataclass(frozen=True, slots=True)
class SpectrumEntry:
    trace: int
    phi: int
    length: float
    multiplicity: int
    source: Necklace


@dataclass(frozen=True, slots=True)
class Collision:
    """Distinct necklaces sharing one value: a conjecture counterexample."""

    phi: int
    necklaces: tuple[Necklace, ...]


@dataclass(frozen=True, slots=True)
class CrossCheckReport:
    """Both pipelines' value sets up to the bound, plus their differences."""

    phi_bound: int
    phi_values: tuple[int, ...]
    markov_values: tuple[int, ...]
    only_phi: tuple[int, ...]
    only_markov: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.only_phi and not self.only_markov


def _value_floor_exceeds(sum_plus_k: int, phi_bound: int) -> bool:
    # trace >= 2^(sum + k), so the value is at least 2^(sum + k) / 3
    return (1 << sum_plus_k) > 3 * phi_bound


def scan_singletons(phi_bound: int, verify: bool = False) -> list[tuple[int, Necklace]]:
    """(value, necklace) for every singleton [m] with value <= bound."""
    if phi_bound < 1:
        raise ValueError(f"phi_bound must be >= 1, got {phi_bound}")
    out: list[tuple[int, Necklace]] = []
    prev = None
    m = 0
    while not _value_floor_exceeds(m + 1, phi_bound):
        n = Necklace([m])
        value = phi(n, verify=verify)
        if prev is not None and value <= prev:
            raise EnumerationIncomplete(
                f"singleton values not increasing at m={m}: {value} <= {prev}"
            )
        prev = value
        if value <= phi_bound:
            out.append((value, n))
        m += 1
    return out


def stripe_m_values(phi_bound: int) -> list[int]:
    """The m stripes the two-letter scan must cover for this bound."""
    if phi_bound < 1:
        raise ValueError(f"phi_bound must be >= 1, got {phi_bound}")
    ms = []
    m = 1
    while not _value_floor_exceeds(2 * (m + 1) + 1, phi_bound):
        ms.append(m)
        m += 1
    return ms


def scan_stripe(m: int, phi_bound: int, verify: bool = False) -> list[tuple[int, Necklace]]:
    """(value, necklace) for every two-letter member with smaller entry m
    and value <= bound, ordered by (x + y, y)."""
    out: list[tuple[int, Necklace]] = []
    prev_layer_min = None
    total = 2
    while not _value_floor_exceeds(total * (m + 1) + 1, phi_bound):
        layer_min = None
        for y in range(1, total):
            x = total - y
            if math.gcd(x, y) != 1:
                continue
            n = from_params(NecklaceParams(x, y, m))
            value = phi(n, verify=verify)
            if layer_min is None or value < layer_min:
                layer_min = value
            if value <= phi_bound:
                out.append((value, n))
        if layer_min is not None:
            if prev_layer_min is not None and layer_min <= prev_layer_min:
                raise EnumerationIncomplete(
                    f"layer minima not increasing at m={m}, x+y={total}: "
                    f"{layer_min} <= {prev_layer_min}"
                )
            prev_layer_min = layer_min
        total += 1
    return out


def check_stripe_heads(m_values: list[int], phi_bound: int) -> None:
    """Assert the head value of each stripe ([m, m+1]) increases with m."""
    prev = None
    for m in m_values:
        value = phi(from_params(NecklaceParams(1, 1, m)))
        if prev is not None and value <= prev:
            raise EnumerationIncomplete(
                f"stripe head values not increasing at m={m}: {value} <= {prev}"
            )
        prev = value


def scan_necklaces(phi_bound: int, verify: bool = False) -> list[tuple[int, Necklace]]:
    """Every family member with value <= bound, as (value, necklace) pairs.

    Deterministic order: all singletons by m, then each m stripe in order.
    """
    results = scan_singletons(phi_bound, verify=verify)
    m_values = stripe_m_values(phi_bound)
    check_stripe_heads(m_values, phi_bound)
    for m in m_values:
        results.extend(scan_stripe(m, phi_bound, verify=verify))
    return results


def find_collisions(scanned: list[tuple[int, Necklace]]) -> list[Collision]:
    """Group scanned pairs by value and report groups with >= 2 necklaces."""
    by_value: dict[int, list[Necklace]] = {}
    for value, n in scanned:
        by_value.setdefault(value, []).append(n)
    collisions = []
    for value in sorted(by_value):
        distinct = sorted(set(by_value[value]), key=lambda n: n.entries)
        if len(distinct) > 1:
            collisions.append(Collision(value, tuple(distinct)))
    return collisions


def verify_injectivity(phi_bound: int) -> list[Collision]:
    """Scan the family up to the bound and report equal-value necklaces.

    Expected empty; a nonempty result is reported as data (it would be a
    counterexample to the uniqueness conjecture, the most valuable possible
    output), never raised.
    """
    return find_collisions(scan_necklaces(phi_bound))


def cross_check_markov(phi_bound: int) -> CrossCheckReport:
    """Compare the necklace pipeline's value set against the Vieta tree."""
    phi_side = sorted({value for value, _ in scan_necklaces(phi_bound)})
    markov_side = markov_numbers(phi_bound)
    phi_set = set(phi_side)
    markov_set = set(markov_side)
    return CrossCheckReport(
        phi_bound=phi_bound,
        phi_values=tuple(phi_side),
        markov_values=tuple(markov_side),
        only_phi=tuple(sorted(phi_set - markov_set)),
        only_markov=tuple(sorted(markov_set - phi_set)),
    )


def spectrum_entries(scanned: list[tuple[int, Necklace]]) -> list[SpectrumEntry]:
    """Build sorted spectrum entries from scanned (value, necklace) pairs.

    Sorted by exact trace; equal traces (a conjecture counterexample) would
    appear as adjacent rows, never merged or hidden."""
    entries = []
    for value, source in scanned:
        trace = 3 * value
        multiplicity = (
            _SINGLETON_MULTIPLICITY
            if source in _SINGLETON_SOURCES
            else _GENERIC_MULTIPLICITY
        )
        entries.append(
            SpectrumEntry(
                trace=trace,
                phi=value,
                length=theta_length(trace),
                multiplicity=multiplicity,
                source=source,
            )
        )
    entries.sort(key=lambda e: (e.trace, e.source.entries))
    # sorting by trace and by length must agree (the map is monotone)
    assert all(a.length <= b.length for a, b in zip(entries, entries[1:]))
    return entries


def simple_spectrum(phi_bound: int) -> list[SpectrumEntry]:
    """Spectrum entries for every family member with value <= bound."""
    return spectrum_entries(scan_necklaces(phi_bound))
