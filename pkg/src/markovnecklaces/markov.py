"""Markov triples, the Vieta tree, and the uniqueness collision scan.

A Markov triple is a positive solution of x^2 + y^2 + z^2 = 3xyz; its
largest coordinate is a Markov number.  Replacing any coordinate c by
3 * (product of the other two) - c gives another solution (Vieta jumping);
starting from (1, 1, 1) this generates every triple exactly once as a tree,
with the maximum strictly increasing away from the root.  Everything here
is plain unbounded-integer arithmetic, fully independent of the necklace
and ring machinery -- which is what makes the cross-check against the
necklace pipeline a genuine two-sided oracle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator


def is_markov_triple(x: int, y: int, z: int) -> bool:
    """True iff (x, y, z) are positive and solve x^2+y^2+z^2 = 3xyz."""
    if x <= 0 or y <= 0 or z <= 0:
        return False
    return x * x + y * y + z * z == 3 * x * y * z


@dataclass(frozen=True, slots=True, order=True)
class MarkovTriple:
    """Solution stored sorted ascending; the equation is checked on construction."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if not (0 < self.x <= self.y <= self.z):
            raise ValueError(f"triple must be positive and sorted, got {self}")
        if not is_markov_triple(self.x, self.y, self.z):
            raise ValueError(f"{(self.x, self.y, self.z)} does not solve the Markov equation")

    @classmethod
    def of(cls, a: int, b: int, c: int) -> MarkovTriple:
        x, y, z = sorted((a, b, c))
        return cls(x, y, z)

    def children(self) -> tuple[MarkovTriple, MarkovTriple, MarkovTriple]:
        """The three Vieta neighbors (one of which is the parent off the root)."""
        x, y, z = self.x, self.y, self.z
        return (
            MarkovTriple.of(3 * y * z - x, y, z),
            MarkovTriple.of(x, 3 * x * z - y, z),
            MarkovTriple.of(x, y, 3 * x * y - z),
        )


ROOT = MarkovTriple(1, 1, 1)


def triples_up_to(bound: int) -> Iterator[MarkovTriple]:
    """Every distinct sorted triple with max <= bound, by breadth-first
    expansion from (1, 1, 1), pruned at the bound."""
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    seen = {ROOT}
    queue = deque([ROOT])
    while queue:
        node = queue.popleft()
        yield node
        for child in node.children():
            if child.z <= node.z:
                continue  # the edge back toward the root
            # moving away from the root must strictly increase the max
            assert child.z > node.z
            if child.z <= bound and child not in seen:
                seen.add(child)
                queue.append(child)


def markov_numbers(bound: int) -> list[int]:
    """Sorted distinct Markov numbers (largest coordinates) up to ``bound``."""
    return sorted({t.z for t in triples_up_to(bound)})


def uniqueness_scan(bound: int) -> list[tuple[MarkovTriple, MarkovTriple]]:
    """All pairs of distinct triples sharing a largest coordinate <= bound.

    A nonempty result would be a counterexample to the uniqueness
    conjecture; collisions are returned as data, never raised.
    """
    by_z: dict[int, list[MarkovTriple]] = {}
    for t in triples_up_to(bound):
        by_z.setdefault(t.z, []).append(t)
    pairs: list[tuple[MarkovTriple, MarkovTriple]] = []
    for z in sorted(by_z):
        group = sorted(by_z[z])
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                pairs.append((group[i], group[j]))
    return pairs
