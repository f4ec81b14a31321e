"""Plot calculus.

A plot is a finite set K of integers (the boxplus positions, i.e. the
positions of the down arrows once crosses and circles have been squeezed
out).  Its prime factors are the sectors: intervals [a, b] with a in K on
which the running count (+1 on K, -1 off K) first returns to zero at b.
A segment is a run of sectors with no gap between them; the empty segment
is allowed and is written [i+1, i].
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import DomainError
from .formal import FormalSum


def match_cups(downs: Iterable[int], blocked: Iterable[int] = ()) -> list[tuple[int, int]]:
    """Join every down arrow to the nearest free up arrow on its right.

    ``blocked`` positions (crosses and circles) are skipped.  Working from
    the rightmost down arrow leftwards gives the non-crossing matching.
    """
    downs = sorted(set(downs), reverse=True)
    used = set(downs) | set(blocked)
    cups = []
    for d in downs:
        p = d + 1
        while p in used:
            p += 1
        used.add(p)
        cups.append((d, p))
    return sorted(cups)


@dataclass(frozen=True)
class Segment:
    """Interval [lo, hi] together with the support inside it.

    ``hi == lo - 1`` encodes the empty segment sitting between lo - 1 and lo.
    """

    lo: int
    hi: int
    support: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        length = self.hi - self.lo + 1
        if length < 0 or length != 2 * len(self.support):
            raise DomainError(f"[{self.lo},{self.hi}] with support {sorted(self.support)} is not a segment")
        if any(not self.lo <= k <= self.hi for k in self.support):
            raise DomainError("support leaves the segment interval")
        height = 0
        for pos in range(self.lo, self.hi + 1):
            height += 1 if pos in self.support else -1
            if height < 0:
                raise DomainError(f"running sum drops below zero at {pos}")

    @classmethod
    def empty(cls, at: int) -> "Segment":
        """The empty segment [at, at - 1]."""
        return cls(at, at - 1, frozenset())

    @property
    def rank(self) -> int:
        return len(self.support)

    @property
    def interval(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def sectors(self) -> list["Segment"]:
        return _split_sectors(self.support)

    @property
    def is_prime(self) -> bool:
        return self.rank > 0 and len(self.sectors()) == 1

    def plot(self) -> "Plot":
        return Plot(self.support)

    def __str__(self) -> str:
        return f"([{self.lo},{self.hi}],{{{','.join(map(str, sorted(self.support)))}}})"


@dataclass(frozen=True)
class Plot:
    support: frozenset[int]

    def __init__(self, support: Iterable[int] = ()):
        object.__setattr__(self, "support", frozenset(int(k) for k in support))

    @property
    def rank(self) -> int:
        return len(self.support)

    def sectors(self) -> list[Segment]:
        return _split_sectors(self.support)

    def segments(self) -> list[Segment]:
        """Maximal runs of adjacent sectors."""
        out: list[Segment] = []
        for sec in self.sectors():
            if out and out[-1].hi + 1 == sec.lo:
                prev = out.pop()
                out.append(Segment(prev.lo, sec.hi, prev.support | sec.support))
            else:
                out.append(sec)
        return out

    def distances(self) -> list[int]:
        """Gap sizes between consecutive sectors (number of vertices in between)."""
        secs = self.sectors()
        return [b.lo - a.hi - 1 for a, b in zip(secs, secs[1:])]

    def shift(self, k: int) -> "Plot":
        return Plot(p + k for p in self.support)

    def sort_key(self):
        return (self.rank, tuple(sorted(self.support)))

    def to_json(self) -> dict:
        return {"support": sorted(self.support)}

    def strip(self, lo: int | None = None, hi: int | None = None) -> str:
        """One-line +/- picture of the plot over [lo, hi]."""
        secs = self.sectors()
        if lo is None:
            lo = (secs[0].lo if secs else 0) - 1
        if hi is None:
            hi = (secs[-1].hi if secs else 0) + 1
        return "".join("+" if p in self.support else "-" for p in range(lo, hi + 1))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.support))) + "}"


def _split_sectors(support: frozenset[int]) -> list[Segment]:
    out = []
    remaining = sorted(support)
    taken: set[int] = set()
    for a in remaining:
        if a in taken:
            continue
        height, pos, members = 0, a, []
        while True:
            if pos in support:
                height += 1
                members.append(pos)
            else:
                height -= 1
            if height == 0:
                break
            pos += 1
        taken.update(members)
        out.append(Segment(a, pos, frozenset(members)))
    return out


def join(*parts: Segment | Plot) -> Plot:
    """Disjoint union (the product in the plot ring)."""
    support: set[int] = set()
    for part in parts:
        if support & part.support:
            raise DomainError("factors overlap")
        support |= part.support
    return Plot(support)


def sectors(p: Plot) -> list[Segment]:
    return p.sectors()


def sector_derivative(sector: Segment) -> Segment:
    """Derivative of a prime plot: ([a+1, b-1], K without a)."""
    if not sector.is_prime:
        raise DomainError(f"{sector} is not a sector")
    return Segment(sector.lo + 1, sector.hi - 1, sector.support - {sector.lo})


def integrate(seg: Segment) -> Segment:
    """([a-1, b+1], K with a-1 added); always prime."""
    return Segment(seg.lo - 1, seg.hi + 1, seg.support | {seg.lo - 1})


def derivative(p: Plot) -> FormalSum[Plot]:
    """Leibniz rule over the sectors."""
    return FormalSum((Plot(p.support - {sec.lo}), 1) for sec in p.sectors())


def normalized_derivative(p: Plot, n: int) -> FormalSum[Plot]:
    """Derivative with the sector starting at a weighted by (-1)^(a+n-1)."""
    return FormalSum((Plot(p.support - {sec.lo}), (-1) ** ((sec.lo + n - 1) % 2)) for sec in p.sectors())


def melt(p: Plot, at: int) -> Plot:
    """Merge the adjacent sectors ``at`` and ``at + 1`` (0-based) into one prime plot."""
    secs = p.sectors()
    if not 0 <= at < len(secs) - 1:
        raise DomainError(f"no sector pair at index {at}")
    left, right = secs[at], secs[at + 1]
    i = left.hi
    if right.lo != i + 1:
        raise DomainError("sectors are not adjacent")
    merged = left.support | {i} | (right.support - {i + 1})
    return Plot((p.support - left.support - right.support) | merged)


def lower(sector: Segment) -> Segment:
    """([a-1, a], {a-1}) followed by the derivative of the sector."""
    inner = sector_derivative(sector)
    a = sector.lo
    return Segment(a - 1, sector.hi - 1, inner.support | {a - 1})
