"""Mixed tensors R_n(lambda) indexed by bipartitions.

The bipartition diagram labels every integer: I_up = {l^L_i - i + 1} and
I_down = {i - l^R_i} (i >= 1, partitions padded by zeros).  A vertex in
both sets is a cross, in neither a circle.  Far to the left every vertex is
an up arrow and far to the right every vertex is a down arrow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvalidWeightError
from .weights import DOWN, UP, CROSS, CIRCLE, Weight, WeightDiagram, weight_diagram


def _check_partition(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise InvalidWeightError(f"{parts} is not a partition")
    return tuple(p for p in parts if p)


@dataclass(frozen=True)
class Bipartition:
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", _check_partition(self.left))
        object.__setattr__(self, "right", _check_partition(self.right))

    def __str__(self) -> str:
        def part(p):
            return "(" + ",".join(map(str, p)) + ")"

        return "(" + part(self.left) + "," + part(self.right) + ")"

    def to_json(self) -> dict:
        return {"left": list(self.left), "right": list(self.right)}


@dataclass(frozen=True)
class BipartitionDiagram:
    """Labels on [lo, hi]; everything left of lo is an up arrow, right of hi a down arrow."""

    lo: int
    hi: int
    labels: dict

    def label(self, pos: int) -> str:
        if pos < self.lo:
            return UP
        if pos > self.hi:
            return DOWN
        return self.labels[pos]

    def positions(self, symbol: str) -> list[int]:
        return sorted(p for p, s in self.labels.items() if s == symbol)

    def __str__(self) -> str:
        return "".join(self.label(p) for p in range(self.lo, self.hi + 1))


def _window(b: Bipartition) -> tuple[int, int]:
    span = len(b.left) + len(b.right) + (b.left[0] if b.left else 0) + (b.right[0] if b.right else 0) + 1
    return (-span, span)


def bipartition_diagram(b: Bipartition) -> BipartitionDiagram:
    lo, hi = _window(b)
    count = hi - lo + 1
    left = b.left + (0,) * count
    right = b.right + (0,) * count
    i_up = {left[i] - i for i in range(count)}
    i_down = {(i + 1) - right[i] for i in range(count)}
    labels = {}
    for p in range(lo, hi + 1):
        up, down = p in i_up, p in i_down
        labels[p] = CROSS if up and down else UP if up else DOWN if down else CIRCLE
    return BipartitionDiagram(lo, hi, labels)


@dataclass(frozen=True)
class MixedInvariants:
    a: int
    d: int
    k: int


def invariants(b: Bipartition) -> MixedInvariants:
    diag = bipartition_diagram(b)
    a = len(diag.positions(CROSS))
    downs = diag.positions(DOWN)
    d = 0
    free_ups = set(diag.positions(UP))
    for x in sorted(downs, reverse=True):
        nxt = next((p for p in range(x + 1, diag.hi + 1) if p in free_ups), None)
        if nxt is not None:
            free_ups.discard(nxt)
            d += 1
    return MixedInvariants(a, d, a + d)


def is_cross(b: Bipartition, n: int) -> bool:
    return invariants(b).k <= n


def is_irreducible(b: Bipartition) -> bool:
    return invariants(b).d == 0


def is_projective(b: Bipartition, n: int) -> bool:
    return invariants(b).k == n


def loewy_length(b: Bipartition) -> int:
    return 2 * invariants(b).d + 1


def _switch(labels: dict, lo: int, hi: int, k: int, n: int) -> tuple[dict, int]:
    """Apply the theta switching rule in place on a finite window; returns (labels, t)."""
    marks = [p for p, s in labels.items() if s in (CROSS, CIRCLE)]
    m = max(marks) if marks else None
    t = k + 1 if m is None else max(k + 1, m + 1)
    s = 0 if m is None or m + 1 <= k + 1 else m - k
    out = dict(labels)
    swap = {UP: DOWN, DOWN: UP}
    for p in range(t, hi + 1):
        out[p] = swap[out[p]]
    todo = s + n - k
    p = t - 1
    while todo > 0:
        if p < lo:
            raise DomainError("switching window exhausted")
        if out[p] in swap:
            out[p] = swap[out[p]]
            todo -= 1
        p -= 1
    return out, t


def theta(b: Bipartition, n: int) -> Weight:
    """Highest weight of the irreducible R_n(b) (defect 0) or its socle for ((i),(1^i))."""
    inv = invariants(b)
    if inv.k > n:
        raise DomainError(f"{b} is not an (n|n)-cross bipartition for n = {n}")
    if inv.d:
        i = b.left[0] if b.left else 0
        if b.left == (i,) and b.right == (1,) * i and i >= 1:
            return Weight.bracket((i - 1,) + (0,) * (n - 1))
        raise DomainError(f"theta is only available for defect 0 and the ((i),(1^i)) family, not {b}")
    diag = bipartition_diagram(b)
    lo, hi = diag.lo - n - 2, diag.hi + n + 2
    labels = {p: diag.label(p) for p in range(lo, hi + 1)}
    out, _ = _switch(labels, lo, hi, inv.k, n)
    return _to_weight(out)


def _to_weight(labels: dict) -> Weight:
    pick = lambda sym: frozenset(p for p, s in labels.items() if s == sym)
    return WeightDiagram(pick(CROSS), pick(CIRCLE), pick(DOWN)).to_weight()


def theta_inverse(weight: Weight) -> Bipartition:
    """Bipartition b of defect 0 with theta(b) = weight; raises if there is none."""
    n = weight.n
    d = weight_diagram(weight)
    k = n - d.atypicality
    span = max([abs(p) for p in d.symbols()] + [0]) + 2 * n + 4
    lo, hi = -span, span
    labels = {p: d.label(p) for p in range(lo, hi + 1)}
    out, _ = _switch(labels, lo, hi, k, n)
    # read the bipartition; far left must be up arrows, far right down arrows
    if out[lo] != UP or out[hi] != DOWN:
        raise DomainError(f"{weight} is not the weight of an irreducible mixed tensor")
    i_up = sorted((p for p, s in out.items() if s in (UP, CROSS)), reverse=True)
    i_down = sorted(p for p, s in out.items() if s in (DOWN, CROSS))
    left = [x + i for i, x in enumerate(i_up)]
    right = [(i + 1) - x for i, x in enumerate(i_down)]
    try:
        b = Bipartition(tuple(left), tuple(right))
    except InvalidWeightError as exc:
        raise DomainError(f"{weight} is not the weight of an irreducible mixed tensor") from exc
    if invariants(b).d or theta(b, n) != weight:
        raise DomainError(f"{weight} is not the weight of an irreducible mixed tensor")
    return b


def ds_mixed(b: Bipartition, n: int) -> Bipartition | None:
    """DS(R_n(b)) = R_{n-1}(b), or None (zero) when R_n(b) is projective."""
    inv = invariants(b)
    if inv.k > n:
        raise DomainError(f"{b} is not an (n|n)-cross bipartition for n = {n}")
    return None if inv.k == n else b


def partitions(max_part: int, max_len: int):
    def rec(prefix, bound):
        yield tuple(prefix)
        if len(prefix) == max_len:
            return
        for p in range(min(bound, max_part), 0, -1):
            yield from rec(prefix + [p], p)

    yield from rec([], max_part)


def cross_bipartitions(n: int, max_part: int, max_len: int | None = None, defect_zero: bool = False):
    max_len = max_part if max_len is None else max_len
    for left in partitions(max_part, max_len):
        for right in partitions(max_part, max_len):
            b = Bipartition(left, right)
            inv = invariants(b)
            if inv.k <= n and (not defect_zero or inv.d == 0):
                yield b
