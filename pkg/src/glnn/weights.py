"""Dominant weights of Gl(n|n), their weight diagrams and cup diagrams.

A dominant weight is a pair of weakly decreasing integer n-tuples
(lambda_1..lambda_n | lambda_{n+1}..lambda_{2n}).  The bracket weight
[l_1,..,l_n] stands for (l_1,..,l_n | -l_n,..,-l_1).

Weight diagram conventions::

    I_x = { lambda_i - i + 1 }          i = 1..n
    I_o = { i - n - lambda_{n+i} }      i = 1..n

A vertex in both sets carries a down arrow (v), in I_x only a cross,
in I_o only a circle, and every other vertex an up arrow (^).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import DomainError, InvalidWeightError
from .plots import Plot, match_cups

DOWN, UP, CROSS, CIRCLE = "∨", "∧", "×", "∘"


@dataclass(frozen=True, order=True)
class Weight:
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        left = tuple(int(x) for x in self.left)
        right = tuple(int(x) for x in self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if len(left) != len(right):
            raise InvalidWeightError(f"halves have different lengths {len(left)} and {len(right)}")
        for half, name in ((left, "left"), (right, "right")):
            for a, b in zip(half, half[1:]):
                if a < b:
                    raise InvalidWeightError(f"{name} half {half} is not weakly decreasing")

    @classmethod
    def bracket(cls, values: Iterable[int]) -> "Weight":
        values = tuple(values)
        return cls(values, tuple(-v for v in reversed(values)))

    @classmethod
    def from_downs(cls, downs: Iterable[int]) -> "Weight":
        """Maximal atypical weight whose down arrows sit at ``downs``."""
        pos = sorted(downs, reverse=True)
        return cls.bracket(p + j for j, p in enumerate(pos))

    @classmethod
    def trivial(cls, n: int) -> "Weight":
        return cls.bracket([0] * n)

    @classmethod
    def ber(cls, n: int, k: int = 1) -> "Weight":
        return cls.bracket([k] * n)

    @property
    def n(self) -> int:
        return len(self.left)

    @property
    def is_bracket(self) -> bool:
        return self.right == tuple(-v for v in reversed(self.left))

    @property
    def parity_sum(self) -> int:
        """p(lambda): the sum of the right half."""
        return sum(self.right)

    def twist(self, k: int) -> "Weight":
        """Tensor with Ber^k."""
        return Weight(tuple(x + k for x in self.left), tuple(x - k for x in self.right))

    def sort_key(self):
        return (self.n, self.left, self.right)

    def to_json(self) -> dict:
        out = {"left": list(self.left), "right": list(self.right), "text": str(self)}
        if self.is_bracket:
            out["bracket"] = list(self.left)
        return out

    def __str__(self) -> str:
        if self.is_bracket:
            return "[" + ",".join(map(str, self.left)) + "]"
        return "(" + ",".join(map(str, self.left)) + "|" + ",".join(map(str, self.right)) + ")"

    def __repr__(self) -> str:
        return f"Weight({self})"


def berezin_twist(weight: Weight, k: int) -> Weight:
    return weight.twist(k)


@dataclass(frozen=True)
class BlockId:
    """Positions of the crosses and circles shared by all weights of a block."""

    crosses: frozenset[int]
    circles: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "crosses", frozenset(self.crosses))
        object.__setattr__(self, "circles", frozenset(self.circles))
        if len(self.crosses) != len(self.circles) or self.crosses & self.circles:
            raise InvalidWeightError("a block needs equally many disjoint crosses and circles")

    @property
    def core_rank(self) -> int:
        return len(self.crosses)

    def to_json(self) -> dict:
        return {"crosses": sorted(self.crosses), "circles": sorted(self.circles)}


@dataclass(frozen=True)
class WeightDiagram:
    crosses: frozenset[int]
    circles: frozenset[int]
    downs: frozenset[int]

    def __post_init__(self):
        for name in ("crosses", "circles", "downs"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if len(self.crosses) != len(self.circles):
            raise InvalidWeightError("number of crosses and circles differ")
        if (self.crosses & self.circles) or (self.crosses & self.downs) or (self.circles & self.downs):
            raise InvalidWeightError("labels overlap")

    @property
    def n(self) -> int:
        return len(self.downs) + len(self.crosses)

    @property
    def atypicality(self) -> int:
        return len(self.downs)

    @property
    def block(self) -> BlockId:
        return BlockId(self.crosses, self.circles)

    @property
    def core_positions(self) -> frozenset[int]:
        return self.crosses | self.circles

    def label(self, pos: int) -> str:
        if pos in self.downs:
            return DOWN
        if pos in self.crosses:
            return CROSS
        if pos in self.circles:
            return CIRCLE
        return UP

    def symbols(self) -> frozenset[int]:
        return self.downs | self.crosses | self.circles

    def shift(self, k: int) -> "WeightDiagram":
        return WeightDiagram(
            frozenset(p + k for p in self.crosses),
            frozenset(p + k for p in self.circles),
            frozenset(p + k for p in self.downs),
        )

    def with_downs(self, downs: Iterable[int]) -> "WeightDiagram":
        return WeightDiagram(self.crosses, self.circles, frozenset(downs))

    def to_weight(self) -> Weight:
        n = self.n
        ix = sorted(self.downs | self.crosses, reverse=True)
        io = sorted(self.downs | self.circles)
        left = tuple(x + i for i, x in enumerate(ix))
        right = tuple((i + 1) - n - x for i, x in enumerate(io))
        return Weight(left, right)

    def to_json(self) -> dict:
        return {"crosses": sorted(self.crosses), "circles": sorted(self.circles), "downs": sorted(self.downs)}

    def __str__(self) -> str:
        lo, hi = default_window(self)
        return "".join(self.label(p) for p in range(lo, hi + 1))


def weight_diagram(weight: Weight) -> WeightDiagram:
    n = weight.n
    ix = {weight.left[i] - i for i in range(n)}
    io = {(i + 1) - n - weight.right[i] for i in range(n)}
    return WeightDiagram(frozenset(ix - io), frozenset(io - ix), frozenset(ix & io))


def default_window(d: WeightDiagram) -> tuple[int, int]:
    marks = set(d.symbols())
    for a, b in match_cups(d.downs, d.core_positions):
        marks.update((a, b))
    if not marks:
        return (0, 0)
    return (min(marks) - 1, max(marks) + 1)


def atypicality(weight: Weight) -> int:
    return weight_diagram(weight).atypicality


def block_of(weight: Weight) -> BlockId:
    return weight_diagram(weight).block


def compress(d: WeightDiagram, pos: int) -> int:
    """Position after squeezing out every cross and circle to the left of ``pos``."""
    return pos - sum(1 for q in d.core_positions if q < pos)


def to_plot(weight: Weight | WeightDiagram) -> Plot:
    """Down-arrow set of phi(weight): compressed positions, then the Ber^(n-i) shift."""
    d = weight if isinstance(weight, WeightDiagram) else weight_diagram(weight)
    shift = d.n - d.atypicality
    return Plot(compress(d, p) + shift for p in d.downs)


def phi(weight: Weight) -> Weight:
    """Normalized block equivalence onto maximal atypical weights of rank atyp(weight)."""
    d = weight_diagram(weight)
    if d.atypicality == 0:
        raise DomainError(f"{weight} is typical; phi is undefined")
    return Weight.from_downs(to_plot(d).support)


def epsilon(weight: Weight) -> int:
    d = weight_diagram(weight)
    if d.atypicality == 0:
        return 1
    return -1 if phi(weight).parity_sum % 2 else 1


@dataclass(frozen=True)
class Sector:
    lo: int
    hi: int
    downs: frozenset[int]

    @property
    def rank(self) -> int:
        return len(self.downs)

    def to_json(self) -> dict:
        return {"interval": [self.lo, self.hi], "downs": sorted(self.downs)}


@dataclass(frozen=True)
class CupDiagram:
    diagram: WeightDiagram
    cups: tuple[tuple[int, int], ...]
    sectors: tuple[Sector, ...]
    d0: int | None
    gaps: tuple[int, ...]
    parents: dict = field(compare=False, hash=False, repr=False)

    @property
    def distances(self) -> tuple[int, ...]:
        """(d_0, d_1, .., d_{k-1}); empty for typical diagrams."""
        if self.d0 is None:
            return ()
        return (self.d0,) + self.gaps

    @property
    def degrees(self) -> tuple[int, ...]:
        """delta_i = d_0 + ... + d_{i-1} for every sector."""
        out, acc = [], 0
        for d in self.distances:
            acc += d
            out.append(acc)
        return tuple(out)

    @property
    def segments(self) -> tuple[tuple[int, ...], ...]:
        """Sector indices grouped into maximal adjacent runs."""
        if not self.sectors:
            return ()
        groups = [[0]]
        for j, g in enumerate(self.gaps, start=1):
            if g == 0:
                groups[-1].append(j)
            else:
                groups.append([j])
        return tuple(tuple(g) for g in groups)

    def parent(self, cup: tuple[int, int]) -> tuple[int, int] | None:
        return self.parents.get(cup)

    def children(self, cup: tuple[int, int] | None) -> list[tuple[int, int]]:
        return sorted(c for c in self.cups if self.parents.get(c) == cup)

    def enclosing_cup(self, lo: int, hi: int) -> tuple[int, int] | None:
        """Innermost cup strictly containing the interval [lo, hi]."""
        best = None
        for a, b in self.cups:
            if a < lo and hi < b and (best is None or a > best[0]):
                best = (a, b)
        return best

    def to_json(self) -> dict:
        out = self.diagram.to_json()
        out["cups"] = [list(c) for c in self.cups]
        out["sectors"] = [s.to_json() for s in self.sectors]
        out["distances"] = list(self.distances)
        return out


def cup_diagram(d: WeightDiagram | Weight) -> CupDiagram:
    if isinstance(d, Weight):
        d = weight_diagram(d)
    cups = tuple(match_cups(d.downs, d.core_positions))
    parents: dict = {}
    for cup in cups:
        enclosing = [c for c in cups if c[0] < cup[0] and cup[1] < c[1]]
        parents[cup] = max(enclosing) if enclosing else None
    tops = [c for c in cups if parents[c] is None]
    sectors = tuple(Sector(a, b, frozenset(p for p in d.downs if a <= p <= b)) for a, b in tops)
    gaps = tuple(
        compress(d, nxt.lo) - compress(d, cur.hi) - 1 for cur, nxt in zip(sectors, sectors[1:])
    )
    if d.atypicality:
        plot = to_plot(d)
        d0 = min(plot.support) + d.atypicality - 1
    else:
        d0 = None
    return CupDiagram(d, cups, sectors, d0, gaps, parents)


def basic_weight(weight: Weight) -> Weight:
    """Close all gaps (and d_0) keeping the sector shapes; rank = atypicality."""
    d = weight_diagram(weight)
    r = d.atypicality
    if r == 0:
        raise DomainError(f"{weight} is typical; it has no basic weight")
    cursor = 1 - r
    support: set[int] = set()
    for sec in to_plot(d).sectors():
        support |= {p - sec.lo + cursor for p in sec.support}
        cursor += sec.hi - sec.lo + 1
    return Weight.from_downs(support)


def is_basic(weight: Weight) -> bool:
    if not weight.is_bracket or atypicality(weight) != weight.n:
        return False
    n = weight.n
    lam = weight.left
    return lam[-1] == 0 and all(lam[i] <= n - 1 - i for i in range(n))


def bracket_weights(n: int, lo: int, hi: int) -> Iterator[Weight]:
    """All bracket weights of rank n with entries in [lo, hi]."""
    if n == 0:
        yield Weight((), ())
        return
    span = hi - lo + n - 1
    # strictly decreasing positions  <->  weakly decreasing entries
    for combo in combinations(range(span, -1, -1), n):
        yield Weight.bracket(c - (n - 1 - i) + lo for i, c in enumerate(combo))


def basic_weights(n: int) -> list[Weight]:
    out = []

    def rec(prefix: list[int]) -> None:
        i = len(prefix)
        if i == n:
            out.append(Weight.bracket(prefix))
            return
        top = n - 1 - i
        if prefix:
            top = min(top, prefix[-1])
        if i == n - 1:
            top = 0
        for v in range(top, -1, -1):
            rec(prefix + [v])

    rec([])
    return out


def ground_state_weight(block: BlockId, n: int, shift: int) -> Weight:
    i = n - block.core_rank
    if i <= 0:
        raise DomainError("typical blocks have no ground state with down arrows")
    downs = {shift - n + 1 + k for k in range(i)}
    marks = block.crosses | block.circles
    if marks and max(downs) >= min(marks):
        raise DomainError(f"shift {shift} puts down arrows right of the core")
    return WeightDiagram(block.crosses, block.circles, frozenset(downs)).to_weight()


def max_ground_shift(block: BlockId, n: int) -> int | None:
    marks = block.crosses | block.circles
    if not marks:
        return None
    i = n - block.core_rank
    return min(marks) + n - i - 1
