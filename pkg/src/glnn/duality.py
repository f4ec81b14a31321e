"""Tannaka duals of irreducibles in three encodings."""

from __future__ import annotations

from .errors import DomainError
from .forests import SpacedForest, from_spaced_forest, mirror, to_spaced_forest
from .plots import Plot
from .weights import Weight, WeightDiagram, cup_diagram, is_basic, weight_diagram


def dual_diagram(d: WeightDiagram) -> WeightDiagram:
    """Swap the two feet of every cup, then reflect the line by s -> 1 - s."""
    cd = cup_diagram(d)
    downs = {b for _, b in cd.cups}
    return WeightDiagram(
        frozenset(1 - p for p in d.crosses),
        frozenset(1 - p for p in d.circles),
        frozenset(1 - p for p in downs),
    )


def dual_weight(weight: Weight) -> Weight:
    return dual_diagram(weight_diagram(weight)).to_weight()


def dual_plot(plot: Plot) -> Plot:
    support: set[int] = set()
    for sec in plot.sectors():
        support |= {1 - p for p in range(sec.lo, sec.hi + 1) if p not in sec.support}
    return Plot(support)


def dual_spaced_forest(forest: SpacedForest) -> SpacedForest:
    return SpacedForest(
        -forest.d0 - sum(forest.gaps),
        tuple(mirror(t) for t in reversed(forest.trees)),
        tuple(reversed(forest.gaps)),
    )


def dual_via_forest(weight: Weight) -> Weight:
    return from_spaced_forest(dual_spaced_forest(to_spaced_forest(weight)))


def transpose(partition) -> tuple[int, ...]:
    parts = [p for p in partition if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def basic_transpose(weight: Weight) -> Weight:
    """The transposed partition of a basic weight, padded to rank n."""
    if not is_basic(weight):
        raise DomainError(f"{weight} is not a basic weight")
    t = transpose(weight.left)
    return Weight.bracket(t + (0,) * (weight.n - len(t)))
