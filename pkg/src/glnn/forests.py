"""Planar forests, spaced forests and the quantum forest formula.

A planar tree is stored as the tuple of its child trees, so a leaf is ``()``
and a chain of three nodes is ``(((),),)``.  A maximal atypical weight of
rank n is the same thing as a spaced forest (d0, T1, d1, T2, .., T_k): the
trees record how the cups of each sector nest and the d's are the distances.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from .errors import DomainError
from .laurent import ONE, LaurentPolynomial
from .weights import Weight, atypicality, basic_weight, cup_diagram

Tree = tuple


def size(tree: Tree) -> int:
    return 1 + sum(size(c) for c in tree)


def chain(n: int) -> Tree:
    tree: Tree = ()
    for _ in range(n - 1):
        tree = (tree,)
    return tree


def mirror(tree: Tree) -> Tree:
    return tuple(mirror(c) for c in reversed(tree))


def graft(forest) -> Tree:
    """Attach the trees of a forest, in order, below a new root."""
    return tuple(forest)


def subtree_sizes(forest) -> list[int]:
    out: list[int] = []

    def walk(t: Tree) -> int:
        s = 1 + sum(walk(c) for c in t)
        out.append(s)
        return s

    for t in forest:
        walk(t)
    return out


def forest_factorial(forest) -> int:
    return prod(subtree_sizes(forest))


def forest_multiplicity(forest) -> int:
    """|F|! / F!, the number of linear extensions of the forest order."""
    sizes = subtree_sizes(forest)
    return factorial(len(sizes)) // prod(sizes)


def tree_to_json(tree: Tree) -> list:
    return [tree_to_json(c) for c in tree]


def tree_from_json(data) -> Tree:
    return tuple(tree_from_json(c) for c in data)


def tree_str(tree: Tree) -> str:
    return "(" + "".join(tree_str(c) for c in tree) + ")"


@dataclass(frozen=True)
class SpacedForest:
    d0: int
    trees: tuple[Tree, ...]
    gaps: tuple[int, ...]

    def __post_init__(self):
        if len(self.gaps) != max(len(self.trees) - 1, 0):
            raise DomainError("need exactly one gap between consecutive trees")
        if any(g < 0 for g in self.gaps):
            raise DomainError("gaps must be nonnegative")

    @property
    def rank(self) -> int:
        return sum(size(t) for t in self.trees)

    @property
    def degrees(self) -> tuple[int, ...]:
        out, acc = [], self.d0
        for j in range(len(self.trees)):
            out.append(acc)
            if j < len(self.gaps):
                acc += self.gaps[j]
        return tuple(out)

    def to_json(self) -> dict:
        gaps = list(self.gaps) + [None]
        return {"d0": self.d0, "trees": [{"tree": tree_to_json(t), "gap": g} for t, g in zip(self.trees, gaps)]}

    @classmethod
    def from_json(cls, data: dict) -> "SpacedForest":
        trees = tuple(tree_from_json(e["tree"]) for e in data["trees"])
        gaps = tuple(e["gap"] for e in data["trees"][:-1])
        return cls(data["d0"], trees, gaps)

    def __str__(self) -> str:
        parts = [str(self.d0)]
        for j, t in enumerate(self.trees):
            parts.append(tree_str(t))
            if j < len(self.gaps):
                parts.append(str(self.gaps[j]))
        return "(" + ", ".join(parts) + ")"


def _require_max_atypical(weight: Weight) -> None:
    if atypicality(weight) != weight.n:
        raise DomainError(f"{weight} is not maximal atypical")


def to_spaced_forest(weight: Weight) -> SpacedForest:
    _require_max_atypical(weight)
    cd = cup_diagram(weight)

    def build(cup) -> Tree:
        return tuple(build(c) for c in cd.children(cup))

    trees = tuple(build((s.lo, s.hi)) for s in cd.sectors)
    return SpacedForest(cd.d0 if cd.d0 is not None else 0, trees, cd.gaps)


def from_spaced_forest(forest: SpacedForest) -> Weight:
    n = forest.rank
    downs: list[int] = []

    def place(tree: Tree, pos: int) -> int:
        downs.append(pos)
        pos += 1
        for c in tree:
            pos = place(c, pos)
        return pos + 1

    pos = forest.d0 - n + 1
    for j, t in enumerate(forest.trees):
        pos = place(t, pos)
        if j < len(forest.gaps):
            pos += forest.gaps[j]
    return Weight.from_downs(downs)


def quantum_number(m: int) -> LaurentPolynomial:
    if m < 1:
        raise DomainError("quantum numbers need m >= 1")
    return LaurentPolynomial.from_degrees(m - 1 - 2 * j for j in range(m))


def quantum_factorial(n: int) -> LaurentPolynomial:
    out = ONE
    for m in range(1, n + 1):
        out = out * quantum_number(m)
    return out


def quantum_forest_factorial(forest) -> LaurentPolynomial:
    out = ONE
    for s in subtree_sizes(forest):
        out = out * quantum_number(s)
    return out


def shift_degree(weight: Weight) -> int:
    """D(lambda) = sum r_i delta_i over the sectors."""
    f = to_spaced_forest(weight)
    return sum(size(t) * d for t, d in zip(f.trees, f.degrees))


def omega(weight: Weight) -> LaurentPolynomial:
    """Hilbert polynomial t^D [n]! / [F]! of the fully iterated DS."""
    _require_max_atypical(weight)
    if weight.n == 0:
        return ONE
    f = to_spaced_forest(weight)
    q = quantum_factorial(weight.n).divide_exact(quantum_forest_factorial(f.trees))
    return q.shift(shift_degree(weight))


@dataclass(frozen=True)
class DegreeData:
    top: int
    bottom: int
    shift: int


def degree_data(weight: Weight) -> DegreeData:
    w = omega(weight)
    return DegreeData(w.max_degree, w.min_degree, shift_degree(weight))


def weight_degree(weight: Weight) -> int:
    """p(lambda) = lambda_1 + .. + lambda_n."""
    return sum(weight.left)


def basic_degree(weight: Weight) -> int:
    return weight_degree(basic_weight(weight))
