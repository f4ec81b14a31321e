"""Loewy structures of translation functors and the K0 commutation rules.

For a weight L with a down arrow at i and an up arrow at i+1, the functor
F_i applied to L(lambda_xo) (the weight with a cross at i and a circle at
i+1) has Loewy layers (L, A, L).  The middle layer A is produced by moves
of L:

* the upward move, v at i -> i+1;
* lower sector moves, v at i -> b for every sibling cup (a, b) left of i;
* upper sector moves, v at a -> i+1 for every sibling cup (a, b) right of i+1;
* the boundary move, v at i -> the first free vertex left of the segment,
  only when [i, i+1] is not enclosed by any cup.

Siblings are the direct children of the innermost cup enclosing [i, i+1]
or, without such a cup, the other sectors of the segment containing i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ds import ds
from .errors import DomainError
from .formal import FormalSum
from .weights import (
    Weight,
    WeightDiagram,
    atypicality,
    compress,
    cup_diagram,
    epsilon,
    to_plot,
    weight_diagram,
)

K0 = FormalSum


def derivative_K0(x: FormalSum[Weight]) -> FormalSum[Weight]:
    """Additive extension of d = H^+ - H^- to the Grothendieck group."""
    out: FormalSum[Weight] = FormalSum()
    for w, c in x.items():
        out = out + c * ds(w).to_k0()
    return out


def d(weight: Weight) -> FormalSum[Weight]:
    return ds(weight).to_k0()


def admissible_positions(weight: Weight) -> list[int]:
    dg = weight_diagram(weight)
    return sorted(i for i in dg.downs if dg.label(i + 1) == "∧")


@dataclass(frozen=True)
class LoewyTriple:
    top: Weight
    middle: tuple[Weight, ...]
    position: int
    encapsulated: bool

    @property
    def context(self) -> str:
        return "II" if self.encapsulated else "I"

    def middle_k0(self) -> FormalSum[Weight]:
        return FormalSum.of(*self.middle)

    def to_json(self) -> dict:
        return {
            "socle": str(self.top),
            "middle": [str(w) for w in self.middle],
            "cosocle": str(self.top),
            "position": self.position,
            "context": self.context,
        }

    def __str__(self) -> str:
        mid = " + ".join(map(str, self.middle)) if self.middle else "0"
        return f"({self.top} | {mid} | {self.top})"


def _move(dg: WeightDiagram, src: int, dst: int) -> Weight:
    return dg.with_downs((dg.downs - {src}) | {dst}).to_weight()


def translation_structure(weight: Weight, i: int) -> LoewyTriple:
    dg = weight_diagram(weight)
    if i not in dg.downs or dg.label(i + 1) != "∧":
        raise DomainError(f"position {i} is not admissible for {weight}")
    cd = cup_diagram(dg)
    moves = [_move(dg, i, i + 1)]
    parent = cd.enclosing_cup(i, i + 1)
    if parent is not None:
        siblings = [c for c in cd.children(parent) if c != (i, i + 1)]
    else:
        seg = next(s for s in cd.segments if any(cd.sectors[j].lo == i for j in s))
        siblings = [(cd.sectors[j].lo, cd.sectors[j].hi) for j in seg if cd.sectors[j].lo != i]
    for a, b in siblings:
        if b < i:
            moves.append(_move(dg, i, b))
        else:
            moves.append(_move(dg, a, i + 1))
    if parent is None:
        start = min(cd.sectors[j].lo for j in seg)
        target = start - 1
        while target in dg.core_positions:
            target -= 1
        moves.append(_move(dg, i, target))
    return LoewyTriple(weight, tuple(sorted(moves, key=Weight.sort_key)), i, parent is not None)


def xo_weight(weight: Weight, i: int) -> Weight:
    """L(lambda_xo): the down arrow at i becomes a cross and the up arrow at i+1 a circle."""
    dg = weight_diagram(weight)
    return WeightDiagram(dg.crosses | {i}, dg.circles | {i + 1}, dg.downs - {i}).to_weight()


def _vw(weight: Weight, i: int) -> Weight:
    dg = weight_diagram(weight)
    return WeightDiagram(dg.crosses - {i}, dg.circles - {i + 1}, dg.downs | {i}).to_weight()


def aux_weight(weight: Weight, i: int) -> Weight:
    """L^aux: the plot with up arrows at both i and i+1 (rank n - 1)."""
    dg = weight_diagram(weight)
    return dg.with_downs(dg.downs - {i}).to_weight()


def plot_position(weight: Weight, i: int) -> int:
    dg = weight_diagram(weight)
    return compress(dg, i) + dg.n - dg.atypicality


@dataclass(frozen=True)
class CommutationReport:
    weight: Weight
    position: int
    context: str
    sign: int
    l_aux: Weight
    d_l: FormalSum
    l_tilde: FormalSum
    a_prime: FormalSum
    a_tilde: FormalSum
    signs_separated: bool

    @property
    def aux_term(self) -> FormalSum:
        return self.sign * FormalSum.of(self.l_aux) if self.context == "I" else FormalSum()

    @property
    def commutation_holds(self) -> bool:
        return self.a_prime == self.a_tilde + 2 * self.aux_term

    @property
    def tilde_l_holds(self) -> bool:
        return self.d_l == self.l_tilde - self.aux_term

    @property
    def total_holds(self) -> bool:
        return 2 * self.d_l + self.a_prime == 2 * self.l_tilde + self.a_tilde

    @property
    def ok(self) -> bool:
        return self.commutation_holds and self.tilde_l_holds and self.total_holds and self.signs_separated

    def diff(self) -> str:
        lines = [f"{self.weight} at {self.position} (context {self.context})"]
        if not self.commutation_holds:
            lines.append(f"  A' - A~ - 2 aux = {self.a_prime - self.a_tilde - 2 * self.aux_term}")
        if not self.tilde_l_holds:
            lines.append(f"  d(L) - L~ + aux = {self.d_l - self.l_tilde + self.aux_term}")
        if not self.total_holds:
            lines.append("  2 d(L) + d(A) != 2 L~ + A~")
        if not self.signs_separated:
            lines.append("  a middle factor has the same sign as L")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "weight": str(self.weight),
            "position": self.position,
            "context": self.context,
            "l_aux": str(self.l_aux),
            "a_prime": str(self.a_prime),
            "a_tilde": str(self.a_tilde),
            "ok": self.ok,
        }


def check_commutation(weight: Weight, i: int) -> CommutationReport:
    """Audit DS(F_i L_xo) = F_i DS(L_xo) in K0 of rank n - 1."""
    triple = translation_structure(weight, i)
    r = atypicality(weight)
    sign = (-1) ** ((plot_position(weight, i) + r) % 2)
    l_tilde: FormalSum[Weight] = FormalSum()
    a_tilde: FormalSum[Weight] = FormalSum()
    for s in ds(xo_weight(weight, i)):
        c = (-1) ** s.parity_shift
        mu = _vw(s.weight, i)
        l_tilde = l_tilde + c * FormalSum.of(mu)
        a_tilde = a_tilde + c * translation_structure(mu, i).middle_k0()
    a_prime = derivative_K0(triple.middle_k0())
    eps = epsilon(weight)
    return CommutationReport(
        weight,
        i,
        triple.context,
        sign,
        aux_weight(weight, i),
        d(weight),
        l_tilde,
        a_prime,
        a_tilde,
        all(epsilon(a) == -eps for a in triple.middle),
    )


def order_key(weight: Weight) -> tuple[int, ...]:
    """(-r_1, d_1, -r_2, d_2, ...) over the sectors of the plot; smaller is lower."""
    p = to_plot(weight)
    secs = p.sectors()
    gaps = p.distances()
    key: list[int] = []
    for j, s in enumerate(secs):
        key.append(-s.rank)
        if j < len(gaps):
            key.append(gaps[j])
    return tuple(key)


@dataclass(frozen=True)
class Reduction:
    target: Weight
    lower: Weight
    position: int
    triple: LoewyTriple


def algorithm_one_reduction(weight: Weight) -> Reduction | None:
    """Pick L and i with L^up = weight so that every other factor of F_i L_xo is lower.

    Returns None when the plot is a single segment (nothing to reduce).
    Only maximal atypical weights are handled.
    """
    if atypicality(weight) != weight.n:
        raise DomainError("the reduction is implemented for maximal atypical weights")
    cd = cup_diagram(weight)
    if len(cd.segments) < 2:
        return None
    first = cd.sectors[cd.segments[1][0]]
    i = first.lo - 1
    dg = cd.diagram
    lower = _move(dg, first.lo, i)
    triple = translation_structure(lower, i)
    return Reduction(weight, lower, i, triple)
