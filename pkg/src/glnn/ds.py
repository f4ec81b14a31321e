"""The Duflo-Serganova functor on irreducible modules.

DS(L(lambda)) splits into one irreducible summand per sector of the cup
diagram.  The summand for sector S_i is obtained by deleting the down arrow
at the left end of S_i; it sits in cohomological degree delta_i, the sum of
the distances d_0, .., d_{i-1}.  Crosses and circles never move, so blocks
correspond under DS.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .errors import DomainError
from .formal import FormalSum
from .weights import (
    BlockId,
    Weight,
    WeightDiagram,
    atypicality,
    cup_diagram,
    epsilon,
    ground_state_weight,
    weight_diagram,
)


@dataclass(frozen=True, order=True)
class Summand:
    """L(weight) placed in degree ``degree``; rendered as weight<-degree>."""

    degree: int
    weight: Weight

    @property
    def parity_shift(self) -> int:
        return self.degree % 2

    def __str__(self) -> str:
        return f"{self.weight}<{-self.degree}>"

    def to_json(self) -> dict:
        return {"weight": str(self.weight), "degree": self.degree, "parity_shift": self.parity_shift}


@dataclass(frozen=True)
class GradedDecomposition:
    """A multiset of graded irreducibles; order is canonical (sorted)."""

    summands: tuple[Summand, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "summands", tuple(sorted(self.summands, key=lambda s: (s.degree, s.weight.sort_key())))
        )

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __bool__(self) -> bool:
        return bool(self.summands)

    def as_set(self) -> set[tuple[Weight, int]]:
        return {(s.weight, s.degree) for s in self.summands}

    def multiset(self) -> Counter:
        return Counter((s.weight, s.degree) for s in self.summands)

    def weights(self) -> list[Weight]:
        return [s.weight for s in self.summands]

    def degree_part(self, degree: int) -> list[Weight]:
        """H^degree as a list of weights."""
        return [s.weight for s in self.summands if s.degree == degree]

    def is_multiplicity_free(self) -> bool:
        ws = self.weights()
        return len(ws) == len(set(ws))

    def to_k0(self) -> FormalSum[Weight]:
        """Image in the Grothendieck group with Pi -> -1."""
        return FormalSum((s.weight, (-1) ** s.parity_shift) for s in self.summands)

    def hilbert_polynomial(self):
        """sum of sdim(summand) t^degree, for summands of rank 0 only."""
        from .laurent import LaurentPolynomial

        acc: dict[int, int] = {}
        for s in self.summands:
            if s.weight.n:
                raise DomainError("Hilbert polynomial needs rank 0 summands")
            acc[s.degree] = acc.get(s.degree, 0) + 1
        return LaurentPolynomial(acc)

    def shift(self, k: int) -> "GradedDecomposition":
        return GradedDecomposition(tuple(Summand(s.degree + k, s.weight) for s in self.summands))

    def to_json(self) -> dict:
        return {"summands": [s.to_json() for s in self.summands]}

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return " (+) ".join(map(str, self.summands))


def ds(weight: Weight) -> GradedDecomposition:
    if weight.n == 0:
        raise DomainError("DS is not defined in rank 0")
    cd = cup_diagram(weight)
    d = cd.diagram
    out = []
    for sector, delta in zip(cd.sectors, cd.degrees):
        smaller = WeightDiagram(d.crosses, d.circles, d.downs - {sector.lo})
        out.append(Summand(delta, smaller.to_weight()))
    return GradedDecomposition(tuple(out))


def ds_iter(weight: Weight, r: int) -> GradedDecomposition:
    """DS applied r times with degrees added (the Leray spectral sequence degenerates)."""
    if not 1 <= r <= weight.n:
        raise DomainError(f"iteration count {r} outside 1..{weight.n}")
    current = [Summand(0, weight)]
    for _ in range(r):
        current = [Summand(s.degree + t.degree, t.weight) for s in current for t in ds(s.weight)]
    return GradedDecomposition(tuple(current))


def ds_k0(weight: Weight) -> FormalSum[Weight]:
    """d = H^+ - H^- on an irreducible."""
    return ds(weight).to_k0()


def nesting_sizes(weight: Weight | WeightDiagram) -> list[int]:
    """For every cup, the number of cups nested in it (itself included)."""
    cd = cup_diagram(weight)
    return [sum(1 for c in cd.cups if a <= c[0] and c[1] <= b) for a, b in cd.cups]


def multiplicity(weight: Weight) -> int:
    """m(lambda) = |F|! / F! for the nesting forest F."""
    sizes = nesting_sizes(weight)
    return factorial(len(sizes)) // prod(sizes)


@dataclass(frozen=True)
class TypicalCore:
    core: Weight
    multiplicity: int

    def to_json(self) -> dict:
        return {"core": str(self.core), "multiplicity": self.multiplicity}


def core(weight: Weight) -> Weight:
    d = weight_diagram(weight)
    return WeightDiagram(d.crosses, d.circles, ()).to_weight()


def core_and_multiplicity(weight: Weight) -> TypicalCore:
    return TypicalCore(core(weight), multiplicity(weight))


def typical_sdim(weight: Weight) -> Fraction:
    """Superdimension of a typical irreducible as an exact rational.

    The value is a ratio of products of root pairings with lambda + rho and
    is not integral in general (for n = 1 it is 1/(l1 + l2)).
    """
    n = weight.n
    x = [weight.left[i] - i for i in range(n)]  # (lambda+rho, e_i) up to a common constant
    y = [weight.right[k] + n - 1 - k for k in range(n)]
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(x[i] - x[j], j - i)
            num *= Fraction(y[j] - y[i], i - j)
    den = 1
    for i in range(n):
        for k in range(n):
            den *= x[i] + y[k]
    if den == 0:
        raise DomainError(f"{weight} is atypical")
    return num / den


@dataclass(frozen=True)
class ModifiedSdim:
    sign: int
    magnitude: Fraction

    @property
    def value(self) -> Fraction:
        return self.sign * self.magnitude

    def __str__(self) -> str:
        return str(self.value)


def modified_sdim(weight: Weight) -> ModifiedSdim:
    """epsilon(lambda) * m(lambda) * sdim(core); the plain superdimension when maximal atypical."""
    c = core(weight)
    val = Fraction(epsilon(weight) * multiplicity(weight))
    if c.n:
        val *= typical_sdim(c)
    return ModifiedSdim(1 if val >= 0 else -1, abs(val))


def sdim(weight: Weight) -> int:
    """Ordinary superdimension; zero unless maximal atypical (or n = 0)."""
    if atypicality(weight) != weight.n:
        return 0
    return epsilon(weight) * multiplicity(weight)


def ground_state(block: BlockId, shift: int, n: int) -> Weight:
    return ground_state_weight(block, n, shift)


def ground_state_ds(block: BlockId, shift: int, n: int) -> GradedDecomposition:
    """Predicted DS of a ground state: Pi^shift L(lambda bar), dropping lambda_n and lambda_{n+1}."""
    w = ground_state(block, shift, n)
    bar = Weight(w.left[:-1], w.right[1:])
    return GradedDecomposition((Summand(shift, bar),))
