"""Tables for the Kac module of the trivial representation and for hook weights."""

from __future__ import annotations

from dataclasses import dataclass

from .ds import GradedDecomposition, Summand, ds_iter
from .duality import dual_weight
from .errors import DomainError
from .formal import FormalSum
from .plots import Plot
from .translation import derivative_K0
from .weights import Weight, cup_diagram, weight_diagram


def kac_constituent(n: int, a: int) -> Weight:
    """L_a = Ber^-a (x) [a,..,a,0,..,0] with n - a entries equal to a."""
    if not 0 <= a <= n:
        raise DomainError(f"a = {a} outside 0..{n}")
    return Weight.bracket((a,) * (n - a) + (0,) * a).twist(-a)


def kac_one_constituents(n: int) -> list[Weight]:
    return [kac_constituent(n, a) for a in range(n + 1)]


def kac_module_k0(n: int) -> FormalSum[Weight]:
    return FormalSum.of(*kac_one_constituents(n))


def i_weight(n: int, a: int) -> Weight | None:
    """I_a in rank n - 1; None (zero) for a = -1 and a = n."""
    if a < 0 or a >= n:
        return None
    return Weight.bracket((a + 1,) * (n - a - 1) + (0,) * a).twist(-a - 1)


def q_a_cohomology(n: int, a: int) -> GradedDecomposition:
    """H^-nu(Q_a) = I_nu + I_{nu-1} for nu = 0..a."""
    if not 0 <= a <= n:
        raise DomainError(f"a = {a} outside 0..{n}")
    out = []
    for nu in range(a + 1):
        for w in (i_weight(n, nu), i_weight(n, nu - 1)):
            if w is not None:
                out.append(Summand(-nu, w))
    return GradedDecomposition(tuple(out))


def q_a_dirac(n: int, a: int) -> GradedDecomposition:
    """Dirac cohomology of Q_a: I_a in degree -a (zero when a = n)."""
    if not 0 <= a <= n:
        raise DomainError(f"a = {a} outside 0..{n}")
    w = i_weight(n, a)
    return GradedDecomposition(() if w is None else (Summand(-a, w),))


def q_a_constituents(n: int, a: int) -> FormalSum[Weight]:
    return FormalSum.of(*(kac_constituent(n, nu) for nu in range(a + 1)))


def d_kac_module(n: int) -> FormalSum[Weight]:
    return derivative_K0(kac_module_k0(n))


def hook(n: int, i: int) -> Weight:
    """L_n(i) = [i, 1^(i-1), 0^(n-i)] for i < n and Ber (x) S^(n-1) for i = n."""
    if not 1 <= i <= n:
        raise DomainError(f"hook index {i} outside 1..{n}")
    if i == n:
        return Weight.bracket((n,) + (1,) * (n - 1))
    return Weight.bracket((i,) + (1,) * (i - 1) + (0,) * (n - i))


@dataclass(frozen=True)
class HookEntry:
    weight: Weight
    kind: str

    def to_json(self) -> dict:
        return {"weight": str(self.weight), "kind": self.kind}


def hook_reps(n: int) -> list[HookEntry]:
    out = [HookEntry(hook(n, i), f"L_{n}({i})") for i in range(1, n + 1)]
    out.append(HookEntry(dual_weight(hook(n, n)), f"L_{n}({n})^dual"))
    return out


def hook_ds(n: int, i: int, j: int) -> list[Weight]:
    """Weights of DS_{n,j}(L_n(i)), i.e. DS applied n - j times, sorted."""
    if j == n:
        return [hook(n, i)]
    return sorted(ds_iter(hook(n, i), n - j).weights(), key=Weight.sort_key)


def y_weight(i: int) -> Weight:
    """The extra summand Y of DS_{n,i}(L_n(i)) for n > i >= 2.

    Its sectors are [-i,-i+1], the derivative of the middle sector of
    L_{i+1}(i) on [-i+3, i-2], and [i, i+1].
    """
    if i < 2:
        raise DomainError("Y only exists for i >= 2")
    big = cup_diagram(hook(i + 1, i))
    middle = big.sectors[1]
    inner = middle.downs - {middle.lo}
    return Weight.from_downs({-i, i} | set(inner))


def hook_ds_expected(n: int, i: int, j: int) -> list[Weight]:
    if not 1 <= i <= n or not 1 <= j <= n:
        raise DomainError("indices out of range")
    if i < j:
        return [hook(j, i)]
    if i == j and j < n:
        ws = [hook(i, i), dual_weight(hook(i, i))]
        if i >= 2:
            ws.append(y_weight(i))
        return sorted(ws, key=Weight.sort_key)
    raise DomainError("only j > i, or j = i < n, is tabulated")


def sector_string(weight: Weight) -> str:
    """Sector brackets over the diagram window, e.g. [v^][vv^^]."""
    cd = cup_diagram(weight)
    d = weight_diagram(weight)
    if not cd.sectors:
        return ""
    lo, hi = cd.sectors[0].lo, cd.sectors[-1].hi
    starts = {s.lo for s in cd.sectors}
    ends = {s.hi for s in cd.sectors}
    out = []
    for p in range(lo, hi + 1):
        if p in starts:
            out.append("[")
        out.append(d.label(p))
        if p in ends:
            out.append("]")
    return "".join(out)


def hook_sector_downs(n: int, j: int) -> Plot:
    """Down arrows of L_n(j), j < n: {j} and {2-j..0} and {-j..1-n}."""
    return Plot({j} | set(range(2 - j, 1)) | set(range(1 - n, -j + 1)))
