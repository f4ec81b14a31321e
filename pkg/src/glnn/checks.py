"""Small exhaustive property sweeps used by ``glnn check``."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .ds import ds, ds_iter
from .duality import basic_transpose, dual_weight
from .forests import omega
from .kac_tables import d_kac_module
from .translation import admissible_positions, check_commutation
from .weights import basic_weights, bracket_weights, epsilon


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    cases: int
    detail: str = ""


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def check_catalan(max_n: int = 8) -> CheckResult:
    bad = [n for n in range(1, max_n + 1) if len(basic_weights(n)) != _catalan(n)]
    return CheckResult("catalan", not bad, max_n, f"failing n: {bad}" if bad else "")


def check_forest_formula(max_n: int = 3, bound: int = 3) -> CheckResult:
    cases, bad = 0, []
    for n in range(1, max_n + 1):
        for w in bracket_weights(n, -bound, bound):
            cases += 1
            if ds_iter(w, n).hilbert_polynomial() != omega(w):
                bad.append(str(w))
    return CheckResult("forest-formula", not bad, cases, ", ".join(bad[:5]))


def check_parity(max_n: int = 3, bound: int = 3) -> CheckResult:
    cases, bad = 0, []
    for n in range(1, max_n + 1):
        for w in bracket_weights(n, -bound, bound):
            for s in ds(w):
                cases += 1
                if (s.degree % 2 == 1) != (epsilon(w) != epsilon(s.weight)):
                    bad.append(f"{w} -> {s}")
    return CheckResult("parity", not bad, cases, ", ".join(bad[:5]))


def check_duality(max_n: int = 3, bound: int = 3) -> CheckResult:
    cases, bad = 0, []
    for n in range(1, max_n + 1):
        for w in bracket_weights(n, -bound, bound):
            cases += 1
            dw = dual_weight(w)
            if dual_weight(dw) != w or omega(dw) != omega(w).substitute_inverse():
                bad.append(str(w))
        for w in basic_weights(n):
            cases += 1
            if dual_weight(w) != basic_transpose(w):
                bad.append(str(w))
    return CheckResult("duality", not bad, cases, ", ".join(bad[:5]))


def check_commutation_rules(max_n: int = 3, bound: int = 2) -> CheckResult:
    cases, bad = 0, []
    for n in range(1, max_n + 1):
        for w in bracket_weights(n, -bound, bound):
            for i in admissible_positions(w):
                cases += 1
                rep = check_commutation(w, i)
                if not rep.ok:
                    bad.append(rep.diff())
    return CheckResult("commutation", not bad, cases, "\n".join(bad[:3]))


def check_kac(max_n: int = 4) -> CheckResult:
    bad = [n for n in range(1, max_n + 1) if d_kac_module(n)]
    return CheckResult("kac-module", not bad, max_n, f"failing n: {bad}" if bad else "")


ALL_CHECKS = {
    "catalan": check_catalan,
    "forest-formula": check_forest_formula,
    "parity": check_parity,
    "duality": check_duality,
    "commutation": check_commutation_rules,
    "kac-module": check_kac,
}


def run_all() -> list[CheckResult]:
    return [fn() for fn in ALL_CHECKS.values()]

