"""Command-line front end.

Exit codes: 0 on success, 1 for usage and parse errors, 2 for domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks, kac_tables
from .ds import core_and_multiplicity, ds, ds_iter, modified_sdim
from .duality import dual_plot, dual_spaced_forest, dual_weight
from .errors import DomainError, ParseError
from .forests import degree_data, omega, to_spaced_forest
from .mixed_tensors import invariants, theta, theta_inverse
from .parsing import parse_bipartition, parse_plot, parse_weight, parse_window
from .render import draw_diagram
from .translation import check_commutation, translation_structure
from .weights import Weight, atypicality, cup_diagram, to_plot, weight_diagram


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(args, text: str, data) -> None:
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_diagram(args) -> None:
    w = parse_weight(args.weight)
    d = weight_diagram(w)
    window = parse_window(args.window) if args.window else None
    _emit(args, draw_diagram(d, window), cup_diagram(d).to_json())


def _ds(args):
    w = parse_weight(args.weight)
    return ds_iter(w, args.iterate) if args.iterate else ds(w)


def cmd_ds(args) -> None:
    res = _ds(args)
    _emit(args, str(res), res.to_json())


def cmd_cohomology(args) -> None:
    res = _ds(args)
    degrees = sorted({s.degree for s in res})
    lines = [f"H^{l}: " + " (+) ".join(map(str, res.degree_part(l))) for l in degrees]
    data = {str(l): [str(w) for w in res.degree_part(l)] for l in degrees}
    _emit(args, "\n".join(lines) or "0", data)


def cmd_omega(args) -> None:
    w = parse_weight(args.weight)
    poly = omega(w)
    dd = degree_data(w)
    data = {"omega": poly.to_json(), "top": dd.top, "bottom": dd.bottom, "D": dd.shift}
    _emit(args, str(poly), data)


def cmd_sdim(args) -> None:
    w = parse_weight(args.weight)
    s = modified_sdim(w)
    cm = core_and_multiplicity(w)
    data = {
        "sign": s.sign,
        "magnitude": str(s.magnitude),
        "value": str(s.value),
        "atypicality": atypicality(w),
        "core": str(cm.core),
        "multiplicity": cm.multiplicity,
    }
    _emit(args, str(s.value if args.signed else s.magnitude), data)


def cmd_dual(args) -> None:
    text = args.value.strip()
    if text.startswith("{"):
        p = parse_plot(text)
        dp = dual_plot(p)
        _emit(args, str(dp), {"plot": dp.to_json()})
        return
    w = parse_weight(text)
    dw = dual_weight(w)
    data = {"weight": dw.to_json()}
    lines = [f"weight: {dw}"]
    if atypicality(w):
        dp = dual_plot(to_plot(w))
        data["plot"] = dp.to_json()
        lines.append(f"plot:   {dp}")
    if atypicality(w) == w.n:
        df = dual_spaced_forest(to_spaced_forest(w))
        data["forest"] = df.to_json()
        lines.append(f"forest: {df}")
    _emit(args, "\n".join(lines), data)


def cmd_forest(args) -> None:
    f = to_spaced_forest(parse_weight(args.weight))
    _emit(args, str(f), f.to_json())


def cmd_theta(args) -> None:
    if args.inverse:
        b = theta_inverse(parse_weight(args.value))
        _emit(args, str(b), b.to_json())
        return
    if args.rank is None:
        raise DomainError("theta needs --rank")
    b = parse_bipartition(args.value)
    w = theta(b, args.rank)
    inv = invariants(b)
    data = {"weight": w.to_json(), "a": inv.a, "d": inv.d, "k": inv.k}
    _emit(args, str(w), data)


def cmd_translate(args) -> None:
    w = parse_weight(args.weight)
    triple = translation_structure(w, args.position)
    if args.audit:
        rep = check_commutation(w, args.position)
        text = f"{triple}\n" + ("commutation rules hold" if rep.ok else rep.diff())
        _emit(args, text, {"triple": triple.to_json(), "audit": rep.to_json()})
        return
    _emit(args, str(triple), triple.to_json())


def cmd_kac_table(args) -> None:
    n = args.n
    lines, data = [], {"constituents": [], "q": {}}
    for a, w in enumerate(kac_tables.kac_one_constituents(n)):
        lines.append(f"L_{a} = {w}")
        data["constituents"].append(str(w))
    lines.append("")
    for a in range(n + 1):
        h = kac_tables.q_a_cohomology(n, a)
        dirac = kac_tables.q_a_dirac(n, a)
        lines.append(f"Q_{a}: H = {h}    H_D = {dirac}")
        data["q"][str(a)] = {"cohomology": h.to_json(), "dirac": dirac.to_json()}
    _emit(args, "\n".join(lines), data)


def cmd_hooks(args) -> None:
    entries = kac_tables.hook_reps(args.n)
    width = max(len(e.kind) for e in entries)
    lines = [f"{e.kind:<{width}}  {e.weight}" for e in entries]
    _emit(args, "\n".join(lines), [e.to_json() for e in entries])


def cmd_check(args) -> None:
    names = args.names or list(checks.ALL_CHECKS)
    results = [checks.ALL_CHECKS[name]() for name in names]
    lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.cases} cases) {r.detail}".rstrip() for r in results]
    _emit(args, "\n".join(lines), [r.__dict__ for r in results])
    if not all(r.ok for r in results):
        raise DomainError("some checks failed")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="glnn", description="Weight diagrams, DS cohomology and duals for Gl(n|n).")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
        p.set_defaults(func=fn)
        return p

    p = add("diagram", cmd_diagram, "draw the weight diagram with cups")
    p.add_argument("weight")
    p.add_argument("--window", help="inclusive range a..b")

    for name, fn, text in (("ds", cmd_ds, "graded DS decomposition"), ("cohomology", cmd_cohomology, "H^l table")):
        p = add(name, fn, text)
        p.add_argument("weight")
        p.add_argument("--iterate", type=int, metavar="r", help="apply DS r times")

    p = add("omega", cmd_omega, "Hilbert polynomial from the forest formula")
    p.add_argument("weight")
    p = add("sdim", cmd_sdim, "modified superdimension (magnitude unless --signed)")
    p.add_argument("weight")
    p.add_argument("--signed", action="store_true", help="print the signed value")
    p = add("dual", cmd_dual, "Tannaka dual of a weight or plot")
    p.add_argument("value")
    p = add("forest", cmd_forest, "spaced forest of a maximal atypical weight")
    p.add_argument("weight")
    p = add("theta", cmd_theta, "weight of a mixed tensor, or --inverse")
    p.add_argument("value")
    p.add_argument("--rank", type=int, metavar="n")
    p.add_argument("--inverse", action="store_true", help="read a weight and return the bipartition")
    p = add("translate", cmd_translate, "Loewy layers of F_i applied to L(lambda_xo)")
    p.add_argument("weight")
    p.add_argument("position", type=int)
    p.add_argument("--audit", action="store_true", help="also run the K0 commutation audit")
    p = add("kac-table", cmd_kac_table, "constituents of V(1) and the Q_a tables")
    p.add_argument("n", type=int)
    p = add("hooks", cmd_hooks, "hook representations L_n(i)")
    p.add_argument("n", type=int)
    p = add("check", cmd_check, "run the built-in property sweeps")
    p.add_argument("names", nargs="*", choices=list(checks.ALL_CHECKS) + [[]], metavar="NAME")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except ParseError as exc:
        print(exc.annotated(), file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
