"""Plain-text pictures of weight and cup diagrams."""

from __future__ import annotations

from .weights import WeightDiagram, cup_diagram, default_window

COL = 3


def _heights(cups) -> dict:
    heights = {}
    for a, b in sorted(cups, key=lambda c: c[1] - c[0]):
        inner = [heights[c] for c in heights if a < c[0] and c[1] < b]
        heights[(a, b)] = 1 + max(inner, default=0)
    return heights


def draw_diagram(d: WeightDiagram, window: tuple[int, int] | None = None) -> str:
    """Position ruler, label line and cup arcs over ``window`` (inclusive)."""
    lo, hi = window or default_window(d)
    width = (hi - lo + 1) * COL
    col = lambda p: (p - lo) * COL + 1

    ruler = "".join(f"{p:>{COL}}" for p in range(lo, hi + 1))
    labels = "".join(f" {d.label(p)} " for p in range(lo, hi + 1))
    cups = cup_diagram(d).cups
    heights = _heights(cups)
    rows = [[" "] * width for _ in range(max(heights.values(), default=0))]
    for (a, b), h in heights.items():
        for r in range(h):
            last = r == h - 1
            for p, corner in ((a, "└"), (b, "┘")):
                if lo <= p <= hi:
                    rows[r][col(p)] = corner if last else "│"
            if last:
                for x in range(max(col(a) + 1, 0), min(col(b), width)):
                    rows[r][x] = "─"
    lines = [ruler, labels] + ["".join(r).rstrip() for r in rows]
    return "\n".join(line.rstrip() for line in lines)
