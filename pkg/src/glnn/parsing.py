"""Text formats: weights, bipartitions, plots and windows."""

from __future__ import annotations

import re

from .errors import InvalidWeightError, ParseError
from .mixed_tensors import Bipartition
from .plots import Plot
from .weights import Weight

_INT = re.compile(r"\s*(-?\d+)\s*")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.text, self.pos)
        self.pos += 1

    def integer(self) -> int:
        m = _INT.match(self.text, self.pos)
        if not m:
            self.skip()
            raise ParseError("expected an integer", self.text, self.pos)
        self.pos = m.end()
        return int(m.group(1))

    def int_list(self, close: str, stops: str = "") -> list[int]:
        out: list[int] = []
        if self.peek() in close + stops:
            return out
        while True:
            out.append(self.integer())
            if self.peek() == ",":
                self.pos += 1
                continue
            return out

    def end(self) -> None:
        self.skip()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing text", self.text, self.pos)


def parse_weight(text: str) -> Weight:
    """Accepts "[3,0,0]" or "(3,0,0|0,0,-3)"."""
    cur = _Cursor(text)
    start = cur.peek()
    try:
        if start == "[":
            cur.pos += 1
            values = cur.int_list("]")
            cur.expect("]")
            cur.end()
            return Weight.bracket(values)
        if start == "(":
            cur.pos += 1
            left = cur.int_list("|")
            cur.expect("|")
            right = cur.int_list(")")
            cur.expect(")")
            cur.end()
            return Weight(tuple(left), tuple(right))
    except InvalidWeightError as exc:
        raise ParseError(str(exc), text, 0) from exc
    raise ParseError("a weight starts with '[' or '('", text, cur.pos)


def parse_bipartition(text: str) -> Bipartition:
    """Accepts "((3,1),(2))"."""
    cur = _Cursor(text)
    cur.expect("(")
    cur.expect("(")
    left = cur.int_list(")")
    cur.expect(")")
    cur.expect(",")
    cur.expect("(")
    right = cur.int_list(")")
    cur.expect(")")
    cur.expect(")")
    cur.end()
    try:
        return Bipartition(tuple(left), tuple(right))
    except InvalidWeightError as exc:
        raise ParseError(str(exc), text, 0) from exc


def parse_plot(text: str) -> Plot:
    """Accepts "{-2,-1,2,3}"."""
    cur = _Cursor(text)
    cur.expect("{")
    values = cur.int_list("}")
    cur.expect("}")
    cur.end()
    if len(set(values)) != len(values):
        raise ParseError("repeated plot entry", text, 0)
    return Plot(values)


def parse_window(text: str) -> tuple[int, int]:
    """Accepts "a..b" with a <= b."""
    cur = _Cursor(text)
    lo = cur.integer()
    for _ in range(2):
        cur.expect(".")
    hi = cur.integer()
    cur.end()
    if lo > hi:
        raise ParseError("empty window", text, 0)
    return lo, hi
