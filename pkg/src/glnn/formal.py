"""Finitely supported integer combinations of hashable objects.

Used for the plot group (signed sums of plots) and for Grothendieck group
elements (signed sums of weights).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Generic, TypeVar

K = TypeVar("K")


class FormalSum(Mapping, Generic[K]):
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, int] | Iterable[tuple[K, int]] | None = None):
        acc: dict[K, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                acc[key] = acc.get(key, 0) + coeff
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def of(cls, *keys: K) -> "FormalSum[K]":
        return cls((k, 1) for k in keys)

    def __getitem__(self, key: K) -> int:
        return self._terms[key]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, key: K) -> int:
        return self._terms.get(key, 0)

    def __add__(self, other: "FormalSum[K]") -> "FormalSum[K]":
        return FormalSum(list(self._terms.items()) + list(other.items()))

    def __neg__(self) -> "FormalSum[K]":
        return FormalSum((k, -v) for k, v in self._terms.items())

    def __sub__(self, other: "FormalSum[K]") -> "FormalSum[K]":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "FormalSum[K]":
        return FormalSum((k, scalar * v) for k, v in self._terms.items())

    __mul__ = __rmul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FormalSum):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v}
        return NotImplemented

    __hash__ = None  # mutable-looking container semantics; compare by value only

    def map_keys(self, fn) -> "FormalSum":
        return FormalSum((fn(k), v) for k, v in self._terms.items())

    def sorted_items(self) -> list[tuple[K, int]]:
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (key, coeff) in enumerate(self.sorted_items()):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = f"{mag}{key}" if mag != 1 else str(key)
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"FormalSum({self.sorted_items()!r})"


def _sort_key(key):
    sk = getattr(key, "sort_key", None)
    if callable(sk):
        return sk()
    return key
