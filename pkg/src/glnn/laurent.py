"""Exact Laurent polynomials in one variable t with integer coefficients."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction


class LaurentPolynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(d): int(v) for d, v in (coeffs or {}).items() if v}

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({degree: coeff})

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "LaurentPolynomial":
        acc: dict[int, int] = {}
        for d in degrees:
            acc[d] = acc.get(d, 0) + 1
        return cls(acc)

    def coefficients(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, degree: int) -> int:
        return self._c.get(degree, 0)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    @property
    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = _coerce(other)
        acc = dict(self._c)
        for d, v in other._c.items():
            acc[d] = acc.get(d, 0) + v
        return LaurentPolynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({d: -v for d, v in self._c.items()})

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "LaurentPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = _coerce(other)
        acc: dict[int, int] = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                acc[d1 + d2] = acc.get(d1 + d2, 0) + v1 * v2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        out = LaurentPolynomial({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by t**k."""
        return LaurentPolynomial({d + k: v for d, v in self._c.items()})

    def substitute_negative(self) -> "LaurentPolynomial":
        """t -> -t."""
        return LaurentPolynomial({d: v * (-1) ** (d % 2) for d, v in self._c.items()})

    def substitute_inverse(self) -> "LaurentPolynomial":
        """t -> 1/t."""
        return LaurentPolynomial({-d: v for d, v in self._c.items()})

    def evaluate(self, x: int | Fraction) -> Fraction:
        x = Fraction(x)
        return sum((v * x**d for d, v in self._c.items()), Fraction(0))

    def divmod(self, divisor: "LaurentPolynomial") -> tuple["LaurentPolynomial", "LaurentPolynomial"]:
        """Long division after clearing negative degrees; remainder has smaller span."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial(), LaurentPolynomial()
        lead_d = divisor.max_degree
        lead_c = divisor[lead_d]
        low = divisor.min_degree
        rem = dict(self._c)
        quot: dict[int, int] = {}
        # eliminate the top term while the remainder is at least as wide as the divisor
        while rem and max(rem) - min(rem) >= lead_d - low:
            top = max(rem)
            c, r = divmod(rem[top], lead_c)
            if r:
                break
            q_deg = top - lead_d
            quot[q_deg] = quot.get(q_deg, 0) + c
            for d, v in divisor._c.items():
                nd = d + q_deg
                rem[nd] = rem.get(nd, 0) - c * v
                if rem[nd] == 0:
                    del rem[nd]
        return LaurentPolynomial(quot), LaurentPolynomial(rem)

    def divide_exact(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    def to_json(self) -> dict[str, int]:
        return {str(d): v for d, v in sorted(self._c.items(), reverse=True)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPolynomial":
        return cls({int(d): v for d, v in data.items()})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for i, d in enumerate(sorted(self._c, reverse=True)):
            v = self._c[d]
            mag = abs(v)
            if d == 0:
                body = str(mag)
            else:
                var = "t" if d == 1 else f"t^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if i == 0:
                out.append(body if v > 0 else f"-{body}")
            else:
                out.append((" + " if v > 0 else " - ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._c!r})"


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


T = LaurentPolynomial.monomial(1)
ONE = LaurentPolynomial({0: 1})
