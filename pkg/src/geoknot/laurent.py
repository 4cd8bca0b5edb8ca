"""Integer Laurent polynomials in one variable."""

from __future__ import annotations

from collections.abc import Mapping


class LaurentPolynomial:
    """Exact polynomial with integer coefficients and integer exponents.

    Zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self.var = var

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = "t") -> LaurentPolynomial:
        return cls({exponent: coefficient}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other}, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other}, self.var)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms.items()}, self.var)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("inverse needs a unit coefficient")
            return LaurentPolynomial({e * k: c ** abs(k)}, self.var)
        out = LaurentPolynomial({0: 1}, self.var)
        for _ in range(k):
            out = out * self
        return out

    def substitute_power(self, factor: int, var: str | None = None) -> LaurentPolynomial:
        """Replace x by y**factor (exponents multiplied by ``factor``)."""
        return LaurentPolynomial({e * factor: c for e, c in self._terms.items()}, var or self.var)

    def scale_exponents_down(self, divisor: int, var: str | None = None) -> LaurentPolynomial:
        """Inverse of :meth:`substitute_power`; every exponent must divide evenly."""
        if any(e % divisor for e in self._terms):
            raise ValueError(f"exponents {sorted(self._terms)} not divisible by {divisor}")
        return LaurentPolynomial({e // divisor: c for e, c in self._terms.items()}, var or self.var)

    def mirror(self) -> LaurentPolynomial:
        return LaurentPolynomial({-e: c for e, c in self._terms.items()}, self.var)

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self._terms.items())

    def evaluate_at_minus_one(self) -> int:
        return sum(c if e % 2 == 0 else -c for e, c in self._terms.items())

    def span(self) -> tuple[int, int]:
        if not self._terms:
            return (0, 0)
        return (min(self._terms), max(self._terms))

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping, var: str = "t") -> LaurentPolynomial:
        return cls({int(e): int(c) for e, c in data.items()}, var)

    def __repr__(self):
        return f"LaurentPolynomial({self.terms!r}, var={self.var!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text
