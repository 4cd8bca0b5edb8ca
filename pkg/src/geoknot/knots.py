"""Knot identification from diagrams: Kauffman bracket, Jones polynomial, determinant.

The bracket uses the conventions

    <X[a,b,c,d]> = A <P[a,b] P[c,d]> + A^-1 <P[a,d] P[b,c]>,
    <loop  U  D> = (-A^2 - A^-2) <D>,        <unknot> = 1,

so a positive kink multiplies the bracket by -A^3, and the Jones polynomial
is ``(-A^3)^(-writhe) <D>`` with ``A = t^(-1/4)``.  With these conventions
the right-handed (positive) trefoil has ``V = t + t^3 - t^4``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram
from .errors import TooManyCrossings
from .laurent import LaurentPolynomial

MAX_CROSSINGS = 16

_DELTA = {2: -1, -2: -1}


def _mul(p: dict, q: dict) -> dict:
    out: dict[int, int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _delta_power(k: int, cache={0: {0: 1}}) -> dict:
    if k not in cache:
        cache[k] = _mul(_delta_power(k - 1), _DELTA)
    return cache[k]


def _join(partner: dict, x: int, y: int) -> int:
    """Add the arc x--y to a partial smoothing; return the number of loops closed."""
    if x == y:
        return 1
    if x in partner:
        px = partner.pop(x)
        del partner[px]
        if px == y:
            return 1
        x = px
    if y in partner:
        py = partner.pop(y)
        del partner[py]
        if py == x:
            return 1
        y = py
    partner[x] = y
    partner[y] = x
    return 0


def _check_size(diagram: Diagram, limit: int | None):
    limit = MAX_CROSSINGS if limit is None else limit
    if diagram.crossing_count > limit:
        raise TooManyCrossings(
            f"{diagram.crossing_count} crossings exceeds the limit of {limit}")


def kauffman_bracket(diagram: Diagram, max_crossings: int | None = None) -> LaurentPolynomial:
    """Bracket polynomial in A, normalized so the crossingless diagram gives 1.

    Sums over all 2^c smoothings, but smoothings that agree on how the
    crossings processed so far connect the remaining open edges are merged,
    so the work grows with the diagram's width rather than with 2^c.
    """
    _check_size(diagram, max_crossings)
    pd = diagram.pd_code
    if not pd:
        return LaurentPolynomial({0: 1}, "A")
    states: dict[frozenset, dict[int, int]] = {frozenset(): {0: 1}}
    for a, b, c, d in pd:
        nxt: dict[frozenset, dict[int, int]] = {}
        for key, poly in states.items():
            for shift, (p1, p2) in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
                partner = dict(key)
                loops = _join(partner, *p1) + _join(partner, *p2)
                if not partner:
                    loops -= 1
                term = _mul({e + shift: v for e, v in poly.items()}, _delta_power(loops))
                k = frozenset(partner.items())
                acc = nxt.setdefault(k, {})
                for e, v in term.items():
                    acc[e] = acc.get(e, 0) + v
        states = {k: {e: v for e, v in p.items() if v} for k, p in nxt.items()}
    result = states.get(frozenset(), {})
    return LaurentPolynomial(result, "A")


def jones_from_bracket(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    """Normalize by (-A^3)^(-writhe) and substitute A = t^(-1/4)."""
    sign = -1 if writhe % 2 else 1
    f = {e - 3 * writhe: sign * c for e, c in bracket.terms.items()}
    return LaurentPolynomial(f, "A").substitute_power(-1).scale_exponents_down(4, "t")


def jones(diagram: Diagram, max_crossings: int | None = None) -> LaurentPolynomial:
    return jones_from_bracket(kauffman_bracket(diagram, max_crossings), diagram.writhe)


def determinant(diagram: Diagram, max_crossings: int | None = None) -> int:
    """|V(-1)|, the knot determinant."""
    return abs(jones(diagram, max_crossings).evaluate_at_minus_one())


def _poly(*pairs) -> LaurentPolynomial:
    return LaurentPolynomial(dict(pairs), "t")


# Jones polynomials of the base chirality of each knot type: the closure of
# the braid words listed in tests/test_knots.py, which recomputes them.
# Mirrors get a leading "-" on every summand.
_TREFOIL = _poly((1, 1), (3, 1), (4, -1))
_BASE = {
    "3_1": _TREFOIL,
    "4_1": _poly((-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)),
    "5_1": _poly((2, 1), (4, 1), (5, -1), (6, 1), (7, -1)),
    "5_2": _poly((1, 1), (2, -1), (3, 2), (4, -1), (5, 1), (6, -1)),
    "6_1": _poly((-2, 1), (-1, -1), (0, 2), (1, -2), (2, 1), (3, -1), (4, 1)),
    "6_2": _poly((-1, 1), (0, -1), (1, 2), (2, -2), (3, 2), (4, -2), (5, 1)),
    "6_3": _poly((-3, -1), (-2, 2), (-1, -2), (0, 3), (1, -2), (2, 2), (3, -1)),
    "3_1#3_1": _TREFOIL * _TREFOIL,
    "3_1#-3_1": _TREFOIL * _TREFOIL.mirror(),
    "8_19": _poly((3, 1), (5, 1), (8, -1)),
    "8_20": _poly((-5, -1), (-4, 1), (-3, -1), (-2, 2), (-1, -1), (0, 2), (1, -1)),
}


def mirror_name(name: str) -> str:
    """Name of the mirror image: ``3_1`` <-> ``-3_1``, ``3_1#3_1`` <-> ``-3_1#-3_1``."""
    if name in ("unknot", "unknown"):
        return name
    return "#".join(p[1:] if p.startswith("-") else "-" + p for p in name.split("#"))


#: Names identify() may return besides "unknown".
KNOT_TYPES: dict[str, LaurentPolynomial] = {"unknot": _poly((0, 1))}
for _name, _v in _BASE.items():
    KNOT_TYPES[_name] = _v
    if _v.mirror() != _v:
        KNOT_TYPES[mirror_name(_name)] = _v.mirror()

UNKNOWN = "unknown"

DISPLAY_NAMES = {
    "unknot": "unknot",
    "3_1": "right-trefoil",
    "-3_1": "left-trefoil",
    "4_1": "figure-eight",
}


@dataclass(frozen=True)
class Identification:
    name: str
    jones: LaurentPolynomial
    determinant: int
    crossings: int

    def to_dict(self) -> dict:
        return {
            "type": self.name,
            "display": DISPLAY_NAMES.get(self.name, self.name),
            "jones": str(self.jones),
            "jones_terms": self.jones.to_json(),
            "determinant": self.determinant,
            "crossings": self.crossings,
        }


_LOOKUP = {(v, abs(v.evaluate_at_minus_one())): name for name, v in KNOT_TYPES.items()}


def identify(diagram: Diagram, max_crossings: int | None = None) -> Identification:
    """Match the (Jones, determinant) certificate against the frozen table."""
    v = jones(diagram, max_crossings)
    det = abs(v.evaluate_at_minus_one())
    name = _LOOKUP.get((v, det), UNKNOWN)
    return Identification(name, v, det, diagram.crossing_count)
