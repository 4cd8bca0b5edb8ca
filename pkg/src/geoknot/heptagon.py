"""Heptagon invariants: the plane-side signs Theta_3, Theta_6, the triangle
intersection numbers I_34, I_45, I_56, the Xi invariant, region codes and the
permutahedron graph of heptagonal regions.

Labels in docstrings are 1-based (v1..v7); arrays are indexed from 0.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .errors import DegenerateConfiguration, DegenerateContact, NonGeneric, NotEmbedded
from .geometry import DEFAULT_EPS, orient, segment_triangle_crossing
from .hexagon import RegionCode, region_code
from .polygon import as_polygon, forget_last, is_embedded


def _heptagon(vertices, tol) -> np.ndarray:
    v = as_polygon(vertices, tol)
    if len(v) != 7:
        raise ValueError(f"expected a heptagon, got {len(v)} vertices")
    return v


def theta_signs(vertices, tol: float = DEFAULT_EPS) -> tuple[int, int]:
    """(Theta_3, Theta_6).

    Theta_3 is the sign of (v7 - v1) x (v2 - v1) . (v3 - v1) and Theta_6 the
    sign of (v6 - v1) x (v7 - v1) . (v2 - v1); they agree exactly when v3 and
    v6 lie on the same side of the plane through v7, v1, v2.
    """
    v = _heptagon(vertices, tol)
    return orient(v[0], v[6], v[1], v[2], tol), orient(v[0], v[5], v[6], v[1], tol)


def triangle_intersections(vertices, tol: float = DEFAULT_EPS) -> tuple[int, int, int]:
    """Signed crossings (I_34, I_45, I_56) of v3v4, v4v5, v5v6 with the disc v7 v1 v2."""
    v = _heptagon(vertices, tol)
    t0, t1, t2 = v[6], v[0], v[1]
    out = []
    for a in (2, 3, 4):
        try:
            out.append(segment_triangle_crossing(v[a], v[a + 1], t0, t1, t2, tol))
        except DegenerateContact as exc:
            raise DegenerateConfiguration(f"I_{a + 1}{a + 2}: {exc}") from None
    return tuple(out)


@dataclass(frozen=True)
class XiReport:
    theta3: int
    theta6: int
    i34: int
    i45: int
    i56: int
    xi: int
    figure_eight_consistent: bool

    def to_dict(self) -> dict:
        return {
            "theta3": self.theta3, "theta6": self.theta6,
            "i34": self.i34, "i45": self.i45, "i56": self.i56,
            "xi": self.xi, "figure_eight_consistent": self.figure_eight_consistent,
        }


def _exactly_one_nonzero(*values) -> bool:
    return sum(1 for x in values if x) == 1


def xi(vertices, tol: float = DEFAULT_EPS) -> XiReport:
    """Xi = 1/2 (T3 + T6)(I34 + I45 + I56) + 1/2 (T3 - T6)(I34 - I56).

    Defined for every generic embedded heptagon, but only meaningful (and
    only an invariant) on figure-eight knots.  ``figure_eight_consistent``
    records whether the intersection pattern expected of a figure-eight
    holds: exactly one of I34, I45, I56 non-zero when T3 = T6, exactly one
    of I34, I56 non-zero when T3 = -T6.
    """
    v = _heptagon(vertices, tol)
    if not is_embedded(v, tol).embedded:
        raise NotEmbedded("xi needs an embedded heptagon")
    t3, t6 = theta_signs(v, tol)
    if t3 == 0 or t6 == 0:
        raise NonGeneric("a vertex lies in the plane of v7, v1, v2")
    i34, i45, i56 = triangle_intersections(v, tol)
    value = ((t3 + t6) * (i34 + i45 + i56) + (t3 - t6) * (i34 - i56)) // 2
    if t3 == t6:
        consistent = _exactly_one_nonzero(i34, i45, i56)
    else:
        consistent = _exactly_one_nonzero(i34, i56)
    consistent = consistent and value in (-1, 1)
    return XiReport(t3, t6, i34, i45, i56, value, consistent)


def region_code_hept(vertices, tol: float = DEFAULT_EPS) -> RegionCode:
    """Order of the half-planes P_2..P_5 bounded by the line through v1 and v6."""
    v = _heptagon(vertices, tol)
    return region_code(forget_last(v), tol)


# --- permutahedron ----------------------------------------------------------------

@dataclass(frozen=True)
class PermutahedronGraph:
    nodes: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def neighbors(self, node) -> list[tuple[int, ...]]:
        node = tuple(node)
        return [b if a == node else a for a, b in self.edges if node in (a, b)]

    def degree(self, node) -> int:
        return len(self.neighbors(node))

    def faces(self) -> dict[int, list[tuple[tuple[int, ...], ...]]]:
        """Cycles that bound faces, by length.

        Every chordless cycle of length at most 6 is listed; on this graph
        these are exactly the square and hexagonal faces.
        """
        g = nx.Graph(self.edges)
        found: dict[int, list] = {}
        for cycle in nx.chordless_cycles(g, length_bound=6):
            found.setdefault(len(cycle), []).append(tuple(cycle))
        return {k: sorted(v) for k, v in sorted(found.items())}

    def to_dot(self) -> str:
        lines = ["graph permutahedron {"]
        for a, b in self.edges:
            lines.append(f'  "{_word(a)}" -- "{_word(b)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        faces = self.faces()
        return {
            "nodes": [_word(n) for n in self.nodes],
            "edges": [[_word(a), _word(b)] for a, b in self.edges],
            "squares": len(faces.get(4, [])),
            "hexagons": len(faces.get(6, [])),
        }


def _word(node) -> str:
    return "-".join(str(k) for k in node)


def permutahedron(labels=(2, 3, 4, 5)) -> PermutahedronGraph:
    """Orderings of ``labels``, joined when they differ by swapping two neighbors."""
    nodes = tuple(itertools.permutations(labels))
    edges = []
    for node in nodes:
        for p in range(len(labels) - 1):
            other = list(node)
            other[p], other[p + 1] = other[p + 1], other[p]
            other = tuple(other)
            if node < other:
                edges.append((node, other))
    return PermutahedronGraph(nodes, tuple(edges))
