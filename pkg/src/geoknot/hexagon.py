"""Hexagon invariants: triangle piercing numbers, chirality, curl, region codes.

Vertex labels in docstrings are 1-based (v1..v6) while arrays are indexed
from 0.  The triangle for Delta_i has apex v_i: Delta_2 uses v1 v2 v3,
Delta_4 uses v3 v4 v5 and Delta_6 uses v5 v6 v1.  Only the two edges of
the hexagon disjoint from that triangle can pierce it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateConfiguration,
    DegenerateContact,
    NoEmptySector,
    NonGeneric,
    NotEmbedded,
)
from .geometry import DEFAULT_EPS, orient, segment_triangle_crossing
from .polygon import as_polygon, forget_last, is_embedded

# Delta index -> (triangle vertices, candidate edges), 0-based.
_DELTA_SETUP = {
    2: ((0, 1, 2), ((3, 4), (4, 5))),
    4: ((2, 3, 4), ((5, 0), (0, 1))),
    6: ((4, 5, 0), ((1, 2), (2, 3))),
}


def _hexagon(vertices, tol) -> np.ndarray:
    v = as_polygon(vertices, tol)
    if len(v) != 6:
        raise ValueError(f"expected a hexagon, got {len(v)} vertices")
    return v


def triangle_delta(vertices, i: int, tol: float = DEFAULT_EPS, debug: bool = False) -> int:
    """Algebraic intersection number Delta_i of the hexagon with its i-th triangle.

    With ``debug`` the other four edges are checked too: the two triangle
    sides trivially, the two edges sharing one triangle vertex by making
    sure their far endpoint is off the triangle's plane.
    """
    if i not in _DELTA_SETUP:
        raise ValueError("i must be 2, 4 or 6")
    v = _hexagon(vertices, tol)
    tri, edges = _DELTA_SETUP[i]
    t0, t1, t2 = (v[k] for k in tri)
    total = 0
    try:
        for a, b in edges:
            total += segment_triangle_crossing(v[a], v[b], t0, t1, t2, tol)
    except DegenerateContact as exc:
        raise DegenerateConfiguration(f"Delta_{i}: {exc}") from None
    if debug:
        for a in range(6):
            b = (a + 1) % 6
            if (a, b) in edges or {a, b} <= set(tri):
                continue
            far = b if a in tri else a
            if orient(t0, t1, t2, v[far], tol) == 0:
                raise DegenerateConfiguration(f"Delta_{i}: edge v{a + 1}v{b + 1} lies in the triangle's plane")
    return total


def deltas(vertices, tol: float = DEFAULT_EPS) -> tuple[int, int, int]:
    return tuple(triangle_delta(vertices, i, tol) for i in (2, 4, 6))


def chirality(vertices, tol: float = DEFAULT_EPS) -> int:
    """Delta(H) = Delta_2 Delta_4 Delta_6."""
    d2, d4, d6 = deltas(vertices, tol)
    return d2 * d4 * d6


def curl(vertices, tol: float = DEFAULT_EPS) -> int:
    """Sign of (v3 - v1) x (v5 - v1) . (v2 - v1); 0 when v1, v2, v3, v5 are coplanar."""
    v = _hexagon(vertices, tol)
    return orient(v[0], v[2], v[4], v[1], tol)


_CLASS_NAMES = {0: "unknot", 1: "right-trefoil", -1: "left-trefoil"}


@dataclass(frozen=True)
class JointClass:
    chirality: int
    curlpart: int

    @property
    def knot(self) -> str:
        return _CLASS_NAMES[self.chirality]

    def as_tuple(self) -> tuple[int, int]:
        return (self.chirality, self.curlpart)

    def to_dict(self) -> dict:
        return {"chirality": self.chirality, "curl": self.curlpart, "class": self.knot}


#: The five values the joint chirality-curl takes on embedded hexagons.
JOINT_CLASSES = {(0, 0), (1, 1), (1, -1), (-1, 1), (-1, -1)}


def joint_class(vertices, tol: float = DEFAULT_EPS) -> JointClass:
    """(Delta, Delta^2 Curl) of an embedded hexagon."""
    v = _hexagon(vertices, tol)
    if not is_embedded(v, tol).embedded:
        raise NotEmbedded("joint_class needs an embedded hexagon")
    d = chirality(v, tol)
    c = d * d * curl(v, tol) if d else 0
    if d and c == 0:
        raise DegenerateConfiguration("v1, v2, v3, v5 are coplanar")
    return JointClass(d, c)


# --- region codes ----------------------------------------------------------------

@dataclass(frozen=True)
class RegionCode:
    """Order of the half-planes P_2, P_3, ... around the axis, from the empty sector."""

    word: tuple[int, ...]

    def __str__(self):
        return "-".join(str(k) for k in self.word)

    @classmethod
    def parse(cls, text: str) -> RegionCode:
        return cls(tuple(int(k) for k in text.split("-")))

    def mirror(self) -> RegionCode:
        return RegionCode(self.word[::-1])


def _wrap(angle: float) -> float:
    """Reduce to (-pi, pi]."""
    return angle - 2 * math.pi * math.ceil((angle - math.pi) / (2 * math.pi))


def angular_positions(vertices, tol: float = DEFAULT_EPS) -> np.ndarray:
    """Unwrapped angles of the free vertices about the axis from the first to the last vertex.

    Consecutive free vertices are joined by an edge that misses the axis,
    so it sweeps the minor arc between their angles; the returned angles
    accumulate those minor-arc steps.  Angles increase counterclockwise
    as seen from the tip of the axis.
    """
    q = as_polygon(vertices, tol)
    m = len(q)
    if m < 4:
        raise ValueError("region codes need at least 4 vertices")
    axis = q[-1] - q[0]
    axis_len = np.linalg.norm(axis)
    axis = axis / axis_len
    helper = np.eye(3)[int(np.argmin(np.abs(axis)))]
    e1 = np.cross(axis, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(axis, e1)
    free = q[1:-1] - q[0]
    radial = free - np.outer(free @ axis, axis)
    if np.any(np.linalg.norm(radial, axis=1) <= tol * axis_len):
        raise NonGeneric("a free vertex lies on the axis")
    for k in range(1, m - 2):
        if orient(q[0], q[-1], q[k], q[k + 1], tol) == 0:
            raise NonGeneric(f"edge v{k + 1}v{k + 2} is coplanar with the axis")
    theta = np.arctan2(radial @ e2, radial @ e1)
    phi = [float(theta[0])]
    for k in range(1, len(theta)):
        phi.append(phi[-1] + _wrap(float(theta[k] - theta[k - 1])))
    return np.array(phi)


def region_code(vertices, tol: float = DEFAULT_EPS) -> RegionCode:
    """Region code of an (n-1)-gon Q: half-planes through the free vertices, bounded by v1 v_{n-1}."""
    phi = angular_positions(vertices, tol)
    if phi.max() - phi.min() >= 2 * math.pi - tol:
        raise NoEmptySector("the free vertices wind all the way around the axis")
    ordered = np.sort(phi)
    if np.any(np.diff(ordered) <= tol):
        raise NonGeneric("two half-planes coincide")
    return RegionCode(tuple(int(k) + 2 for k in np.argsort(phi)))


def region_code_hex(vertices, tol: float = DEFAULT_EPS) -> RegionCode:
    """Region of a hexagon: the code of its pentagon g(H) about the line v1 v5."""
    v = _hexagon(vertices, tol)
    return region_code(forget_last(v), tol)
