"""Knot diagrams of polygons: edge-on orthogonal projection and radial projection.

The radial construction puts the eye at a vertex v_1 on the convex hull and
projects the rest of the polygon onto a sphere around it.  Because the
image lies in an open hemisphere, the central (gnomonic) projection onto
the plane tangent to the hemisphere's pole carries great-circle arcs to
straight segments, so crossings are found with planar segment
intersection.  The two edges at v_1 collapse to points; the closing path
extends the first and last arcs to the equator (as rays in the plane) and
runs along the equator, where nothing else lies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .diagram import Diagram
from .errors import NonGeneric, NotEmbedded
from .geometry import DEFAULT_EPS
from .polygon import as_polygon, is_embedded
from .symmetry import rotate_labels


def crossing_bound(n: int) -> int:
    """Upper bound (n-3)(n-4)/2 on the crossing number of an n-stick knot."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return (n - 3) * (n - 4) // 2


def orthogonal_bound(n: int) -> int:
    """Crossing count bound (n-1)(n-4)/2 for the edge-on projection."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return max(0, (n - 1) * (n - 4) // 2)


@dataclass(frozen=True)
class HullRelabeling:
    pivot_index: int
    supporting_plane_normal: np.ndarray
    margin: float

    def to_dict(self) -> dict:
        return {
            "pivot_index": self.pivot_index,
            "supporting_plane_normal": [float(x) for x in self.supporting_plane_normal],
            "margin": self.margin,
        }


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def _margin(v: np.ndarray, index: int, normal: np.ndarray) -> float:
    others = np.delete(v, index, axis=0) - v[index]
    return float(np.min(others @ normal / np.linalg.norm(others, axis=1)))


def supporting_normal(vertices, index: int, tol: float = DEFAULT_EPS) -> tuple[np.ndarray, float]:
    """A unit normal m with m.(v_j - v_index) > 0 for every other vertex.

    Returns ``(m, margin)`` where margin is the smallest cosine between m
    and the directions to the other vertices.  Raises NonGeneric when no
    candidate normal separates strictly.
    """
    v = np.asarray(vertices, dtype=float)
    p = v[index]
    others = np.delete(v, index, axis=0) - p
    candidates = [-(p - v.mean(axis=0)),
                  (others / np.linalg.norm(others, axis=1)[:, None]).sum(axis=0)]
    best, best_margin = None, -math.inf
    for m in candidates:
        if np.linalg.norm(m) == 0:
            continue
        m = _unit(m)
        margin = _margin(v, index, m)
        if margin > best_margin:
            best, best_margin = m, margin
    if best is None or best_margin <= tol:
        raise NonGeneric(f"vertex {index} has no strict supporting plane")
    return best, best_margin


def hull_relabel(vertices, tol: float = DEFAULT_EPS) -> tuple[np.ndarray, HullRelabeling]:
    """Rotate labels so the first vertex is an extreme point of the hull.

    The pivot is the vertex farthest from the centroid (such a vertex is
    always extreme), lowest index among ties.
    """
    v = as_polygon(vertices, tol)
    if not is_embedded(v, tol).embedded:
        raise NotEmbedded("hull_relabel needs an embedded polygon")
    dist = np.linalg.norm(v - v.mean(axis=0), axis=1)
    pivot = int(np.flatnonzero(dist >= dist.max() * (1 - tol))[0])
    normal, margin = supporting_normal(v, pivot, tol)
    return rotate_labels(v, pivot), HullRelabeling(pivot, normal, margin)


# --- planar strand machinery ---------------------------------------------------

@dataclass
class _Strand:
    name: str
    origin: np.ndarray
    direction: np.ndarray
    length: float  # parameter range is [0, length]; inf for rays
    forward: bool
    depth: Callable[[float], float]

    def travel(self) -> np.ndarray:
        return self.direction if self.forward else -self.direction


def _cross2(a, b) -> float:
    return float(a[0] * b[1] - a[1] * b[0])


def _intersect(s1: _Strand, s2: _Strand, tol: float):
    """Parameters (t, u) of a transversal crossing, None if the strands miss."""
    d1, d2 = s1.direction, s2.direction
    n1, n2 = np.linalg.norm(d1), np.linalg.norm(d2)
    cr = _cross2(d1, d2)
    w = s2.origin - s1.origin
    if abs(cr) <= tol * n1 * n2:
        # Parallel: only a collinear overlap is a problem.
        if abs(_cross2(w, d1)) <= tol * n1 * max(np.linalg.norm(w), n1):
            lo = (w @ d1) / (n1 * n1)
            hi = lo + (d2 @ d1) / (n1 * n1) * min(s2.length, 1e300)
            lo, hi = min(lo, hi), max(lo, hi)
            if hi >= 0 and lo <= s1.length:
                raise NonGeneric(f"strands {s1.name} and {s2.name} overlap")
        return None
    t = _cross2(w, d2) / cr
    u = _cross2(w, d1) / cr

    def status(x, length):
        if x < -tol or x > length + tol:
            return "out"
        if x <= tol or x >= length - tol:
            return "edge"
        return "in"

    st, su = status(t, s1.length), status(u, s2.length)
    if "out" in (st, su):
        return None
    if "edge" in (st, su):
        raise NonGeneric(f"strands {s1.name} and {s2.name} meet at an endpoint")
    return t, u


def _diagram_from_strands(strands: list[_Strand], closed: bool, tol: float) -> Diagram:
    m = len(strands)
    events: list[list[tuple[float, tuple, bool, int]]] = [[] for _ in range(m)]
    for i in range(m):
        for j in range(i + 2, m):
            if closed and i == 0 and j == m - 1:
                continue
            hit = _intersect(strands[i], strands[j], tol)
            if hit is None:
                continue
            t, u = hit
            di, dj = strands[i].depth(t), strands[j].depth(u)
            if abs(di - dj) <= tol * max(abs(di), abs(dj), 1.0):
                raise NonGeneric(f"strands {strands[i].name} and {strands[j].name} meet in space")
            over_i = di < dj
            over, under = (strands[i], strands[j]) if over_i else (strands[j], strands[i])
            sign = 1 if _cross2(over.travel(), under.travel()) > 0 else -1
            key = (i, j)
            events[i].append((t, key, over_i, sign))
            events[j].append((u, key, not over_i, sign))
    sequence = []
    for s, evs in zip(strands, events):
        evs.sort(key=lambda e: e[0], reverse=not s.forward)
        sequence.extend((key, over, sign) for _, key, over, sign in evs)
    return Diagram.from_events(sequence, arcs=[s.name for s in strands])


def _frame(axis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthonormal e1, e2 with e1 x e2 = -axis (counterclockwise seen from -axis)."""
    axis = _unit(axis)
    helper = np.eye(3)[int(np.argmin(np.abs(axis)))]
    e1 = _unit(np.cross(axis, helper))
    e2 = np.cross(e1, axis)
    return e1, e2


def _vertex_name(i: int) -> str:
    return f"v{i + 1}"


def orthogonal_diagram(vertices, tol: float = DEFAULT_EPS) -> Diagram:
    """Project along the first edge v_1 v_2, seen head-on.

    The image is an (n-1)-gon; the viewer sits on the v_1 side, so smaller
    coordinate along v_2 - v_1 means over.
    """
    v = as_polygon(vertices, tol)
    if not is_embedded(v, tol).embedded:
        raise NotEmbedded("projection needs an embedded polygon")
    n = len(v)
    axis = _unit(v[1] - v[0])
    e1, e2 = _frame(axis)
    rel = v - v[0]
    flat = np.stack([rel @ e1, rel @ e2], axis=1)
    depth = rel @ axis
    strands = []
    for i in range(1, n):
        j = (i + 1) % n
        za, zb = float(depth[i]), float(depth[j])
        strands.append(_Strand(
            f"{_vertex_name(i)}{_vertex_name(j)}", flat[i], flat[j] - flat[i], 1.0, True,
            lambda t, za=za, zb=zb: (1 - t) * za + t * zb))
    if np.linalg.norm(flat[2 % n] - flat[1]) <= tol * np.abs(flat).max():
        raise NonGeneric("an edge is parallel to the viewing edge")
    return _diagram_from_strands(strands, closed=True, tol=tol)


def radial_diagram(vertices, tol: float = DEFAULT_EPS, relabel: bool = True) -> Diagram:
    """Diagram seen from a hull vertex, closed along the equator.

    With ``relabel`` the polygon is first rotated by :func:`hull_relabel`;
    otherwise v_1 itself must be extreme.  Strands nearer the eye are over.
    The arcs extending p(v_2 v_3) and p(v_{n-1} v_n) to the equator run
    next to the eye, so they pass over everything (the first over the
    second where they meet).
    """
    v = as_polygon(vertices, tol)
    if relabel:
        v, hull = hull_relabel(v, tol)
        normal = hull.supporting_plane_normal
    else:
        if not is_embedded(v, tol).embedded:
            raise NotEmbedded("projection needs an embedded polygon")
        normal, _ = supporting_normal(v, 0, tol)
    n = len(v)
    rel = v - v[0]
    heights = rel @ normal
    gnomonic = np.zeros_like(rel)
    gnomonic[1:] = rel[1:] / heights[1:, None]
    e1, e2 = _frame(normal)
    flat = np.stack([gnomonic @ e1, gnomonic @ e2], axis=1)

    strands = [_Strand(f"alpha1+{_vertex_name(1)}", flat[1], flat[1] - flat[2],
                       math.inf, False, lambda t: -2.0)]
    for i in range(1, n - 1):
        a, b = rel[i], rel[i + 1]
        ha, hb = float(heights[i]), float(heights[i + 1])

        def depth(tau, a=a, b=b, ha=ha, hb=hb):
            s = tau * ha / (hb * (1 - tau) + tau * ha)
            return float(np.linalg.norm((1 - s) * a + s * b))

        strands.append(_Strand(f"{_vertex_name(i)}{_vertex_name(i + 1)}", flat[i],
                               flat[i + 1] - flat[i], 1.0, True, depth))
    strands.append(_Strand(f"{_vertex_name(n - 1)}+alpha3", flat[n - 1],
                           flat[n - 1] - flat[n - 2], math.inf, True, lambda t: -1.0))
    diagram = _diagram_from_strands(strands, closed=False, tol=tol)
    diagram.arcs.append("equator")
    return diagram
