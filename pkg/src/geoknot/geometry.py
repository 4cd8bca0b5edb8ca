"""Tolerance-guarded orientation predicates and segment/triangle primitives.

Every sign predicate normalizes its determinant by the product of the
constituent vector norms before comparing with ``eps``, so results do not
depend on the overall scale of the input.  Degenerate situations are
reported (a zero sign, ``SegmentContact.DEGENERATE`` or an exception) and
never resolved by an implicit tie-break.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from .errors import DegenerateContact, ZeroLengthSegment

DEFAULT_EPS = 1e-9


class SegmentContact(enum.Enum):
    DISJOINT = "Disjoint"
    CROSSING = "Crossing"
    DEGENERATE = "Degenerate"


def check_tol(tol: float) -> float:
    tol = float(tol)
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tolerance must lie in (0, 1), got {tol!r}")
    return tol


def as_point(p) -> np.ndarray:
    """Coerce ``p`` to a finite float vector of length 3."""
    a = np.asarray(p, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("coordinates must be finite")
    return a


def _sign(value: float, scale: float, tol: float) -> int:
    if abs(value) <= tol * scale:
        return 0
    return 1 if value > 0 else -1


def triple(a, b, c, d) -> float:
    """Raw determinant (b - a) x (c - a) . (d - a)."""
    a = np.asarray(a, dtype=float)
    u, v, w = np.asarray(b) - a, np.asarray(c) - a, np.asarray(d) - a
    return float(
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def orient(a, b, c, d, tol: float = DEFAULT_EPS) -> int:
    """Sign of ``(b - a) x (c - a) . (d - a)``.

    Returns 0 when the determinant is within ``tol`` times the product of
    the three edge lengths, i.e. when the four points are coplanar to
    relative precision ``tol``.
    """
    a = np.asarray(a, dtype=float)
    u, v, w = np.asarray(b) - a, np.asarray(c) - a, np.asarray(d) - a
    scale = math.sqrt(u @ u) * math.sqrt(v @ v) * math.sqrt(w @ w)
    return _sign(triple(a, b, c, d), scale, tol)


def _separates(a, b, c, d, tol: float) -> int:
    """-1 if line ab strictly separates c from d, +1 if same side, 0 if unsure.

    Uses ``(b-a)x(c-a) . (b-a)x(d-a)``, the planar separation test for
    four (near) coplanar points.
    """
    a = np.asarray(a, dtype=float)
    u = np.asarray(b) - a
    x1 = np.cross(u, np.asarray(c) - a)
    x2 = np.cross(u, np.asarray(d) - a)
    scale = (u @ u) * np.linalg.norm(np.asarray(c) - a) * np.linalg.norm(np.asarray(d) - a)
    return _sign(float(x1 @ x2), scale, tol)


def segment_distance(p1, p2, q1, q2) -> float:
    """Euclidean distance between closed segments p1p2 and q1q2."""
    return float(segment_distances(
        np.asarray(p1, float)[None], np.asarray(p2, float)[None],
        np.asarray(q1, float)[None], np.asarray(q2, float)[None])[0])


def segment_distances(p1, p2, q1, q2) -> np.ndarray:
    """Vectorized segment-segment distance for arrays of shape (m, 3)."""
    d1 = p2 - p1
    d2 = q2 - q1
    r = p1 - q1
    a = np.einsum("ij,ij->i", d1, d1)
    e = np.einsum("ij,ij->i", d2, d2)
    f = np.einsum("ij,ij->i", d2, r)
    c = np.einsum("ij,ij->i", d1, r)
    b = np.einsum("ij,ij->i", d1, d2)
    denom = a * e - b * b
    # A zero-length segment is a point; the safe divisors keep the
    # parameters finite and the point case falls out of the clamping below.
    a_safe = np.where(a > 0, a, 1.0)
    e_safe = np.where(e > 0, e, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(denom > 1e-14 * a * e, np.clip((b * f - c * e) / np.where(denom > 0, denom, 1.0), 0.0, 1.0), 0.0)
        t = np.where(e > 0, (b * s + f) / e_safe, 0.0)
        low = (t < 0.0) | (e == 0)
        high = t > 1.0
        s = np.where(low, np.clip(-c / a_safe, 0.0, 1.0), s)
        s = np.where(high, np.clip((b - c) / a_safe, 0.0, 1.0), s)
        t = np.clip(t, 0.0, 1.0)
    diff = (p1 + d1 * s[:, None]) - (q1 + d2 * t[:, None])
    return np.sqrt(np.einsum("ij,ij->i", diff, diff))


def segments_intersect(p1, p2, q1, q2, tol: float = DEFAULT_EPS) -> SegmentContact:
    """Classify the relative position of segments p1p2 and q1q2.

    ``CROSSING`` requires the four points to be coplanar and each supporting
    line to strictly separate the other segment's endpoints.  Segments
    farther apart than ``tol`` times the longer length are ``DISJOINT``;
    anything else in contact (touching, overlap) is ``DEGENERATE``.
    """
    p1, p2, q1, q2 = (as_point(x) for x in (p1, p2, q1, q2))
    lp = float(np.linalg.norm(p2 - p1))
    lq = float(np.linalg.norm(q2 - q1))
    scale = max(lp, lq)
    if lp <= tol * scale or lq <= tol * scale:
        raise ZeroLengthSegment("segment endpoints coincide")
    return _classify_close_pair(p1, p2, q1, q2, segment_distance(p1, p2, q1, q2), scale, tol)


def _classify_close_pair(p1, p2, q1, q2, dist, scale, tol) -> SegmentContact:
    if dist > tol * scale:
        return SegmentContact.DISJOINT
    if orient(p1, p2, q1, q2, tol) == 0:
        if _separates(p1, p2, q1, q2, tol) < 0 and _separates(q1, q2, p1, p2, tol) < 0:
            return SegmentContact.CROSSING
    return SegmentContact.DEGENERATE


def segment_triangle_crossing(e0, e1, t0, t1, t2, tol: float = DEFAULT_EPS) -> int:
    """Signed crossing of the open segment e0e1 with the open triangle t0t1t2.

    +1 when the segment passes through the triangle along the right-hand
    normal ``(t1-t0) x (t2-t0)``, -1 against it, 0 when it misses.

    Raises DegenerateContact if the segment touches the triangle's boundary,
    has an endpoint on the closed triangle, or lies in the triangle's plane
    while meeting it.
    """
    e0, e1, t0, t1, t2 = (as_point(x) for x in (e0, e1, t0, t1, t2))
    if triangle_is_degenerate(t0, t1, t2, tol):
        raise DegenerateContact("triangle is degenerate")
    s0 = orient(t0, t1, t2, e0, tol)
    s1 = orient(t0, t1, t2, e1, tol)
    if s0 == s1 and s0 != 0:
        return 0
    if s0 == 0 or s1 == 0:
        # An endpoint (or the whole segment) lies in the triangle's plane.
        if _touches_triangle(e0, e1, t0, t1, t2, tol):
            raise DegenerateContact("segment meets the triangle inside its plane")
        return 0
    sides = [orient(e0, e1, a, b, tol) for a, b in ((t0, t1), (t1, t2), (t2, t0))]
    if (min(sides) < 0 < max(sides)):
        return 0
    if 0 in sides:
        raise DegenerateContact("segment meets the triangle boundary")
    return 1 if s1 > s0 else -1


def triangle_is_degenerate(t0, t1, t2, tol: float = DEFAULT_EPS) -> bool:
    """True when the triangle's vertices are collinear to relative precision tol."""
    u, v = np.asarray(t1, float) - t0, np.asarray(t2, float) - t0
    return float(np.linalg.norm(np.cross(u, v))) <= tol * float(np.linalg.norm(u) * np.linalg.norm(v))


def _touches_triangle(e0, e1, t0, t1, t2, tol) -> bool:
    """Whether segment e0e1 comes within tolerance of the closed triangle."""
    scale = max(np.linalg.norm(t1 - t0), np.linalg.norm(t2 - t0), np.linalg.norm(e1 - e0))
    limit = tol * scale
    for a, b in ((t0, t1), (t1, t2), (t2, t0)):
        if segment_distance(e0, e1, a, b) <= limit:
            return True
    n = np.cross(t1 - t0, t2 - t0)
    n /= np.linalg.norm(n)
    for p in (e0, e1):
        if abs((p - t0) @ n) <= limit and _inside_projected(p, t0, t1, t2, n):
            return True
    # Segment crossing the triangle's interior within the plane hits an edge,
    # which the boundary test above already caught.
    return False


def _inside_projected(p, t0, t1, t2, n) -> bool:
    signs = [np.cross(b - a, p - a) @ n for a, b in ((t0, t1), (t1, t2), (t2, t0))]
    return min(signs) >= 0 or max(signs) <= 0


def nonadjacent_pairs(n: int) -> list[tuple[int, int]]:
    """Index pairs (i, j), i < j, of edges v_i v_{i+1} that share no vertex.

    There are n(n-3)/2 of them for n >= 4.
    """
    pairs = []
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            pairs.append((i, j))
    return pairs


def nonadjacent_min_distance(vertices) -> float:
    """Minimum distance between non-adjacent edges of a closed polygon."""
    v = np.asarray(vertices, dtype=float)
    n = len(v)
    if n < 4:
        raise ValueError("need at least 4 vertices")
    return float(pair_distances(v).min())


def pair_distances(v: np.ndarray) -> np.ndarray:
    """Distances for every pair in ``nonadjacent_pairs(len(v))``, in order."""
    n = len(v)
    idx = np.array(nonadjacent_pairs(n))
    i, j = idx[:, 0], idx[:, 1]
    return segment_distances(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])
