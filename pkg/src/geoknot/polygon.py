"""Polygons in 3-space: embeddedness, edge lengths, the forget map, I/O.

A polygon is an ``(n, 3)`` float array whose rows are the vertices
v_1, ..., v_n in order; row 0 is the distinguished first vertex and the
row order fixes the orientation.  Functions accept anything numpy can turn
into such an array.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvalidPolygon, PerturbationFailed, PolygonTooSmall
from .geometry import (
    DEFAULT_EPS,
    SegmentContact,
    _classify_close_pair,
    nonadjacent_pairs,
    pair_distances,
    segment_distance,
)

PERTURB_ATTEMPTS = 64


class EmbeddingStatus(enum.Enum):
    EMBEDDED = "Embedded"
    SINGULAR = "Singular"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class EmbeddingReport:
    status: EmbeddingStatus
    witness: tuple[int, int] | None
    clearance: float
    pairs_checked: int = 0

    @property
    def embedded(self) -> bool:
        return self.status is EmbeddingStatus.EMBEDDED

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": list(self.witness) if self.witness is not None else None,
            "clearance": self.clearance,
            "pairs_checked": self.pairs_checked,
        }


def as_polygon(vertices, tol: float = DEFAULT_EPS) -> np.ndarray:
    """Validate and return an ``(n, 3)`` float array.

    Rejects fewer than three vertices, non-finite coordinates and repeated
    consecutive vertices (relative to the polygon's diameter).
    """
    v = np.array(vertices, dtype=float)
    if v.ndim != 2 or v.shape[1] != 3:
        raise InvalidPolygon(f"expected an (n, 3) array of vertices, got shape {v.shape}")
    if len(v) < 3:
        raise PolygonTooSmall(f"a polygon needs at least 3 vertices, got {len(v)}")
    if not np.all(np.isfinite(v)):
        raise InvalidPolygon("vertex coordinates must be finite")
    lengths = edge_lengths(v)
    if lengths.min() <= tol * max(lengths.max(), 1e-300):
        raise InvalidPolygon("consecutive vertices coincide")
    return v


def edge_lengths(vertices) -> np.ndarray:
    """Lengths |v_1 - v_2|, ..., |v_n - v_1| in order."""
    v = np.asarray(vertices, dtype=float)
    return np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)


def is_equilateral(vertices, target: float = 1.0, tol: float = DEFAULT_EPS) -> bool:
    if target <= 0:
        raise ValueError("target edge length must be positive")
    return bool(np.all(np.abs(edge_lengths(vertices) - target) <= tol * target))


def is_embedded(vertices, tol: float = DEFAULT_EPS) -> EmbeddingReport:
    """Test whether the polygon avoids the discriminant.

    Every one of the n(n-3)/2 non-adjacent edge pairs is classified; the
    polygon is ``EMBEDDED`` when all are disjoint, ``SINGULAR`` when some
    pair properly crosses and ``DEGENERATE`` when a pair only touches.  The
    witness is the first offending pair of edge indices (edge i joins
    vertex i to vertex i + 1, zero-based).
    """
    v = as_polygon(vertices, tol)
    n = len(v)
    if n == 3:
        return _triangle_report(v, tol)
    pairs = nonadjacent_pairs(n)
    dist = pair_distances(v)
    lengths = edge_lengths(v)
    degenerate = None
    for k in np.flatnonzero(dist <= tol * np.maximum(lengths[[i for i, _ in pairs]],
                                                      lengths[[j for _, j in pairs]])):
        i, j = pairs[k]
        scale = max(lengths[i], lengths[j])
        contact = _classify_close_pair(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n],
                                       float(dist[k]), scale, tol)
        if contact is SegmentContact.CROSSING:
            return EmbeddingReport(EmbeddingStatus.SINGULAR, (i, j), float(dist.min()), len(pairs))
        if degenerate is None:
            degenerate = (i, j)
    if degenerate is not None:
        return EmbeddingReport(EmbeddingStatus.DEGENERATE, degenerate, float(dist.min()), len(pairs))
    return EmbeddingReport(EmbeddingStatus.EMBEDDED, None, float(dist.min()), len(pairs))


def _triangle_report(v: np.ndarray, tol: float) -> EmbeddingReport:
    # No non-adjacent pairs exist; clearance is the smallest vertex-to-opposite-edge distance.
    gaps = [segment_distance(v[k], v[k], v[(k + 1) % 3], v[(k + 2) % 3]) for k in range(3)]
    clearance = min(gaps)
    if clearance <= tol * edge_lengths(v).max():
        k = int(np.argmin(gaps))
        return EmbeddingReport(EmbeddingStatus.DEGENERATE, ((k + 2) % 3, k), clearance, 0)
    return EmbeddingReport(EmbeddingStatus.EMBEDDED, None, clearance, 0)


def clearance(vertices) -> float:
    v = np.asarray(vertices, dtype=float)
    if len(v) == 3:
        return _triangle_report(v, DEFAULT_EPS).clearance
    return float(pair_distances(v).min())


def forget_last(vertices) -> np.ndarray:
    """Drop the last vertex.  The result may fail ``is_embedded``."""
    v = np.asarray(vertices, dtype=float)
    if len(v) < 4:
        raise PolygonTooSmall("forgetting a vertex needs n >= 4")
    return v[:-1].copy()


def coplanar_quadruples(vertices, tol: float = DEFAULT_EPS) -> list[tuple[int, ...]]:
    """Vertex 4-subsets whose normalized orientation falls inside tolerance."""
    v = np.asarray(vertices, dtype=float)
    if len(v) < 4:
        return []
    quads = np.array(list(itertools.combinations(range(len(v)), 4)))
    a = v[quads[:, 0]]
    u, w, z = v[quads[:, 1]] - a, v[quads[:, 2]] - a, v[quads[:, 3]] - a
    det = np.einsum("ij,ij->i", np.cross(u, w), z)
    scale = np.linalg.norm(u, axis=1) * np.linalg.norm(w, axis=1) * np.linalg.norm(z, axis=1)
    return [tuple(int(x) for x in q) for q in quads[np.abs(det) <= tol * scale]]


def is_generic(vertices, tol: float = DEFAULT_EPS) -> bool:
    """Embedded with no four vertices coplanar.

    This covers the orientation tests behind the hexagon and heptagon
    invariants.  Projections can still meet rarer coincidences (three
    strands through one point, say), which they report as NonGeneric.
    """
    return is_embedded(vertices, tol).embedded and not coplanar_quadruples(vertices, tol)


def perturb_generic(vertices, magnitude: float, rng_seed=None, tol: float = DEFAULT_EPS) -> np.ndarray:
    """Move each vertex by a random vector of length at most ``magnitude``.

    Retries with fresh randomness until the result is generic (see
    :func:`is_generic`).  ``magnitude`` must stay below a quarter of the
    clearance so the result stays in the same component of embedded
    polygons.
    """
    v = as_polygon(vertices, tol)
    if magnitude < 0:
        raise ValueError("magnitude must be non-negative")
    if magnitude == 0:
        return v.copy()
    report = is_embedded(v, tol)
    if not report.embedded:
        raise ValueError("perturb_generic needs an embedded polygon")
    if magnitude >= report.clearance / 4:
        raise ValueError(
            f"magnitude {magnitude} must be below clearance/4 = {report.clearance / 4}")
    rng = np.random.default_rng(rng_seed)
    for _ in range(PERTURB_ATTEMPTS):
        out = v + random_ball(rng, len(v), magnitude)
        if is_generic(out, tol):
            return out
    raise PerturbationFailed(f"no generic perturbation after {PERTURB_ATTEMPTS} attempts")


def random_ball(rng: np.random.Generator, count: int, radius: float) -> np.ndarray:
    """``count`` points uniform in the ball of the given radius."""
    d = rng.normal(size=(count, 3))
    d /= np.linalg.norm(d, axis=1, keepdims=True)
    r = radius * rng.random(count) ** (1.0 / 3.0)
    return d * r[:, None]


def max_displacement(a, b) -> float:
    return float(np.linalg.norm(np.asarray(a, float) - np.asarray(b, float), axis=1).max())


# --- file formats -----------------------------------------------------------

def parse_polygon(text: str) -> np.ndarray:
    """Parse the JSON ``{"vertices": [[x, y, z], ...]}`` or plain ``x y z`` lines."""
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if not isinstance(data, dict) or "vertices" not in data:
            raise InvalidPolygon('JSON polygon must be an object with a "vertices" key')
        rows = data["vertices"]
    else:
        rows = []
        for lineno, line in enumerate(stripped.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.replace(",", " ").split()
            if len(parts) != 3:
                raise InvalidPolygon(f"line {lineno}: expected 3 coordinates, got {len(parts)}")
            try:
                rows.append([float(x) for x in parts])
            except ValueError as exc:
                raise InvalidPolygon(f"line {lineno}: {exc}") from None
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidPolygon(f"malformed vertex list: {exc}") from None
    if arr.ndim != 2 or (len(arr) and arr.shape[1] != 3):
        raise InvalidPolygon("every vertex needs exactly 3 coordinates")
    if len(arr) < 3:
        raise PolygonTooSmall(f"a polygon needs at least 3 vertices, got {len(arr)}")
    if not np.all(np.isfinite(arr)):
        raise InvalidPolygon("vertex coordinates must be finite")
    return arr


def load_polygon(path) -> np.ndarray:
    return parse_polygon(Path(path).read_text())


def polygon_to_json(vertices, **extra) -> dict:
    v = np.asarray(vertices, dtype=float)
    out = {"vertices": [[float(x) for x in row] for row in v]}
    out.update(extra)
    return out


def dumps_polygon(vertices, **extra) -> str:
    """JSON text with one vertex per line; floats keep full precision."""
    data = polygon_to_json(vertices, **extra)
    rows = ",\n".join("    " + json.dumps(r) for r in data.pop("vertices"))
    head = "".join(f"  {json.dumps(k)}: {json.dumps(v)},\n" for k, v in data.items())
    return "{\n" + head + '  "vertices": [\n' + rows + "\n  ]\n}\n"


def save_polygon(path, vertices, **extra) -> None:
    Path(path).write_text(dumps_polygon(vertices, **extra))
