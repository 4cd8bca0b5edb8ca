"""Random polygons, crankshaft moves, isotopy path certification and censuses.

Every random routine takes an explicit seed.  Censuses derive one
independent seed per sample from the master seed (numpy SeedSequence
spawning), so a report is identical whether it is computed serially or
split over worker processes.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateAxis,
    DegenerateConfiguration,
    NoEmptySector,
    NonGeneric,
    SamplingFailed,
)
from .geometry import DEFAULT_EPS
from .heptagon import xi, region_code_hept
from .hexagon import joint_class, region_code_hex
from .knots import identify
from .polygon import as_polygon, is_embedded, is_generic, max_displacement
from .projection import orthogonal_diagram, radial_diagram

SAMPLE_ATTEMPTS = 1000


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_polygon(n: int, rng_seed=None, tol: float = DEFAULT_EPS) -> np.ndarray:
    """Vertices uniform in the unit cube, redrawn until the polygon is generic."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = _rng(rng_seed)
    for _ in range(SAMPLE_ATTEMPTS):
        v = rng.random((n, 3))
        if is_generic(v, tol):
            return v
    raise SamplingFailed(f"no generic {n}-gon after {SAMPLE_ATTEMPTS} draws")


def crankshaft(vertices, i: int, j: int, angle: float, tol: float = DEFAULT_EPS) -> np.ndarray:
    """Rotate the vertices strictly between i and j (cyclically) about the chord v_i v_j.

    Indices are 0-based.  Edge lengths are preserved; the result may fail
    to be embedded.
    """
    v = as_polygon(vertices, tol)
    n = len(v)
    i, j = i % n, j % n
    if i == j:
        raise DegenerateAxis("the axis needs two distinct vertices")
    axis = v[j] - v[i]
    length = np.linalg.norm(axis)
    scale = np.abs(v - v.mean(axis=0)).max()
    if length <= tol * scale:
        raise DegenerateAxis(f"vertices {i} and {j} coincide")
    k = axis / length
    chain = [(i + s) % n for s in range(1, (j - i) % n)]
    out = v.copy()
    if not chain:
        return out
    c, s = math.cos(angle), math.sin(angle)
    p = v[chain] - v[i]
    # Rodrigues' rotation formula.
    rotated = p * c + np.cross(k, p) * s + np.outer(p @ k, k) * (1 - c)
    out[chain] = rotated + v[i]
    return out


def regular_polygon(n: int, edge: float = 1.0) -> np.ndarray:
    """Planar regular n-gon in the xy-plane with the given edge length."""
    radius = edge / (2 * math.sin(math.pi / n))
    t = 2 * math.pi * np.arange(n) / n
    return np.stack([radius * np.cos(t), radius * np.sin(t), np.zeros(n)], axis=1)


def crankshaft_step(v: np.ndarray, rng: np.random.Generator, tol: float,
                    max_angle: float = math.pi) -> np.ndarray | None:
    """One random crankshaft move; None if the result is not embedded."""
    n = len(v)
    i = int(rng.integers(n))
    j = (i + int(rng.integers(2, n - 1))) % n
    moved = crankshaft(v, i, j, float(rng.uniform(-max_angle, max_angle)), tol)
    return moved if is_embedded(moved, tol).embedded else None


def random_equilateral(n: int, rng_seed=None, steps: int = 100, tol: float = DEFAULT_EPS) -> np.ndarray:
    """Unit-edge polygon from ``steps`` accepted crankshaft moves on the regular n-gon."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = _rng(rng_seed)
    v = regular_polygon(n)
    if n == 3:
        return v
    accepted = attempts = 0
    budget = 50 * steps + SAMPLE_ATTEMPTS
    while accepted < steps:
        attempts += 1
        if attempts > budget:
            raise SamplingFailed(f"only {accepted} of {steps} crankshaft moves accepted")
        moved = crankshaft_step(v, rng, tol)
        if moved is not None:
            v = moved
            accepted += 1
    return v


# --- isotopy paths -------------------------------------------------------------

@dataclass
class IsotopyPath:
    frames: list
    certified: bool
    min_clearance: float
    failed_step: int | None = None
    reason: str | None = None

    def to_dict(self) -> dict:
        return {
            "frames": len(self.frames),
            "certified": self.certified,
            "min_clearance": self.min_clearance if math.isfinite(self.min_clearance) else None,
            "failed_step": self.failed_step,
            "reason": self.reason,
        }


def certify_path(frames, tol: float = DEFAULT_EPS) -> IsotopyPath:
    """Check that straight-line interpolation between frames stays embedded.

    Sufficient condition: every frame is embedded and each step moves no
    vertex by as much as half the previous frame's clearance.  A failed
    check means the path needs refining, not that no isotopy exists.
    ``failed_step`` is the index of the first offending frame.
    """
    frames = [as_polygon(f, tol) for f in frames]
    if not frames:
        raise ValueError("a path needs at least one frame")
    n = len(frames[0])
    if any(len(f) != n for f in frames):
        raise ValueError("all frames must have the same number of vertices")
    min_clear = math.inf
    previous = None
    for k, frame in enumerate(frames):
        report = is_embedded(frame, tol)
        if not report.embedded:
            return IsotopyPath(frames, False, min_clear, k, f"frame {k} is {report.status.value}")
        if previous is not None:
            step = max_displacement(previous[0], frame)
            if step >= previous[1] / 2:
                return IsotopyPath(frames, False, min_clear, k,
                                   f"step {k} moves {step:.3g}, limit {previous[1] / 2:.3g}")
        min_clear = min(min_clear, report.clearance)
        previous = (frame, report.clearance)
    return IsotopyPath(frames, True, min_clear)


def interpolate(a, b, steps: int) -> list[np.ndarray]:
    """``steps + 1`` frames on the straight line from polygon a to polygon b."""
    a, b = np.asarray(a, float), np.asarray(b, float)
    return [a + (b - a) * (k / steps) for k in range(steps + 1)]


def perturbation_walk(vertices, steps: int, rng_seed=None, fraction: float = 0.2,
                      tol: float = DEFAULT_EPS) -> list[np.ndarray]:
    """Random walk whose steps each move vertices by under ``fraction`` of the clearance.

    With ``fraction < 1/2`` every step passes :func:`certify_path`.
    """
    if not 0 < fraction < 0.5:
        raise ValueError("fraction must lie in (0, 1/2)")
    from .polygon import random_ball

    rng = _rng(rng_seed)
    v = as_polygon(vertices, tol)
    frames = [v]
    for _ in range(steps):
        c = is_embedded(v, tol).clearance
        v = v + random_ball(rng, len(v), fraction * c)
        frames.append(v)
    return frames


def crankshaft_walk(vertices, steps: int, rng_seed=None, tol: float = DEFAULT_EPS,
                    fraction: float = 0.2) -> list[np.ndarray]:
    """Certified walk of small crankshaft moves.

    The rotation angle of each move is drawn below ``fraction`` of the
    clearance divided by the largest distance of a moving vertex from the
    axis, so no vertex moves by ``fraction`` of the clearance or more and
    consecutive frames always certify.  Edge lengths are preserved.
    """
    if not 0 < fraction < 0.5:
        raise ValueError("fraction must lie in (0, 1/2)")
    rng = _rng(rng_seed)
    v = as_polygon(vertices, tol)
    n = len(v)
    frames = [v]
    attempts = 0
    while len(frames) <= steps:
        attempts += 1
        if attempts > 100 * steps + SAMPLE_ATTEMPTS:
            raise SamplingFailed("crankshaft walk stalled")
        i = int(rng.integers(n))
        j = (i + int(rng.integers(2, n - 1))) % n
        axis = (v[j] - v[i]) / np.linalg.norm(v[j] - v[i])
        chain = [(i + k) % n for k in range(1, (j - i) % n)]
        rel = v[chain] - v[i]
        reach = float(np.linalg.norm(rel - np.outer(rel @ axis, axis), axis=1).max())
        c = is_embedded(v, tol).clearance
        # A rotation by angle a moves a point at distance r from the axis by 2 r sin(a/2) < r a.
        moved = crankshaft(v, i, j, float(rng.uniform(-1, 1)) * fraction * c / reach, tol)
        if not is_embedded(moved, tol).embedded or max_displacement(v, moved) >= fraction * c:
            continue
        v = moved
        frames.append(v)
    return frames


# --- knotted samples -------------------------------------------------------------

def sphere_polygon(n: int, rng: np.random.Generator) -> np.ndarray:
    """Vertices uniform on the unit sphere; knots far more often than the cube."""
    v = rng.normal(size=(n, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def _knot_name(v, tol) -> str | None:
    try:
        return identify(radial_diagram(v, tol)).name
    except (NonGeneric, DegenerateConfiguration):
        return None


def find_knots(n: int, knot: str, count: int, rng_seed=None, thin: int = 5,
               restart: int = 50, step: float = 0.15, tol: float = DEFAULT_EPS,
               max_draws: int = 10**7) -> list[np.ndarray]:
    """Generic n-gons of the given knot type.

    A first instance is found by drawing polygons with vertices on the unit
    sphere.  Further instances come from a random walk that moves one
    vertex at a time by a Gaussian step and keeps a move only when the
    result is still generic and of the same type; every ``thin``-th kept
    move is recorded and the walk restarts from a fresh draw after
    ``restart`` records.
    """
    rng = _rng(rng_seed)
    out: list[np.ndarray] = []
    draws = 0
    while len(out) < count:
        while True:
            draws += 1
            if draws > max_draws:
                raise SamplingFailed(f"no {knot} found in {max_draws} draws")
            v = sphere_polygon(n, rng)
            if is_generic(v, tol) and _knot_name(v, tol) == knot:
                break
        out.append(v)
        kept = 0
        while len(out) < count and kept < thin * (restart - 1):
            w = v.copy()
            w[int(rng.integers(n))] += rng.normal(scale=step, size=3)
            if is_generic(w, tol) and _knot_name(w, tol) == knot:
                v = w
                kept += 1
                if kept % thin == 0:
                    out.append(v)
    return out


# --- census ------------------------------------------------------------------------

@dataclass(frozen=True)
class SampleRecord:
    """Invariants of one sampled polygon."""

    index: int
    region: str | None
    invariant: str | None
    knot: str
    radial_crossings: int
    orthogonal_crossings: int
    orthogonal_knot: str | None = None

    @property
    def key(self) -> str:
        return f"{self.region or '-'}|{self.invariant or '-'}|{self.knot}"


@dataclass
class CensusReport:
    n: int
    samples: int
    seed: int
    equilateral: bool
    histogram: dict[str, int]
    redraws: int = 0
    records: list[SampleRecord] = field(default_factory=list, repr=False)

    def types(self) -> dict[str, int]:
        out: Counter = Counter()
        for key, count in self.histogram.items():
            out[key.rsplit("|", 1)[1]] += count
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "samples": self.samples,
            "seed": self.seed,
            "equilateral": self.equilateral,
            "histogram": dict(sorted(self.histogram.items())),
            "types": self.types(),
            "redraws": self.redraws,
        }


def _region(func, v, tol) -> str:
    try:
        return str(func(v, tol))
    except NoEmptySector:
        return "none"


def classify_polygon(v: np.ndarray, tol: float = DEFAULT_EPS, cross_check: bool = False,
                     index: int = 0) -> SampleRecord:
    """Region code, invariant class and knot type of one generic polygon.

    The region is ``none`` when the free vertices wind all the way around
    the axis.  Raises NonGeneric or DegenerateConfiguration for the rare
    samples that hit a degenerate case the vertex-level genericity test
    cannot see.
    """
    n = len(v)
    region = invariant = None
    radial = radial_diagram(v, tol)
    ortho = orthogonal_diagram(v, tol)
    knot = identify(radial).name
    if n == 6:
        region = _region(region_code_hex, v, tol)
        jc = joint_class(v, tol)
        invariant = f"({jc.chirality},{jc.curlpart})"
    elif n == 7:
        region = _region(region_code_hept, v, tol)
        if knot == "4_1":
            invariant = f"xi={xi(v, tol).xi}"
    ortho_knot = None
    if cross_check and ortho.crossing_count <= 16:
        ortho_knot = identify(ortho).name
    return SampleRecord(index, region, invariant, knot, radial.crossing_count,
                        ortho.crossing_count, ortho_knot)


def _draw(n: int, seed, equilateral: bool, tol: float) -> np.ndarray:
    if equilateral:
        rng = _rng(seed)
        for _ in range(SAMPLE_ATTEMPTS):
            v = random_equilateral(n, rng, steps=4 * n, tol=tol)
            if is_generic(v, tol):
                return v
        raise SamplingFailed("no generic equilateral polygon")
    return random_polygon(n, seed, tol)


def _census_chunk(args) -> tuple[list[SampleRecord], int]:
    n, seeds, start, equilateral, tol, cross_check = args
    records, redraws = [], 0
    for offset, seed in enumerate(seeds):
        rng = np.random.default_rng(seed)
        for _ in range(SAMPLE_ATTEMPTS):
            v = _draw(n, rng, equilateral, tol)
            try:
                records.append(classify_polygon(v, tol, cross_check, start + offset))
                break
            except (NonGeneric, DegenerateConfiguration):
                redraws += 1
        else:
            raise SamplingFailed(f"sample {start + offset} stayed degenerate")
    return records, redraws


def census(n: int, samples: int, rng_seed: int = 0, equilateral: bool = False,
           tol: float = DEFAULT_EPS, workers: int | None = None, keep_records: bool = False,
           cross_check: bool = False) -> CensusReport:
    """Sample polygons and tally (region, invariant class, knot type).

    Histogram keys are ``region|invariant|type`` with ``-`` for fields
    that do not apply: regions exist for n = 6, 7; the invariant is the
    joint chirality-curl for hexagons and Xi for heptagonal figure-eights.
    The report depends only on the arguments, never on ``workers``.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if samples < 0:
        raise ValueError("samples must be non-negative")
    seeds = np.random.SeedSequence(rng_seed).spawn(samples)
    if workers is None:
        workers = min(os.cpu_count() or 1, max(1, samples // 2000))
    chunk = max(1, math.ceil(samples / (4 * workers)))
    jobs = [(n, seeds[s:s + chunk], s, equilateral, tol, cross_check)
            for s in range(0, samples, chunk)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_census_chunk, jobs))
    else:
        results = [_census_chunk(job) for job in jobs]
    records = [r for chunk_records, _ in results for r in chunk_records]
    redraws = sum(r for _, r in results)
    histogram = Counter(r.key for r in records)
    return CensusReport(n, samples, rng_seed, equilateral, dict(histogram), redraws,
                        records if keep_records else [])
