"""Relabeling actions r, s and mirror reflection on polygons."""

from __future__ import annotations

import numpy as np

from .errors import IndexOutOfRange

_MIRROR = np.array([1.0, 1.0, -1.0])


def reverse(vertices) -> np.ndarray:
    """r: <v1, v2, ..., vn> -> <v1, vn, ..., v2>."""
    v = np.asarray(vertices, dtype=float)
    return np.concatenate([v[:1], v[:0:-1]])


def rotate_labels(vertices, k: int = 1) -> np.ndarray:
    """s^k: the vertex v_{k+1} becomes the first vertex."""
    v = np.asarray(vertices, dtype=float)
    if not 0 <= k < len(v):
        raise IndexOutOfRange(f"rotation {k} outside 0..{len(v) - 1}")
    return np.roll(v, -k, axis=0)


def mirror(vertices) -> np.ndarray:
    """Reflection through the plane z = 0."""
    return np.asarray(vertices, dtype=float) * _MIRROR


def apply_action(vertices, op: str) -> np.ndarray:
    """Apply ``reverse``, ``mirror`` or ``rotate:k`` (composable with commas, left to right)."""
    v = np.asarray(vertices, dtype=float)
    for part in op.split(","):
        part = part.strip()
        if part == "reverse":
            v = reverse(v)
        elif part == "mirror":
            v = mirror(v)
        elif part.startswith("rotate:"):
            try:
                k = int(part.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad rotation in {part!r}") from None
            v = rotate_labels(v, k)
        else:
            raise ValueError(f"unknown action {part!r}")
    return v
