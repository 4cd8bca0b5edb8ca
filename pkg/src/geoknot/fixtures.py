"""Reference polygons shipped with the package."""

from __future__ import annotations

import json
from importlib import resources

import numpy as np

PENTAGON_Q = np.array([
    [0.0, 0.0, 0.0],
    [0.886375, 0.276357, 0.371441],
    [0.125043, -0.363873, 0.473812],
    [0.549367, 0.461959, 0.845227],
    [0.818041, 0.0, 0.0],
])

#: Last vertices completing Q to a right-handed trefoil and to an unknot.
TREFOIL_V6 = np.array([0.4090205, -0.343939, 0.845227])
UNKNOT_V6 = np.array([0.4090205, 0.0, -0.912525])

TREFOIL_HEXAGON = np.vstack([PENTAGON_Q, TREFOIL_V6])
UNKNOT_HEXAGON = np.vstack([PENTAGON_Q, UNKNOT_V6])

FIGURE_EIGHT_SEED = 41
FIGURE_EIGHT_COUNT = 1000


def fixture_path(name: str):
    """Path-like handle of a fixture file, e.g. ``trefoil_hexagon.json``."""
    return resources.files("geoknot") / "fixtures" / name


def load_fixture(name: str) -> dict:
    return json.loads(fixture_path(name).read_text())


def figure_eight_heptagons() -> list[np.ndarray]:
    """Frozen heptagonal figure-eight knots (see ``figure_eight_heptagons.json`` for provenance)."""
    data = load_fixture("figure_eight_heptagons.json")
    return [np.array(p, dtype=float) for p in data["polygons"]]
