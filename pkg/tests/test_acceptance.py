"""Acceptance suite: one test per criterion, named test_criterion_NN.

The large censuses are session-scoped and shared between criteria.  A
summary line per criterion is printed at the end of the run (see
conftest.py).
"""

import time
from collections import Counter, defaultdict

import numpy as np
import pytest

from geoknot.fixtures import PENTAGON_Q, TREFOIL_HEXAGON, TREFOIL_V6, UNKNOT_HEXAGON, UNKNOT_V6
from geoknot.heptagon import permutahedron, theta_signs, triangle_intersections, xi
from geoknot.hexagon import JOINT_CLASSES, curl, joint_class, region_code_hex
from geoknot.knots import identify
from geoknot.projection import crossing_bound, orthogonal_bound, radial_diagram
from geoknot.sampling import census, certify_path, crankshaft_walk, find_knots, perturbation_walk
from geoknot.symmetry import mirror, reverse, rotate_labels

pytestmark = pytest.mark.acceptance

HEXAGON_SAMPLES = 100_000
OTHER_SAMPLES = 10_000
PROPERTY_SAMPLES = 1000

CHIRALITY_OF = {"unknot": 0, "3_1": 1, "-3_1": -1}

# Knot types each hexagonal region can hold.
ALLOWED = {
    "2-3-4": {"unknot"},
    "2-4-3": {"unknot", "3_1"},
    "3-2-4": {"unknot", "3_1"},
    "3-4-2": {"unknot", "-3_1"},
    "4-2-3": {"unknot", "-3_1"},
    "4-3-2": {"unknot"},
}
# Curl of the trefoils in each region that holds them.
TREFOIL_CURL = {"2-4-3": 1, "4-2-3": 1, "3-2-4": -1, "3-4-2": -1}


def s(v):
    return rotate_labels(v, 1)


def parse_key(key):
    region, invariant, knot = key.split("|")
    return region, invariant, knot


def parse_joint(invariant):
    d, c = invariant.strip("()").split(",")
    return int(d), int(c)


@pytest.fixture(scope="session")
def hexagon_census():
    return census(6, HEXAGON_SAMPLES, rng_seed=6, keep_records=True)


@pytest.fixture(scope="session")
def censuses(hexagon_census):
    out = {6: hexagon_census}
    for n in (5, 7, 8, 9):
        out[n] = census(n, OTHER_SAMPLES, rng_seed=n, keep_records=True)
    return out


@pytest.fixture(scope="session")
def hexagonal_trefoils():
    # Short walks from many fresh draws keep the samples well spread.
    half = PROPERTY_SAMPLES // 2
    return (find_knots(6, "3_1", half, rng_seed=61, restart=10)
            + find_knots(6, "-3_1", half, rng_seed=62, restart=10))


def test_criterion_01(pentagon):
    start = time.perf_counter()
    unknot = np.vstack([PENTAGON_Q, UNKNOT_V6])
    trefoil = np.vstack([PENTAGON_Q, TREFOIL_V6])
    assert np.array_equal(unknot, UNKNOT_HEXAGON) and np.array_equal(trefoil, TREFOIL_HEXAGON)
    assert np.array_equal(unknot[:5], pentagon)
    assert identify(radial_diagram(unknot)).name == "unknot"
    assert joint_class(unknot).as_tuple() == (0, 0)
    result = identify(radial_diagram(trefoil))
    assert result.name == "3_1" and result.to_dict()["display"] == "right-trefoil"
    assert joint_class(trefoil).as_tuple() == (1, 1)
    assert str(region_code_hex(trefoil)) == "2-4-3"
    assert str(region_code_hex(unknot)) == "2-4-3"
    elapsed = time.perf_counter() - start
    print(f"criterion 1: fixtures checked in {elapsed:.3f} s")
    assert elapsed < 1.0


def test_criterion_02(hexagon_census):
    violations = disagreements = 0
    total = 0
    for key, count in hexagon_census.histogram.items():
        _, invariant, knot = parse_key(key)
        jc = parse_joint(invariant)
        total += count
        if jc not in JOINT_CLASSES:
            violations += count
        if CHIRALITY_OF.get(knot) != jc[0]:
            disagreements += count
    print(f"criterion 2: {total} hexagons, {violations} value violations, {disagreements} disagreements")
    assert total >= 10_000
    assert violations == 0 and disagreements == 0


def test_criterion_03(censuses):
    allowed = {5: {"unknot"}, 6: {"unknot", "3_1", "-3_1"}, 7: {"unknot", "3_1", "-3_1", "4_1"}}
    for n, types in allowed.items():
        observed = censuses[n].types()
        print(f"criterion 3: n={n} types {observed}")
        assert sum(observed.values()) >= 10_000
        assert set(observed) <= types
    assert censuses[5].types() == {"unknot": OTHER_SAMPLES}


def test_criterion_04(censuses):
    for n in (6, 7, 8, 9):
        records = censuses[n].records
        assert len(records) >= 10_000
        radial = max(r.radial_crossings for r in records)
        ortho = max(r.orthogonal_crossings for r in records)
        print(f"criterion 4: n={n} max radial {radial} <= {crossing_bound(n)}, "
              f"max orthogonal {ortho} <= {orthogonal_bound(n)}")
        assert sum(r.radial_crossings > crossing_bound(n) for r in records) == 0
        assert sum(r.orthogonal_crossings > orthogonal_bound(n) for r in records) == 0


def test_criterion_05(hexagon_census):
    by_region = defaultdict(Counter)
    curl_mismatches = 0
    for key, count in hexagon_census.histogram.items():
        region, invariant, knot = parse_key(key)
        by_region[region][knot] += count
        if knot != "unknot":
            if parse_joint(invariant)[1] != TREFOIL_CURL.get(region):
                curl_mismatches += count
    for region in sorted(by_region):
        print(f"criterion 5: {region} {dict(by_region[region])}")
    assert sum(sum(c.values()) for c in by_region.values()) >= 100_000
    assert set(by_region) <= set(ALLOWED)
    for region, counts in by_region.items():
        assert set(counts) <= ALLOWED[region], region
    for region in ("2-4-3", "3-2-4"):
        assert by_region[region]["3_1"] > 0
    for region in ("3-4-2", "4-2-3"):
        assert by_region[region]["-3_1"] > 0
    assert curl_mismatches == 0


def test_criterion_06(hexagonal_trefoils, figure_eights):
    assert len(hexagonal_trefoils) >= 1000 and len(figure_eights) >= 1000
    violations = Counter()
    for v in hexagonal_trefoils:
        c = curl(v)
        violations["Curl(rH)"] += curl(reverse(v)) != -c
        violations["Curl(sH)"] += curl(s(v)) != -c
    for v in figure_eights:
        x = xi(v).xi
        violations["Xi(rH)"] += xi(reverse(v)).xi != -x
        violations["Xi(sH)"] += xi(s(v)).xi != x
        violations["Xi(mirror H)"] += xi(mirror(v)).xi != x
    print(f"criterion 6: {len(hexagonal_trefoils)} trefoils, {len(figure_eights)} figure-eights, "
          f"violations {dict(violations)}")
    assert sum(violations.values()) == 0


def test_criterion_07():
    members = {
        "identity": TREFOIL_HEXAGON,
        "s": s(TREFOIL_HEXAGON),
        "mirror": mirror(TREFOIL_HEXAGON),
        "mirror o s": mirror(s(TREFOIL_HEXAGON)),
        "unknot": UNKNOT_HEXAGON,
    }
    classes = {}
    for label, v in members.items():
        jc = joint_class(v).as_tuple()
        path = perturbation_walk(v, 100, rng_seed=700 + len(classes))
        report = certify_path(path)
        constant = all(joint_class(w).as_tuple() == jc for w in path)
        print(f"criterion 7: {label} -> {jc}, path certified={report.certified}, constant={constant}")
        assert len(path) == 101 and report.certified and constant
        classes[label] = jc
    assert set(classes.values()) == JOINT_CLASSES


def test_criterion_08(figure_eights):
    start = figure_eights[0]
    path = crankshaft_walk(start, 1000, rng_seed=8)
    report = certify_path(path)
    x0 = xi(start).xi
    knot_changes = sum(identify(radial_diagram(w)).name != "4_1" for w in path)
    xi_changes = sum(xi(w).xi != x0 for w in path)
    moved = float(np.abs(path[-1] - start).max())
    print(f"criterion 8: {len(path) - 1} steps, certified={report.certified}, "
          f"knot changes {knot_changes}, xi changes {xi_changes}, max drift {moved:.3g}")
    assert len(path) - 1 >= 1000 and report.certified
    assert knot_changes == 0 and xi_changes == 0


def test_criterion_09(figure_eights):
    violations = Counter()
    for v in figure_eights:
        t3, t6 = theta_signs(v)
        i34, i45, i56 = triangle_intersections(v)
        plus, minus = (t3 + t6) // 2, (t3 - t6) // 2
        violations["theta"] += sorted([abs(plus), abs(minus)]) != [0, 1]
        nonzero = (i34, i45, i56) if plus else (i34, i56)
        violations["pattern"] += sum(1 for i in nonzero if i) != 1
        violations["xi"] += xi(v).xi not in (-1, 1)
    print(f"criterion 9: {len(figure_eights)} figure-eights, violations {dict(violations)}")
    assert len(figure_eights) >= 1000
    assert sum(violations.values()) == 0


def test_criterion_10():
    g = permutahedron()
    faces = g.faces()
    degrees = {g.degree(node) for node in g.nodes}
    print(f"criterion 10: {len(g.nodes)} nodes, {len(g.edges)} edges, degrees {degrees}, "
          f"{len(faces.get(4, []))} squares, {len(faces.get(6, []))} hexagons")
    assert len(g.nodes) == 24 and len(g.edges) == 36 and degrees == {3}
    assert len(faces[4]) == 6 and len(faces[6]) == 8
    assert set(faces) == {4, 6}
