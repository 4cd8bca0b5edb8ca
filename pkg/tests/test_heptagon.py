import pytest

from geoknot.errors import NonGeneric, NotEmbedded
from geoknot.heptagon import permutahedron, region_code_hept, theta_signs, triangle_intersections, xi
from geoknot.hexagon import RegionCode
from geoknot.knots import identify
from geoknot.projection import radial_diagram
from geoknot.symmetry import mirror, reverse
from conftest import regular


def test_reverse_relations(figure_eights):
    # r swaps the roles of v3 and v6 and of the edges v3v4 and v5v6.
    for v in figure_eights[:100]:
        t3, t6 = theta_signs(v)
        i34, i45, i56 = triangle_intersections(v)
        w = reverse(v)
        assert theta_signs(w) == (-t6, -t3)
        assert triangle_intersections(w) == (i56, i45, i34)
        assert xi(w).xi == -xi(v).xi


def test_mirror_relations(figure_eights):
    for v in figure_eights[:100]:
        w = mirror(v)
        assert theta_signs(w) == tuple(-t for t in theta_signs(v))
        assert triangle_intersections(w) == tuple(-i for i in triangle_intersections(v))
        assert xi(w).xi == xi(v).xi


def test_xi_formula(figure_eights):
    for v in figure_eights[:50]:
        r = xi(v)
        half = (r.theta3 + r.theta6) * (r.i34 + r.i45 + r.i56) + (r.theta3 - r.theta6) * (r.i34 - r.i56)
        assert half % 2 == 0 and r.xi == half // 2
        assert r.figure_eight_consistent and r.xi in (-1, 1)


def test_xi_report_dict(figure_eights):
    d = xi(figure_eights[0]).to_dict()
    assert set(d) == {"theta3", "theta6", "i34", "i45", "i56", "xi", "figure_eight_consistent"}


def test_fixtures_are_figure_eights(figure_eights):
    assert len(figure_eights) == 1000
    for v in figure_eights[:20]:
        assert identify(radial_diagram(v)).name == "4_1"


def test_planar_heptagon_nongeneric():
    with pytest.raises(NonGeneric):
        xi(regular(7))


def test_xi_needs_embedding():
    v = regular(7).copy()
    v[3] = (v[0] + v[1]) / 2  # v4 pulled onto edge v1v2
    with pytest.raises(NotEmbedded):
        xi(v)


def test_xi_rejects_other_sizes():
    with pytest.raises(ValueError):
        xi(regular(6))


def test_region_code_hept(figure_eights):
    codes = set()
    for v in figure_eights[:200]:
        try:
            code = region_code_hept(v)
        except NonGeneric:
            continue
        assert sorted(code.word) == [2, 3, 4, 5]
        codes.add(str(code))
    assert len(codes) > 1


def test_permutahedron_counts():
    g = permutahedron()
    assert len(g.nodes) == 24
    assert len(g.edges) == 36
    assert all(g.degree(node) == 3 for node in g.nodes)
    faces = g.faces()
    assert {k: len(v) for k, v in faces.items()} == {4: 6, 6: 8}
    d = g.to_dict()
    assert (d["squares"], d["hexagons"]) == (6, 8)


def test_permutahedron_square_face():
    g = permutahedron()
    square = [RegionCode.parse(w).word for w in ("2-4-3-5", "4-2-3-5", "4-2-5-3", "2-4-5-3")]
    for a, b in zip(square, square[1:] + square[:1]):
        assert b in g.neighbors(a)
    assert any(set(face) == set(square) for face in g.faces()[4])


def test_permutahedron_edges_are_adjacent_swaps():
    g = permutahedron()
    for a, b in g.edges:
        diff = [k for k in range(4) if a[k] != b[k]]
        assert len(diff) == 2 and diff[1] == diff[0] + 1


def test_permutahedron_dot():
    dot = permutahedron().to_dot()
    lines = dot.strip().splitlines()
    assert lines[0] == "graph permutahedron {" and lines[-1] == "}"
    assert len(lines) == 38
    assert '"2-3-4-5" -- "3-2-4-5";' in dot
