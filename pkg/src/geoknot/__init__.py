"""Geometric knots: polygonal knot invariants, projections and sampling."""

__version__ = "0.1.0"

from .errors import GeoKnotError
from .geometry import orient, segment_triangle_crossing, segments_intersect
from .polygon import clearance, edge_lengths, forget_last, is_embedded, perturb_generic
from .symmetry import mirror, reverse, rotate_labels
from .hexagon import curl, joint_class, region_code, region_code_hex, triangle_delta
from .heptagon import permutahedron, region_code_hept, theta_signs, triangle_intersections, xi
from .diagram import Diagram
from .projection import crossing_bound, hull_relabel, orthogonal_diagram, radial_diagram
from .knots import determinant, identify, jones, kauffman_bracket
from .sampling import census, certify_path, crankshaft, random_equilateral, random_polygon

__all__ = [
    "GeoKnotError", "orient", "segment_triangle_crossing", "segments_intersect",
    "clearance", "edge_lengths", "forget_last", "is_embedded", "perturb_generic",
    "mirror", "reverse", "rotate_labels",
    "curl", "joint_class", "region_code", "region_code_hex", "triangle_delta",
    "permutahedron", "region_code_hept", "theta_signs", "triangle_intersections", "xi",
    "Diagram", "crossing_bound", "hull_relabel", "orthogonal_diagram", "radial_diagram",
    "determinant", "identify", "jones", "kauffman_bracket",
    "census", "certify_path", "crankshaft", "random_equilateral", "random_polygon",
]
