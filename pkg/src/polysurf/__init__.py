"""Combinatorial curvature, universal covers and r-spherical metrics of regular polygonal surfaces."""

__version__ = "0.1.0"

from .catalog import CatalogQuery, enumerate_vertex_types, extremal_curvature
from .complex import (
    Gluing,
    GluingData,
    PolygonalComplex,
    Slot,
    VertexType,
    build_complex,
    from_polygons,
    is_edge_to_edge,
    is_orientable,
)
from .cover import develop_universal_cover, verify_covering
from .curvature import CurvatureProfile, Verdict, angle_sum, classify, curvature, exclusion_check
from .gauss_bonnet import check_gauss_bonnet, euler_characteristic, vertex_bound
from .generators import GeneratorSpec, generate
from .isoperimetric import SubcomplexSelection, ball_profile, boundary_edges, isoperimetric_report, star_subdivide
from .metric import approx_diameter, approx_distance, build_mesh, embed_faces, vertex_avoidance_probe
from .psc import parse_psc, serialize_psc
from .render import RenderOptions, render_svg
from .spherical import critical_radius, phi_S, polygon_spec, spherical_angle_sum, threshold_radius
