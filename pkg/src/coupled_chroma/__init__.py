"""List coupled coloring of plane graphs: wheels, their subgraphs and certificates."""

from .certificates import CertificateReport, build_adversarial_lists, run_certificate
from .incidence import IncidenceGraph, Violation, build_incidence_graph, build_Xn, verify_coupled_coloring
from .plane_graph import (
    ElementRef,
    PlaneGraph,
    WheelLabeling,
    build_cycle,
    build_k4_minus_edge,
    build_prism,
    build_triple_edge,
    build_wheel,
    delete_elements,
    dual,
    from_rotation_system,
    stellate_face,
    subdivide_edge,
)
from .solver import SolveOutcome, Status, color_strip, count_colorings, degree_choosable_color, exact_color
from .wheel import (
    choose_hub_pair,
    classify_wheel_subgraph,
    color_wheel,
    color_wheel_subgraph,
    color_wheel_traced,
    extend_subdivision_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "CertificateReport",
    "ElementRef",
    "IncidenceGraph",
    "PlaneGraph",
    "SolveOutcome",
    "Status",
    "Violation",
    "WheelLabeling",
    "build_Xn",
    "build_adversarial_lists",
    "build_cycle",
    "build_incidence_graph",
    "build_k4_minus_edge",
    "build_prism",
    "build_triple_edge",
    "build_wheel",
    "choose_hub_pair",
    "classify_wheel_subgraph",
    "color_strip",
    "color_wheel",
    "color_wheel_subgraph",
    "color_wheel_traced",
    "count_colorings",
    "degree_choosable_color",
    "delete_elements",
    "dual",
    "exact_color",
    "extend_subdivision_coloring",
    "from_rotation_system",
    "run_certificate",
    "stellate_face",
    "subdivide_edge",
    "verify_coupled_coloring",
]
