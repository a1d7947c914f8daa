"""Commutation graphs of finite rings.

Vertices are ring elements; an edge joins cd and dc whenever they differ.
The module builds these graphs for modular, Galois-field, matrix and product
rings, computes closures, levels, distances, diameters and girths, and runs
the structural check suites.
"""

from ._core import (
    Graph,
    IoError,
    Ring,
    SizeGuardError,
    SpecError,
    build_graph,
    build_ring,
    class_diameter,
    class_girth,
    closure,
    default_suite_rings,
    diameter,
    distance,
    export_graph,
    girth,
    is_commutatively_closed,
    jordan_type,
    run_suite,
    stabilization_depth,
    suite_names,
)

__all__ = [
    "Graph",
    "IoError",
    "Ring",
    "SizeGuardError",
    "SpecError",
    "build_graph",
    "build_ring",
    "class_diameter",
    "class_girth",
    "closure",
    "default_suite_rings",
    "diameter",
    "distance",
    "export_graph",
    "girth",
    "is_commutatively_closed",
    "jordan_type",
    "run_suite",
    "stabilization_depth",
    "suite_names",
]

__version__ = "1.0.0"
