"""Odd colourings: partitions of a graph into classes that each induce an odd subgraph.

The building blocks are constructive bounds for several graph classes, an
exact subset-DP oracle for small graphs and a certificate checker.
"""
from .classes import (
    EngineTrace,
    LightEdge,
    PendantTwins,
    bounded_degree_bound,
    bounded_degree_colouring,
    colour_components,
    colour_with_budget,
    find_reduction,
    girth7_bound,
    girth7_colouring,
    planar_girth11_check,
    planar_girth11_colouring,
)
from .errors import (
    ClassError,
    InfeasibleError,
    InternalError,
    NotAModulePartitionError,
    NotProperError,
    OddColouringError,
    PreconditionError,
    ReductionNotFoundError,
    RepresentationError,
    SizeError,
)
from .exact import chi_odd_exact, chromatic_number_exact, is_odd_colourable
from .gallai import even_even_partition, odd_even_even_partition, odd_even_partition
from .gf2 import BitMatrix, BitVector, rank, solve
from .graph import Colouring, Graph, components, girth, read_edge_list, subdivide, write_edge_list
from .interval import (
    IntervalRepresentation,
    IntervalTrace,
    StarPath,
    build_star_path,
    interval_colouring,
    proper_interval_colouring,
)
from .modular import (
    DecompositionResult,
    DecompositionTrace,
    ModuleGraph,
    ModulePartition,
    build_module_graph,
    colour_cp_tree,
    colour_modular,
    colour_star,
    decompose,
    is_colour_propagating,
    naive_module_partition,
)
from .verify import VerificationReport, verify_colouring

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
