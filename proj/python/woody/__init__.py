"""Strongly woody edge colorings, strong arboricity and related exact solvers."""

from ._woody import (
    Graph,
    GraphError,
    ParseError,
    PreconditionError,
    SizeGuardError,
    acyclic_chromatic_exact,
    arboricity,
    chromatic_exact,
    chromatic_index_exact,
    coloring_number,
    complete,
    cycle,
    degeneracy_pipeline,
    derived_coloring,
    find_forest_2independent_partition,
    fractional_arboricity,
    girth,
    has_triangle,
    hunt,
    induces_forest,
    is_2_independent,
    is_acyclic_vertex,
    is_p_woody,
    is_strongly_woody,
    is_strongly_woody_oracle,
    is_woody,
    mcgee,
    partition_coloring,
    path,
    petersen,
    recheck_record,
    subdivide,
    triangle_free_planar_coloring,
    zeta_exact,
)

__version__ = "0.1.0"
