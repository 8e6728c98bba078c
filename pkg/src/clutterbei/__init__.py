"""Binomial edge ideals of clutters: minimal primes, dimension, unmixedness
and Cohen-Macaulay decisions, all computed combinatorially."""

from .cliques import free_vertices, is_clique, is_free, maximal_cliques
from .clutter import (
    Binomial,
    Clutter,
    Graph,
    associated_graph,
    binomial_generators,
    components,
    cone,
    cut_points,
    delete_vertex,
    disjoint_union,
    induced,
    is_clutter_cone,
    is_complete,
    is_connected,
    is_cut_point,
    new_clutter,
    union,
)
from .decide import (
    Status,
    Verdict,
    chordal_clique_case,
    cm_verdict,
    depth_exact,
    general_gluing_decomposition,
    glue,
    gluing_split,
    graph_cone_apex,
)
from .oracle import PrimeDescriptor, describe_PT, minimal_primes_oracle, prime_contains
from .primes import (
    CutSetRecord,
    component_count,
    cut_sets,
    dim_SJ,
    has_cutpoint_property,
    height_PT,
    is_unmixed,
    minimal_primes,
)

__version__ = "0.1.0"
