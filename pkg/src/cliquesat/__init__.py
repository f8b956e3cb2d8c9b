"""Minimum saturated graphs for disjoint unions of cliques K_p + (t-1)K_q."""

__version__ = "0.1.0"

from .canon import canonical_form
from .formats import from_edgelist, from_graph6, to_edgelist, to_graph6
from .graph import Graph, complete, disjoint_union, empty, independent, join
from .patterns import (
    CliquePattern,
    Embedding,
    contains_pattern,
    enumerate_packings,
    find_clique,
    find_disjoint_cliques,
)
from .saturation import (
    SaturationVerdict,
    build_extremal,
    certify_saturated,
    is_pattern_free,
    sat_formula,
    theorem_n_bound,
)
from .search import SearchReport, compute_sat, enumerate_graphs, verify_theorem
from .structure import ResidueReport, audit, contraction_bound_holds, residue
