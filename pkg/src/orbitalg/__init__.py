"""Vertex-transitive graphs from orbital unions of permutation groups.

The pipeline: parse or build a transitive permutation group, decompose the
pair space into orbitals via a point stabilizer, enumerate transpose-closed
unions of non-diagonal orbitals, and classify each union graph as strongly
regular, distance-regular, or neither.  Coherent-configuration intersection
numbers provide an independent cross-check on the graph-side results.
"""

from .errors import ConsistencyError, GraphFormatError, GroupFormatError, InputError
from .perms import Permutation, format_cycles, parse_cycles
from .groups import PermutationGroup, Orbit, parse_group, format_group, load_group, save_group
from .chain import StabilizerChain, build_chain
from .orbitals import Orbital, OrbitalDecomposition, decompose, verify_axioms
from .graphs import (
    Graph,
    SrgParams,
    IntersectionArray,
    DesignParams,
    Rejection,
    union_graph,
    check_regular,
    check_srg,
    check_drg,
    check_symmetric_design,
    srg_to_array,
    verify_srg_matrix_identity,
    bfs_levels,
    connected_components,
    complement,
)
from .scheme import (
    CoherentConfiguration,
    from_orbitals,
    from_distance_partition,
    intersection_numbers,
    classify_configuration,
)
from .search import CandidateUnion, SearchOptions, SearchReport, atoms, enumerate_unions, run_search, dedup_by_invariants
from .catalog import CatalogEntry, catalog_entries, make_group

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "GraphFormatError",
    "GroupFormatError",
    "InputError",
    "Permutation",
    "format_cycles",
    "parse_cycles",
    "PermutationGroup",
    "Orbit",
    "parse_group",
    "format_group",
    "load_group",
    "save_group",
    "StabilizerChain",
    "build_chain",
    "Orbital",
    "OrbitalDecomposition",
    "decompose",
    "verify_axioms",
    "Graph",
    "SrgParams",
    "IntersectionArray",
    "DesignParams",
    "Rejection",
    "union_graph",
    "check_regular",
    "check_srg",
    "check_drg",
    "check_symmetric_design",
    "srg_to_array",
    "verify_srg_matrix_identity",
    "bfs_levels",
    "connected_components",
    "complement",
    "CoherentConfiguration",
    "from_orbitals",
    "from_distance_partition",
    "intersection_numbers",
    "classify_configuration",
    "CandidateUnion",
    "SearchOptions",
    "SearchReport",
    "atoms",
    "enumerate_unions",
    "run_search",
    "dedup_by_invariants",
    "CatalogEntry",
    "catalog_entries",
    "make_group",
    "__version__",
]
