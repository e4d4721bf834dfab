"""Finite-model checking for the Farey graph axioms.

Builds finite graphs (Farey fragments, torus triangulations, platonic
sphere maps), checks the first-order axioms phi0 and psi_n on them both
exhaustively and through the connectivity + face-width certificate, and
exposes the supporting surface-topology machinery.
"""

from .graph_core import (
    Graph,
    InvalidGraphError,
    closed_neighborhood,
    common_neighbors,
    contains_k4,
    enumerate_connected_induced_subgraphs,
    induced_subgraph,
    is_chordal,
    is_removable,
    is_removable_via_clique,
    new_graph,
    vertex_connectivity,
)
from .farey import Frac, FareyFragment, build_fragment, farey_adjacent, mediant, verify_fragment
from .surface_map import (
    MapError,
    OrientedMap,
    TorusMap,
    euler_genus,
    gen_platonic,
    gen_torus_triangulation,
    is_triangulation,
    radial_graph,
    trace_faces,
)
from .topology import (
    CycleWitness,
    GenusNotSupportedError,
    INFINITE_FACE_WIDTH,
    TreeCotree,
    face_width,
    homology_signature,
    lift_to_universal_cover,
    shortest_noncontractible_cycle,
    tree_cotree,
)
from .axioms import (
    AxiomReport,
    BudgetExceededError,
    certify_psi,
    check_phi0,
    check_psi_exhaustive,
    check_two_triangles_lower,
    planar_obstruction,
    pseudofiniteness_run,
)

__version__ = "0.1.0"
