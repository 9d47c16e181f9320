"""Planarity certification for simple graphs.

Every decision comes with a checkable witness: a genus-0 rotation system
for planar graphs, or a K5/K3,3 subdivision certificate for non-planar
ones.  The harness module replays the supporting theory (obstruction
characterizations, certificate lifting, face-boundary structure)
exhaustively at small scale.
"""

from .errors import CapacityError, InternalInconsistencyError, SearchBudgetExceeded
from .graphs import (
    Edge,
    Graph,
    VertexMap,
    are_homeomorphic,
    are_isomorphic,
    complete_bipartite,
    complete_graph,
    compose_vertex_maps,
    contract_edge,
    cube_graph,
    cycle_graph,
    delete_edge,
    delete_vertex,
    delete_vertices,
    empty_graph,
    enumerate_labeled_graphs,
    from_edge_mask,
    identity_map,
    path_graph,
    petersen_graph,
    smooth,
    subdivide_edge,
    theta_graph,
)
from .embedding import (
    Dart,
    FaceSet,
    RotationSystem,
    enumerate_rotation_systems,
    face_boundary,
    face_covering_all_edges,
    find_covering_planar_rotation,
    find_planar_rotation,
    genus,
    rotations_equivalent,
    trace_faces,
)
from .subdivision import (
    MinorCertificate,
    Pattern,
    SubdivisionCertificate,
    contains_theta,
    find_kuratowski,
    find_minor,
    find_subdivision,
    lift_certificate,
    minor_to_subdivision,
    validate_minor,
    validate_subdivision,
)
from .lemmas import (
    LemmaReport,
    condition1,
    condition2,
    condition3,
    deletion_lemma_predicates,
    lemma_report,
)
from .planarity import (
    DecisionConfig,
    DecisionPath,
    Verdict,
    cross_check,
    decide,
    decide_via_minor,
)

__version__ = "0.1.0"
