"""Top-level planarity decision with certificates.

A verdict is either Planar, carrying a genus-0 rotation system and its
faces, or NonPlanar, carrying a K5 or K3,3 subdivision certificate.  The
subdivision (or minor) search is the decision authority; the embedding
search only realizes the planar branch, and a graph with no obstruction
for which no planar rotation can be found is reported as an internal
inconsistency, never as a verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .embedding import FaceSet, RotationSystem, find_planar_rotation, trace_faces
from .errors import InternalInconsistencyError
from .graphs import Graph
from .subdivision import (
    Pattern,
    SubdivisionCertificate,
    find_kuratowski,
    find_minor,
    minor_to_subdivision,
)


class DecisionPath(enum.Enum):
    SUBDIVISION = "subdivision"
    MINOR = "minor"


@dataclass(frozen=True)
class DecisionConfig:
    node_budget: int = 10**9
    edge_bound_prefilter: bool = True
    path: DecisionPath = DecisionPath.SUBDIVISION

    def __post_init__(self) -> None:
        if self.node_budget <= 0:
            raise ValueError("node budget must be positive")


DEFAULT_CONFIG = DecisionConfig()


@dataclass(frozen=True)
class Verdict:
    planar: bool
    rotation: RotationSystem | None = None
    faces: FaceSet | None = None
    certificate: SubdivisionCertificate | None = None


def _planar_verdict(g: Graph, config: DecisionConfig) -> Verdict:
    rho = find_planar_rotation(g, config.node_budget, config.edge_bound_prefilter)
    if rho is None:
        raise InternalInconsistencyError(
            "no obstruction found, yet no planar rotation exists"
        )
    faces = trace_faces(g, rho)
    if faces.genus != 0:
        raise InternalInconsistencyError("oracle returned a non-planar rotation")
    return Verdict(planar=True, rotation=rho, faces=faces)


def decide(g: Graph, config: DecisionConfig = DEFAULT_CONFIG) -> Verdict:
    """Planar embedding or Kuratowski certificate, per the configured path."""
    if config.path is DecisionPath.MINOR:
        return decide_via_minor(g, config)
    cert = find_kuratowski(g)
    if cert is not None:
        return Verdict(planar=False, certificate=cert)
    return _planar_verdict(g, config)


def decide_via_minor(g: Graph, config: DecisionConfig = DEFAULT_CONFIG) -> Verdict:
    """Like decide, but non-planarity is detected by minor search and the
    witness converted to a subdivision certificate."""
    minor = find_minor(g, Pattern.K5) or find_minor(g, Pattern.K33)
    if minor is not None:
        cert = minor_to_subdivision(g, minor)
        return Verdict(planar=False, certificate=cert)
    return _planar_verdict(g, config)


def cross_check(g: Graph, config: DecisionConfig = DEFAULT_CONFIG) -> bool:
    """True iff the subdivision route, the minor route, and the raw
    embedding search all agree on planarity.  Disagreement returns False
    rather than raising."""
    sub = decide(g, config)
    minor = decide_via_minor(g, config)
    rho = find_planar_rotation(g, config.node_budget, config.edge_bound_prefilter)
    return sub.planar == minor.planar == (rho is not None)
