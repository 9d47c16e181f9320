import pytest
from hypothesis import given, settings

from planarcert.embedding import genus
from planarcert.errors import SearchBudgetExceeded
from planarcert.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    contract_edge,
    cube_graph,
    enumerate_labeled_graphs,
    path_graph,
    petersen_graph,
)
from planarcert.planarity import (
    DecisionConfig,
    DecisionPath,
    cross_check,
    decide,
    decide_via_minor,
)
from planarcert.subdivision import Pattern, find_subdivision, validate_subdivision

from conftest import graphs


def test_decide_k5():
    verdict = decide(complete_graph(5))
    assert not verdict.planar
    assert verdict.certificate.pattern is Pattern.K5
    assert validate_subdivision(complete_graph(5), verdict.certificate)


def test_decide_k33():
    verdict = decide(complete_bipartite(3, 3))
    assert not verdict.planar
    assert verdict.certificate.pattern is Pattern.K33


def test_decide_k4():
    verdict = decide(complete_graph(4))
    assert verdict.planar
    assert verdict.faces.face_count == 4
    assert genus(complete_graph(4), verdict.rotation) == 0


def test_decide_petersen():
    pet = petersen_graph()
    verdict = decide(pet)
    assert not verdict.planar
    assert verdict.certificate.pattern is Pattern.K33
    assert find_subdivision(pet, Pattern.K5) is None
    assert validate_subdivision(pet, verdict.certificate)


def test_decide_cube():
    verdict = decide(cube_graph())
    assert verdict.planar
    fs = verdict.faces
    assert (fs.vertex_count, fs.edge_count, fs.face_count) == (8, 12, 6)
    assert fs.vertex_count - fs.edge_count + fs.face_count == 2


def test_decide_via_minor_examples():
    assert not decide_via_minor(complete_graph(5)).planar
    pet = petersen_graph()
    verdict = decide_via_minor(pet)
    assert not verdict.planar
    assert validate_subdivision(pet, verdict.certificate)
    assert decide_via_minor(path_graph(6)).planar


def test_decide_respects_config_path():
    pet = petersen_graph()
    via = decide(pet, DecisionConfig(path=DecisionPath.MINOR))
    assert not via.planar and validate_subdivision(pet, via.certificate)


def test_decide_disconnected():
    g = Graph(8, list(complete_graph(4).edges) + [(u + 4, v + 4) for u, v in complete_graph(4).edges])
    verdict = decide(g)
    assert verdict.planar
    assert verdict.faces.components == 2
    assert verdict.faces.genus == 0

    mixed = Graph(
        9,
        list(complete_graph(4).edges)
        + [(u + 4, v + 4) for u, v in complete_graph(5).edges],
    )
    verdict = decide(mixed)
    assert not verdict.planar
    assert validate_subdivision(mixed, verdict.certificate)


def test_dense_graphs_still_get_certificates():
    k7 = complete_graph(7)  # E = 21 > 3*7-6: prefilter territory
    verdict = decide(k7)
    assert not verdict.planar
    assert validate_subdivision(k7, verdict.certificate)


def test_budget_error_is_distinct_from_verdict():
    with pytest.raises(SearchBudgetExceeded):
        decide(cube_graph(), DecisionConfig(node_budget=2))


def test_config_validation():
    with pytest.raises(ValueError):
        DecisionConfig(node_budget=0)


def test_cross_check_examples():
    assert cross_check(complete_graph(5))
    assert cross_check(complete_graph(4))
    assert cross_check(petersen_graph())


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_verdict_soundness(g):
    verdict = decide(g)
    if verdict.planar:
        assert genus(g, verdict.rotation) == 0
        fs = verdict.faces
        assert fs.vertex_count - fs.edge_count + fs.face_count == 2 * fs.components
    else:
        assert verdict.certificate.pattern in (Pattern.K5, Pattern.K33)
        assert validate_subdivision(g, verdict.certificate)


def test_contraction_closure_on_planar_graphs_sample():
    # minors of planar graphs stay planar; n <= 6 exhaustively in acceptance
    for n in range(2, 5):
        for g in enumerate_labeled_graphs(n):
            if not decide(g).planar:
                continue
            for e in g.sorted_edges():
                contracted, _, _ = contract_edge(g, e)
                assert decide(contracted).planar


def test_deleting_edges_never_creates_obstructions():
    # exhaustive at n <= 5 here; the n = 6 layer runs with the exhaustive
    # property suite
    from planarcert.graphs import delete_edge
    from planarcert.subdivision import find_kuratowski

    for n in range(2, 6):
        for g in enumerate_labeled_graphs(n):
            if find_kuratowski(g) is not None:
                continue
            for e in g.sorted_edges():
                assert find_kuratowski(delete_edge(g, e)) is None
