import numpy as np
import pytest
from hypothesis import given

from fiedler.exactalg import MINUS_ONE, MINUS_OMEGA, OMEGA, ONE, ZERO, IntPolynomial
from fiedler.graphs import Graph, build, half_graph, parse_spec
from fiedler.models import CellTag, Route, VertexType
from fiedler.numspec import eig_sym
from fiedler.vertextypes import (
    ClassificationError,
    classify_all,
    classify_vertex,
    cross_validate,
    downer_sets,
    downers_via_eigenspace,
    identify_exact,
    resolve_eigenvalue,
    twin_classes,
)

from .strategies import any_specs


# -------------------------------
# Single vertices
# -------------------------------


def test_star_zero_types(star):
    for leaf in range(3):
        assert classify_vertex(star, ZERO, leaf) == VertexType.DOWNER
    assert classify_vertex(star, ZERO, 3) == VertexType.PARTER


def test_numeric_route_matches_exact(star):
    assert classify_vertex(star, 0.0, 3) == VertexType.PARTER
    assert classify_vertex(star, 1e-12, 0) == VertexType.DOWNER


def test_near_eigenvalue_of_deletion_is_still_a_downer():
    # G - 9 has an eigenvalue within the cluster tolerance of λ_14
    graph = build(parse_spec("nsg:3,3,1,2;4,2,1,1"))
    spectrum = eig_sym(graph)
    cluster = spectrum.cluster_of_index(14)
    assert classify_vertex(graph, cluster.value, 9) == VertexType.DOWNER
    exact = identify_exact(graph, cluster.value, cluster.multiplicity, spectrum.cluster_tol, factor=True)
    assert exact is not None and exact.minpoly.degree > 2
    assert classify_vertex(graph, exact, 9) == VertexType.DOWNER
    assert classify_all(graph, cluster.value).per_vertex == classify_all(graph, exact).per_vertex


def test_not_an_eigenvalue(star):
    with pytest.raises(ClassificationError, match="not an eigenvalue"):
        classify_vertex(star, ONE, 0)
    with pytest.raises(ClassificationError):
        classify_all(star, 0.5)


def test_impossible_multiplicity_jump():
    with pytest.raises(ValueError):
        VertexType.from_multiplicities(2, 4)


# -------------------------------
# Whole graphs
# -------------------------------


def test_half_graph_four_minus_one(h4):
    report = classify_all(h4, MINUS_ONE)
    assert report.k == 1
    assert report.vertices_of_type(VertexType.NEUTRAL) == [1, 5]
    assert report.vertices_of_type(VertexType.PARTER) == []
    assert report.cells_of_type(VertexType.NEUTRAL) == [CellTag("U", 2), CellTag("V", 2)]
    assert report.route == Route.EXACT


def test_half_graph_seven_omega():
    h7 = half_graph(7)
    report = classify_all(h7, OMEGA, cross_check=True)
    assert report.vertices_of_type(VertexType.NEUTRAL) == [2, 9]
    assert report.route == Route.BOTH
    assert classify_all(h7, MINUS_OMEGA).vertices_of_type(VertexType.NEUTRAL) == [2, 9]


def test_golden_minus_two_v3_neutral(golden):
    report = classify_all(golden, -2.0)
    assert report.per_cell[CellTag("V", 3)] == VertexType.NEUTRAL
    assert report.route == Route.NUMERIC
    assert not report.anomalies


def test_mixed_cell_is_reported(star):
    relabeled = Graph(star.adjacency, [CellTag("U", 1)] * 4)
    report = classify_all(relabeled, ZERO)
    assert report.per_cell[CellTag("U", 1)] is None
    assert report.anomalies and "mixed" in report.anomalies[0]


def test_empty_graph_rejected():
    with pytest.raises(ClassificationError):
        classify_all(Graph(np.zeros((0, 0), dtype=int)), 0.0)


def test_twin_classes(star, golden):
    assert sorted(map(sorted, twin_classes(star))) == [[0, 1, 2], [3]]
    assert sorted(map(sorted, twin_classes(golden))) == [list(range(a, b)) for a, b in ((0, 2), (2, 4), (4, 6), (6, 8), (8, 11), (11, 13))]


@given(any_specs)
def test_twin_shortcut_changes_nothing(spec):
    graph = build(spec)
    spectrum = eig_sym(graph)
    cluster = spectrum.cluster_of_index((graph.order + 1) // 2)
    fast = classify_all(graph, cluster.value, use_twins=True)
    slow = classify_all(graph, cluster.value, use_twins=False)
    assert fast.per_vertex == slow.per_vertex


@given(any_specs)
def test_downer_routes_agree(spec):
    graph = build(spec)
    spectrum = eig_sym(graph)
    for cluster in spectrum.clusters:
        via_eigenspace, via_multiplicity = downer_sets(graph, cluster.value, spectrum)
        assert via_eigenspace == via_multiplicity


def test_eigenspace_tolerance_defaults_to_the_cluster_tolerance(golden):
    spectrum = eig_sym(golden)
    for cluster in spectrum.clusters:
        assert downers_via_eigenspace(golden, cluster) == downers_via_eigenspace(golden, cluster, spectrum.cluster_tol)


def test_perron_value_has_only_downers(golden):
    spectrum = eig_sym(golden)
    report = classify_all(golden, spectrum.eigenvalue(1))
    assert report.downers == set(range(golden.order))


def test_cross_validate(star):
    assert cross_validate(star, ZERO)


# -------------------------------
# Eigenvalue selectors
# -------------------------------


def test_resolve_by_value(h4):
    resolved = resolve_eigenvalue(h4, value=-1.0)
    assert resolved.index == 7
    assert resolved.exact == MINUS_ONE
    assert resolved.target == MINUS_ONE


def test_resolve_by_minpoly_prefers_largest_root():
    resolved = resolve_eigenvalue(half_graph(7), minpoly=IntPolynomial((-1, 1, 1)))
    assert resolved.index == 5
    assert resolved.approx == pytest.approx(0.6180339887)


def test_resolve_by_index_identifies_golden_ratio():
    resolved = resolve_eigenvalue(half_graph(7), index=2)
    assert resolved.exact is not None
    assert resolved.exact.minpoly == MINUS_OMEGA.minpoly


def test_resolve_irrational_without_candidate(h4):
    resolved = resolve_eigenvalue(h4, index=1)
    assert resolved.exact is None
    assert resolved.target == pytest.approx(2.879385, abs=1e-6)


@pytest.mark.parametrize(
    "kwargs",
    [{}, {"value": 1.0, "index": 1}, {"index": 0}, {"index": 9}, {"value": 0.3}, {"minpoly": IntPolynomial((-2, 0, 0, 1))}],
)
def test_resolve_errors(h4, kwargs):
    with pytest.raises(ClassificationError):
        resolve_eigenvalue(h4, **kwargs)
