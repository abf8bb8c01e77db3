import logging
import math

import numpy as np
import pytest
from hypothesis import given

from config import settings
from fiedler.graphs import build, delete_vertex, half_graph, parse_spec
from fiedler.numspec import (
    NumericError,
    check_interlacing,
    eig_sym,
    eigen_residual,
    interlacing_violations,
    is_main_numeric,
    jacobi_eig,
    numeric_multiplicity,
    verify_eigenvector,
)

from .strategies import any_specs


def test_k2_spectrum():
    spectrum = eig_sym(build(parse_spec("nsg:1;1")))
    assert spectrum.values.tolist() == pytest.approx([1.0, -1.0])
    assert [c.main for c in spectrum.clusters] == [True, False]


def test_star_spectrum(star):
    spectrum = eig_sym(star)
    root3 = math.sqrt(3)
    assert spectrum.values.tolist() == pytest.approx([root3, 0.0, 0.0, -root3], abs=1e-12)
    zero = spectrum.cluster_near(0.0)
    assert zero.multiplicity == 2 and zero.first_index == 2
    assert not zero.main
    assert spectrum.multiplicity(0.0) == 2


def test_half_graph_four_closed_form(h4):
    spectrum = eig_sym(h4)
    alphas = [(2 * p + 1) * math.pi / 18 for p in range(4)]
    positive = sorted((1 / (2 * math.sin(a)) for a in alphas), reverse=True)
    expected = positive + [-x for x in reversed(positive)]
    assert spectrum.values.tolist() == pytest.approx(expected, abs=1e-9)
    assert spectrum.eigenvalue(7) == pytest.approx(-1.0)
    assert spectrum.cluster_of_index(7).first_index == 7


def test_eigenvalue_index_range(h4):
    spectrum = eig_sym(h4)
    with pytest.raises(NumericError):
        spectrum.eigenvalue(0)
    with pytest.raises(NumericError):
        spectrum.cluster_of_index(9)


def test_unknown_method(h4):
    with pytest.raises(NumericError):
        eig_sym(h4, method="lanczos")


@given(any_specs)
def test_spectrum_invariants(spec):
    graph = build(spec)
    spectrum = eig_sym(graph)
    values = spectrum.values
    assert np.all(np.diff(values) <= 1e-12)
    assert sum(c.multiplicity for c in spectrum.clusters) == graph.order
    assert abs(values.sum()) <= 1e-8 * graph.order
    assert spectrum.max_residual <= settings.RESIDUAL_TOL * graph.order
    # the Perron value is simple and main on a connected graph
    assert spectrum.clusters[0].multiplicity == 1 and spectrum.clusters[0].main


@given(any_specs)
def test_jacobi_agrees_with_eigh(spec):
    graph = build(spec)
    jacobi = eig_sym(graph, method="jacobi")
    eigh = eig_sym(graph, method="eigh")
    assert jacobi.values == pytest.approx(eigh.values, abs=1e-8)
    assert [c.multiplicity for c in jacobi.clusters] == [c.multiplicity for c in eigh.clusters]
    assert [c.main for c in jacobi.clusters] == [c.main for c in eigh.clusters]


def test_jacobi_reports_non_convergence():
    a = half_graph(5).float_matrix()
    _, _, converged = jacobi_eig(a, tol=1e-14, max_sweeps=0)
    assert not converged


def test_jacobi_fallback_logs(h4, caplog, monkeypatch):
    monkeypatch.setattr(settings, "JACOBI_MAX_SWEEPS", 0)
    # the CLI logging config stops propagation at "fiedler"
    logger = logging.getLogger("fiedler")
    logger.addHandler(caplog.handler)
    try:
        spectrum = eig_sym(h4, method="jacobi")
    finally:
        logger.removeHandler(caplog.handler)
    assert spectrum.method == "eigh"
    assert "did not converge" in caplog.text


def test_empty_graph():
    single = delete_vertex(build(parse_spec("nsg:1;1")), 0)
    assert eig_sym(delete_vertex(single, 0)).order == 0


def test_residual_checks(h4):
    spectrum = eig_sym(h4)
    pair = spectrum.pairs[0]
    assert verify_eigenvector(h4, pair.value, pair.vector)
    assert not verify_eigenvector(h4, pair.value + 0.5, pair.vector)
    with pytest.raises(NumericError):
        eigen_residual(h4, 1.0, [0.0] * 8)
    with pytest.raises(NumericError):
        eigen_residual(h4, 1.0, [1.0] * 3)


def test_is_main_numeric_rejects_foreign_cluster(h4, star):
    cluster = eig_sym(star).clusters[0]
    with pytest.raises(NumericError):
        is_main_numeric(h4, cluster)


def test_numeric_multiplicity(golden):
    assert numeric_multiplicity(golden, 0.0) == 3
    assert numeric_multiplicity(golden, -1.0) == 4


@given(any_specs)
def test_vertex_deletion_interlaces(spec):
    graph = build(spec)
    if graph.order < 2:
        return
    assert check_interlacing(graph, delete_vertex(graph, 0))


def test_interlacing_rejects_same_size(h4):
    with pytest.raises(NumericError):
        interlacing_violations(h4, h4)
