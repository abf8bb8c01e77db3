import json

import numpy as np
import pytest

from config import settings
from fiedler.graphs import GraphError
from fiedler.models import CellTag, Finding, Status, VerificationResult
from fiedler.numspec import eig_sym
from io_store import (
    dumps,
    dumps_line,
    findings_to_csv,
    fmt_float,
    graph_from_dict,
    graph_to_dict,
    graph_to_edge_list,
    load_graph,
    results_to_csv,
    results_to_lines,
    save_graph,
    spectrum_to_dict,
    summary_line,
    tolerance_header,
    write_output,
)


def test_fmt_float():
    assert fmt_float(1e-15) == 0.0
    assert fmt_float(-3e-13) == 0.0
    assert fmt_float(0.1 + 0.2) == 0.3
    assert fmt_float(np.float64(2.5)) == 2.5


def test_dumps_cleans_payload():
    payload = {"tag": CellTag("V", 3), "status": Status.PASS, "x": np.float64(1e-16), "n": np.int64(4)}
    assert json.loads(dumps_line(payload)) == {"tag": "V_3", "status": "pass", "x": 0.0, "n": 4}
    assert dumps({"a": 1}) == '{\n  "a": 1\n}'


def test_tolerance_header(h4):
    header = tolerance_header(kind="remark-mh", max_h=None)
    assert header == {
        "cluster_tol": settings.CLUSTER_TOL,
        "main_tol": settings.MAIN_TOL,
        "residual_tol": settings.RESIDUAL_TOL,
        "kind": "remark-mh",
    }
    assert tolerance_header(eig_sym(h4))["eigen_method"] == "eigh"


# -------------------------------
# Graphs
# -------------------------------


def test_graph_dict_round_trip(golden, tmp_path):
    data = graph_to_dict(golden)
    assert data["order"] == 13 and len(data["edges"]) == 49
    assert data["labels"][:2] == ["U_1", "U_1"]
    path = tmp_path / "golden.json"
    save_graph(golden, path)
    again = load_graph(path)
    assert np.array_equal(again.adjacency, golden.adjacency)
    assert again.labels == golden.labels


def test_edge_list(star):
    assert graph_to_edge_list(star) == "0 3\n1 3\n2 3\n"


@pytest.mark.parametrize(
    "data",
    [
        {"edges": []},
        {"order": 2, "edges": [[0]]},
        {"order": 2, "edges": [[0, 2]]},
        {"order": 2, "edges": [[1, 1]]},
    ],
)
def test_graph_from_dict_rejects(data):
    with pytest.raises(GraphError):
        graph_from_dict(data)


def test_unlabelled_graph():
    graph = graph_from_dict({"order": 3, "edges": [[0, 1], [1, 2]]})
    assert graph.labels == (None, None, None)
    assert graph.edges() == [(0, 1), (1, 2)]


def test_load_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_graph(tmp_path / "nope.json")


def test_spectrum_dict(star):
    data = spectrum_to_dict(eig_sym(star), {"0": 2})
    assert [c["multiplicity"] for c in data["clusters"]] == [1, 2, 1]
    assert data["exact_multiplicities"] == {"0": 2}
    assert "eigen_method" in data["tolerances"]


# -------------------------------
# Result streams
# -------------------------------


def _results():
    return [
        VerificationResult("nsg-spectrum", "nsg:1;1", Status.PASS),
        VerificationResult("interval", "nsg:1;1", Status.FAIL, notes=["a", "b"]),
        VerificationResult("localization", "nsg:1;1", Status.SKIP),
    ]


def test_results_to_lines():
    lines = results_to_lines(_results()).splitlines()
    assert len(lines) == 3
    assert json.loads(lines[1])["status"] == "fail"


def test_results_to_csv():
    rows = results_to_csv(_results()).splitlines()
    assert rows[0] == "claim,spec,status,notes"
    assert rows[2] == "interval,nsg:1;1,fail,a | b"


def test_findings_to_csv():
    finding = Finding(
        kind="chain-neutral",
        spec="dng:1,1,1,1;1,1,1,1",
        eigenvalue=-1.0000000000001,
        index=7,
        minpoly=[1, 1],
        vertices=[{"id": 5, "cell": "V_2", "type": "Neutral"}, {"id": 1, "cell": "U_2", "type": "Neutral"}],
        verdict="Neutral",
        cross_validated=True,
    )
    rows = findings_to_csv([finding]).splitlines()
    assert rows[0] == "kind,spec,index,eigenvalue,verdict,vertices,cross_validated"
    assert rows[1] == 'chain-neutral,"dng:1,1,1,1;1,1,1,1",7,-1.0,Neutral,U_2 V_2,True'


def test_summary_line():
    assert summary_line(_results()) == {"pass": 1, "fail": 1, "skip": 1}
    assert summary_line([]) == {"pass": 0, "fail": 0, "skip": 0}


def test_write_output(tmp_path, capsys):
    target = tmp_path / "out.txt"
    write_output("hello\n", str(target))
    assert target.read_text(encoding="utf-8") == "hello\n"
    write_output("to stdout\n")
    assert capsys.readouterr().out == "to stdout\n"
