import json
import logging

import pytest

from config import settings
from io_store import load_graph
from main import main


@pytest.fixture(autouse=True)
def _detach_cli_handlers():
    """main() binds stderr handlers to the captured stream; drop them after each test."""
    yield
    for name in ("fiedler", "main", "io_store"):
        logging.getLogger(name).handlers.clear()


def _lines(text):
    """Drop the tolerance header of a JSON-lines stream."""
    header, *rest = text.splitlines()
    assert "tolerances" in json.loads(header)
    return [json.loads(line) for line in rest]


# -------------------------------
# gen / spectrum
# -------------------------------


def test_gen_half_graph(capsys):
    assert main(["gen", "half:4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 8
    assert len(data["edges"]) == 10
    assert data["labels"][0] == "U_1"


def test_gen_text_and_out(tmp_path, capsys):
    assert main(["gen", "nsg:3;1", "--format", "text"]) == 0
    assert capsys.readouterr().out.startswith("# order 4, 3 edges\n")
    target = tmp_path / "golden.json"
    assert main(["gen", "nsg:2,2,2;2,3,2", "--out", str(target)]) == 0
    assert load_graph(target).edge_count == 49


def test_gen_bad_spec(capsys):
    assert main(["gen", "nsg:0;1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_gen_rejects_csv(capsys):
    assert main(["gen", "half:2", "--format", "csv"]) == 2
    assert "--format" in capsys.readouterr().err


def test_spectrum_exact_multiplicities(capsys):
    assert main(["spectrum", "nsg:2,2,2;2,3,2", "--exact=0,-1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["exact_multiplicities"] == {"0": 3, "-1": 4}
    assert sum(c["multiplicity"] for c in data["clusters"]) == 13


def test_spectrum_complete_bipartite(capsys):
    assert main(["spectrum", "dng:2;2", "--method", "jacobi"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["values"] == pytest.approx([2.0, 0.0, 0.0, -2.0])
    assert data["tolerances"]["eigen_method"] == "jacobi"


def test_spectrum_text(capsys):
    assert main(["spectrum", "nsg:3;1", "--format", "text", "--exact", "0"]) == 0
    out = capsys.readouterr().out
    assert "x2  non-main" in out
    assert out.rstrip().endswith("mult(0) = 2")


# -------------------------------
# classify
# -------------------------------


def test_classify_golden(capsys):
    assert main(["classify", "nsg:2,2,2;2,3,2", "--value", "-2"]) == 0
    data = json.loads(capsys.readouterr().out)
    cells = {row["tag"]: row["type"] for row in data["cells"]}
    assert cells["V_3"] == "Neutral"
    assert cells["U_3"] == "Downer"
    assert data["lambda"]["approx"] == -2.0


def test_classify_half_graph_by_minpoly(capsys):
    assert main(["classify", "half:4", "--minpoly=1,1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["lambda"]["index"] == 7
    assert data["lambda"]["minpoly_text"] == "x + 1"
    neutral = [row["id"] for row in data["vertices"] if row["type"] == "Neutral"]
    assert neutral == [1, 5]


def test_classify_by_index_text(capsys):
    assert main(["classify", "nsg:1;1", "--index", "1", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# λ_1 = 1")
    assert "U_1: Downer" in out


def test_classify_cross_check(capsys):
    assert main(["classify", "half:7", "--minpoly=-1,1,1", "--cross-check"]) == 0
    assert json.loads(capsys.readouterr().out)["route"] == "Both-agree"


def test_classify_bad_selector(capsys):
    assert main(["classify", "half:4", "--value", "0.3"]) == 3
    assert "error:" in capsys.readouterr().err


def test_classify_needs_a_selector(capsys):
    assert main(["classify", "half:4"]) == 2


# -------------------------------
# verify / search
# -------------------------------


def test_verify_interval_claim(capsys):
    assert main(["verify", "nsg:1,1,5;1,1,8", "--claim", "interval"]) == 0
    captured = capsys.readouterr()
    (result,) = _lines(captured.out)
    assert result["claim"] == "interval" and result["status"] == "pass"
    assert captured.err.strip().endswith("1 claims: 1 pass, 0 fail, 0 skip")


def test_verify_skips_other_family(capsys):
    assert main(["verify", "dng:1,1;1,1", "--claim", "dng-spectrum", "--claim", "nsg-spectrum"]) == 0
    statuses = [r["status"] for r in _lines(capsys.readouterr().out)]
    assert statuses == ["pass", "skip"]


def test_verify_random_csv(capsys):
    argv = ["verify", "--random", "2", "--family", "both", "--seed", "3", "--claim", "perron-downers", "--format", "csv"]
    assert main(argv) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0] == "claim,spec,status,notes"
    assert len(rows) == 5
    assert all(",pass," in row for row in rows[1:])


def test_verify_random_fixed_seed_threshold_suite(capsys):
    argv = ["verify", "--random", "50", "--seed", "7", "--family", "nsg", "--max-h", "5", "--max-cell", "4"]
    assert main(argv) == 0
    captured = capsys.readouterr()
    assert all(r["status"] != "fail" for r in _lines(captured.out))
    assert " 0 fail," in captured.err


def test_verify_random_forwards_tolerances(monkeypatch, capsys):
    seen = {}

    def record(specs, claims, workers, cluster_tol, main_tol):
        seen.update(cluster_tol=cluster_tol, main_tol=main_tol)
        return []

    monkeypatch.setattr("main.run_claims", record)
    assert main(["verify", "--random", "1", "--cluster-tol", "1e-6", "--main-tol", "1e-5"]) == 0
    assert seen == {"cluster_tol": 1e-6, "main_tol": 1e-5}


def test_verify_chain_cell_outside_range(capsys):
    assert main(["verify", "half:4", "--cell", "U_2", "--index", "7"]) == 0
    results = _lines(capsys.readouterr().out)
    assert len(results) == 5
    assert {r["status"] for r in results} == {"skip"}


def test_verify_cell_needs_index(capsys):
    assert main(["verify", "half:4", "--cell", "U_2"]) == 2
    assert "--index" in capsys.readouterr().err


def test_verify_needs_input(capsys):
    assert main(["verify"]) == 2


def test_tolerance_flags_are_restored(capsys):
    before = settings.CLUSTER_TOL
    assert main(["verify", "nsg:2;1", "--claim", "nsg-spectrum", "--cluster-tol", "1e-6"]) == 0
    assert settings.CLUSTER_TOL == before


def test_search_chain_neutrals(capsys):
    assert main(["search", "chain-neutrals", "--max-h", "4", "--max-cell", "1"]) == 0
    captured = capsys.readouterr()
    findings = _lines(captured.out)
    assert [f["index"] for f in findings] == [2, 7]
    assert captured.err.strip().endswith("2 findings in 1 specs")


def test_search_csv(capsys):
    assert main(["search", "chain-neutrals", "--max-h", "4", "--max-cell", "1", "--format", "csv"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0].startswith("kind,spec,index")
    assert len(rows) == 3


def test_search_remark_mh_bounds(capsys):
    assert main(["search", "remark-mh", "--max-h", "2", "--max-cell", "1"]) == 2


# -------------------------------
# argparse edges
# -------------------------------


def test_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.startswith("fiedler ")


def test_no_command(capsys):
    assert main([]) == 2
    assert "usage:" in capsys.readouterr().out


def test_unknown_claim(capsys):
    assert main(["verify", "half:2", "--claim", "nope"]) == 2
