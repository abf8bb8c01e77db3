import pytest

from fiedler.graphs import build, parse_spec
from fiedler.models import Family, GraphSpec, Status
from fiedler.services.search import (
    SearchError,
    chain_neutrals_for,
    enumerate_specs,
    random_specs,
    remark_mh_for,
    run_claims,
    search_chain_neutrals,
    search_remark_mh,
)
from fiedler.vertextypes import cross_validate


# -------------------------------
# Spec enumeration
# -------------------------------


def test_enumerate_counts_and_order():
    specs = list(enumerate_specs(Family.DNG, 2, 2))
    assert len(specs) == 20
    assert specs[0] == GraphSpec(Family.DNG, (1,), (1,))
    assert specs == sorted(specs, key=lambda s: s.sort_key())


def test_enumerate_rejects_bad_bounds():
    with pytest.raises(SearchError):
        list(enumerate_specs(Family.NSG, 0, 2))


def test_random_specs_are_seeded():
    first = random_specs(Family.NSG, 10, seed=3)
    assert first == random_specs(Family.NSG, 10, seed=3)
    assert all(1 <= s.h <= 5 and max(s.m + s.n) <= 4 for s in first)
    assert random_specs(Family.DNG, 0) == []
    with pytest.raises(SearchError):
        random_specs(Family.DNG, -1)


# -------------------------------
# Chain-graph neutral search
# -------------------------------


def test_complete_bipartite_graphs_are_clean():
    assert search_chain_neutrals(1, 3) == []


def test_half_graphs_up_to_four():
    findings = search_chain_neutrals(4, 1)
    assert [f.spec for f in findings] == ["dng:1,1,1,1;1,1,1,1"] * 2
    plus, minus = findings
    assert plus.eigenvalue == pytest.approx(1.0) and plus.minpoly == [-1, 1]
    assert minus.eigenvalue == pytest.approx(-1.0) and minus.index == 7 and minus.minpoly == [1, 1]
    for f in findings:
        assert [row["cell"] for row in f.vertices] == ["U_2", "V_2"]
        assert f.verdict == "Neutral"
        assert f.cross_validated


def test_half_graphs_up_to_seven():
    findings = search_chain_neutrals(7, 1)
    by_spec = {}
    for f in findings:
        by_spec.setdefault(f.spec, []).append(f)
    assert set(by_spec) == {"dng:1,1,1,1;1,1,1,1", "dng:1,1,1,1,1,1,1;1,1,1,1,1,1,1"}
    h7 = by_spec["dng:1,1,1,1,1,1,1;1,1,1,1,1,1,1"]
    assert len(h7) == 6
    minpolys = sorted(tuple(f.minpoly) for f in h7)
    assert minpolys == sorted([(-1, 1), (1, 1), (-1, 1, 1), (-1, 1, 1), (-1, -1, 1), (-1, -1, 1)])
    assert all(f.cross_validated for f in findings)


def test_small_chain_graph_findings_cross_validate():
    for finding in search_chain_neutrals(2, 3):
        assert finding.cross_validated
        assert cross_validate(build(parse_spec(finding.spec)), finding.eigenvalue)


def test_single_spec_helper_matches_search():
    spec = parse_spec("half:4")
    assert chain_neutrals_for(spec) == search_chain_neutrals(4, 1)


def test_parallel_search_keeps_order():
    assert search_chain_neutrals(5, 1, workers=2) == search_chain_neutrals(5, 1, workers=1)


# -------------------------------
# Threshold graphs at -m_h
# -------------------------------


def test_remark_mh_skips_non_eigenvalues():
    assert remark_mh_for(parse_spec("nsg:2;1")) == []
    assert remark_mh_for(parse_spec("nsg:2,1;1,1")) == []


def test_remark_mh_golden():
    (finding,) = remark_mh_for(parse_spec("nsg:2,2,2;2,3,2"))
    assert finding.kind == "remark-mh"
    assert finding.eigenvalue == -2.0
    assert finding.verdict == "Neutral"
    assert [row["cell"] for row in finding.vertices] == ["V_3", "V_3"]
    assert finding.minpoly == [2, 1]


def test_remark_mh_search_follows_spec_order():
    order = [str(s) for s in enumerate_specs(Family.NSG, 2, 2)]
    findings = search_remark_mh(2, 2)
    positions = [order.index(f.spec) for f in findings]
    assert positions == sorted(positions)
    assert all(f.kind == "remark-mh" and parse_spec(f.spec).m[-1] == 2 for f in findings)


def test_remark_mh_needs_cells_of_two():
    with pytest.raises(SearchError):
        search_remark_mh(3, 1)


# -------------------------------
# Randomized claim runs
# -------------------------------


def test_run_claims_in_spec_order():
    specs = [parse_spec("half:2"), parse_spec("half:3")]
    results = run_claims(specs, ["dng-spectrum", "dng-downers"])
    assert [(r.claim, r.spec) for r in results] == [
        ("dng-spectrum", "dng:1,1;1,1"),
        ("dng-downers", "dng:1,1;1,1"),
        ("dng-spectrum", "dng:1,1,1;1,1,1"),
        ("dng-downers", "dng:1,1,1;1,1,1"),
    ]
    assert all(r.status == Status.PASS for r in results)


def test_run_claims_forwards_tolerances(monkeypatch):
    seen = []

    def record(spec, claims=None, cluster_tol=None, main_tol=None):
        seen.append((str(spec), cluster_tol, main_tol))
        return []

    monkeypatch.setattr("fiedler.services.search.run_spec_claims", record)
    assert run_claims([parse_spec("half:2")], workers=1, cluster_tol=1e-6, main_tol=1e-5) == []
    assert seen == [("dng:1,1;1,1", 1e-6, 1e-5)]
