"""
Executable checks of the vertex-type theorems for threshold (NSG) and chain
(DNG) graphs, and the half-graph counterexample constructions.

Every ``verify_*`` function takes a spec (plus an optional shared
:class:`Analysis`) and returns a :class:`VerificationResult`. Called without an
eigenvalue they sweep every eigenvalue the statement applies to; a failing
result always carries the violating eigenvalue, cell and multiplicities.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from config import settings

from .exactalg import (
    MINUS_ONE,
    MINUS_OMEGA,
    OMEGA,
    ONE,
    ZERO,
    AlgebraicNumber,
    eigenvalue_multiplicity,
)
from .graphs import (
    Graph,
    build,
    cell_vertices,
    delete_vertex,
    derived_specs,
    duplicate_position,
    duplicate_vertex,
    half_graph,
    induced_subgraph,
    is_connected,
    nontrivial_components,
    parse_spec,
    recognize,
    validate_family,
)
from .models import CellTag, Family, GraphSpec, Status, VerificationResult, VertexType
from .numspec import Cluster, Spectrum, eig_sym, eigen_residual, interlacing_violations, numeric_multiplicity, verify_eigenvector
from .vertextypes import (
    Eigenvalue,
    VertexTypeReport,
    classify_all,
    downers_via_eigenspace,
    identify_exact,
)
from .zomega import OMEGA as Z_OMEGA
from .zomega import ZOmega

logger = logging.getLogger(__name__)


class PreconditionError(Exception):
    pass


# -------------------------------
# Shared per-spec state
# -------------------------------


class Analysis:
    """Graph, spectrum and cached per-eigenvalue classifications of one spec."""

    def __init__(self, spec: GraphSpec, cluster_tol: Optional[float] = None, main_tol: Optional[float] = None):
        self.spec = spec
        self.graph = build(spec)
        self.spectrum = eig_sym(self.graph, cluster_tol=cluster_tol, main_tol=main_tol)
        self.cluster_tol = cluster_tol
        self._targets: Dict[int, Eigenvalue] = {}
        self._reports: Dict[int, VertexTypeReport] = {}

    @property
    def tau(self) -> float:
        return self.spectrum.cluster_tol

    def near(self, value: float, target: float) -> bool:
        return abs(value - target) <= self.tau

    def clusters(self, exclude: Sequence[float] = ()) -> List[Cluster]:
        return [c for c in self.spectrum.clusters if not any(self.near(c.value, e) for e in exclude)]

    def cluster_for(self, lam: Eigenvalue) -> Cluster:
        value = lam.approx if isinstance(lam, AlgebraicNumber) else float(lam)
        cluster = self.spectrum.cluster_near(value)
        if cluster is None:
            raise PreconditionError(f"{value:.10g} is not an eigenvalue of {self.spec}")
        return cluster

    def target(self, cluster: Cluster) -> Eigenvalue:
        key = cluster.positions[0]
        if key not in self._targets:
            exact = identify_exact(self.graph, cluster.value, cluster.multiplicity, self.tau, factor=True)
            self._targets[key] = exact if exact is not None else cluster.value
        return self._targets[key]

    def report(self, cluster: Cluster) -> VertexTypeReport:
        key = cluster.positions[0]
        if key not in self._reports:
            self._reports[key] = classify_all(self.graph, self.target(cluster), self.cluster_tol)
        return self._reports[key]

    def cell_type(self, cluster: Cluster, side: str, index: int) -> Optional[VertexType]:
        return self.report(cluster).per_cell.get(CellTag(side, index))

    def all_type(self, cluster: Cluster, side: str, index: int, kind: VertexType) -> bool:
        return self.cell_type(cluster, side, index) == kind


def _analysis(spec: GraphSpec, ctx: Optional[Analysis]) -> Analysis:
    if ctx is not None and ctx.spec == spec:
        return ctx
    return Analysis(spec)


def _finish(
    claim: str,
    spec: Union[GraphSpec, str],
    violations: List[Dict],
    witnesses: Optional[Dict] = None,
    notes: Optional[List[str]] = None,
) -> VerificationResult:
    witnesses = dict(witnesses or {})
    if violations:
        witnesses["violations"] = violations
    return VerificationResult(
        claim=claim,
        spec=str(spec),
        status=Status.FAIL if violations else Status.PASS,
        witnesses=witnesses,
        notes=list(notes or []),
    )


def _skip(claim: str, spec: GraphSpec, reason: str) -> VerificationResult:
    logger.info("%s on %s skipped: %s", claim, spec, reason)
    return VerificationResult(claim=claim, spec=str(spec), status=Status.SKIP, notes=[reason])


def _require_family(spec: GraphSpec, family: Family) -> None:
    if spec.family != family:
        raise PreconditionError(f"{spec} is not a {family.label} graph spec")


def _lam_clusters(ctx: Analysis, lam: Optional[Eigenvalue], exclude: Sequence[float]) -> List[Cluster]:
    if lam is None:
        return ctx.clusters(exclude)
    cluster = ctx.cluster_for(lam)
    if any(ctx.near(cluster.value, e) for e in exclude):
        excluded = ", ".join(f"{e:g}" for e in exclude)
        raise PreconditionError(f"λ = {cluster.value:.10g} is excluded (λ ∈ {{{excluded}}})")
    return [cluster]


def _cell_witness(ctx: Analysis, cluster: Cluster, side: str, index: int) -> Dict:
    report = ctx.report(cluster)
    kind = report.per_cell.get(CellTag(side, index))
    return {
        "lambda": cluster.value,
        "index": cluster.first_index,
        "cell": f"{side}_{index}",
        "type": kind.value if kind else "mixed",
        "k": report.k,
    }


# -------------------------------
# Spectral shape
# -------------------------------


def nsg_formula_multiplicities(spec: GraphSpec) -> Tuple[int, int]:
    """(mult(0), mult(-1)) of NSG(m; n)."""
    mult_zero = spec.M - spec.h
    mult_minus_one = spec.N - spec.h + 1 if spec.m[-1] == 1 else spec.N - spec.h
    return mult_zero, mult_minus_one


def dng_formula_zero(spec: GraphSpec) -> int:
    return spec.M + spec.N - 2 * spec.h


def verify_nsg_spectrum(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    _require_family(spec, Family.NSG)
    ctx = _analysis(spec, ctx)
    tau, h = ctx.tau, spec.h
    violations = []

    positive = [c for c in ctx.spectrum.clusters if c.value > tau]
    if len(positive) != h or any(c.multiplicity != 1 for c in positive):
        violations.append({"bullet": "positive", "expected": h, "clusters": [[c.value, c.multiplicity] for c in positive]})

    expected_below = h - 1 if spec.m[-1] == 1 else h
    below = [c for c in ctx.spectrum.clusters if c.value < -1 - tau]
    if len(below) != expected_below or any(c.multiplicity != 1 for c in below):
        violations.append(
            {"bullet": "below -1", "expected": expected_below, "clusters": [[c.value, c.multiplicity] for c in below]}
        )

    want_zero, want_minus_one = nsg_formula_multiplicities(spec)
    got_zero = eigenvalue_multiplicity(ctx.graph, ZERO)
    got_minus_one = eigenvalue_multiplicity(ctx.graph, MINUS_ONE)
    if got_zero != want_zero:
        violations.append({"bullet": "mult(0)", "expected": want_zero, "exact": got_zero})
    if got_minus_one != want_minus_one:
        violations.append({"bullet": "mult(-1)", "expected": want_minus_one, "exact": got_minus_one})

    for c in ctx.clusters(exclude=(0.0, -1.0)):
        if not c.main:
            violations.append({"bullet": "main", "lambda": c.value, "index": c.first_index})

    witnesses = {"mult0": got_zero, "mult_minus1": got_minus_one, "positive": len(positive), "below_minus1": len(below)}
    return _finish("nsg-spectrum", spec, violations, witnesses)


def verify_dng_spectrum(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    _require_family(spec, Family.DNG)
    ctx = _analysis(spec, ctx)
    values, tau, h = ctx.spectrum.values, ctx.tau, spec.h
    violations = []

    asymmetry = float(np.max(np.abs(values + values[::-1]))) if len(values) else 0.0
    if asymmetry > max(tau, 1e-7):
        violations.append({"bullet": "symmetric", "max_asymmetry": asymmetry})

    above = [c for c in ctx.spectrum.clusters if c.value > 0.5]
    below = [c for c in ctx.spectrum.clusters if c.value < -0.5]
    for name, group in (("above 1/2", above), ("below -1/2", below)):
        if len(group) != h or any(c.multiplicity != 1 for c in group):
            violations.append({"bullet": name, "expected": h, "clusters": [[c.value, c.multiplicity] for c in group]})

    want_zero = dng_formula_zero(spec)
    got_zero = eigenvalue_multiplicity(ctx.graph, ZERO)
    if got_zero != want_zero:
        violations.append({"bullet": "mult(0)", "expected": want_zero, "exact": got_zero})
    if len(above) + len(below) + got_zero != spec.order:
        violations.append({"bullet": "no eigenvalue in (-1/2, 1/2) besides 0"})
    return _finish("dng-spectrum", spec, violations, {"mult0": got_zero, "asymmetry": asymmetry})


# -------------------------------
# Boundary downers and adjacent cells
# -------------------------------


def verify_nsg_downers(
    spec: GraphSpec, lam: Optional[Eigenvalue] = None, ctx: Optional[Analysis] = None
) -> VerificationResult:
    """
    U_1, V_1, U_h are downers for every λ ∉ {0, -1} other than λ_1; V_h too
    unless λ = -m_h with m_h ≥ 2, in which case its type is recorded.
    """
    _require_family(spec, Family.NSG)
    ctx = _analysis(spec, ctx)
    clusters = _lam_clusters(ctx, lam, exclude=(0.0, -1.0))
    if lam is not None and clusters[0].first_index == 1:
        raise PreconditionError("λ_1 is excluded; every vertex is a downer for it")
    clusters = [c for c in clusters if c.first_index != 1]
    h, m_h = spec.h, spec.m[-1]
    violations, findings = [], []
    for cluster in clusters:
        for side, index in (("U", 1), ("V", 1), ("U", h)):
            if not ctx.all_type(cluster, side, index, VertexType.DOWNER):
                violations.append(_cell_witness(ctx, cluster, side, index))
        exceptional = m_h >= 2 and ctx.near(cluster.value, -m_h)
        if exceptional:
            findings.append(_cell_witness(ctx, cluster, "V", h))
        elif not ctx.all_type(cluster, "V", h, VertexType.DOWNER):
            violations.append(_cell_witness(ctx, cluster, "V", h))
    notes = [f"λ = -m_h = {-m_h}: V_{h} observed {f['type']}" for f in findings]
    witnesses = {"eigenvalues": len(clusters)}
    if findings:
        witnesses["exceptional"] = findings
    return _finish("nsg-downers", spec, violations, witnesses, notes)


def verify_dng_downers(
    spec: GraphSpec, lam: Optional[Eigenvalue] = None, ctx: Optional[Analysis] = None
) -> VerificationResult:
    _require_family(spec, Family.DNG)
    ctx = _analysis(spec, ctx)
    clusters = _lam_clusters(ctx, lam, exclude=(0.0,))
    h = spec.h
    violations = []
    for cluster in clusters:
        for side, index in (("U", 1), ("U", h), ("V", 1), ("V", h)):
            if not ctx.all_type(cluster, side, index, VertexType.DOWNER):
                violations.append(_cell_witness(ctx, cluster, side, index))
    return _finish("dng-downers", spec, violations, {"eigenvalues": len(clusters)})


def verify_adjacent_cells(
    spec: GraphSpec, lam: Optional[Eigenvalue] = None, ctx: Optional[Analysis] = None
) -> VerificationResult:
    """
    Of two consecutive cells on one side at least one holds only downers.
    The chain statement names the U side; V follows by swapping color classes.
    """
    ctx = _analysis(spec, ctx)
    exclude = (0.0, -1.0) if spec.family == Family.NSG else (0.0,)
    clusters = _lam_clusters(ctx, lam, exclude)
    violations = []
    for cluster in clusters:
        for side in ("U", "V"):
            for i in range(1, spec.h):
                first = ctx.all_type(cluster, side, i, VertexType.DOWNER)
                second = ctx.all_type(cluster, side, i + 1, VertexType.DOWNER)
                if not first and not second:
                    violations.append(
                        {
                            "lambda": cluster.value,
                            "index": cluster.first_index,
                            "cells": [f"{side}_{i}", f"{side}_{i + 1}"],
                        }
                    )
    return _finish("adjacent-cells", spec, violations, {"eigenvalues": len(clusters)})


# -------------------------------
# Localization of neutral cells (threshold graphs)
# -------------------------------


def _index_in(sub_spec: GraphSpec, value: float, tau: float) -> Tuple[Optional[int], Spectrum]:
    sub = eig_sym(build(sub_spec))
    for cluster in sub.clusters:
        if abs(cluster.value - value) <= tau:
            return cluster.first_index, sub
    return None, sub


def _localize_u(ctx: Analysis, cluster: Cluster, s: int) -> Tuple[Dict, List[str]]:
    spec, tau = ctx.spec, ctx.tau
    n, i, lam = spec.order, cluster.first_index, cluster.value
    derived = derived_specs(spec, s)
    n_prime = derived.prime.order
    j, sub = _index_in(derived.prime, lam, tau)
    head = eig_sym(build(derived.double_prime)).values
    lo, hi = float(head[-1]), float(head[0])
    checks = {"eigenvalue-of-tail": j is not None}
    if j is not None:
        checks["index-sandwich"] = j < i < n - n_prime + j
        if i <= n_prime:
            checks["not-last-of-tail"] = abs(lam - sub.eigenvalue(n_prime)) > tau
    checks["strict-interval"] = lo + tau < lam < hi - tau
    witness = {
        "lambda": lam,
        "i": i,
        "cell": f"U_{s}",
        "tail": str(derived.prime),
        "j": j,
        "n_prime": n_prime,
        "interval": [lo, hi],
        "checks": checks,
    }
    return witness, []


def _localize_v(ctx: Analysis, cluster: Cluster, s: int) -> Tuple[Dict, List[str]]:
    spec, tau = ctx.spec, ctx.tau
    i, lam = cluster.first_index, cluster.value
    n_s = spec.n[s - 1]
    merged = derived_specs(spec, s).merged
    j, sub = _index_in(merged, lam, tau)
    checks = {"eigenvalue-of-merged": j is not None}
    notes = []
    if j is not None:
        checks["index-sandwich"] = j <= i <= n_s + j
        if not j < i < n_s + j:
            notes.append(f"V_{s} at λ_{i}: strict form j < i < n_s + j fails (j = {j}, n_s = {n_s})")
        n_merged = merged.order
        if i <= n_merged and abs(lam - sub.eigenvalue(n_merged)) <= tau:
            notes.append(f"V_{s} at λ_{i}: λ equals the smallest eigenvalue of {merged}")
    witness = {
        "lambda": lam,
        "i": i,
        "cell": f"V_{s}",
        "merged": str(merged),
        "j": j,
        "n_s": n_s,
        "checks": checks,
    }
    return witness, notes


def verify_neutral_localization(
    spec: GraphSpec,
    s: Optional[int] = None,
    i: Optional[int] = None,
    side: str = "U",
    ctx: Optional[Analysis] = None,
) -> VerificationResult:
    """
    For an all-Neutral cell U_s (2 ≤ s ≤ h-1) at λ_i ∉ {0, -1}: λ_i is an
    eigenvalue λ'_j of the tail G', j < i < n - n' + j, λ_i ≠ λ'_{n'} when
    i ≤ n', and λ_i lies strictly inside the spectral range of the head G''.
    For V_s (2 ≤ s ≤ h): λ_i is an eigenvalue of H_s = G - V_s with
    j ≤ i ≤ n_s + j; the strict sandwich is reported as a note.

    Without ``s``/``i`` every all-Neutral cell of every eligible eigenvalue is checked.
    """
    _require_family(spec, Family.NSG)
    ctx = _analysis(spec, ctx)
    h = spec.h
    if (s is None) != (i is None):
        raise PreconditionError("give both the cell index s and the eigenvalue index i, or neither")

    cases: List[Tuple[Cluster, str, int]] = []
    if s is not None:
        lo_s, hi_s = (2, h - 1) if side == "U" else (2, h)
        if not lo_s <= s <= hi_s:
            raise PreconditionError(f"{side}_{s}: cell index must lie in {lo_s}..{hi_s}")
        cluster = ctx.spectrum.cluster_of_index(i)
        if any(ctx.near(cluster.value, e) for e in (0.0, -1.0)):
            raise PreconditionError(f"λ_{i} = {cluster.value:.10g} is excluded (λ ∈ {{0, -1}})")
        if not ctx.all_type(cluster, side, s, VertexType.NEUTRAL):
            raise PreconditionError(f"{side}_{s} is not all-Neutral for λ_{i}")
        cases.append((cluster, side, s))
    else:
        for cluster in ctx.clusters(exclude=(0.0, -1.0)):
            for t in range(2, h):
                if ctx.all_type(cluster, "U", t, VertexType.NEUTRAL):
                    cases.append((cluster, "U", t))
            for t in range(2, h + 1):
                if ctx.all_type(cluster, "V", t, VertexType.NEUTRAL):
                    cases.append((cluster, "V", t))

    violations, witnesses, notes = [], [], []
    for cluster, cell_side, t in cases:
        locate = _localize_u if cell_side == "U" else _localize_v
        witness, extra = locate(ctx, cluster, t)
        witnesses.append(witness)
        notes.extend(extra)
        if not all(witness["checks"].values()):
            violations.append(witness)
    if not cases:
        notes.append("no all-Neutral cell in the theorem's range")
    return _finish("localization", spec, violations, {"cases": witnesses}, notes)


def nsg_head_intervals(spec: GraphSpec) -> Dict[int, Tuple[float, float]]:
    """I_s = (λ_min(G''_s), λ_max(G''_s)) for 2 ≤ s ≤ h - 1."""
    _require_family(spec, Family.NSG)
    intervals = {}
    for s in range(2, spec.h):
        head = eig_sym(build(derived_specs(spec, s).double_prime)).values
        intervals[s] = (float(head[-1]), float(head[0]))
    return intervals


# Intervals quoted (to two decimals) in the literature for specific graphs.
QUOTED_INTERVALS: Dict[str, Dict[int, Tuple[float, float]]] = {
    "nsg:1,1,5;1,1,8": {2: (-1.48, 2.17)},
}


def verify_interval_corollary(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    """Every λ ∉ {0, -1} outside the union of the I_s has all of U as downers."""
    _require_family(spec, Family.NSG)
    ctx = _analysis(spec, ctx)
    intervals = nsg_head_intervals(spec)
    u_vertices = [v for v, tag in enumerate(ctx.graph.labels) if tag is not None and tag.side == "U"]
    violations, outside = [], []
    for cluster in ctx.clusters(exclude=(0.0, -1.0)):
        if any(lo < cluster.value < hi for lo, hi in intervals.values()):
            continue
        outside.append(cluster.first_index)
        report = ctx.report(cluster)
        bad = [v for v in u_vertices if report.per_vertex[v] != VertexType.DOWNER]
        if bad:
            violations.append({"lambda": cluster.value, "index": cluster.first_index, "vertices": bad})

    notes = []
    for s, (q_lo, q_hi) in QUOTED_INTERVALS.get(str(spec), {}).items():
        lo, hi = intervals[s]
        if abs(lo - q_lo) > settings.INTERVAL_TOL or abs(hi - q_hi) > settings.INTERVAL_TOL:
            violations.append({"interval": s, "computed": [lo, hi], "quoted": [q_lo, q_hi]})
        else:
            notes.append(f"I_{s} = ({lo:.4f}, {hi:.4f}) matches the quoted ({q_lo}, {q_hi})")
    witnesses = {"intervals": {str(s): list(iv) for s, iv in intervals.items()}, "outside": outside}
    return _finish("interval", spec, violations, witnesses, notes)


def verify_lambda_n_downers(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    """
    Every vertex is a downer for the least eigenvalue, except V_h when
    λ_n = -m_h with m_h ≥ 2; then the type of V_h is recorded.
    """
    _require_family(spec, Family.NSG)
    ctx = _analysis(spec, ctx)
    cluster = ctx.spectrum.cluster_of_index(spec.order)
    report = ctx.report(cluster)
    h, m_h = spec.h, spec.m[-1]
    exceptional = m_h >= 2 and ctx.near(cluster.value, -m_h)
    skipped = set(cell_vertices(spec, CellTag("V", h))) if exceptional else set()
    bad = [v for v, kind in sorted(report.per_vertex.items()) if kind != VertexType.DOWNER and v not in skipped]
    violations = [{"lambda": cluster.value, "vertices": bad, "k": report.k}] if bad else []
    witnesses = {"lambda_n": cluster.value, "route": report.route.value}
    notes = []
    if exceptional:
        finding = _cell_witness(ctx, cluster, "V", h)
        witnesses["exceptional"] = [finding]
        notes.append(f"λ_n = -m_h = {-m_h}: V_{h} observed {finding['type']}")
    return _finish("lambda-n-downers", spec, violations, witnesses, notes)


# -------------------------------
# Localization of neutral cells (chain graphs)
# -------------------------------


def verify_chain_localization(
    spec: GraphSpec,
    s: Optional[int] = None,
    i: Optional[int] = None,
    ctx: Optional[Analysis] = None,
) -> List[VerificationResult]:
    """
    Per-bullet checks for an all-Neutral U_s with 2 < s < h - 1 at λ_i ≠ 0:

    * ``chain-eigenvalue``: λ_i = λ'_j for the head G'_s
    * ``chain-sandwich``: j < i < n - n'_s + j when λ_i is main
    * ``chain-not-last``: λ_i ≠ λ'_{n'_s} when i ≤ n'_s
    * ``chain-halfopen``: λ_i ∈ [λ_min(G''_s), λ_max(G''_s))
    * ``chain-strict``: the open interval when λ_i is main
    * ``chain-corollary``: outside the union of those half-open intervals every vertex is a downer
    """
    _require_family(spec, Family.DNG)
    ctx = _analysis(spec, ctx)
    h, n, tau = spec.h, spec.order, ctx.tau
    bullets = ("chain-eigenvalue", "chain-sandwich", "chain-not-last", "chain-halfopen", "chain-strict")

    cases: List[Tuple[Cluster, int]] = []
    if s is not None or i is not None:
        if s is None or i is None:
            raise PreconditionError("give both the cell index s and the eigenvalue index i, or neither")
        if not 2 < s < h - 1:
            return [_skip(b, spec, f"U_{s} outside 2 < s < h - 1 (h = {h})") for b in bullets]
        cluster = ctx.spectrum.cluster_of_index(i)
        if ctx.near(cluster.value, 0.0):
            raise PreconditionError("λ = 0 is excluded")
        if not ctx.all_type(cluster, "U", s, VertexType.NEUTRAL):
            raise PreconditionError(f"U_{s} is not all-Neutral for λ_{i}")
        cases.append((cluster, s))
    else:
        for cluster in ctx.clusters(exclude=(0.0,)):
            for t in range(1, h + 1):
                if not ctx.all_type(cluster, "U", t, VertexType.NEUTRAL):
                    continue
                if 2 < t < h - 1:
                    cases.append((cluster, t))
                else:
                    logger.info("%s: U_%d neutral at λ_%d outside 2 < s < h - 1, skipped", spec, t, cluster.first_index)

    per_bullet: Dict[str, List[Dict]] = {b: [] for b in bullets}
    failed: Dict[str, List[Dict]] = {b: [] for b in bullets}
    for cluster, t in cases:
        derived = derived_specs(spec, t)
        n_prime = derived.prime.order
        lam, idx, main = cluster.value, cluster.first_index, cluster.main
        j, sub = _index_in(derived.prime, lam, tau)
        head = eig_sym(build(derived.double_prime)).values
        lo, hi = float(head[-1]), float(head[0])
        base = {"lambda": lam, "i": idx, "cell": f"U_{t}", "main": main}

        outcome = {
            "chain-eigenvalue": j is not None,
            "chain-halfopen": lo - tau <= lam < hi - tau,
        }
        if j is not None and main:
            outcome["chain-sandwich"] = j < idx < n - n_prime + j
        if j is not None and idx <= n_prime:
            outcome["chain-not-last"] = abs(lam - sub.eigenvalue(n_prime)) > tau
        if main:
            outcome["chain-strict"] = lo + tau < lam < hi - tau
        for bullet, ok in outcome.items():
            witness = dict(base, j=j, n_prime=n_prime, interval=[lo, hi])
            per_bullet[bullet].append(witness)
            if not ok:
                failed[bullet].append(witness)

    results = []
    for bullet in bullets:
        if not per_bullet[bullet]:
            results.append(_finish(bullet, spec, [], {"cases": []}, ["no applicable neutral cell"]))
        else:
            results.append(_finish(bullet, spec, failed[bullet], {"cases": per_bullet[bullet]}))
    if s is None:
        results.append(_chain_corollary(ctx))
    return results


def _chain_corollary(ctx: Analysis) -> VerificationResult:
    spec = ctx.spec
    ranges = {}
    for t in range(2, spec.h):
        head = eig_sym(build(derived_specs(spec, t).double_prime)).values
        ranges[t] = (float(head[-1]), float(head[0]))
    violations, outside = [], []
    for cluster in ctx.clusters(exclude=(0.0,)):
        if any(lo <= cluster.value < hi for lo, hi in ranges.values()):
            continue
        outside.append(cluster.first_index)
        report = ctx.report(cluster)
        bad = [v for v, kind in sorted(report.per_vertex.items()) if kind != VertexType.DOWNER]
        if bad:
            violations.append({"lambda": cluster.value, "index": cluster.first_index, "vertices": bad})
    witnesses = {"ranges": {str(t): list(r) for t, r in ranges.items()}, "outside": outside}
    return _finish("chain-corollary", spec, violations, witnesses)


# -------------------------------
# Remaining per-spec claims
# -------------------------------


def _predicted_multiplicity(graph: Graph, family: Family, lam: float) -> Optional[int]:
    """mult(0) or mult(-1) of a graph whose nontrivial component lies in ``family``."""
    comps = nontrivial_components(graph)
    if len(comps) > 1:
        return None
    isolated = graph.order - sum(len(c) for c in comps)
    if not comps:
        return isolated if lam == 0 else 0
    found = recognize(induced_subgraph(graph, comps[0]), family)
    if found is None:
        return None
    spec = found[0]
    if family == Family.NSG:
        zero, minus_one = nsg_formula_multiplicities(spec)
        return zero + isolated if lam == 0 else minus_one
    return dng_formula_zero(spec) + isolated


def verify_formula_types(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    """
    Types for λ = 0 (and -1 for threshold graphs) predicted from the
    multiplicity formulas applied to the recognized G - v, against the exact route.
    """
    ctx = _analysis(spec, ctx)
    targets = [(0.0, ZERO)] + ([(-1.0, MINUS_ONE)] if spec.family == Family.NSG else [])
    violations, checked = [], []
    for value, lam in targets:
        k = _predicted_multiplicity(ctx.graph, spec.family, value)
        if k == 0:
            continue
        exact = classify_all(ctx.graph, lam)
        checked.append(value)
        for v in range(ctx.graph.order):
            k_deleted = _predicted_multiplicity(delete_vertex(ctx.graph, v), spec.family, value)
            if k_deleted is None:
                violations.append({"lambda": value, "vertex": v, "reason": "G - v left the family"})
                continue
            predicted = VertexType.from_multiplicities(k, k_deleted)
            if predicted != exact.per_vertex[v]:
                violations.append(
                    {
                        "lambda": value,
                        "vertex": v,
                        "predicted": predicted.value,
                        "exact": exact.per_vertex[v].value,
                        "k": k,
                        "k_deleted": k_deleted,
                    }
                )
    return _finish("formula-types", spec, violations, {"eigenvalues": checked})


def _twin_pairs(graph: Graph, closed: bool) -> List[Tuple[int, int]]:
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for v in range(graph.order):
        key = graph.neighbors(v)
        if closed:
            key = tuple(sorted(key + (v,)))
        groups.setdefault(key, []).append(v)
    pairs = []
    for members in groups.values():
        pairs.extend((members[0], w) for w in members[1:])
    return pairs


def verify_twin_constancy(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    """Open twins agree on every eigenvector of λ ≠ 0, closed twins on every λ ≠ -1."""
    ctx = _analysis(spec, ctx)
    open_pairs = _twin_pairs(ctx.graph, closed=False)
    closed_pairs = _twin_pairs(ctx.graph, closed=True)
    tol = max(ctx.tau, 1e-9)
    violations = []
    for cluster in ctx.spectrum.clusters:
        basis = cluster.basis
        checks = []
        if not ctx.near(cluster.value, 0.0):
            checks.append(("open", open_pairs))
        if not ctx.near(cluster.value, -1.0):
            checks.append(("closed", closed_pairs))
        for kind, pairs in checks:
            for u, w in pairs:
                gap = float(np.max(np.abs(basis[u] - basis[w])))
                if gap > tol:
                    violations.append({"lambda": cluster.value, "twins": [u, w], "kind": kind, "gap": gap})
    return _finish("twin-constancy", spec, violations, {"open_pairs": len(open_pairs), "closed_pairs": len(closed_pairs)})


def verify_perron_downers(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    ctx = _analysis(spec, ctx)
    if not is_connected(ctx.graph):
        raise PreconditionError(f"{spec} is not connected")
    cluster = ctx.spectrum.cluster_of_index(1)
    violations = []
    if cluster.multiplicity != 1:
        violations.append({"lambda_1": cluster.value, "multiplicity": cluster.multiplicity})
    report = ctx.report(cluster)
    bad = [v for v, kind in sorted(report.per_vertex.items()) if kind != VertexType.DOWNER]
    if bad:
        violations.append({"lambda_1": cluster.value, "vertices": bad})
    return _finish("perron-downers", spec, violations, {"lambda_1": cluster.value})


def verify_interlacing(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    ctx = _analysis(spec, ctx)
    violations = []
    for v in range(ctx.graph.order):
        for i, which, lhs, rhs in interlacing_violations(ctx.graph, delete_vertex(ctx.graph, v), ctx.tau):
            violations.append({"vertex": v, "i": i, "bound": which, "lhs": lhs, "rhs": rhs})
    return _finish("interlacing", spec, violations, {"deletions": ctx.graph.order})


def verify_cross_route(spec: GraphSpec, ctx: Optional[Analysis] = None) -> VerificationResult:
    """
    Eigenspace downers equal multiplicity downers for every eigenvalue, and
    numeric multiplicities equal exact ones at 0, -1, ±ω and integer eigenvalues.
    """
    ctx = _analysis(spec, ctx)
    violations = []
    for cluster in ctx.spectrum.clusters:
        via_eigenspace = downers_via_eigenspace(ctx.graph, cluster, ctx.tau)
        via_multiplicity = ctx.report(cluster).downers
        if via_eigenspace != via_multiplicity:
            violations.append(
                {
                    "lambda": cluster.value,
                    "eigenspace_only": sorted(via_eigenspace - via_multiplicity),
                    "multiplicity_only": sorted(via_multiplicity - via_eigenspace),
                }
            )
    targets = [ZERO, MINUS_ONE, OMEGA, MINUS_OMEGA]
    for cluster in ctx.spectrum.clusters:
        target = ctx.target(cluster)
        if isinstance(target, AlgebraicNumber) and target.is_rational and target not in targets:
            targets.append(target)
    for lam in targets:
        exact = eigenvalue_multiplicity(ctx.graph, lam)
        numeric = numeric_multiplicity(ctx.graph, lam.approx, ctx.spectrum)
        if exact != numeric:
            violations.append({"lambda": str(lam), "exact": exact, "numeric": numeric})
    return _finish("cross-route", spec, violations, {"eigenvalues": len(ctx.spectrum.clusters), "targets": len(targets)})


# -------------------------------
# Claim registry
# -------------------------------


def _one(fn: Callable[[GraphSpec, Optional[Analysis]], VerificationResult]):
    def run(spec: GraphSpec, ctx: Analysis) -> List[VerificationResult]:
        return [fn(spec, ctx=ctx)]

    return run


SPEC_CLAIMS: Dict[str, Tuple[Tuple[Family, ...], Callable[[GraphSpec, Analysis], List[VerificationResult]]]] = {
    "nsg-spectrum": ((Family.NSG,), _one(verify_nsg_spectrum)),
    "dng-spectrum": ((Family.DNG,), _one(verify_dng_spectrum)),
    "nsg-downers": ((Family.NSG,), _one(verify_nsg_downers)),
    "dng-downers": ((Family.DNG,), _one(verify_dng_downers)),
    "adjacent-cells": ((Family.NSG, Family.DNG), _one(verify_adjacent_cells)),
    "localization": ((Family.NSG,), _one(verify_neutral_localization)),
    "chain-localization": ((Family.DNG,), lambda spec, ctx: verify_chain_localization(spec, ctx=ctx)),
    "lambda-n-downers": ((Family.NSG,), _one(verify_lambda_n_downers)),
    "interval": ((Family.NSG,), _one(verify_interval_corollary)),
    "formula-types": ((Family.NSG, Family.DNG), _one(verify_formula_types)),
    "twin-constancy": ((Family.NSG, Family.DNG), _one(verify_twin_constancy)),
    "perron-downers": ((Family.NSG, Family.DNG), _one(verify_perron_downers)),
    "interlacing": ((Family.NSG, Family.DNG), _one(verify_interlacing)),
    "cross-route": ((Family.NSG, Family.DNG), _one(verify_cross_route)),
}


def run_spec_claims(
    spec: GraphSpec,
    claims: Optional[Sequence[str]] = None,
    cluster_tol: Optional[float] = None,
    main_tol: Optional[float] = None,
) -> List[VerificationResult]:
    """Run the named claims (default: all that apply to the spec's family) in registry order."""
    names = list(SPEC_CLAIMS) if claims is None else list(claims)
    unknown = [name for name in names if name not in SPEC_CLAIMS]
    if unknown:
        raise PreconditionError(f"unknown claim(s): {', '.join(unknown)}")
    ctx = Analysis(spec, cluster_tol, main_tol)
    results: List[VerificationResult] = []
    for name in names:
        families, run = SPEC_CLAIMS[name]
        if spec.family not in families:
            if claims is not None:
                results.append(_skip(name, spec, f"applies to {' and '.join(f.label for f in families)} graphs only"))
            continue
        results.extend(run(spec, ctx))
    return results


# -------------------------------
# Half-graph eigenvector patterns
# -------------------------------


def _wrap(k: int, period: int) -> int:
    """k taken modulo ``period`` as an element of 1..period."""
    return (k - 1) % period + 1


@dataclass(frozen=True)
class EigenvectorPattern:
    """
    Periodic entries x_i = a_{i mod period} of (x, x) on H(h).

    ``residues`` maps h mod period to the eigenvalue the pattern realizes.
    """

    period: int
    values: Tuple[ZOmega, ...]
    residues: Tuple[Tuple[int, ZOmega], ...]

    @classmethod
    def period6(cls) -> "EigenvectorPattern":
        values = tuple(ZOmega(a) for a in (1, 0, -1, -1, 0, 1))
        return cls(6, values, ((1, ZOmega(1)), (4, ZOmega(-1))))

    @classmethod
    def period10(cls) -> "EigenvectorPattern":
        w = Z_OMEGA
        values = (w, ZOmega(-1), ZOmega(0), ZOmega(1), -w, -w, ZOmega(1), ZOmega(0), ZOmega(-1), w)
        return cls(10, values, ((7, w), (2, -w)))

    def entry(self, i: int) -> ZOmega:
        return self.values[_wrap(i, self.period) - 1]

    def prefix(self, k: int) -> ZOmega:
        total = ZOmega(0)
        for i in range(1, k + 1):
            total = total + self.entry(i)
        return total

    def eigenvalue_for(self, h: int) -> ZOmega:
        for residue, lam in self.residues:
            if h % self.period == residue % self.period:
                return lam
        allowed = " or ".join(str(r) for r, _ in self.residues)
        raise PreconditionError(f"h = {h} is not {allowed} mod {self.period}")

    def vector(self, h: int) -> List[ZOmega]:
        return [self.entry(i) for i in range(1, h + 1)]

    def zero_positions(self, h: int) -> List[int]:
        return [i for i in range(1, h + 1) if not self.entry(i)]


def table_identities(pattern: EigenvectorPattern) -> List[Dict]:
    """
    Rows of the partial-sum tables: for residue r with eigenvalue λ and each s,
    Σ_{i ≤ (r + 1 - s) mod p} a_i must equal λ·a_s, and the period sums to zero.
    """
    rows = []
    period = pattern.period
    for residue, lam in pattern.residues:
        for s in range(1, period + 1):
            upto = _wrap(residue + 1 - s, period)
            lhs = pattern.prefix(upto)
            rhs = lam * pattern.entry(s)
            rows.append({"residue": residue, "s": s, "upto": upto, "sum": str(lhs), "expected": str(rhs), "ok": lhs == rhs})
    return rows


def verify_table_identities(pattern: EigenvectorPattern) -> VerificationResult:
    claim = f"table-period{pattern.period}"
    rows = table_identities(pattern)
    violations = [row for row in rows if not row["ok"]]
    full = pattern.prefix(pattern.period)
    if full != 0:
        violations.append({"period_sum": str(full)})
    return _finish(claim, f"period-{pattern.period}", violations, {"rows": len(rows)})


def verify_pattern_exact(pattern: EigenvectorPattern, h: int) -> bool:
    """Sum rule of (x, x) on H(h) in exact Z[ω] arithmetic; u_i sees v_1..v_{h-i+1}."""
    lam = pattern.eigenvalue_for(h)
    x = pattern.vector(h)
    prefix = [ZOmega(0)]
    for entry in x:
        prefix.append(prefix[-1] + entry)
    return all(prefix[h - i + 1] == lam * x[i - 1] for i in range(1, h + 1))


def _algebraic(lam: ZOmega) -> AlgebraicNumber:
    lookup = {ZOmega(1): ONE, ZOmega(-1): MINUS_ONE, Z_OMEGA: OMEGA, -Z_OMEGA: MINUS_OMEGA}
    return lookup[lam]


class Counterexample(NamedTuple):
    graph: Graph
    lam: AlgebraicNumber
    vector: np.ndarray


def _build_pattern(pattern: EigenvectorPattern, h: int) -> Counterexample:
    lam = pattern.eigenvalue_for(h)
    x = np.array([float(e) for e in pattern.vector(h)])
    return Counterexample(half_graph(h), _algebraic(lam), np.concatenate([x, x]))


def build_period6(h: int) -> Counterexample:
    """H(h) with λ = 1 (h ≡ 1 mod 6) or λ = -1 (h ≡ 4 mod 6) and its periodic eigenvector."""
    return _build_pattern(EigenvectorPattern.period6(), h)


def build_period10(h: int) -> Counterexample:
    """H(h) with λ = ω (h ≡ 7 mod 10) or λ = -ω (h ≡ 2 mod 10) and its periodic eigenvector."""
    return _build_pattern(EigenvectorPattern.period10(), h)


def negate_pattern(graph: Graph, lam: AlgebraicNumber, x: Sequence[float]) -> Tuple[AlgebraicNumber, np.ndarray]:
    """(x, x) for λ gives (x, -x) for -λ: negate the V side of a bipartite graph."""
    x = np.asarray(x, dtype=float)
    if not verify_eigenvector(graph, lam.approx, x):
        raise PreconditionError(f"input is not an eigenvector for {lam}")
    flipped = np.array([-val if tag is not None and tag.side == "V" else val for val, tag in zip(x, graph.labels)])
    negated = lam.negated()
    if not verify_eigenvector(graph, negated.approx, flipped):
        raise PreconditionError("negating the V side does not give an eigenvector (graph not bipartite on U/V?)")
    return negated, flipped


def extend_by_duplication(
    graph: Graph, lam: Eigenvalue, x: Sequence[float], v: int, count: int = 1
) -> Tuple[Graph, np.ndarray]:
    """Add ``count`` copies of a zero-coordinate vertex ``v``; x grows by zeros."""
    value = lam.approx if isinstance(lam, AlgebraicNumber) else float(lam)
    x = np.asarray(x, dtype=float)
    if abs(value) <= settings.CLUSTER_TOL:
        raise PreconditionError("λ = 0 is excluded")
    if not verify_eigenvector(graph, value, x):
        raise PreconditionError(f"input is not an eigenvector for {value:.10g}")
    graph._check_vertex(v)
    if abs(x[v]) > settings.CLUSTER_TOL * float(np.linalg.norm(x)):
        raise PreconditionError(f"x({v}) = {x[v]:.10g} is not zero")
    if count < 1:
        raise PreconditionError("count must be at least 1")
    for _ in range(count):
        pos = duplicate_position(graph, v)
        graph = duplicate_vertex(graph, v)
        x = np.insert(x, pos, 0.0)
        if pos <= v:
            v += 1
    return graph, x


def half_graph_eigenvalues(h: int) -> np.ndarray:
    """±1 / (2 sin((2p + 1)π / (4h + 2))), p = 0..h-1, descending."""
    if h < 1:
        raise PreconditionError(f"half graph needs h >= 1, got {h}")
    alphas = (2 * np.arange(h) + 1) * math.pi / (4 * h + 2)
    positive = 1.0 / (2.0 * np.sin(alphas))
    return np.sort(np.concatenate([positive, -positive]))[::-1]


def half_graph_zero_positions(h: int) -> Dict[float, List[int]]:
    """
    Positive eigenvalue -> positions i with a zero entry. The eigenvector for
    (-1)^p / (2 sin α_p) is cos((2i - 1)α_p) on both classes, so zeros need
    (2i - 1)(2p + 1) to be an odd multiple of 2h + 1.
    """
    zeros: Dict[float, List[int]] = {}
    for p in range(h):
        alpha = (2 * p + 1) * math.pi / (4 * h + 2)
        positions = [i for i in range(1, h + 1) if ((2 * i - 1) * (2 * p + 1)) % (2 * h + 1) == 0]
        if positions:
            zeros[abs(1.0 / (2.0 * math.sin(alpha)))] = positions
    return zeros


def half_graph_has_neutral(h: int) -> bool:
    """True iff 2h + 1 is composite."""
    q = 2 * h + 1
    return any(q % d == 0 for d in range(3, math.isqrt(q) + 1, 2))


# -------------------------------
# Worked examples and constructions in one suite
# -------------------------------


def _cells_of(report: VertexTypeReport, kind: VertexType) -> List[str]:
    return [str(tag) for tag in report.cells_of_type(kind)]


def _check_neutral_cells(
    claim: str, text_spec: str, index: int, expected_value: AlgebraicNumber, expected_cells: Sequence[str]
) -> VerificationResult:
    spec = parse_spec(text_spec)
    ctx = Analysis(spec)
    cluster = ctx.spectrum.cluster_of_index(index)
    violations = []
    if not ctx.near(cluster.value, expected_value.approx):
        violations.append({"index": index, "lambda": cluster.value, "expected": expected_value.approx})
    report = classify_all(ctx.graph, expected_value)
    neutral = _cells_of(report, VertexType.NEUTRAL)
    missing = [cell for cell in expected_cells if cell not in neutral]
    if missing:
        violations.append({"neutral_cells": neutral, "missing": missing})
    witnesses = {"lambda": cluster.value, "index": index, "k": report.k, "neutral_cells": neutral}
    return _finish(claim, spec, violations, witnesses)


def _remark_golden() -> VerificationResult:
    spec = parse_spec("nsg:2,2,2;2,3,2")
    graph = build(spec)
    lam = AlgebraicNumber.integer(-2)
    k = eigenvalue_multiplicity(graph, lam)
    report = classify_all(graph, lam)
    violations = []
    if k != 1:
        violations.append({"mult": k, "expected": 1})
    if report.per_cell.get(CellTag("U", 3)) != VertexType.DOWNER:
        violations.append({"cell": "U_3", "type": str(report.per_cell.get(CellTag("U", 3)))})
    if report.per_cell.get(CellTag("V", 3)) != VertexType.NEUTRAL:
        violations.append({"cell": "V_3", "type": str(report.per_cell.get(CellTag("V", 3)))})
    return _finish("remark-mh-golden", spec, violations, {"k": k, "neutral_cells": _cells_of(report, VertexType.NEUTRAL)})


def _interval_example() -> VerificationResult:
    spec = parse_spec("nsg:1,1,5;1,1,8")
    ctx = Analysis(spec)
    n = spec.order
    u_vertices = cell_vertices(spec, CellTag("U", 1)) + cell_vertices(spec, CellTag("U", 2)) + cell_vertices(spec, CellTag("U", 3))
    violations = []
    lo, hi = nsg_head_intervals(spec)[2]
    if abs(lo - -1.48) > settings.INTERVAL_TOL or abs(hi - 2.17) > settings.INTERVAL_TOL:
        violations.append({"I_2": [lo, hi], "quoted": [-1.48, 2.17]})
    for index in (1, n - 2, n - 1, n):
        cluster = ctx.spectrum.cluster_of_index(index)
        report = ctx.report(cluster)
        bad = [v for v in u_vertices if report.per_vertex[v] != VertexType.DOWNER]
        if bad:
            violations.append({"index": index, "lambda": cluster.value, "vertices": bad})
    return _finish("interval-example", spec, violations, {"I_2": [lo, hi]})


def _pattern_family(builder: Callable[[int], Counterexample], pattern: EigenvectorPattern, hs: Sequence[int]) -> List[VerificationResult]:
    results = []
    for h in hs:
        example = builder(h)
        spec = GraphSpec(Family.DNG, (1,) * h, (1,) * h)
        violations = []
        residual = eigen_residual(example.graph, example.lam.approx, example.vector)
        if residual >= 1e-10:
            violations.append({"residual": residual})
        if not verify_pattern_exact(pattern, h):
            violations.append({"exact_sum_rule": False})
        zeros = pattern.zero_positions(h)
        report = classify_all(example.graph, example.lam)
        neutral = report.vertices_of_type(VertexType.NEUTRAL)
        expected = sorted([i - 1 for i in zeros] + [h + i - 1 for i in zeros])
        if neutral != expected:
            violations.append({"neutral": neutral, "expected": expected})

        negated, _ = negate_pattern(example.graph, example.lam, example.vector)
        negated_report = classify_all(example.graph, negated)
        if negated_report.vertices_of_type(VertexType.NEUTRAL) != expected:
            violations.append({"negated_neutral": negated_report.vertices_of_type(VertexType.NEUTRAL), "expected": expected})
        witnesses = {
            "lambda": str(example.lam),
            "negated": str(negated),
            "residual": residual,
            "zero_positions": zeros,
        }
        results.append(_finish(f"period{pattern.period}", spec, violations, witnesses))
    return results


def _duplication_examples() -> List[VerificationResult]:
    results = []
    base = build_period6(4)
    u_2, v_2 = 1, 5
    for v, count, expected_order in ((u_2, 1, 9), (v_2, 3, 11)):
        graph, x = extend_by_duplication(base.graph, base.lam, base.vector, v, count)
        violations = []
        if graph.order != expected_order:
            violations.append({"order": graph.order, "expected": expected_order})
        if not verify_eigenvector(graph, base.lam.approx, x):
            violations.append({"eigenvector": False})
        if not validate_family(graph, Family.DNG):
            violations.append({"family": "not a chain graph"})
        report = classify_all(graph, base.lam)
        tag = base.graph.labels[v]
        copies = [w for w, t in enumerate(graph.labels) if t == tag]
        if any(report.per_vertex[w] != VertexType.NEUTRAL for w in copies):
            violations.append({"copies": copies, "types": [report.per_vertex[w].value for w in copies]})
        found = recognize(graph, Family.DNG)
        spec_text = str(found[0]) if found else "unrecognized"
        results.append(_finish("duplication", spec_text, violations, {"vertex": v, "count": count}))
    return results


def _half_graph_closed_form(max_h: int = 8) -> VerificationResult:
    violations = []
    for h in range(1, max_h + 1):
        graph = half_graph(h)
        spectrum = eig_sym(graph)
        gap = float(np.max(np.abs(spectrum.values - half_graph_eigenvalues(h))))
        if gap > spectrum.cluster_tol:
            violations.append({"h": h, "max_gap": gap})
        has_neutral = any(
            classify_all(graph, c.value).vertices_of_type(VertexType.NEUTRAL)
            for c in spectrum.clusters
            if abs(c.value) > spectrum.cluster_tol
        )
        if has_neutral != half_graph_has_neutral(h):
            violations.append({"h": h, "neutral_found": has_neutral, "predicted": half_graph_has_neutral(h)})
    return _finish("half-graph-closed-form", f"half:1..{max_h}", violations, {"max_h": max_h})


WORKED_SPECS = (
    "nsg:2,2,2;2,3,2",
    "nsg:4,1,3,1,1;1,1,1,2,1",
    "nsg:2,4,4,2;1,1,1,2",
    "nsg:2,2,5,1;1,1,1,1",
    "nsg:1,1,5;1,1,8",
    "half:4",
    "half:7",
)


def worked_claims() -> List[VerificationResult]:
    """Worked examples, tables, period families and constructions, then every per-spec claim on the example graphs."""
    results = [
        _remark_golden(),
        _check_neutral_cells("example-u2-u4", "nsg:4,1,3,1,1;1,1,1,2,1", 3, ONE, ["U_2", "U_4"]),
        _check_neutral_cells("example-v2-v4", "nsg:2,4,4,2;1,1,1,2", 16, AlgebraicNumber.integer(-2), ["V_2", "V_4"]),
        _check_neutral_cells("example-u3-v2", "nsg:2,2,5,1;1,1,1,1", 2, ONE, ["U_3", "V_2"]),
        _interval_example(),
        verify_table_identities(EigenvectorPattern.period6()),
        verify_table_identities(EigenvectorPattern.period10()),
    ]
    results.extend(_pattern_family(build_period6, EigenvectorPattern.period6(), (4, 7, 10, 13)))
    results.extend(_pattern_family(build_period10, EigenvectorPattern.period10(), (2, 7, 12, 17)))
    results.extend(_duplication_examples())
    results.append(_half_graph_closed_form())
    for text in WORKED_SPECS:
        results.extend(run_spec_claims(parse_spec(text)))
    return results
