"""
Exhaustive and randomized harnesses over NSG / DNG specs.

Specs are enumerated in (h, m, n) lexicographic order; parallel runs map over
that order with ``ProcessPoolExecutor.map`` so results come back in it too.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Callable, Iterator, List, Optional, Sequence, TypeVar

import numpy as np

from config import settings

from ..exactalg import AlgebraicNumber, eigenvalue_multiplicity
from ..graphs import Graph, build
from ..models import Family, Finding, GraphSpec, VerificationResult, VertexType
from ..numspec import eig_sym
from ..theorems import run_spec_claims
from ..vertextypes import classify_all, cross_validate, downers_via_eigenspace, identify_exact

logger = logging.getLogger(__name__)

T = TypeVar("T")


class SearchError(Exception):
    pass


def _check_bounds(max_h: int, max_cell: int) -> None:
    if max_h < 1 or max_cell < 1:
        raise SearchError(f"bounds must be >= 1 (max_h={max_h}, max_cell={max_cell})")


def enumerate_specs(family: Family, max_h: int, max_cell: int) -> Iterator[GraphSpec]:
    _check_bounds(max_h, max_cell)
    sizes = range(1, max_cell + 1)
    for h in range(1, max_h + 1):
        for m in itertools.product(sizes, repeat=h):
            for n in itertools.product(sizes, repeat=h):
                yield GraphSpec(family, m, n)


def random_specs(
    family: Family, count: int, seed: Optional[int] = None, max_h: int = 5, max_cell: int = 4
) -> List[GraphSpec]:
    _check_bounds(max_h, max_cell)
    if count < 0:
        raise SearchError(f"count must be >= 0, got {count}")
    rng = np.random.default_rng(settings.DEFAULT_SEED if seed is None else seed)
    specs = []
    for _ in range(count):
        h = int(rng.integers(1, max_h + 1))
        m = tuple(int(x) for x in rng.integers(1, max_cell + 1, size=h))
        n = tuple(int(x) for x in rng.integers(1, max_cell + 1, size=h))
        specs.append(GraphSpec(family, m, n))
    return specs


def _ordered_map(fn: Callable[[GraphSpec], T], specs: Sequence[GraphSpec], workers: Optional[int]) -> List[T]:
    workers = settings.WORKERS if workers is None else workers
    if workers <= 1 or len(specs) < 2:
        return [fn(spec) for spec in specs]
    chunk = max(1, len(specs) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, specs, chunksize=chunk))


def _vertex_rows(graph: Graph, vertices: Sequence[int], kinds) -> List[dict]:
    rows = []
    for v in vertices:
        tag = graph.labels[v]
        rows.append({"id": v, "cell": str(tag) if tag else None, "type": kinds[v].value})
    return rows


# -------------------------------
# Chain graphs: non-downers for nonzero eigenvalues
# -------------------------------


def chain_neutrals_for(spec: GraphSpec) -> List[Finding]:
    """Every nonzero eigenvalue of DNG ``spec`` with a non-downer vertex."""
    graph = build(spec)
    spectrum = eig_sym(graph)
    tau = spectrum.cluster_tol
    findings = []
    for cluster in spectrum.clusters:
        if abs(cluster.value) <= tau:
            continue
        downers = downers_via_eigenspace(graph, cluster, tau)
        if len(downers) == graph.order:
            continue
        exact = identify_exact(graph, cluster.value, cluster.multiplicity, tau, factor=True)
        target = exact if exact is not None else cluster.value
        report = classify_all(graph, target)
        others = [v for v in range(graph.order) if v not in downers]
        verdicts = sorted({report.per_vertex[v].value for v in others})
        findings.append(
            Finding(
                kind="chain-neutral",
                spec=str(spec),
                eigenvalue=cluster.value,
                index=cluster.first_index,
                minpoly=list(exact.minpoly.coeffs) if isinstance(exact, AlgebraicNumber) else None,
                vertices=_vertex_rows(graph, others, report.per_vertex),
                verdict="/".join(verdicts),
                main=cluster.main,
                cross_validated=cross_validate(graph, target, spectrum),
            )
        )
        logger.debug("%s: %d non-downers at λ_%d", spec, len(others), cluster.first_index)
    return findings


def search_chain_neutrals(max_h: int, max_cell: int, workers: Optional[int] = None) -> List[Finding]:
    specs = list(enumerate_specs(Family.DNG, max_h, max_cell))
    logger.info("chain-neutrals: %d specs (h <= %d, cells <= %d)", len(specs), max_h, max_cell)
    per_spec = _ordered_map(chain_neutrals_for, specs, workers)
    findings = [f for group in per_spec for f in group]
    logger.info("chain-neutrals: %d findings", len(findings))
    return findings


# -------------------------------
# Threshold graphs: V_h at λ = -m_h
# -------------------------------


def remark_mh_for(spec: GraphSpec) -> List[Finding]:
    """V_h's type at λ = -m_h, when m_h >= 2 and -m_h is an eigenvalue."""
    m_h = spec.m[-1]
    if m_h < 2:
        return []
    graph = build(spec)
    lam = AlgebraicNumber.integer(-m_h)
    if eigenvalue_multiplicity(graph, lam) == 0:
        logger.debug("%s: -%d is not an eigenvalue", spec, m_h)
        return []
    report = classify_all(graph, lam)
    v_h = [v for v, tag in enumerate(graph.labels) if tag is not None and tag.side == "V" and tag.index == spec.h]
    verdicts = sorted({report.per_vertex[v].value for v in v_h})
    spectrum = eig_sym(graph)
    cluster = spectrum.cluster_near(float(-m_h))
    return [
        Finding(
            kind="remark-mh",
            spec=str(spec),
            eigenvalue=float(-m_h),
            index=cluster.first_index if cluster else 0,
            minpoly=list(lam.minpoly.coeffs),
            vertices=_vertex_rows(graph, v_h, report.per_vertex),
            verdict="/".join(verdicts),
            main=cluster.main if cluster else None,
            cross_validated=cross_validate(graph, lam, spectrum),
        )
    ]


def search_remark_mh(max_h: int, max_cell: int, workers: Optional[int] = None) -> List[Finding]:
    if max_cell < 2:
        raise SearchError("remark-mh needs max_cell >= 2 (m_h >= 2)")
    specs = [s for s in enumerate_specs(Family.NSG, max_h, max_cell) if s.m[-1] >= 2]
    logger.info("remark-mh: %d specs with m_h >= 2", len(specs))
    per_spec = _ordered_map(remark_mh_for, specs, workers)
    findings = [f for group in per_spec for f in group]
    downer = sum(1 for f in findings if f.verdict == VertexType.DOWNER.value)
    if downer:
        logger.warning("remark-mh: %d instances with V_h all Downer", downer)
    return findings


# -------------------------------
# Randomized claim suite
# -------------------------------


def _claims_for(
    spec: GraphSpec,
    claims: Optional[Sequence[str]] = None,
    cluster_tol: Optional[float] = None,
    main_tol: Optional[float] = None,
) -> List[VerificationResult]:
    return run_spec_claims(spec, claims, cluster_tol=cluster_tol, main_tol=main_tol)


def run_claims(
    specs: Sequence[GraphSpec],
    claims: Optional[Sequence[str]] = None,
    workers: Optional[int] = None,
    cluster_tol: Optional[float] = None,
    main_tol: Optional[float] = None,
) -> List[VerificationResult]:
    """The named claims (default: every applicable one) on every spec, in spec order."""
    logger.info("running claims on %d specs", len(specs))
    task = partial(_claims_for, claims=claims, cluster_tol=cluster_tol, main_tol=main_tol)
    per_spec = _ordered_map(task, list(specs), workers)
    return [result for group in per_spec for result in group]
