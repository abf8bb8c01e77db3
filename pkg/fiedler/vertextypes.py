"""
Downer / Neutral / Parter classification of vertices for a fixed eigenvalue.

The exact route takes the multiplicity difference mult(λ, G - v) - mult(λ, G)
from characteristic polynomials. The numeric route uses the eigenspace
criterion for downers (v is a downer iff some λ-eigenvector is nonzero at v)
and counts eigenvalues of G - v only where the eigenspace vanishes.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from config import settings

from .exactalg import (
    MINUS_OMEGA,
    OMEGA,
    AlgebraicNumber,
    ExactAlgebraError,
    IntPolynomial,
    eigenvalue_multiplicity,
    exact_eigenvalue,
    integer_candidate,
    match_minpoly,
)
from .graphs import Graph, delete_vertex
from .models import CellTag, Route, VertexType
from .numspec import Cluster, Spectrum, eig_sym

logger = logging.getLogger(__name__)

Eigenvalue = Union[AlgebraicNumber, float]

DEFAULT_CANDIDATES: Tuple[IntPolynomial, ...] = (OMEGA.minpoly, MINUS_OMEGA.minpoly)


class ClassificationError(Exception):
    pass


@dataclass
class VertexTypeReport:
    eigenvalue: float
    minpoly: Optional[IntPolynomial]
    k: int
    route: Route
    per_vertex: Dict[int, VertexType]
    per_cell: Dict[CellTag, Optional[VertexType]]
    labels: Tuple[Optional[CellTag], ...]
    anomalies: List[str] = field(default_factory=list)
    cluster_tol: Optional[float] = None

    def vertices_of_type(self, kind: VertexType) -> List[int]:
        return [v for v, t in sorted(self.per_vertex.items()) if t == kind]

    @property
    def downers(self) -> Set[int]:
        return set(self.vertices_of_type(VertexType.DOWNER))

    def cells_of_type(self, kind: VertexType) -> List[CellTag]:
        return [tag for tag, t in self.per_cell.items() if t == kind]


def _value_of(lam: Eigenvalue) -> float:
    return lam.approx if isinstance(lam, AlgebraicNumber) else float(lam)


def _numeric_count(graph: Graph, value: float, tau: float) -> int:
    if graph.order == 0:
        return 0
    values = np.linalg.eigvalsh(graph.float_matrix())
    return int(np.sum(np.abs(values - value) <= tau))


def _tau(graph: Graph, cluster_tol: Optional[float]) -> float:
    rel = settings.CLUSTER_TOL if cluster_tol is None else cluster_tol
    if graph.order == 0:
        return rel
    radius = float(np.max(np.abs(np.linalg.eigvalsh(graph.float_matrix()))))
    return rel * max(1.0, radius)


def _verdict(k: int, k_deleted: int, lam: Eigenvalue) -> VertexType:
    if k == 0:
        raise ClassificationError(f"{_value_of(lam):.10g} is not an eigenvalue of the graph")
    try:
        return VertexType.from_multiplicities(k, k_deleted)
    except ValueError as exc:
        raise ClassificationError(str(exc)) from exc


def _exact_types(graph: Graph, lam: AlgebraicNumber, vertices: Sequence[int]) -> Tuple[int, Dict[int, VertexType]]:
    k = eigenvalue_multiplicity(graph, lam, method="charpoly")
    kinds = {}
    for v in vertices:
        k_deleted = eigenvalue_multiplicity(delete_vertex(graph, v), lam, method="charpoly")
        kinds[v] = _verdict(k, k_deleted, lam)
    return k, kinds


def _numeric_types(
    graph: Graph, value: float, vertices: Sequence[int], cluster_tol: Optional[float]
) -> Tuple[int, Dict[int, VertexType], float]:
    """
    Downers come from the eigenspace rows. Only a vertex on which the whole
    eigenspace vanishes has its deleted graph's eigenvalues counted; there
    mult(λ, G - v) is k or k + 1.
    """
    spectrum = eig_sym(graph, cluster_tol=cluster_tol)
    cluster = spectrum.cluster_near(value)
    if cluster is None:
        raise ClassificationError(f"{value:.10g} is not an eigenvalue of the graph")
    tau = spectrum.cluster_tol
    k = cluster.multiplicity
    downers = downers_via_eigenspace(graph, cluster, tau)
    kinds = {}
    for v in vertices:
        if v in downers:
            kinds[v] = VertexType.DOWNER
            continue
        count = _numeric_count(delete_vertex(graph, v), value, tau)
        kinds[v] = VertexType.PARTER if count > k else VertexType.NEUTRAL
    return k, kinds, tau


def classify_vertex(
    graph: Graph, lam: Eigenvalue, v: int, cluster_tol: Optional[float] = None
) -> VertexType:
    graph._check_vertex(v)
    if isinstance(lam, AlgebraicNumber):
        _, kinds = _exact_types(graph, lam, [v])
    else:
        _, kinds, _ = _numeric_types(graph, float(lam), [v], cluster_tol)
    return kinds[v]


def twin_classes(graph: Graph) -> List[List[int]]:
    """
    Vertices with equal open or equal closed neighborhoods.

    Swapping two such twins is an automorphism, so they always share a type.
    """
    rep: Dict[Tuple[str, Tuple[int, ...]], int] = {}
    classes: Dict[int, List[int]] = {}
    for v in range(graph.order):
        nbhd = graph.neighbors(v)
        open_key = ("open", nbhd)
        closed_key = ("closed", tuple(sorted(nbhd + (v,))))
        leader = rep.get(open_key, rep.get(closed_key, v))
        rep.setdefault(open_key, leader)
        rep.setdefault(closed_key, leader)
        classes.setdefault(leader, []).append(v)
    return list(classes.values())


def _aggregate(
    graph: Graph, per_vertex: Dict[int, VertexType]
) -> Tuple[Dict[CellTag, Optional[VertexType]], List[str]]:
    per_cell: Dict[CellTag, Optional[VertexType]] = {}
    anomalies: List[str] = []
    for tag, members in graph.cells().items():
        kinds = {per_vertex[v] for v in members}
        if len(kinds) == 1:
            per_cell[tag] = kinds.pop()
        else:
            per_cell[tag] = None
            detail = ", ".join(f"{v}:{per_vertex[v].value}" for v in members)
            anomalies.append(f"cell {tag} is mixed ({detail})")
    return per_cell, anomalies


def classify_all(
    graph: Graph,
    lam: Eigenvalue,
    cluster_tol: Optional[float] = None,
    cross_check: bool = False,
    use_twins: bool = True,
) -> VertexTypeReport:
    """
    Type of every vertex. With ``cross_check`` an exact classification is
    repeated numerically; agreement upgrades the route to Both-agree.
    """
    exact = isinstance(lam, AlgebraicNumber)
    if graph.order == 0:
        raise ClassificationError("cannot classify vertices of the empty graph")
    groups = twin_classes(graph) if use_twins else [[v] for v in range(graph.order)]
    leaders = [members[0] for members in groups]
    if exact:
        k, kinds = _exact_types(graph, lam, leaders)
        tau = _tau(graph, cluster_tol)
    else:
        k, kinds, tau = _numeric_types(graph, float(lam), leaders, cluster_tol)
    per_vertex: Dict[int, VertexType] = {}
    for members in groups:
        for v in members:
            per_vertex[v] = kinds[members[0]]
    per_vertex = dict(sorted(per_vertex.items()))

    per_cell, anomalies = _aggregate(graph, per_vertex)
    route = Route.EXACT if exact else Route.NUMERIC
    if exact and cross_check:
        numeric = classify_all(graph, lam.approx, cluster_tol, use_twins=use_twins)
        if numeric.per_vertex == per_vertex:
            route = Route.BOTH
        else:
            diff = [v for v in per_vertex if numeric.per_vertex.get(v) != per_vertex[v]]
            anomalies.append(f"numeric route disagrees at vertices {diff}")
            logger.warning("exact and numeric classification disagree at %s", diff)
    return VertexTypeReport(
        eigenvalue=_value_of(lam),
        minpoly=lam.minpoly if exact else None,
        k=k,
        route=route,
        per_vertex=per_vertex,
        per_cell=per_cell,
        labels=graph.labels,
        anomalies=anomalies,
        cluster_tol=tau,
    )


def downers_via_eigenspace(graph: Graph, cluster: Cluster, tol: Optional[float] = None) -> Set[int]:
    """
    Vertices at which the cluster's orthonormal basis has a row of norm > tol.

    ``tol`` defaults to tau_cluster, relative to the spectral radius.
    """
    if cluster is None or cluster.multiplicity == 0:
        raise ClassificationError("empty eigenvalue cluster")
    if cluster.basis.shape[0] != graph.order:
        raise ClassificationError("cluster does not belong to this graph")
    tol = _tau(graph, None) if tol is None else tol
    row_norms = np.linalg.norm(cluster.basis, axis=1)
    return {int(v) for v in np.nonzero(row_norms > tol)[0]}


def downer_sets(
    graph: Graph, lam: Eigenvalue, spectrum: Optional[Spectrum] = None
) -> Tuple[Set[int], Set[int]]:
    """(eigenspace downers, multiplicity downers)."""
    spectrum = spectrum or eig_sym(graph)
    cluster = spectrum.cluster_near(_value_of(lam))
    if cluster is None:
        raise ClassificationError(f"{_value_of(lam):.10g} is not an eigenvalue of the graph")
    return downers_via_eigenspace(graph, cluster, spectrum.cluster_tol), classify_all(graph, lam).downers


def cross_validate(graph: Graph, lam: Eigenvalue, spectrum: Optional[Spectrum] = None) -> bool:
    via_eigenspace, via_multiplicity = downer_sets(graph, lam, spectrum)
    if via_eigenspace != via_multiplicity:
        logger.info(
            "downer sets differ: eigenspace-only %s, multiplicity-only %s",
            sorted(via_eigenspace - via_multiplicity),
            sorted(via_multiplicity - via_eigenspace),
        )
    return via_eigenspace == via_multiplicity


# -------------------------------
# Eigenvalue selectors
# -------------------------------


@dataclass
class ResolvedEigenvalue:
    approx: float
    index: int  # 1-based, first position of the cluster
    cluster: Cluster = field(repr=False)
    exact: Optional[AlgebraicNumber] = None

    @property
    def target(self) -> Eigenvalue:
        return self.exact if self.exact is not None else self.approx


def identify_exact(
    graph: Graph,
    value: float,
    numeric_k: int,
    tol: float,
    candidates: Iterable[IntPolynomial] = DEFAULT_CANDIDATES,
    factor: bool = False,
) -> Optional[AlgebraicNumber]:
    """
    Match ``value`` to an integer or candidate minimal polynomial, confirmed
    exactly. With ``factor`` an unmatched value is looked up among the roots of
    the irreducible factors of phi(x; G).
    """
    poly = integer_candidate(value, tol)
    if poly is not None:
        lam = AlgebraicNumber.integer(-poly.coeffs[0] if poly.coeffs else 0)
    else:
        lam = match_minpoly(value, candidates, tol)
    if lam is None and factor:
        lam = exact_eigenvalue(graph, value, tol)
    if lam is None:
        return None
    exact_k = eigenvalue_multiplicity(graph, lam, method="charpoly")
    if exact_k != numeric_k:
        logger.warning(
            "%.10g looked like a root of %s but exact multiplicity %d != numeric %d",
            value,
            lam.minpoly,
            exact_k,
            numeric_k,
        )
        return None
    return lam


def resolve_eigenvalue(
    graph: Graph,
    value: Optional[float] = None,
    minpoly: Optional[IntPolynomial] = None,
    index: Optional[int] = None,
    spectrum: Optional[Spectrum] = None,
    candidates: Sequence[IntPolynomial] = DEFAULT_CANDIDATES,
) -> ResolvedEigenvalue:
    chosen = [name for name, sel in (("value", value), ("minpoly", minpoly), ("index", index)) if sel is not None]
    if len(chosen) != 1:
        raise ClassificationError(f"exactly one eigenvalue selector required, got {chosen or 'none'}")
    spectrum = spectrum or eig_sym(graph)

    if minpoly is not None:
        roots = sorted(
            (float(r.real) for r in minpoly.float_roots() if abs(r.imag) <= spectrum.cluster_tol),
            reverse=True,
        )
        # conjugate roots share vertex types, so the largest eigenvalue root stands for all
        for root in roots:
            cluster = spectrum.cluster_near(root)
            if cluster is not None:
                try:
                    lam = AlgebraicNumber.from_minpoly(minpoly, root)
                except ExactAlgebraError as exc:
                    raise ClassificationError(str(exc)) from exc
                if eigenvalue_multiplicity(graph, lam) == 0:
                    continue
                return ResolvedEigenvalue(cluster.value, cluster.first_index, cluster, lam)
        raise ClassificationError(f"no root of {minpoly} is an eigenvalue of the graph")

    if index is not None:
        if not 1 <= index <= spectrum.order:
            raise ClassificationError(f"eigenvalue index {index} outside 1..{spectrum.order}")
        cluster = spectrum.cluster_of_index(index)
    else:
        cluster = spectrum.cluster_near(float(value))
        if cluster is None:
            raise ClassificationError(f"{value} is not an eigenvalue of the graph")
    exact = identify_exact(graph, cluster.value, cluster.multiplicity, spectrum.cluster_tol, candidates)
    return ResolvedEigenvalue(cluster.value, cluster.first_index, cluster, exact)
