"""
Floating-point spectra of adjacency matrices.

Eigenvalues are kept in the λ_1 ≥ ... ≥ λ_n order; values closer than
τ_cluster = CLUSTER_TOL * max(1, spectral radius) are grouped into one cluster
whose orthonormal basis spans the numeric eigenspace.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config import settings

from .graphs import Graph

logger = logging.getLogger(__name__)


class NumericError(Exception):
    pass


@dataclass(frozen=True)
class EigenPair:
    value: float
    vector: np.ndarray = field(compare=False, repr=False)


@dataclass(frozen=True)
class Cluster:
    value: float
    positions: Tuple[int, ...]  # 0-based positions in the descending order
    main: bool
    basis: np.ndarray = field(compare=False, repr=False)

    @property
    def multiplicity(self) -> int:
        return len(self.positions)

    @property
    def first_index(self) -> int:
        """1-based index of the cluster's largest member (λ_i)."""
        return self.positions[0] + 1


@dataclass
class Spectrum:
    values: np.ndarray
    vectors: np.ndarray
    clusters: List[Cluster]
    cluster_tol: float
    main_tol: float
    max_residual: float
    method: str

    @property
    def order(self) -> int:
        return len(self.values)

    @property
    def radius(self) -> float:
        return float(np.max(np.abs(self.values))) if self.order else 0.0

    @property
    def pairs(self) -> List[EigenPair]:
        return [EigenPair(float(v), self.vectors[:, k]) for k, v in enumerate(self.values)]

    def eigenvalue(self, i: int) -> float:
        """λ_i, 1-based."""
        if not 1 <= i <= self.order:
            raise NumericError(f"index {i} outside 1..{self.order}")
        return float(self.values[i - 1])

    def cluster_of_index(self, i: int) -> Cluster:
        for cluster in self.clusters:
            if i - 1 in cluster.positions:
                return cluster
        raise NumericError(f"index {i} outside 1..{self.order}")

    def cluster_near(self, value: float) -> Optional[Cluster]:
        for cluster in self.clusters:
            if abs(cluster.value - value) <= self.cluster_tol:
                return cluster
        return None

    def multiplicity(self, value: float) -> int:
        return int(np.sum(np.abs(self.values - value) <= self.cluster_tol))


# -------------------------------
# Solvers
# -------------------------------


def jacobi_eig(a: np.ndarray, tol: float, max_sweeps: int) -> Tuple[np.ndarray, np.ndarray, bool]:
    """
    Cyclic Jacobi rotations on a symmetric matrix.

    Returns (eigenvalues, eigenvectors as columns, converged). Convergence means
    the off-diagonal Frobenius norm fell below ``tol * max(1, ||a||_F)``.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        off = float(np.sqrt(np.sum(np.triu(a, 1) ** 2)))
        if off <= tol * scale:
            return np.diag(a).copy(), v, True
        for k in range(n - 1):
            for l in range(k + 1, n):
                akl = a[k, l]
                if abs(akl) <= 1e-300:
                    continue
                phi = (a[l, l] - a[k, k]) / (2.0 * akl)
                t = 1.0 / (abs(phi) + np.sqrt(phi * phi + 1.0))
                if phi < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_k, col_l = a[:, k].copy(), a[:, l].copy()
                a[:, k] = c * col_k - s * col_l
                a[:, l] = s * col_k + c * col_l
                row_k, row_l = a[k, :].copy(), a[l, :].copy()
                a[k, :] = c * row_k - s * row_l
                a[l, :] = s * row_k + c * row_l
                a[k, l] = a[l, k] = 0.0
                vec_k, vec_l = v[:, k].copy(), v[:, l].copy()
                v[:, k] = c * vec_k - s * vec_l
                v[:, l] = s * vec_k + c * vec_l
    return np.diag(a).copy(), v, False


def _solve(a: np.ndarray, method: str) -> Tuple[np.ndarray, np.ndarray, str]:
    if method == "jacobi":
        values, vectors, converged = jacobi_eig(a, settings.JACOBI_TOL, settings.JACOBI_MAX_SWEEPS)
        if converged:
            return values, vectors, "jacobi"
        logger.warning(
            "Jacobi did not converge in %d sweeps on a %dx%d matrix, using eigh",
            settings.JACOBI_MAX_SWEEPS,
            a.shape[0],
            a.shape[0],
        )
    elif method != "eigh":
        raise NumericError(f"unknown eigen method {method!r}")
    values, vectors = np.linalg.eigh(a)
    return values, vectors, "eigh"


def _cluster(values: np.ndarray, tau: float) -> List[List[int]]:
    groups: List[List[int]] = []
    for pos, value in enumerate(values):
        if groups and values[groups[-1][-1]] - value <= tau:
            groups[-1].append(pos)
        else:
            groups.append([pos])
    return groups


def _is_main(basis: np.ndarray, tol: float) -> bool:
    n = basis.shape[0]
    ones = np.ones(n)
    return float(np.linalg.norm(basis.T @ ones)) > tol * np.sqrt(n)


def eig_sym(
    graph: Graph,
    method: Optional[str] = None,
    cluster_tol: Optional[float] = None,
    main_tol: Optional[float] = None,
) -> Spectrum:
    method = method or settings.EIGEN_METHOD
    cluster_tol = settings.CLUSTER_TOL if cluster_tol is None else cluster_tol
    main_tol = settings.MAIN_TOL if main_tol is None else main_tol
    n = graph.order
    if n == 0:
        return Spectrum(np.zeros(0), np.zeros((0, 0)), [], cluster_tol, main_tol, 0.0, method)
    a = graph.float_matrix()
    values, vectors, used = _solve(a, method)
    order = np.argsort(-values, kind="stable")
    values, vectors = values[order], vectors[:, order]

    residual = float(np.max(np.abs(a @ vectors - vectors * values))) if n else 0.0
    if residual > settings.RESIDUAL_TOL * max(1, n):
        logger.warning("eigen residual %.3g exceeds %.3g", residual, settings.RESIDUAL_TOL * max(1, n))

    tau = cluster_tol * max(1.0, float(np.max(np.abs(values))))
    clusters = []
    for group in _cluster(values, tau):
        basis = vectors[:, group]
        clusters.append(
            Cluster(
                value=float(np.mean(values[group])),
                positions=tuple(group),
                main=_is_main(basis, main_tol),
                basis=basis,
            )
        )
    logger.debug("%s: %d eigenvalues in %d clusters via %s", graph, n, len(clusters), used)
    return Spectrum(values, vectors, clusters, tau, main_tol, residual, used)


# -------------------------------
# Checks built on the spectrum
# -------------------------------


def eigen_residual(graph: Graph, lam: float, x: Sequence[float]) -> float:
    """max_v |λ x(v) - Σ_{u~v} x(u)| for x scaled to unit norm."""
    vec = np.asarray(x, dtype=float)
    if vec.shape != (graph.order,):
        raise NumericError(f"vector has length {vec.size}, graph has {graph.order} vertices")
    norm = float(np.linalg.norm(vec))
    if norm == 0.0:
        raise NumericError("zero vector is not an eigenvector")
    vec = vec / norm
    return float(np.max(np.abs(graph.float_matrix() @ vec - lam * vec)))


def verify_eigenvector(graph: Graph, lam: float, x: Sequence[float], tol: Optional[float] = None) -> bool:
    tol = settings.RESIDUAL_TOL * max(1, graph.order) if tol is None else tol
    return eigen_residual(graph, lam, x) <= tol


def is_main_numeric(graph: Graph, cluster: Cluster, tol: Optional[float] = None) -> bool:
    tol = settings.MAIN_TOL if tol is None else tol
    if cluster.basis.shape[0] != graph.order:
        raise NumericError("cluster does not belong to this graph")
    return _is_main(cluster.basis, tol)


def numeric_multiplicity(
    graph: Graph, lam: float, spectrum: Optional[Spectrum] = None, cluster_tol: Optional[float] = None
) -> int:
    spectrum = spectrum or eig_sym(graph, cluster_tol=cluster_tol)
    return spectrum.multiplicity(lam)


def interlacing_violations(
    graph: Graph, sub: Graph, slack: Optional[float] = None
) -> List[Tuple[int, str, float, float]]:
    """
    Failures of λ_i(G) ≥ λ_i(H) ≥ λ_{n-n'+i}(G) as (i, which, lhs, rhs).
    """
    n, n_sub = graph.order, sub.order
    if n_sub >= n:
        raise NumericError(f"subgraph has {n_sub} vertices, host has {n}")
    host = eig_sym(graph)
    inner = eig_sym(sub).values
    slack = host.cluster_tol if slack is None else slack
    outer = host.values
    bad = []
    for i in range(1, n_sub + 1):
        if outer[i - 1] < inner[i - 1] - slack:
            bad.append((i, "upper", float(outer[i - 1]), float(inner[i - 1])))
        if inner[i - 1] < outer[n - n_sub + i - 1] - slack:
            bad.append((i, "lower", float(inner[i - 1]), float(outer[n - n_sub + i - 1])))
    return bad


def check_interlacing(graph: Graph, sub: Graph, slack: Optional[float] = None) -> bool:
    return not interlacing_violations(graph, sub, slack)
