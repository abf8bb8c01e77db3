"""
Threshold graphs (nested split graphs, NSG) and chain graphs (double nested
graphs, DNG) built from cell sizes.

Vertex order is fixed: U_1, ..., U_h, then V_1, ..., V_h, each cell contiguous.
In an NSG every u in U_i is adjacent to V_1 ∪ ... ∪ V_i and V is a clique; in a
DNG every u in U_i is adjacent to V_1 ∪ ... ∪ V_{h-i+1} and there are no other
edges.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .models import CellTag, Family, GraphSpec

logger = logging.getLogger(__name__)

_LIST_RE = re.compile(r"^\d+$")


class GraphError(Exception):
    pass


class Graph:
    """Immutable labeled simple graph stored as a 0/1 adjacency matrix."""

    __slots__ = ("_adj", "labels")

    def __init__(self, adjacency, labels: Optional[Sequence[Optional[CellTag]]] = None) -> None:
        adj = np.array(adjacency, dtype=np.int8)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError(f"adjacency must be square, got shape {adj.shape}")
        if adj.size and (not np.array_equal(adj, adj.T) or np.any(np.diag(adj) != 0)):
            raise GraphError("adjacency must be symmetric with zero diagonal")
        if adj.size and not np.all((adj == 0) | (adj == 1)):
            raise GraphError("adjacency entries must be 0 or 1")
        adj.setflags(write=False)
        self._adj = adj
        if labels is None:
            labels = [None] * adj.shape[0]
        if len(labels) != adj.shape[0]:
            raise GraphError(f"{len(labels)} labels for {adj.shape[0]} vertices")
        self.labels: Tuple[Optional[CellTag], ...] = tuple(labels)

    @property
    def order(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    @property
    def edge_count(self) -> int:
        return int(self._adj.sum()) // 2

    def edges(self) -> List[Tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self._adj))
        return [(int(u), int(v)) for u, v in zip(rows, cols)]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return tuple(int(u) for u in np.nonzero(self._adj[v])[0])

    def cells(self) -> Dict[CellTag, List[int]]:
        """Tagged cells in vertex order; untagged vertices are left out."""
        cells: Dict[CellTag, List[int]] = {}
        for v, tag in enumerate(self.labels):
            if tag is not None:
                cells.setdefault(tag, []).append(v)
        return cells

    def float_matrix(self) -> np.ndarray:
        return self._adj.astype(float)

    def int_rows(self) -> List[List[int]]:
        return self._adj.astype(int).tolist()

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges())
        return graph

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.order:
            raise GraphError(f"vertex {v} out of range 0..{self.order - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self._adj, other._adj)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edge_count})"


# -------------------------------
# Spec parsing and validation
# -------------------------------


def _parse_sizes(chunk: str, text: str) -> Tuple[int, ...]:
    sizes = []
    for token in chunk.split(","):
        token = token.strip()
        if not _LIST_RE.match(token):
            raise GraphError(f"bad token {token!r} in spec {text!r}")
        sizes.append(int(token))
    return tuple(sizes)


def parse_spec(text: str) -> GraphSpec:
    """Parse ``nsg:2,2,2;2,3,2``, ``dng:1,1;1,1`` or ``half:4``."""
    family_text, sep, body = text.strip().partition(":")
    if not sep:
        raise GraphError(f"bad token {text!r}: expected '<family>:<cells>'")
    family_text = family_text.strip().lower()
    if family_text == "half":
        token = body.strip()
        if not _LIST_RE.match(token):
            raise GraphError(f"bad token {token!r} in spec {text!r}")
        h = int(token)
        return GraphSpec(Family.DNG, (1,) * h, (1,) * h)
    if family_text not in ("nsg", "dng"):
        raise GraphError(f"bad token {family_text!r}: family must be nsg, dng or half")
    m_text, sep, n_text = body.partition(";")
    if not sep:
        raise GraphError(f"bad token {body!r}: expected ';' between m-list and n-list")
    return GraphSpec(Family(family_text), _parse_sizes(m_text, text), _parse_sizes(n_text, text))


def validate_spec(spec: GraphSpec) -> None:
    if not spec.m or not spec.n:
        raise GraphError("empty cell list")
    if len(spec.m) != len(spec.n):
        raise GraphError(f"m has {len(spec.m)} cells but n has {len(spec.n)}")
    for name, sizes in (("m", spec.m), ("n", spec.n)):
        for i, size in enumerate(sizes, start=1):
            if size < 1:
                raise GraphError(f"cell size {name}_{i} = {size} must be at least 1")


def _cell_labels(spec: GraphSpec) -> List[CellTag]:
    labels = []
    for i, size in enumerate(spec.m, start=1):
        labels.extend([CellTag("U", i)] * size)
    for i, size in enumerate(spec.n, start=1):
        labels.extend([CellTag("V", i)] * size)
    return labels


# -------------------------------
# Construction
# -------------------------------


def build(spec: GraphSpec) -> Graph:
    validate_spec(spec)
    h = spec.h
    labels = _cell_labels(spec)
    adj = np.zeros((spec.order, spec.order), dtype=np.int8)
    v_start = spec.M
    v_offsets = np.concatenate(([0], np.cumsum(spec.n))) + v_start
    u_offsets = np.concatenate(([0], np.cumsum(spec.m)))
    for i in range(1, h + 1):
        reach = i if spec.family == Family.NSG else h - i + 1
        u_lo, u_hi = u_offsets[i - 1], u_offsets[i]
        v_hi = v_offsets[reach]
        adj[u_lo:u_hi, v_start:v_hi] = 1
        adj[v_start:v_hi, u_lo:u_hi] = 1
    if spec.family == Family.NSG:
        adj[v_start:, v_start:] = 1
        np.fill_diagonal(adj, 0)
    return Graph(adj, labels)


def half_graph(h: int) -> Graph:
    if h < 1:
        raise GraphError(f"half graph needs h >= 1, got {h}")
    return build(GraphSpec(Family.DNG, (1,) * h, (1,) * h))


def delete_vertex(graph: Graph, v: int) -> Graph:
    graph._check_vertex(v)
    keep = [u for u in range(graph.order) if u != v]
    return induced_subgraph(graph, keep)


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> Graph:
    keep = list(vertices)
    for u in keep:
        graph._check_vertex(u)
    sub = graph.adjacency[np.ix_(keep, keep)]
    return Graph(sub, [graph.labels[u] for u in keep])


def duplicate_position(graph: Graph, v: int) -> int:
    """Index the copy of ``v`` receives: right after v's cell, or at the end."""
    graph._check_vertex(v)
    tag = graph.labels[v]
    if tag is None:
        return graph.order
    last = max(u for u, t in enumerate(graph.labels) if t == tag)
    return last + 1


def duplicate_vertex(graph: Graph, v: int) -> Graph:
    pos = duplicate_position(graph, v)
    row = graph.adjacency[v].astype(np.int8)
    adj = np.insert(graph.adjacency, pos, row, axis=0)
    column = np.insert(row, pos, 0)
    adj = np.insert(adj, pos, column, axis=1)
    labels = list(graph.labels)
    labels.insert(pos, graph.labels[v])
    return Graph(adj, labels)


# -------------------------------
# Family membership
# -------------------------------

_FORBIDDEN = {
    Family.NSG: ("P4", "2K2", "C4"),
    Family.DNG: ("2K2", "C3", "C5"),
}


def _small_shape(sub: np.ndarray) -> Optional[str]:
    size = sub.shape[0]
    degrees = tuple(sorted(int(d) for d in sub.sum(axis=0)))
    edges = sum(degrees) // 2
    if size == 3 and edges == 3:
        return "C3"
    if size == 4:
        if edges == 3 and degrees == (1, 1, 2, 2):
            return "P4"
        if edges == 2 and degrees == (1, 1, 1, 1):
            return "2K2"
        if edges == 4 and degrees == (2, 2, 2, 2):
            return "C4"
    if size == 5 and edges == 5 and degrees == (2, 2, 2, 2, 2):
        return "C5"
    return None


def find_forbidden(graph: Graph, family: Family) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """First induced forbidden subgraph of ``family`` in ``graph``, if any."""
    forbidden = _FORBIDDEN[family]
    sizes = sorted({int(name[-1]) if name != "2K2" else 4 for name in forbidden})
    adj = graph.adjacency
    for size in sizes:
        for subset in combinations(range(graph.order), size):
            shape = _small_shape(adj[np.ix_(subset, subset)])
            if shape in forbidden:
                return shape, subset
    return None


def validate_family(graph: Graph, family: Family) -> bool:
    witness = find_forbidden(graph, family)
    if witness is not None:
        logger.debug("induced %s on %s: not a %s graph", witness[0], witness[1], family.label)
    return witness is None


def nontrivial_components(graph: Graph) -> List[List[int]]:
    comps = [sorted(c) for c in nx.connected_components(graph.to_networkx()) if len(c) > 1]
    return sorted(comps)


def is_connected(graph: Graph) -> bool:
    return graph.order > 0 and nx.is_connected(graph.to_networkx())


# -------------------------------
# Cell recovery
# -------------------------------


def _recognize_nsg(graph: Graph) -> Optional[Tuple[List[List[int]], List[List[int]]]]:
    adj = graph.adjacency
    remaining = list(range(graph.order))
    u_cells: List[List[int]] = []
    v_cells: List[List[int]] = []
    while remaining:
        sub = adj[np.ix_(remaining, remaining)]
        degrees = sub.sum(axis=1)
        r = len(remaining)
        dominating = [v for v, d in zip(remaining, degrees) if d == r - 1]
        if len(dominating) == r:
            if r < 2:
                return None
            # closed twins: the first one plays the single U_h vertex
            u_cells.append([remaining[0]])
            v_cells.append(remaining[1:])
            break
        if not dominating:
            return None
        v_cells.append(dominating)
        remaining = [v for v in remaining if v not in set(dominating)]
        sub = adj[np.ix_(remaining, remaining)]
        isolated = [v for v, d in zip(remaining, sub.sum(axis=1)) if d == 0]
        if not isolated:
            return None
        u_cells.append(isolated)
        remaining = [v for v in remaining if v not in set(isolated)]
    if len(u_cells) != len(v_cells):
        return None
    return u_cells, v_cells


def _recognize_dng(graph: Graph) -> Optional[Tuple[List[List[int]], List[List[int]]]]:
    nxg = graph.to_networkx()
    if not nx.is_bipartite(nxg):
        return None
    colors = nx.bipartite.color(nxg)
    first = colors[0]
    u_side = [v for v in range(graph.order) if colors[v] == first]
    v_side = [v for v in range(graph.order) if colors[v] != first]

    def group(side: List[int]) -> List[List[int]]:
        by_nbhd: Dict[Tuple[int, ...], List[int]] = {}
        for v in side:
            by_nbhd.setdefault(graph.neighbors(v), []).append(v)
        return [cell for _, cell in sorted(by_nbhd.items(), key=lambda kv: (-len(kv[0]), kv[1][0]))]

    u_cells, v_cells = group(u_side), group(v_side)
    if len(u_cells) != len(v_cells):
        return None
    return u_cells, v_cells


def recognize(graph: Graph, family: Family) -> Optional[Tuple[GraphSpec, List[int]]]:
    """
    Recover the cell parameterization of a connected threshold/chain graph.

    Returns ``(spec, perm)`` with ``build(spec)`` equal to ``graph`` relabeled by
    ``perm`` (position k of the built graph is vertex ``perm[k]``), or ``None``.
    """
    if graph.order < 2 or not is_connected(graph):
        return None
    found = _recognize_nsg(graph) if family == Family.NSG else _recognize_dng(graph)
    if found is None:
        return None
    u_cells, v_cells = found
    spec = GraphSpec(family, tuple(len(c) for c in u_cells), tuple(len(c) for c in v_cells))
    perm = [v for cell in u_cells for v in cell] + [v for cell in v_cells for v in cell]
    rebuilt = build(spec)
    if not np.array_equal(rebuilt.adjacency, graph.adjacency[np.ix_(perm, perm)]):
        return None
    return spec, perm


# -------------------------------
# Derived specs used by the localization theorems
# -------------------------------


@dataclass(frozen=True)
class DerivedSpecs:
    """
    Sub-specs attached to cell index ``s``.

    ``prime`` is the part that inherits an eigenvalue when U_s is neutral (NSG:
    cells s+1..h; DNG: U_1..U_{s-1} with V_{h-s+2}..V_h). ``double_prime`` is the
    part holding U_s whose extreme eigenvalues bound it (NSG: cells 1..s; DNG:
    U_s..U_h with V_1..V_{h-s+1}). ``merged`` is G - V_s for NSG.
    """

    s: int
    prime: Optional[GraphSpec]
    double_prime: Optional[GraphSpec]
    merged: Optional[GraphSpec] = None


def derived_specs(spec: GraphSpec, s: int) -> DerivedSpecs:
    validate_spec(spec)
    h = spec.h
    if not 1 <= s <= h:
        raise GraphError(f"cell index s={s} outside 1..{h}")
    m, n = spec.m, spec.n
    if spec.family == Family.NSG:
        prime = GraphSpec(Family.NSG, m[s:], n[s:]) if s <= h - 1 else None
        double_prime = GraphSpec(Family.NSG, m[:s], n[:s])
        merged = None
        if s >= 2:
            merged_m = m[: s - 2] + (m[s - 2] + m[s - 1],) + m[s:]
            merged_n = n[: s - 1] + n[s:]
            merged = GraphSpec(Family.NSG, merged_m, merged_n)
        return DerivedSpecs(s, prime, double_prime, merged)
    prime = GraphSpec(Family.DNG, m[: s - 1], n[h - s + 1 :]) if s >= 2 else None
    double_prime = GraphSpec(Family.DNG, m[s - 1 :], n[: h - s + 1])
    return DerivedSpecs(s, prime, double_prime)


def cell_vertices(spec: GraphSpec, tag: CellTag) -> List[int]:
    """Vertex ids of one cell of ``build(spec)``."""
    sizes = spec.m if tag.side == "U" else spec.n
    if not 1 <= tag.index <= len(sizes):
        raise GraphError(f"no cell {tag} in {spec}")
    start = (0 if tag.side == "U" else spec.M) + sum(sizes[: tag.index - 1])
    return list(range(start, start + sizes[tag.index - 1]))
