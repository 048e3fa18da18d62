"""Definitional ground truth: wheel graphs, BFS distances, eccentricity matrices.

Everything here computes straight from graph definitions with no closed
forms, so it can serve as an independent oracle for the formula layer.
Vertices are 0-indexed internally; internal vertex i is the 1-indexed
vertex i+1 of the usual labelling (hub first, then the cycle in order).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .ratq import MatrixQ, VectorQ


class GraphError(ValueError):
    """Invalid graph input (wrong order, not a wheel, disconnected, ...)."""


@dataclass(frozen=True)
class WheelSpec:
    """The single wheel parameter n with its residue class mod 3 and parity."""

    n: int
    residue: int
    parity: int

    @classmethod
    def of(cls, n: int) -> "WheelSpec":
        if n < 4:
            raise GraphError(f"wheel graphs need n >= 4, got {n}")
        return cls(n=n, residue=n % 3, parity=n % 2)


@dataclass(frozen=True)
class Graph:
    """Undirected graph as sorted neighbor tuples; no self-loops."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.vertex_count) for j in self.adjacency[i] if i < j]


def _graph_from_edges(n: int, edges) -> Graph:
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j in edges:
        if i == j:
            raise GraphError("self-loops are not allowed")
        adj[i].add(j)
        adj[j].add(i)
    return Graph(vertex_count=n, adjacency=tuple(tuple(sorted(a)) for a in adj))


def build_wheel(n: int) -> Graph:
    """Hub vertex 0 adjacent to all others; vertices 1..n-1 form a cycle in order."""
    WheelSpec.of(n)
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i + 1) for i in range(1, n - 1)]
    edges.append((1, n - 1))
    return _graph_from_edges(n, edges)


def delete_cycle_edge(g: Graph) -> Graph:
    """Remove the cycle edge between the first and last rim vertices.

    The input must be a wheel on n >= 5 vertices; the deleted edge is the
    one joining internal vertices 1 and n-1 (the 1-indexed pair v2, vn),
    so downstream matrices match the fixed labelling entry for entry.
    """
    n = g.vertex_count
    if n < 5:
        raise GraphError(f"edge deletion needs a wheel with n >= 5, got n = {n}")
    if g != build_wheel(n):
        raise GraphError("input is not a wheel graph with the standard labelling")
    edges = [e for e in g.edges() if e != (1, n - 1)]
    return _graph_from_edges(n, edges)


def bfs_distances(g: Graph) -> MatrixQ:
    """All-pairs shortest path lengths by BFS from every vertex.

    Distances are stored as exact rationals (denominator 1) so downstream
    algebra stays in a single scalar type.  Raises GraphError if the graph
    is disconnected.
    """
    n = g.vertex_count
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        if any(d < 0 for d in dist):
            raise GraphError(f"graph is disconnected (vertex {s} does not reach all vertices)")
        rows.append(dist)
    return MatrixQ(rows)


def _check_distance_matrix(d: MatrixQ) -> None:
    if d.rows != d.cols:
        raise GraphError("distance matrix must be square")
    for i in range(d.rows):
        if d[i, i] != 0:
            raise GraphError("distance matrix must have zero diagonal")
    if not d.is_symmetric():
        raise GraphError("distance matrix must be symmetric")


def eccentricities(d: MatrixQ) -> VectorQ:
    """Per-vertex eccentricity: the maximum entry of each distance-matrix row."""
    _check_distance_matrix(d)
    return VectorQ(max(d.row(i)) for i in range(d.rows))


def eccentricity_matrix_definitional(d: MatrixQ) -> MatrixQ:
    """Keep d(i,j) where it attains min(ecc(i), ecc(j)); zero elsewhere."""
    _check_distance_matrix(d)
    ecc = eccentricities(d)
    n = d.rows
    return MatrixQ(
        [
            d[i, j] if i != j and d[i, j] == min(ecc[i], ecc[j]) else Fraction(0)
            for j in range(n)
        ]
        for i in range(n)
    )


def edge_list(g: Graph) -> str:
    """Debug export: one "i j" pair per line, 1-indexed."""
    return "\n".join(f"{i + 1} {j + 1}" for i, j in g.edges())
