"""Undirected simple graphs, hop distances and the graphs derived from them."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import ConnectivityError, InputError

__all__ = [
    "Graph",
    "DistanceMatrix",
    "EccentricityReport",
    "bfs_distances",
    "distance_matrix",
    "eccentricity_report",
    "distance_k_graph",
    "h_k_graph",
    "complement",
    "cartesian_product",
    "is_connected",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Use
    :meth:`from_edges` rather than building the adjacency by hand.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"a graph needs at least one vertex, got n={self.n}")
        if len(self.adjacency) != self.n:
            raise InputError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise InputError(f"neighbours of {v} must be sorted and distinct")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise InputError(f"self-loop at {v}")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self.adjacency[u]:
                    raise InputError(f"adjacency not symmetric for {{{u},{v}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str | None = None) -> Graph:
        if n < 1:
            raise InputError(f"a graph needs at least one vertex, got n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), name)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max(len(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks (bit ``u`` set iff ``u`` adjacent)."""
        out = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    def same_edges(self, other: Graph) -> bool:
        return self.n == other.n and self.adjacency == other.adjacency

    # -- JSON -------------------------------------------------------------

    def to_dict(self) -> dict:
        d: dict = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.name is not None:
            d["name"] = self.name
        return d

    def to_json(self) -> str:
        """Canonical JSON text: sorted keys, edges sorted, one trailing newline."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> Graph:
        if not isinstance(d, dict) or "n" not in d or "edges" not in d:
            raise InputError("graph JSON needs fields 'n' and 'edges'")
        n = d["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError("'n' must be an integer")
        seen = set()
        edges = []
        for e in d["edges"]:
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                raise InputError(f"bad edge entry {e!r}")
            key = (min(e), max(e))
            if key in seen:
                raise InputError(f"duplicate edge {list(key)}")
            seen.add(key)
            edges.append(key)
        name = d.get("name")
        if name is not None and not isinstance(name, str):
            raise InputError("'name' must be a string")
        return cls.from_edges(n, edges, name)

    @classmethod
    def from_json(cls, text: str) -> Graph:
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid graph JSON: {exc}") from None
        return cls.from_dict(d)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``.

    Unreachable vertices get the sentinel ``g.n``, which exceeds every
    finite distance in an ``n``-vertex graph.
    """
    if not 0 <= source < g.n:
        raise InputError(f"source {source} out of range for n={g.n}")
    unreachable = g.n
    dist = [unreachable] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for u in adj[v]:
            if dist[u] == unreachable:
                dist[u] = dv
                queue.append(u)
    return dist


def is_connected(g: Graph) -> bool:
    return g.n not in bfs_distances(g, 0)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph.

    Calling the matrix as ``dm(u, v)`` returns ``d(u, v)``; this is the
    metric interface that :func:`dispersal.labelling.dispersion` consumes.
    """

    dist: np.ndarray
    eccentricity: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        self.dist.setflags(write=False)
        object.__setattr__(self, "eccentricity", tuple(int(x) for x in self.dist.max(axis=1)))

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    @property
    def diameter(self) -> int:
        return max(self.eccentricity)

    def row(self, v: int) -> np.ndarray:
        return self.dist[v]


def distance_matrix(g: Graph) -> DistanceMatrix:
    """Distance matrix by one BFS per vertex; raises on disconnected input."""
    rows = []
    for s in range(g.n):
        d = bfs_distances(g, s)
        if s == 0 and g.n in d:
            raise ConnectivityError(0, d.index(g.n))
        rows.append(d)
    dtype = np.int16 if g.n < 32000 else np.int32
    return DistanceMatrix(np.array(rows, dtype=dtype).reshape(g.n, g.n))


@dataclass(frozen=True)
class EccentricityReport:
    eccentricity: tuple[int, ...]
    radius: int
    central_vertices: tuple[int, ...]
    uniquely_eccentric_central: tuple[int, ...]


def eccentricity_report(dm: DistanceMatrix) -> EccentricityReport:
    ecc = dm.eccentricity
    radius = min(ecc)
    central = tuple(v for v in range(dm.n) if ecc[v] == radius)
    unique = tuple(v for v in central if int(np.count_nonzero(dm.row(v) == ecc[v])) == 1)
    return EccentricityReport(ecc, radius, central, unique)


def _graph_from_mask(dm: DistanceMatrix, mask: np.ndarray, name: str | None) -> Graph:
    adj = tuple(tuple(int(u) for u in np.flatnonzero(mask[v])) for v in range(dm.n))
    return Graph(dm.n, adj, name)


def distance_k_graph(dm: DistanceMatrix, k: int) -> Graph:
    """``G_k``: vertices joined iff their distance is exactly ``k``."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    return _graph_from_mask(dm, dm.dist == k, f"G_{k}")


def h_k_graph(dm: DistanceMatrix, k: int) -> Graph:
    """``H_k``: vertices joined iff their distance is at least ``k``."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    return _graph_from_mask(dm, dm.dist >= k, f"H_{k}")


def complement(g: Graph) -> Graph:
    everyone = set(range(g.n))
    adj = tuple(tuple(sorted(everyone - set(g.adjacency[v]) - {v})) for v in range(g.n))
    name = f"complement({g.name})" if g.name else None
    return Graph(g.n, adj, name)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h`` with vertex ``(u, v)`` encoded as ``u * h.n + v``."""
    edges = []
    for u in range(g.n):
        for v, w in h.edges():
            edges.append((u * h.n + v, u * h.n + w))
    for u, w in g.edges():
        for v in range(h.n):
            edges.append((u * h.n + v, w * h.n + v))
    name = f"{g.name}x{h.name}" if g.name and h.name else None
    return Graph.from_edges(g.n * h.n, edges, name)
