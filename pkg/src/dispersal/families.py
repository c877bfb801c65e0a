"""Generators for the graph families with known dispersed-labelling numbers.

Vertex encodings are fixed:

* grid ``(r, c)`` -> ``r * n + c`` with row 0 at the top;
* hypercube tuple -> bitmask, coordinate ``b + 1`` stored in bit ``b``;
* binary tree string ``x`` -> ``2**len(x) + int(x, 2) - 1`` (heap order,
  root ``0``).

Each family also has a closed-form distance function so that very large
instances can be measured without building an all-pairs matrix.
"""
from __future__ import annotations

from typing import Callable

from .errors import InputError
from .graph import Graph, cartesian_product

Metric = Callable[[int, int], int]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InputError(msg)


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"C{n}")


def path(m: int) -> Graph:
    """The path with ``m`` edges and ``m + 1`` vertices, numbered left to right."""
    _require(m >= 1, f"path needs m >= 1 edges, got {m}")
    return Graph.from_edges(m + 1, ((i, i + 1) for i in range(m)), f"P{m}")


def grid(m: int, n: int) -> Graph:
    """The ``m x n`` grid: ``m`` rows, ``n`` columns, row 0 on top."""
    _require(m >= 2 and n >= 2, f"grid needs m, n >= 2, got {m}x{n}")
    edges = []
    for r in range(m):
        for c in range(n):
            v = r * n + c
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < m:
                edges.append((v, v + n))
    return Graph.from_edges(m * n, edges, f"L{m},{n}")


def hypercube(n: int) -> Graph:
    _require(n >= 1, f"hypercube needs n >= 1, got {n}")
    edges = [(v, v ^ (1 << b)) for v in range(1 << n) for b in range(n) if not v >> b & 1]
    return Graph.from_edges(1 << n, edges, f"Q{n}")


def complete_binary_tree(depth: int) -> Graph:
    _require(depth >= 1, f"binary tree needs depth >= 1, got {depth}")
    size = (1 << (depth + 1)) - 1
    # heap index h = id + 1; parent of h is h // 2
    edges = [(v, (v + 1) // 2 - 1) for v in range(1, size)]
    return Graph.from_edges(size, edges, f"T{depth}")


def clique_with_two_paths(k: int) -> Graph:
    """``K_{2k}`` with a ``(k-1)``-edge path hanging off vertex 0 and another off vertex 1."""
    _require(k >= 2, f"clique_with_two_paths needs k >= 2, got {k}")
    q = 2 * k
    edges = [(u, v) for u in range(q) for v in range(u + 1, q)]
    nxt = q
    for anchor in (0, 1):
        prev = anchor
        for _ in range(k - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges, f"K{q}+2P{k - 1}")


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)), f"K{n}")


def product(g: Graph, h: Graph) -> Graph:
    return cartesian_product(g, h)


# -- string parameters, shared by the CLI -----------------------------------

_ARITY = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "grid": (grid, 2),
    "hypercube": (hypercube, 1),
    "cbt": (complete_binary_tree, 1),
    "clique2paths": (clique_with_two_paths, 1),
    "complete": (complete, 1),
}

FAMILIES = tuple(_ARITY)


def build(family: str, params: list[int]) -> Graph:
    if family not in _ARITY:
        raise InputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    fn, arity = _ARITY[family]
    if len(params) != arity:
        raise InputError(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*params)


def parse_spec(spec: str) -> tuple[str, list[int]]:
    """Split ``"grid:3:5"`` into ``("grid", [3, 5])``."""
    family, *rest = spec.split(":")
    try:
        return family, [int(x) for x in rest]
    except ValueError:
        raise InputError(f"bad family spec {spec!r}") from None


# -- closed-form distances -------------------------------------------------

def cycle_metric(n: int) -> Metric:
    def d(u: int, v: int) -> int:
        x = abs(u - v)
        return min(x, n - x)

    return d


def path_metric(m: int) -> Metric:
    return lambda u, v: abs(u - v)


def grid_metric(m: int, n: int) -> Metric:
    def d(u: int, v: int) -> int:
        return abs(u // n - v // n) + abs(u % n - v % n)

    return d


def hypercube_metric(n: int) -> Metric:
    return lambda u, v: (u ^ v).bit_count()


def tree_metric(depth: int) -> Metric:
    def d(u: int, v: int) -> int:
        a, b = u + 1, v + 1
        da, db = a.bit_length(), b.bit_length()
        steps = abs(da - db)
        if da > db:
            a >>= da - db
        else:
            b >>= db - da
        while a != b:
            a >>= 1
            b >>= 1
            steps += 2
        return steps

    return d


def metric_for(family: str, params: list[int]) -> Metric | None:
    """Closed-form distance for a named family, or ``None`` if there is none."""
    table = {
        "cycle": cycle_metric,
        "path": path_metric,
        "grid": grid_metric,
        "hypercube": hypercube_metric,
        "cbt": tree_metric,
    }
    fn = table.get(family)
    return fn(*params) if fn else None
