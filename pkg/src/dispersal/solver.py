"""Exact dispersed-labelling numbers via Hamiltonian search.

``DL(G) >= k`` iff ``H_k(G)`` has a Hamiltonian path, and ``DL°(G) >= k``
iff it has a Hamiltonian cycle.  The search is a depth-first backtracker
over bitmask adjacency.  It always returns the lexicographically smallest
Hamiltonian path (or cycle through vertex 0), so witnesses do not depend
on pruning or on the number of workers.
"""
from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import bounds
from .errors import BudgetExceeded, InputError, InvariantViolation
from .graph import DistanceMatrix, Graph, distance_matrix, h_k_graph
from .labelling import Labelling, dispersion

BRUTE_FORCE_LIMIT = 10
_CLOCK_EVERY = 2048


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Labelling
    explored: int
    circular: bool = False

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "circular": self.circular,
            "explored": self.explored,
            "witness": self.witness.to_dict(),
        }


class _Search:
    """One depth-first search over a fixed graph given as bitmasks."""

    def __init__(self, masks: Sequence[int], cycle: bool, prune: bool, deadline: float | None):
        self.adj = list(masks)
        self.n = len(masks)
        self.full = (1 << self.n) - 1
        self.cycle = cycle
        self.prune = prune
        self.deadline = deadline
        self.explored = 0

    def run(self, prefix: Sequence[int]) -> list[int] | None:
        path = list(prefix)
        visited = 0
        for v in path:
            visited |= 1 << v
        return self._extend(path, visited)

    def _tick(self) -> None:
        self.explored += 1
        if self.deadline is not None and self.explored % _CLOCK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceeded("search budget exceeded")

    def _viable(self, end: int, unvisited: int, start: int) -> bool:
        adj = self.adj
        if self.cycle:
            if not adj[start] & unvisited:
                return False
            reach = unvisited | (1 << end) | (1 << start)
            need = 2
        else:
            reach = unvisited | (1 << end)
            need = 1
        loose = 0
        rest = unvisited
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            deg = (adj[v] & reach).bit_count()
            if deg < need:
                return False
            if not self.cycle and deg == 1:
                # only the far end of the path may have a single option
                loose += 1
                if loose > 1:
                    return False
        # the unvisited vertices must hang together with the current end
        target = unvisited | (1 << end)
        seen = frontier = 1 << end
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & target & ~seen
            seen |= frontier
        return seen == target

    def _extend(self, path: list[int], visited: int) -> list[int] | None:
        self._tick()
        end = path[-1]
        if visited == self.full:
            if not self.cycle or self.adj[end] >> path[0] & 1:
                return path
            return None
        unvisited = self.full & ~visited
        if self.prune and not self._viable(end, unvisited, path[0]):
            return None
        options = self.adj[end] & unvisited
        while options:
            low = options & -options
            options ^= low
            v = low.bit_length() - 1
            path.append(v)
            found = self._extend(path, visited | low)
            if found is not None:
                return found
            path.pop()
        return None


def _search_prefix(masks, prefix, cycle, prune, deadline):
    s = _Search(masks, cycle, prune, deadline)
    return s.run(prefix), s.explored


def _worker_count(workers: int | None) -> int:
    cap = os.environ.get("DISPERSAL_THREADS")
    if workers is None:
        workers = int(cap) if cap else 1
    elif cap:
        workers = min(workers, int(cap))
    return max(1, workers)


def _first_success(masks, prefixes, cycle, prune, deadline, workers):
    """Search prefixes in order; return the first (in that order) that succeeds."""
    explored = 0
    if workers <= 1 or len(prefixes) <= 1:
        for prefix in prefixes:
            found, count = _search_prefix(masks, prefix, cycle, prune, deadline)
            explored += count
            if found is not None:
                return found, explored
        return None, explored
    # fan out in ordered chunks; take the lowest prefix that succeeded so the
    # answer matches the sequential one
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for i in range(0, len(prefixes), workers):
            chunk = prefixes[i:i + workers]
            futures = [pool.submit(_search_prefix, masks, p, cycle, prune, deadline) for p in chunk]
            results = [f.result() for f in futures]
            explored += sum(c for _, c in results)
            for found, _ in results:
                if found is not None:
                    return found, explored
    return None, explored


def _deadline(budget_ms: float | None) -> float | None:
    return None if budget_ms is None else time.monotonic() + budget_ms / 1000.0


def _components_ok(g: Graph) -> bool:
    seen = frontier = 1
    masks = g.masks
    full = (1 << g.n) - 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            f ^= low
            nxt |= masks[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _path_search(g: Graph, prune: bool, deadline, workers) -> tuple[list[int] | None, int]:
    if g.n == 1:
        return [0], 1
    starts = list(range(g.n))
    if prune:
        if not _components_ok(g):
            return None, 0
        degrees = [g.degree(v) for v in range(g.n)]
        if min(degrees) == 0:
            return None, 0
        leaves = [v for v in range(g.n) if degrees[v] == 1]
        if len(leaves) > 2:
            return None, 0
        if len(leaves) == 2:
            starts = leaves
    return _first_success(g.masks, [[s] for s in starts], False, prune, deadline, workers)


def _cycle_search(g: Graph, prune: bool, deadline, workers) -> tuple[list[int] | None, int]:
    if prune:
        if not _components_ok(g) or min(g.degree(v) for v in range(g.n)) < 2:
            return None, 0
    prefixes = [[0, v] for v in g.adjacency[0]]
    return _first_success(g.masks, prefixes, True, prune, deadline, workers)


def hamiltonian_path(g: Graph, *, prune: bool = True, budget_ms: float | None = None,
                     workers: int | None = None) -> list[int] | None:
    """Lexicographically smallest Hamiltonian path of ``g``, or ``None``."""
    found, _ = _path_search(g, prune, _deadline(budget_ms), _worker_count(workers))
    return found


def hamiltonian_cycle(g: Graph, *, prune: bool = True, budget_ms: float | None = None,
                      workers: int | None = None) -> list[int] | None:
    """Smallest Hamiltonian cycle starting at vertex 0 (closing edge implied), or ``None``."""
    if g.n < 3:
        raise InputError(f"a Hamiltonian cycle needs n >= 3, got {g.n}")
    found, _ = _cycle_search(g, prune, _deadline(budget_ms), _worker_count(workers))
    return found


def _check_witness(dm: DistanceMatrix, result: SolveResult) -> SolveResult:
    d = dispersion(dm, result.witness)
    got = d.circular_k if result.circular else d.linear_k
    if got != result.value:
        raise InvariantViolation(f"witness has dispersion {got}, solver claimed {result.value}")
    return result


def _prepare(g: Graph, min_n: int) -> DistanceMatrix:
    if g.n < min_n:
        raise InputError(f"need at least {min_n} vertices, got {g.n}")
    return distance_matrix(g)


def exact_dl(g: Graph, *, prune: bool = True, budget_ms: float | None = None,
             workers: int | None = None) -> SolveResult:
    """``DL(g)`` with a witness, descending from the best cheap upper bound."""
    dm = _prepare(g, 2)
    report = bounds.bounds_report(g, dm)
    deadline = _deadline(budget_ms)
    nworkers = _worker_count(workers)
    explored = 0
    for k in range(report.best_upper, 0, -1):
        found, count = _path_search(h_k_graph(dm, k), prune, deadline, nworkers)
        explored += count
        if found is not None:
            return _check_witness(dm, SolveResult(k, Labelling(tuple(found)), explored))
    raise InvariantViolation("no Hamiltonian path even in the complete graph")


def exact_dlo(g: Graph, *, prune: bool = True, budget_ms: float | None = None,
              workers: int | None = None) -> SolveResult:
    """``DL°(g)`` with a witness."""
    dm = _prepare(g, 3)
    report = bounds.bounds_report(g, dm)
    top = report.best_upper
    if report.circular_upper is not None:
        top = min(top, report.circular_upper)
    deadline = _deadline(budget_ms)
    nworkers = _worker_count(workers)
    explored = 0
    for k in range(top, 0, -1):
        found, count = _cycle_search(h_k_graph(dm, k), prune, deadline, nworkers)
        explored += count
        if found is not None:
            return _check_witness(dm, SolveResult(k, Labelling(tuple(found)), explored, True))
    raise InvariantViolation("no Hamiltonian cycle even in the complete graph")


def brute_force_dl(g: Graph, circular: bool = False) -> SolveResult:
    """Reference value by scoring every vertex ordering; only for ``n <= 10``."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise InputError(f"brute force refuses n = {g.n} > {BRUTE_FORCE_LIMIT}")
    dm = _prepare(g, 3 if circular else 2)
    perms = np.array(list(itertools.permutations(range(g.n))), dtype=np.int8)
    d = dm.dist
    score = d[perms[:, :-1], perms[:, 1:]].min(axis=1)
    if circular:
        score = np.minimum(score, d[perms[:, -1], perms[:, 0]])
    best = int(np.argmax(score))
    result = SolveResult(int(score[best]), Labelling.from_order(perms[best].tolist()), len(perms), circular)
    return _check_witness(dm, result)
