"""Labellings, their dispersion, and explicit optimal labellings per family.

A labelling of an ``n``-vertex graph is stored as ``order`` where
``order[i - 1]`` is the vertex carrying label ``i``.  Labels are 1-based in
every public interface.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Callable, Sequence

import numpy as np

from .errors import InputError, PreconditionError
from .graph import DistanceMatrix

Metric = Callable[[int, int], int]


@dataclass(frozen=True)
class Labelling:
    order: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.order) != list(range(len(self.order))):
            raise InputError("labelling order must be a permutation of 0..n-1")

    @classmethod
    def from_order(cls, order: Sequence[int]) -> Labelling:
        return cls(tuple(int(v) for v in order))

    @classmethod
    def from_vertex_labels(cls, labels: Sequence[int]) -> Labelling:
        """Build from ``labels[v]`` = label of vertex ``v`` (1-based)."""
        n = len(labels)
        if sorted(labels) != list(range(1, n + 1)):
            raise InputError("vertex labels must be a permutation of 1..n")
        order = [0] * n
        for v, lab in enumerate(labels):
            order[lab - 1] = v
        return cls(tuple(order))

    @property
    def n(self) -> int:
        return len(self.order)

    def vertex_labels(self) -> list[int]:
        """Inverse view: ``result[v]`` is the label of vertex ``v``."""
        labels = [0] * self.n
        for i, v in enumerate(self.order):
            labels[v] = i + 1
        return labels

    def to_dict(self) -> dict:
        return {"n": self.n, "order": list(self.order)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> Labelling:
        if isinstance(d, dict) and "labelling" in d:
            d = d["labelling"]
        if not isinstance(d, dict) or "order" not in d:
            raise InputError("labelling JSON needs field 'order'")
        order = d["order"]
        if not isinstance(order, list) or not all(isinstance(v, int) for v in order):
            raise InputError("'order' must be a list of vertex ids")
        if "n" in d and d["n"] != len(order):
            raise InputError(f"'n' = {d['n']} but order has {len(order)} entries")
        return cls.from_order(order)

    @classmethod
    def from_json(cls, text: str) -> Labelling:
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid labelling JSON: {exc}") from None
        return cls.from_dict(d)


@dataclass(frozen=True)
class DispersionResult:
    """Minimum distance between consecutive labels.

    ``linear_pair`` / ``circular_pair`` give the labels ``(i, j)`` where
    the minimum is first attained; the circular pair may be ``(n, 1)``.
    """

    linear_k: int
    circular_k: int
    linear_pair: tuple[int, int]
    circular_pair: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "linear_k": self.linear_k,
            "circular_k": self.circular_k,
            "linear_pair": list(self.linear_pair),
            "circular_pair": list(self.circular_pair),
        }


def dispersion(metric: DistanceMatrix | Metric, lab: Labelling) -> DispersionResult:
    """Measure how far apart consecutively labelled vertices are.

    ``metric`` is a :class:`DistanceMatrix` or any ``d(u, v)`` callable
    (e.g. a closed-form family distance).
    """
    n = lab.n
    if n < 2:
        raise InputError("dispersion needs at least two vertices")
    order = lab.order
    if isinstance(metric, DistanceMatrix):
        if metric.n != n:
            raise InputError(f"labelling has {n} entries but graph has {metric.n} vertices")
        idx = np.asarray(order)
        steps = metric.dist[idx[:-1], idx[1:]]
        i = int(np.argmin(steps))
        linear = int(steps[i])
        wrap = metric(order[-1], order[0])
    else:
        steps = [metric(order[j], order[j + 1]) for j in range(n - 1)]
        linear = min(steps)
        i = steps.index(linear)
        wrap = metric(order[-1], order[0])
    linear_pair = (i + 1, i + 2)
    if wrap < linear:
        return DispersionResult(linear, wrap, linear_pair, (n, 1))
    return DispersionResult(linear, linear, linear_pair, linear_pair)


# -- cycles and paths --------------------------------------------------------

def label_cycle(n: int) -> Labelling:
    """Optimal labelling of ``C_n``: ``(n-1)//2``-dispersed for odd ``n``, ``n/2 - 1`` for even."""
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    if n % 2 == 1:
        step = (n - 1) // 2
        return Labelling(tuple(i * step % n for i in range(n)))
    if n % 4 == 0:
        step = n // 2 - 1
        return Labelling(tuple(i * step % n for i in range(n)))
    # n = 2q with q odd: two q-cycles of step q-1 (even and odd residues)
    # joined by the antipodal matching; walk them in a zigzag
    q = n // 2
    order = []
    for i in range(q):
        x = i * (q - 1) % n
        y = (x + q) % n
        order.extend((x, y) if i % 2 == 0 else (y, x))
    return Labelling(tuple(order))


def _path_positions(m: int) -> list[int]:
    """Label at each vertex of ``P_m``, left to right."""
    if m % 2 == 0:
        return list(range(2, m + 1, 2)) + list(range(1, m + 2, 2))
    return list(range(2, m + 2, 2)) + list(range(1, m + 1, 2))


def label_path(m: int) -> Labelling:
    if m < 1:
        raise InputError(f"path needs m >= 1 edges, got {m}")
    return Labelling.from_vertex_labels(_path_positions(m))


def label_path_circular(m: int) -> Labelling:
    """Circular labelling of ``P_m``: ``m/2`` for even ``m``, ``(m-1)/2`` for odd."""
    if m < 2:
        raise InputError(f"circular path labelling needs m >= 2, got {m}")
    if m % 2 == 0:
        return label_path(m)
    # odd m: label P_{m-1}, then hang vertex m+1 off its left end
    return Labelling.from_vertex_labels([m + 1] + _path_positions(m - 1))


# -- grids ---------------------------------------------------------------

def _rows_2xn(n: int) -> tuple[list[int], list[int]]:
    top = list(range(2, 2 * n + 1, 2))
    if n % 2 == 1:
        bottom = list(range(n + 2, 2 * n, 2)) + list(range(1, n + 1, 2))
    else:
        bottom = list(range(n + 3, 2 * n, 2)) + list(range(1, n + 2, 2))
    return top, bottom


def _rows_3xn(n: int) -> list[list[int]]:
    """3 x n labelling for odd ``n``; rows listed top to bottom."""
    rows = [[0] * n for _ in range(3)]
    pos = {}
    r, c = 2, 0
    shift = (n - 1) // 2
    direct = 3 * n if n % 3 else n
    for j in range(1, direct + 1):
        rows[r][c] = j
        pos[j] = (r, c)
        r, c = (r - 1) % 3, (c + shift) % n
    for j in range(direct + 1, 3 * n + 1):
        pr, pc = pos[j - n]
        r, c = pr, (pc + 1) % n
        rows[r][c] = j
        pos[j] = (r, c)
    return rows


def _shift(row: list[int], k: int) -> list[int]:
    return [x + k for x in row]


def grid_rows(m: int, n: int) -> list[list[int]]:
    """Optimal grid labelling as a matrix of labels, row 0 on top."""
    if m < 2 or n < 2:
        raise InputError(f"grid needs m, n >= 2, got {m}x{n}")
    if m % 2 == 0:
        a, b = _rows_2xn(n)
        half = m // 2
        return [_shift(a, 2 * k * n) for k in range(half)] + [_shift(b, 2 * k * n) for k in range(half)]
    if n % 2 == 0:
        t = grid_rows(n, m)
        return [list(col) for col in zip(*t)]
    if m == 3:
        return _rows_3xn(n)
    top, mid, bottom = ([3 * n + 1 - x for x in row] for row in _rows_3xn(n))
    a, b = _rows_2xn(n)
    t = (m - 3) // 2
    offsets = [(2 * i + 1) * n for i in range(1, t + 1)]
    return (
        [bottom]
        + [_shift(a, k) for k in offsets]
        + [mid]
        + [_shift(b, k) for k in offsets]
        + [top]
    )


def label_grid(m: int, n: int) -> Labelling:
    rows = grid_rows(m, n)
    return Labelling.from_vertex_labels([x for row in rows for x in row])


def grid_value(m: int, n: int) -> int:
    """``DL(L_{m,n})``."""
    return (m + n) // 2 - 1 if (m + n) % 2 == 0 else (m + n - 1) // 2


# -- hypercubes ------------------------------------------------------------

def hypercube_order(n: int) -> list[int]:
    """The recursive vertex sequence for ``Q_n`` as bitmasks."""
    if n < 2:
        raise InputError(f"hypercube labelling needs n >= 2, got {n}")
    seq = [0b00, 0b01, 0b10, 0b11]
    for d in range(2, n):
        half, full = 1 << (d - 1), 1 << d
        nxt = []
        for j in range(1, 2 * full + 1):
            odd = j % 2 == 1
            if j <= half:
                base, bit = seq[j - 1], not odd
            elif j <= full:
                base, bit = seq[j - 1], odd
            elif j <= full + half:
                base, bit = seq[j - full - 1], odd
            else:
                base, bit = seq[j - full - 1], not odd
            nxt.append(base | (int(bit) << d))
        seq = nxt
    return seq


def label_hypercube(n: int) -> Labelling:
    return Labelling(tuple(hypercube_order(n)))


# -- complete binary trees ------------------------------------------------

def tree_label(vertex: int, depth: int) -> int:
    """Label of a heap-indexed tree vertex."""
    h = vertex + 1
    length = h.bit_length() - 1
    if length == 0:
        return 1
    value = h - (1 << length)
    if value >> (length - 1):
        return 2 * value + 1
    if length == depth:
        return 2 * value + 2
    return 2 * value + (1 << depth) + (1 << length)


def label_complete_binary_tree(depth: int) -> Labelling:
    if depth < 1:
        raise InputError(f"binary tree needs depth >= 1, got {depth}")
    size = (1 << (depth + 1)) - 1
    return Labelling.from_vertex_labels([tree_label(v, depth) for v in range(size)])


# -- products ---------------------------------------------------------------

def label_product(lab_g: Labelling, lab_h: Labelling) -> Labelling:
    """Combine circular labellings of ``G`` and ``H`` into one of ``G □ H``.

    Label ``i + 1`` goes to ``(lab_g[i mod m], lab_h[i mod n])``; with
    ``gcd(m, n) = 1`` this is a bijection and consecutive distances add.
    """
    m, n = lab_g.n, lab_h.n
    if gcd(m, n) != 1:
        raise PreconditionError(f"product labelling needs coprime sizes, got {m} and {n}")
    return Labelling(tuple(lab_g.order[i % m] * n + lab_h.order[i % n] for i in range(m * n)))
