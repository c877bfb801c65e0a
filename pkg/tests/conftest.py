import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from dispersal.graph import Graph

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


def from_nx(h: nx.Graph, name=None) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(h.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in h.edges], name)


def random_connected(rng: random.Random, n: int, p: float = 0.35) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = {tuple(sorted((verts[i], verts[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def connected_graphs_up_to(nmax: int, nmin: int = 2) -> list[Graph]:
    """One labelled representative per connected unlabelled graph, from the networkx atlas."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if nmin <= n <= nmax and nx.is_connected(h):
            out.append(from_nx(h, f"atlas{len(out)}"))
    return out


def random_graph_suite(seed: int = 2024, count: int = 100) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected(rng, rng.choice((7, 8)), rng.uniform(0.2, 0.6)) for _ in range(count)]


@st.composite
def connected_graphs(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(parents[i - 1], i) for i in range(1, n)}
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return Graph.from_edges(n, sorted(edges | set(extra)))


@pytest.fixture(scope="session")
def small_connected():
    return connected_graphs_up_to(6)


@pytest.fixture(scope="session")
def random_suite():
    return random_graph_suite()
