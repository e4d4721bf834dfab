"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately re-derive results by enumeration (subsets,
simple cycles, naive set iteration) so the implementation under test never
checks itself.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from fareycheck import (
    Graph,
    gen_platonic,
    gen_torus_triangulation,
    is_removable,
    new_graph,
)
from fareycheck.graph_core import induced_subgraph


# -- fixtures --------------------------------------------------------------


@pytest.fixture
def k3():
    return new_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4():
    return new_graph(4, list(combinations(range(4), 2)))


@pytest.fixture
def c4():
    return new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5():
    return new_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture(scope="session")
def octahedron():
    return gen_platonic("octahedron")


@pytest.fixture(scope="session")
def icosahedron():
    return gen_platonic("icosahedron")


@pytest.fixture(scope="session")
def t55():
    return gen_torus_triangulation(5, 5)


@pytest.fixture(scope="session")
def t77():
    return gen_torus_triangulation(7, 7)


@pytest.fixture(scope="session")
def t99():
    return gen_torus_triangulation(9, 9)


# -- oracles ---------------------------------------------------------------


def is_connected_subset(g: Graph, vs) -> bool:
    vs = set(vs)
    if not vs:
        return False
    seen = {min(vs)}
    stack = [min(vs)]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u in vs and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vs


def brute_connected_sets(g: Graph, kmax: int) -> set[tuple[int, ...]]:
    """All connected induced vertex sets of size <= kmax, by subset filter."""
    out = set()
    for k in range(1, kmax + 1):
        for vs in combinations(range(g.n), k):
            if is_connected_subset(g, vs):
                out.add(vs)
    return out


def has_removable_vertex(g: Graph, vs) -> bool:
    sub, _ = induced_subgraph(g, vs)
    return any(is_removable(sub, v) for v in range(sub.n))


def brute_psi(g: Graph, n: int):
    """First subset (any subset, not only connected) of size <= n whose
    induced subgraph has no removable vertex; None if psi_n holds."""
    for k in range(1, n + 1):
        for vs in combinations(range(g.n), k):
            if not has_removable_vertex(g, vs):
                return vs
    return None


def removed_is_connected(g: Graph, removed) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if len(rest) <= 1:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    removed = set(removed)
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in removed and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(rest)


def brute_min_separator(g: Graph, max_size: int) -> int | None:
    """Smallest separator size <= max_size, or None if none that small."""
    for k in range(max_size + 1):
        for vs in combinations(range(g.n), k):
            if not removed_is_connected(g, vs):
                return k
    return None


def simple_cycles_up_to(g: Graph, lmax: int):
    """All simple cycles of length <= lmax as vertex tuples, each once
    (smallest vertex first, smaller neighbor second)."""
    cycles = []

    def extend(path, start):
        v = path[-1]
        for u in g.neighbors(v):
            if u == start and len(path) >= 3:
                if path[1] < path[-1]:  # kill the reflected copy
                    cycles.append(tuple(path))
            elif u > start and u not in path and len(path) < lmax:
                extend(path + [u], start)

    for start in range(g.n):
        extend([start], start)
    return cycles


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return new_graph(n, edges)


def random_chordal_k4free(n: int, rng: random.Random) -> Graph:
    """Chordal K4-free graph by insertion along a perfect elimination
    ordering: each new vertex attaches to a clique of size <= 2."""
    edges = []
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        size = rng.randint(0, min(2, v))
        if size == 0:
            continue
        a = rng.randrange(v)
        base = [a]
        if size == 2:
            nbrs = [b for b in adj[a] if b < v]
            if nbrs:
                base.append(rng.choice(nbrs))
        for b in base:
            edges.append((v, b))
            adj[v].add(b)
            adj[b].add(v)
    return new_graph(n, edges)


def random_connected_subset(g: Graph, size: int, rng: random.Random):
    """Random connected vertex set grown by frontier sampling."""
    v = rng.randrange(g.n)
    chosen = {v}
    frontier = set(g.neighbors(v))
    while len(chosen) < size and frontier:
        u = rng.choice(sorted(frontier))
        chosen.add(u)
        frontier |= set(g.neighbors(u))
        frontier -= chosen
    return sorted(chosen)
