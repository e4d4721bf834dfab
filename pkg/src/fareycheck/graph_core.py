"""Simple-graph kernel: adjacency, induced subgraphs, removability, chordality,
connected-induced-subgraph enumeration, and vertex connectivity.

All graphs are simple (no loops, no multi-edges) over integer vertex ids
``0..n-1``.  Graph objects are immutable after construction and every
operation here is pure, so they are safe to share between threads.
"""

from __future__ import annotations

import json
from collections import deque
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence


class InvalidGraphError(ValueError):
    """Raised for loops, out-of-range vertex ids, or malformed input."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_nbrs", "_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InvalidGraphError(f"negative vertex count {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidGraphError(f"loop edge at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._sets = tuple(frozenset(s) for s in adj)
        self._nbrs = tuple(tuple(sorted(s)) for s in adj)

    # -- basic accessors ---------------------------------------------------

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise InvalidGraphError(f"vertex {v} out of range for n={self.n}")
        return v

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of v."""
        self.check_vertex(v)
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._nbrs[v])

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self._nbrs[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._nbrs) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash((self.n, self._nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    return Graph(n, edges)


def closed_neighborhood(g: Graph, v: int) -> tuple[int, ...]:
    """{v} together with the neighbors of v, sorted."""
    g.check_vertex(v)
    return tuple(sorted({v, *g.neighbors(v)}))


def common_neighbors(g: Graph, u: int, v: int) -> tuple[int, ...]:
    """Vertices adjacent to both u and v, sorted."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise InvalidGraphError("common_neighbors needs two distinct vertices")
    return tuple(sorted(g._sets[u] & g._sets[v]))


def induced_subgraph(g: Graph, vs: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on vs; returns (subgraph, new-id -> old-id list)."""
    order = sorted(set(vs))
    for v in order:
        g.check_vertex(v)
    pos = {v: i for i, v in enumerate(order)}
    edges = [
        (pos[u], pos[v])
        for u in order
        for v in g.neighbors(u)
        if u < v and v in pos
    ]
    return Graph(len(order), edges), order


def is_removable(g: Graph, v: int) -> bool:
    """Degree <= 1, or degree exactly 2 with the two neighbors adjacent."""
    nb = g.neighbors(v)
    if len(nb) <= 1:
        return True
    if len(nb) == 2:
        return g.adjacent(nb[0], nb[1])
    return False


def is_removable_via_clique(g: Graph, v: int) -> bool:
    """Equivalent formulation: N[v] is a clique of size at most 3."""
    cn = closed_neighborhood(g, v)
    if len(cn) > 3:
        return False
    return all(g.adjacent(a, b) for a, b in combinations(cn, 2))


def contains_k4(g: Graph) -> Optional[tuple[int, ...]]:
    """First 4-clique in (edge, common-neighbor-pair) sorted order, if any."""
    for u, v in g.edges():
        cn = common_neighbors(g, u, v)
        for a, b in combinations(cn, 2):
            if g.adjacent(a, b):
                return tuple(sorted((u, v, a, b)))
    return None


# -- chordality ------------------------------------------------------------


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search order, ties broken by lowest id."""
    weight = [0] * g.n
    picked = [False] * g.n
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not picked[v] and (best == -1 or weight[v] > weight[best]):
                best = v
        picked[best] = True
        order.append(best)
        for u in g.neighbors(best):
            if not picked[u]:
                weight[u] += 1
    return order


def _find_hole(g: Graph) -> Optional[list[int]]:
    """An induced cycle of length >= 4, or None.

    For each vertex v and each non-adjacent pair x, y of its neighbors,
    search a shortest x-y path through vertices outside N[v]; the path plus
    v is chordless.  If the graph has any hole this search finds one.
    """
    for v in range(g.n):
        nb = g.neighbors(v)
        blocked = set(closed_neighborhood(g, v))
        for x, y in combinations(nb, 2):
            if g.adjacent(x, y):
                continue
            prev = {x: -1}
            queue = deque([x])
            while queue:
                cur = queue.popleft()
                if cur == y:
                    break
                for u in g.neighbors(cur):
                    if u in prev:
                        continue
                    # interior vertices must avoid N[v]; the endpoint y is fine
                    if u != y and u in blocked:
                        continue
                    prev[u] = cur
                    queue.append(u)
            if y in prev:
                path = [y]
                while path[-1] != x:
                    path.append(prev[path[-1]])
                path.reverse()
                return [v] + path
    return None


def is_chordal(g: Graph) -> tuple[bool, list[int]]:
    """Chordality test via MCS.

    Returns (True, perfect elimination ordering) or
    (False, induced cycle of length >= 4 as a closed vertex sequence).
    """
    peo = list(reversed(_mcs_order(g)))
    pos = {v: i for i, v in enumerate(peo)}
    chordal = True
    for v in peo:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        # PEO condition: later neighbors must form a clique
        for a, b in combinations(later, 2):
            if not g.adjacent(a, b):
                chordal = False
                break
        if not chordal:
            break
    if chordal:
        return True, peo
    hole = _find_hole(g)
    if hole is None:  # pragma: no cover - MCS failure implies a hole exists
        raise AssertionError("PEO check failed but no hole found")
    return False, hole


# -- connected induced subgraph enumeration --------------------------------


def enumerate_connected_induced_subgraphs(
    g: Graph, kmax: int, visit: Callable[[tuple[int, ...]], None]
) -> int:
    """Visit every connected induced vertex set of size <= kmax exactly once.

    Anchored expansion: sets are grown from their minimum vertex (the root)
    and a candidate enters the extension list only when first reached from
    the set, so each set is produced exactly once.  Sets are passed to the
    callback sorted; visit order is deterministic.
    """
    if kmax < 1:
        raise InvalidGraphError("kmax must be >= 1")
    count = 0
    blocked = [False] * g.n

    def extend(root: int, stack: list[int], ext: list[int]) -> None:
        nonlocal count
        for i, v in enumerate(ext):
            stack.append(v)
            count += 1
            visit(tuple(sorted(stack)))
            if len(stack) < kmax:
                fresh = [u for u in g.neighbors(v) if u > root and not blocked[u]]
                for u in fresh:
                    blocked[u] = True
                extend(root, stack, ext[i + 1 :] + fresh)
                for u in fresh:
                    blocked[u] = False
            stack.pop()

    for root in range(g.n):
        count += 1
        visit((root,))
        if kmax == 1:
            continue
        ext = [u for u in g.neighbors(root) if u > root]
        blocked[root] = True
        for u in ext:
            blocked[u] = True
        extend(root, [root], ext)
        blocked[root] = False
        for u in ext:
            blocked[u] = False
    return count


# -- vertex connectivity ---------------------------------------------------


def _min_vertex_cut(g: Graph, s: int, t: int) -> int:
    """Minimum s-t vertex cut for non-adjacent s, t (unit-capacity max-flow
    on the vertex-split digraph, Edmonds-Karp)."""
    big = g.n + 1
    # node 2v = v_in, 2v+1 = v_out
    cap: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in range(g.n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, big)
        add(2 * v + 1, 2 * u, big)
    out: dict[int, list[int]] = {}
    for a, b in cap:
        out.setdefault(a, []).append(b)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {source: -1}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in out.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity; complete graphs return n - 1.

    Max-flow over the standard pair schedule: a fixed minimum-degree vertex
    against each of its non-neighbors, then non-adjacent pairs inside its
    neighborhood.
    """
    if g.n < 2:
        raise InvalidGraphError("vertex_connectivity needs at least 2 vertices")
    if g.edge_count == g.n * (g.n - 1) // 2:
        return g.n - 1
    v0 = min(range(g.n), key=lambda v: (g.degree(v), v))
    best = g.degree(v0)
    inside = set(closed_neighborhood(g, v0))
    for u in range(g.n):
        if u not in inside:
            best = min(best, _min_vertex_cut(g, v0, u))
            if best == 0:
                return 0
    for x, y in combinations(g.neighbors(v0), 2):
        if not g.adjacent(x, y):
            best = min(best, _min_vertex_cut(g, x, y))
    return best


# -- serialization ---------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    """Canonical JSON form: {"vertices": n, "edges": [[u, v], ...]}."""
    return {"vertices": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_json(obj: dict) -> Graph:
    try:
        n = obj["vertices"]
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGraphError(f"malformed graph JSON: {exc}") from None
    return Graph(int(n), edges)


def graph_to_dot(g: Graph, labels: Optional[Sequence[str]] = None) -> str:
    """Undirected DOT export, no layout attributes."""
    lines = ["graph {"]
    if labels is not None:
        for v in range(g.n):
            lines.append(f'  {v} [label="{labels[v]}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_graph(g: Graph) -> str:
    return json.dumps(graph_to_json(g))
