"""Topological computations on oriented maps: tree-cotree decompositions,
Z2 homology signatures, shortest non-contractible cycles, face width, and
the universal-cover development of torus subgraphs.

Z2 homology is exact on the torus: a simple closed curve there is
non-contractible iff non-separating iff its Z2 class is nonzero.  On genus
>= 2 a separating non-contractible cycle can evade the signature test, so
those maps are rejected rather than silently mis-measured.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from . import _kernels
from .graph_core import Graph, InvalidGraphError, induced_subgraph
from .surface_map import (
    MapError,
    OrientedMap,
    TorusMap,
    euler_genus,
    radial_graph,
    trace_faces,
)

Edge = tuple[int, int]

INFINITE_FACE_WIDTH = math.inf


class GenusNotSupportedError(ValueError):
    """Exact face-width machinery is limited to genus <= 1."""


@dataclass(frozen=True)
class TreeCotree:
    """Partition of the map's edges: primal spanning tree, dual spanning
    tree, and the 2g leftover edges generating first homology."""

    tree_edges: frozenset[Edge]
    cotree_edges: frozenset[Edge]
    leftover_edges: tuple[Edge, ...]


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk with its Z2 signature over the leftover edges.

    ``vertices`` lists the walk without repeating the start; nonzero
    signature certifies a non-separating (hence non-contractible) cycle.
    The optional ``displacement`` is the net Z^2 shift of a torus walk.
    """

    vertices: tuple[int, ...]
    length: int
    signature: tuple[int, ...]
    displacement: Optional[tuple[int, int]] = None

    def to_json(self) -> dict:
        obj = {
            "cycle": list(self.vertices),
            "length": self.length,
            "signature": list(self.signature),
        }
        if self.displacement is not None:
            obj["displacement"] = list(self.displacement)
        return obj


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def tree_cotree(m: OrientedMap) -> TreeCotree:
    """BFS spanning tree from vertex 0, dual BFS tree from face 0 over the
    remaining edges, leftover edges sorted."""
    g = m.graph
    if g.n == 0:
        raise MapError("empty map")
    tree: set[Edge] = set()
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                tree.add(_norm_edge(v, u))
                queue.append(u)
    if len(seen) != g.n:
        raise MapError("disconnected map")

    faces = trace_faces(m)
    face_of = {}
    for j, face in enumerate(faces):
        for d in face:
            face_of[d] = j
    # dual adjacency through non-tree primal edges
    dual: dict[int, list[tuple[int, Edge]]] = {j: [] for j in range(len(faces))}
    for u, v in g.edges():
        if (u, v) in tree:
            continue
        f1, f2 = face_of[(u, v)], face_of[(v, u)]
        dual[f1].append((f2, (u, v)))
        dual[f2].append((f1, (u, v)))
    cotree: set[Edge] = set()
    fseen = {0}
    fqueue = deque([0])
    while fqueue:
        f = fqueue.popleft()
        for h, e in dual[f]:
            if h not in fseen:
                fseen.add(h)
                cotree.add(e)
                fqueue.append(h)
    leftover = tuple(sorted(set(g.edges()) - tree - cotree))
    expected = 2 * euler_genus(m, faces)
    if len(leftover) != expected:
        raise MapError(
            f"tree-cotree leftover count {len(leftover)} != 2g = {expected}"
        )
    return TreeCotree(frozenset(tree), frozenset(cotree), leftover)


def edge_signature_masks(m: OrientedMap, tc: TreeCotree) -> dict[Edge, int]:
    """Per-edge Z2 weight as a bitmask over the leftover edges.

    Bit i of an edge's mask is set iff the edge lies on the fundamental
    cocycle of leftover edge i: the leftover edge itself plus the cotree
    edges whose duals form the dual-tree path between its two faces.  A
    closed walk's homology class is the edge-wise xor of these masks, so
    face boundaries always come out zero.
    """
    faces = trace_faces(m)
    face_of = {}
    for j, face in enumerate(faces):
        for d in face:
            face_of[d] = j
    # dual tree structure over the cotree edges
    dual: dict[int, list[tuple[int, Edge]]] = {j: [] for j in range(len(faces))}
    for u, v in tc.cotree_edges:
        f1, f2 = face_of[(u, v)], face_of[(v, u)]
        dual[f1].append((f2, (u, v)))
        dual[f2].append((f1, (u, v)))
    parent = {0: (-1, None)}
    depth = {0: 0}
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for h, e in dual[f]:
            if h not in parent:
                parent[h] = (f, e)
                depth[h] = depth[f] + 1
                queue.append(h)
    masks: dict[Edge, int] = {}
    for i, (u, v) in enumerate(tc.leftover_edges):
        masks[(u, v)] = masks.get((u, v), 0) | (1 << i)
        a, b = face_of[(u, v)], face_of[(v, u)]
        while depth[a] > depth[b]:
            a, e = parent[a][0], parent[a][1]
            masks[e] = masks.get(e, 0) ^ (1 << i)
        while depth[b] > depth[a]:
            b, e = parent[b][0], parent[b][1]
            masks[e] = masks.get(e, 0) ^ (1 << i)
        while a != b:
            masks[parent[a][1]] = masks.get(parent[a][1], 0) ^ (1 << i)
            masks[parent[b][1]] = masks.get(parent[b][1], 0) ^ (1 << i)
            a, b = parent[a][0], parent[b][0]
    return masks


def homology_signature(
    m: OrientedMap, tc: TreeCotree, cycle: Sequence[int]
) -> tuple[int, ...]:
    """Z2 class of a closed walk as parities over the leftover-edge basis."""
    if len(cycle) < 1:
        raise InvalidGraphError("empty walk")
    masks = edge_signature_masks(m, tc)
    acc = 0
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if not m.graph.adjacent(a, b):
            raise InvalidGraphError(f"walk step ({a},{b}) is not an edge")
        acc ^= masks.get(_norm_edge(a, b), 0)
    return tuple((acc >> i) & 1 for i in range(len(tc.leftover_edges)))


def shortest_noncontractible_cycle(
    m: OrientedMap, tc: Optional[TreeCotree] = None
) -> Optional[CycleWitness]:
    """Minimum-length cycle with nonzero Z2 signature, or None on the sphere.

    Per-root BFS trees with fundamental-cycle candidates; roots are merged
    by (length, lexicographic canonical sequence), so the result is
    deterministic.  Exact for genus <= 1 only.
    """
    genus = euler_genus(m)
    if genus == 0:
        return None
    if genus > 1:
        raise GenusNotSupportedError(
            f"genus {genus}: Z2 signature only bounds face width, refusing"
        )
    if tc is None:
        tc = tree_cotree(m)
    indptr, indices = _kernels.graph_csr(m.graph)
    masks = edge_signature_masks(m, tc)
    esig = np.zeros(len(indices), dtype=np.int64)
    for v in range(m.graph.n):
        for t in range(int(indptr[v]), int(indptr[v + 1])):
            esig[t] = masks.get(_norm_edge(v, int(indices[t])), 0)
    found, length, cyc = _kernels.cycle_scan(indptr, indices, esig)
    if not found:
        raise MapError("genus-1 map with no non-separating cycle")
    vertices = tuple(int(cyc[i]) for i in range(int(length)))
    return CycleWitness(vertices, int(length), homology_signature(m, tc, vertices))


def face_width(m: OrientedMap) -> Union[int, float]:
    """Representativity of the embedding.

    Genus 0 has no non-contractible curves (infinite sentinel); on the torus
    the optimal curve alternates vertices and faces, so it is half the
    shortest non-separating cycle length of the radial map.
    """
    genus = euler_genus(m)
    if genus == 0:
        return INFINITE_FACE_WIDTH
    if genus > 1:
        raise GenusNotSupportedError(f"exact face width unsupported at genus {genus}")
    witness = shortest_noncontractible_cycle(radial_graph(m))
    assert witness is not None and witness.length % 2 == 0
    return witness.length // 2


@dataclass(frozen=True)
class LiftResult:
    """Either planar coordinates for every subset vertex or a witness walk
    with nonzero net displacement."""

    coords: Optional[dict[int, tuple[int, int]]]
    witness: Optional[CycleWitness]

    @property
    def ok(self) -> bool:
        return self.coords is not None


def lift_to_universal_cover(t: TorusMap, subset: Sequence[int]) -> LiftResult:
    """Develop a connected induced subgraph into the Z^2 cover.

    Breadth-first assignment from the smallest subset vertex; the lift
    succeeds iff no vertex receives two distinct coordinates.  On failure
    the returned walk closes through the first inconsistent edge in BFS
    order and has nonzero total displacement.
    """
    g = t.map.graph
    vs = sorted(set(subset))
    if not vs:
        raise InvalidGraphError("empty subset")
    for v in vs:
        g.check_vertex(v)
    inside = set(vs)
    root = vs[0]
    reach = {root}
    bq = deque([root])
    while bq:
        v = bq.popleft()
        for u in g.neighbors(v):
            if u in inside and u not in reach:
                reach.add(u)
                bq.append(u)
    if len(reach) != len(vs):
        raise InvalidGraphError("subset does not induce a connected subgraph")
    coords: dict[int, tuple[int, int]] = {root: (0, 0)}
    prev: dict[int, int] = {root: -1}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u not in inside:
                continue
            dx, dy = t.displacement[(v, u)]
            pu = (coords[v][0] + dx, coords[v][1] + dy)
            if u not in coords:
                coords[u] = pu
                prev[u] = v
                queue.append(u)
            elif coords[u] != pu:
                # walk root..v -> u ..root through the BFS tree
                up = []
                a = v
                while a != -1:
                    up.append(a)
                    a = prev[a]
                down = []
                b = u
                while b != -1:
                    down.append(b)
                    b = prev[b]
                walk = up[::-1] + down[:-1]
                total = (pu[0] - coords[u][0], pu[1] - coords[u][1])
                sig = homology_signature(t.map, tree_cotree(t.map), walk)
                witness = CycleWitness(tuple(walk), len(walk), sig, total)
                return LiftResult(None, witness)
    return LiftResult(dict(coords), None)


def induced_is_chordal(g: Graph, subset: Sequence[int]):
    """Chordality of an induced subgraph, witness relabeled to original ids."""
    from .graph_core import is_chordal

    sub, relabel = induced_subgraph(g, subset)
    ok, wit = is_chordal(sub)
    return ok, [relabel[v] for v in wit]
