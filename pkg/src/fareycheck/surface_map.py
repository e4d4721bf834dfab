"""Combinatorial embeddings on orientable surfaces.

An :class:`OrientedMap` is a rotation system: a cyclic order of neighbors at
every vertex.  Faces are traced with one fixed convention throughout the
package: the dart after (u -> v) is (v -> w) where w immediately follows u
in the rotation at v.  Reflecting the rotations changes face identities but
not face counts or genus.

A :class:`TorusMap` additionally carries an integer displacement vector per
directed edge, which lets genus-1 subgraphs be developed into the plane
(the universal-cover lift in :mod:`fareycheck.topology`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph_core import Graph, InvalidGraphError

Dart = tuple[int, int]
Face = tuple[Dart, ...]


class MapError(ValueError):
    """Raised for malformed rotation systems or inconsistent map data."""


class OrientedMap:
    """Immutable rotation system over a connected simple graph."""

    __slots__ = ("graph", "rotation", "_next")

    def __init__(self, rotation: Sequence[Sequence[int]]):
        rot = tuple(tuple(r) for r in rotation)
        n = len(rot)
        edges = []
        for v, r in enumerate(rot):
            if len(set(r)) != len(r):
                raise MapError(f"rotation at {v} repeats a neighbor")
            for u in r:
                if not (0 <= u < n) or u == v:
                    raise MapError(f"rotation at {v} has invalid neighbor {u}")
                if u > v:
                    edges.append((v, u))
        graph = Graph(n, edges)
        for v in range(n):
            if sorted(rot[v]) != list(graph.neighbors(v)):
                raise MapError(f"rotation at {v} is not a permutation of adj({v})")
        if n and not _connected(graph):
            raise MapError("underlying graph must be connected")
        self.graph = graph
        self.rotation = rot
        # successor index: _next[v][u] = neighbor following u in rotation at v
        self._next = tuple(
            {u: r[(i + 1) % len(r)] for i, u in enumerate(r)} for r in rot
        )

    def next_dart(self, dart: Dart) -> Dart:
        u, v = dart
        return (v, self._next[v][u])

    def darts(self) -> list[Dart]:
        return [(u, v) for u in range(self.graph.n) for v in self.rotation[u]]

    def __repr__(self) -> str:
        return f"OrientedMap(n={self.graph.n}, m={self.graph.edge_count})"


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


@dataclass(frozen=True)
class TorusMap:
    """Oriented map of genus 1 with a Z^2 displacement per directed edge."""

    map: OrientedMap
    displacement: dict[Dart, tuple[int, int]]

    def __post_init__(self):
        m = self.map
        for u, v in m.darts():
            dx, dy = self.displacement[(u, v)]
            rx, ry = self.displacement[(v, u)]
            if (rx, ry) != (-dx, -dy):
                raise MapError(f"displacement not antisymmetric on edge ({u},{v})")
        if euler_genus(m) != 1:
            raise MapError("torus map must have genus 1")
        for face in trace_faces(m):
            sx = sum(self.displacement[d][0] for d in face)
            sy = sum(self.displacement[d][1] for d in face)
            if (sx, sy) != (0, 0):
                raise MapError(f"face {face} has nonzero displacement sum")


def trace_faces(m: OrientedMap) -> list[Face]:
    """Partition of all darts into face orbits, in sorted first-dart order."""
    seen: set[Dart] = set()
    faces = []
    for start in sorted(m.darts()):
        if start in seen:
            continue
        face = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            face.append(cur)
            cur = m.next_dart(cur)
        if cur != start:
            raise MapError(f"face trace from {start} re-entered at {cur}")
        faces.append(tuple(face))
    return faces


def euler_genus(m: OrientedMap, faces: Optional[list[Face]] = None) -> int:
    """Genus from V - E + F = 2 - 2g."""
    if faces is None:
        faces = trace_faces(m)
    chi = m.graph.n - m.graph.edge_count + len(faces)
    if chi % 2 != 0 or chi > 2:
        raise MapError(f"inconsistent Euler characteristic {chi}")
    return (2 - chi) // 2


def is_triangulation(m: OrientedMap) -> tuple[bool, Optional[Face]]:
    """Every face must have 3 darts with 3 distinct vertices and edges.

    Returns (True, None) or (False, first offending face).
    """
    for face in trace_faces(m):
        verts = {d[0] for d in face}
        edgs = {frozenset(d) for d in face}
        if len(face) != 3 or len(verts) != 3 or len(edgs) != 3:
            return False, face
    return True, None


def radial_graph(m: OrientedMap) -> OrientedMap:
    """Vertex-face incidence map on the same surface.

    Vertices 0..n-1 are the original vertices; n+j is face j of the traced
    face list.  One radial edge per dart (joining the dart's head to the
    dart's face), so the radial map has 2|E| edges and only quadrilateral
    faces.  Raises if an incidence repeats (the radial graph would need a
    multi-edge, which the simple-graph kernel does not represent).
    """
    n = m.graph.n
    faces = trace_faces(m)
    face_of = {}
    for j, face in enumerate(faces):
        for d in face:
            face_of[d] = j
    rotation: list[list[int]] = []
    for v in range(n):
        nbrs = [n + face_of[(u, v)] for u in m.rotation[v]]
        if len(set(nbrs)) != len(nbrs):
            raise MapError(f"radial graph has a multi-edge at vertex {v}")
        rotation.append(nbrs)
    for face in faces:
        heads = [d[1] for d in face]
        if len(set(heads)) != len(heads):
            raise MapError("radial graph has a multi-edge at a face vertex")
        # reversed boundary order keeps the global orientation consistent
        rotation.append(heads[::-1])
    return OrientedMap(rotation)


def radial_torus(t: TorusMap) -> TorusMap:
    """Radial map of a torus map with inherited displacements.

    Each face vertex takes the Z^2 position of a fixed corner (the head of
    the first dart of its traced boundary); primal displacements split
    across the two radial edges through the face vertex.
    """
    m = t.map
    n = m.graph.n
    faces = trace_faces(m)
    rad = radial_graph(m)
    disp: dict[Dart, tuple[int, int]] = {}
    for j, face in enumerate(faces):
        f = n + j
        # position of each head relative to the anchor (head of first dart)
        off = (0, 0)
        for d in face:
            v = d[1]
            disp[(f, v)] = off
            disp[(v, f)] = (-off[0], -off[1])
            nxt = m.next_dart(d)
            step = t.displacement[nxt]
            off = (off[0] + step[0], off[1] + step[1])
    return TorusMap(rad, disp)


# -- generators ------------------------------------------------------------

_TORUS_OFFSETS = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))


def gen_torus_triangulation(m: int, k: int) -> TorusMap:
    """6-regular triangulation of the torus on the m-by-k wrapped grid.

    Vertex (i, j) has id i*k + j; neighbors are the row, column, and main
    diagonal steps, in the fixed cyclic order
    (+1,0), (+1,+1), (0,+1), (-1,0), (-1,-1), (0,-1).
    Requires m, k >= 5 so that no two offsets collide modulo the wrap.
    """
    if m < 5 or k < 5:
        raise InvalidGraphError("torus grid needs m, k >= 5 to stay simple")
    rotation = []
    disp = {}
    for i in range(m):
        for j in range(k):
            v = i * k + j
            row = []
            for a, b in _TORUS_OFFSETS:
                u = ((i + a) % m) * k + (j + b) % k
                row.append(u)
                disp[(v, u)] = (a, b)
            rotation.append(row)
    return TorusMap(OrientedMap(rotation), disp)


# Rotation tables derived from the solid coordinates (counterclockwise seen
# from outside); hard-coded so they stay independent fixtures.
_PLATONIC_ROTATIONS = {
    "octahedron": (
        (1, 2, 4, 5),
        (0, 5, 3, 2),
        (0, 1, 3, 4),
        (1, 5, 4, 2),
        (0, 2, 3, 5),
        (0, 4, 3, 1),
    ),
    "icosahedron": (
        (1, 3, 6, 4, 2),
        (0, 2, 5, 7, 3),
        (0, 4, 8, 5, 1),
        (0, 1, 7, 9, 6),
        (0, 6, 10, 8, 2),
        (1, 2, 8, 11, 7),
        (0, 3, 9, 10, 4),
        (1, 5, 11, 9, 3),
        (2, 4, 10, 11, 5),
        (3, 7, 11, 10, 6),
        (4, 6, 9, 11, 8),
        (5, 8, 10, 9, 7),
    ),
}


def gen_platonic(name: str) -> OrientedMap:
    """Sphere maps used as planar fixtures: octahedron or icosahedron."""
    try:
        rotation = _PLATONIC_ROTATIONS[name]
    except KeyError:
        raise InvalidGraphError(
            f"unknown platonic map {name!r}; choose from {sorted(_PLATONIC_ROTATIONS)}"
        ) from None
    return OrientedMap(rotation)


# -- serialization ---------------------------------------------------------


def map_to_json(m: OrientedMap, displacement: Optional[dict] = None) -> dict:
    """Canonical JSON: rotations rotated so the smallest neighbor is first;
    displacements (if any) sorted by directed edge with u < v only."""
    rotations = []
    for r in m.rotation:
        if r:
            i = r.index(min(r))
            r = r[i:] + r[:i]
        rotations.append(list(r))
    obj: dict = {"rotations": rotations}
    if displacement is not None:
        obj["displacements"] = [
            [u, v, *displacement[(u, v)]] for u, v in sorted(displacement) if u < v
        ]
    return obj


def torus_to_json(t: TorusMap) -> dict:
    return map_to_json(t.map, t.displacement)


def map_from_json(obj: dict) -> OrientedMap | TorusMap:
    """Parse map JSON; returns a TorusMap when displacements are present."""
    try:
        rotation = [[int(u) for u in r] for r in obj["rotations"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MapError(f"malformed map JSON: {exc}") from None
    m = OrientedMap(rotation)
    if "displacements" not in obj:
        return m
    disp: dict[Dart, tuple[int, int]] = {}
    for u, v, dx, dy in obj["displacements"]:
        disp[(int(u), int(v))] = (int(dx), int(dy))
        disp[(int(v), int(u))] = (-int(dx), -int(dy))
    missing = [d for d in m.darts() if d not in disp]
    if missing:
        raise MapError(f"displacements missing for darts {missing[:3]}")
    return TorusMap(m, disp)
