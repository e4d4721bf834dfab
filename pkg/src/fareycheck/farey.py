"""Farey graph fragments: exact fraction labels, mediant iteration, and the
determinant adjacency test.

Fractions are exact integer pairs (Python ints are arbitrary precision, so
the determinant test is bit-exact and cannot overflow).  The single infinite
vertex is represented as 1/0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graph_core import Graph, InvalidGraphError, graph_to_json


@dataclass(frozen=True, order=True)
class Frac:
    """Reduced fraction p/q with q >= 0; 1/0 stands for infinity."""

    p: int
    q: int

    @staticmethod
    def make(p: int, q: int) -> "Frac":
        """Normalize to gcd(|p|, q) = 1, q >= 0 (infinity becomes 1/0)."""
        if q == 0:
            if p == 0:
                raise ValueError("0/0 is not a fraction")
            return Frac(1, 0)
        if q < 0:
            p, q = -p, -q
        g = math.gcd(abs(p), q)
        return Frac(p // g, q // g)

    @staticmethod
    def parse(text: str) -> "Frac":
        p, _, q = text.partition("/")
        return Frac.make(int(p), int(q) if q else 1)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def mediant(a: Frac, b: Frac) -> Frac:
    """The mediant (p+r)/(q+s), reduced."""
    if a == b:
        raise ValueError("mediant needs two distinct fractions")
    return Frac.make(a.p + b.p, a.q + b.q)


def farey_adjacent(a: Frac, b: Frac) -> bool:
    """Adjacency in the classical Farey graph: |ps - qr| = 1."""
    return abs(a.p * b.q - a.q * b.p) == 1


@dataclass(frozen=True)
class FareyFragment:
    """A finite stage of the mediant iteration.

    ``labels[v]`` is the fraction at vertex v and ``stage_of[v]`` the stage
    at which v first appeared (0 for the seeds 0/1 and 1/0).
    """

    graph: Graph
    labels: tuple[Frac, ...] = field()
    stage_of: tuple[int, ...] = field()


def build_fragment(k: int) -> FareyFragment:
    """Stage-k fragment: start from the edge {0/1, 1/0}, then at each stage
    add the mediant of every edge, joined to both endpoints.

    Mediants are deduplicated by exact value, so re-derived vertices and
    edges are no-ops.
    """
    if k < 0:
        raise ValueError("stage count must be nonnegative")
    labels = [Frac(0, 1), Frac(1, 0)]
    index = {labels[0]: 0, labels[1]: 1}
    stage_of = [0, 0]
    edges: set[tuple[int, int]] = {(0, 1)}
    for stage in range(1, k + 1):
        for u, v in sorted(edges):
            m = mediant(labels[u], labels[v])
            w = index.get(m)
            if w is None:
                w = len(labels)
                index[m] = w
                labels.append(m)
                stage_of.append(stage)
            edges.add((min(u, w), max(u, w)))
            edges.add((min(v, w), max(v, w)))
    graph = Graph(len(labels), edges)
    return FareyFragment(graph, tuple(labels), tuple(stage_of))


def verify_fragment(frag: FareyFragment) -> bool:
    """Every edge must satisfy the determinant condition and labels must be
    pairwise distinct, with stage 0 exactly on the two seeds."""
    if len(set(frag.labels)) != len(frag.labels):
        return False
    seeds = [v for v, s in enumerate(frag.stage_of) if s == 0]
    if sorted(frag.labels[v] for v in seeds) != [Frac(0, 1), Frac(1, 0)]:
        return False
    return all(
        farey_adjacent(frag.labels[u], frag.labels[v]) for u, v in frag.graph.edges()
    )


def fragment_to_json(frag: FareyFragment) -> dict:
    obj = graph_to_json(frag.graph)
    obj["labels"] = [str(f) for f in frag.labels]
    obj["stages"] = list(frag.stage_of)
    return obj


def fragment_from_json(obj: dict) -> FareyFragment:
    try:
        graph = Graph(int(obj["vertices"]), [(int(u), int(v)) for u, v in obj["edges"]])
        labels = tuple(Frac.parse(s) for s in obj["labels"])
        stages = tuple(int(s) for s in obj["stages"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidGraphError(f"malformed fragment JSON: {exc}") from None
    if len(labels) != graph.n or len(stages) != graph.n:
        raise InvalidGraphError("fragment JSON: label/stage count mismatch")
    return FareyFragment(graph, labels, stages)
