"""Axiom checkers for the Farey-graph theory.

phi0: every edge lies in exactly two triangles and every vertex has degree
at least 3.  psi_n: every substructure (induced subgraph) of size at most n
has a removable vertex.  Removability is local to a connected component, so
psi_n holds iff every *connected* induced subgraph of size <= n has a
removable vertex; the exhaustive checker relies on that reduction.

The certificate route replaces enumeration: a triangulation of an orientable
surface that is n-connected with face width >= n satisfies removability for
all induced subgraphs of size strictly below n, i.e. the axiom psi_{n-1}.
The off-by-one is recorded explicitly in every certificate report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import _kernels
from .graph_core import (
    Graph,
    common_neighbors,
    induced_subgraph,
    is_removable,
    vertex_connectivity,
)
from .surface_map import OrientedMap, euler_genus, is_triangulation, trace_faces
from .topology import GenusNotSupportedError, face_width

DEFAULT_SUBGRAPH_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """The exhaustive scan hit its subgraph budget; never treated as a pass."""


@dataclass
class AxiomReport:
    """Verdict for one axiom check, with a re-verifiable witness on failure."""

    axiom: str  # "phi0" | "psi" | "two_triangles"
    status: str  # "pass" | "fail" | "error"
    n: Optional[int] = None
    mode: Optional[str] = None  # for psi: "exhaustive" | "certificate"
    certified_psi: Optional[int] = None
    witness: Optional[dict] = None
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        obj: dict = {"axiom": self.axiom, "status": self.status}
        if self.n is not None:
            obj["n"] = self.n
        if self.mode is not None:
            obj["mode"] = self.mode
        if self.certified_psi is not None:
            obj["certified_psi"] = self.certified_psi
        if self.witness is not None:
            obj["witness"] = self.witness
        obj["stats"] = self.stats
        return obj


def _ms(t0: float) -> int:
    return int((time.perf_counter() - t0) * 1000)


def check_phi0(g: Graph) -> AxiomReport:
    """Min degree 3 and exactly two triangles per edge; first offender (in
    sorted vertex, then sorted edge order) is the witness."""
    t0 = time.perf_counter()
    for v in range(g.n):
        if g.degree(v) < 3:
            return AxiomReport(
                "phi0",
                "fail",
                witness={"vertex": v, "degree": g.degree(v)},
                stats={"millis": _ms(t0)},
            )
    if g.n == 0:
        # no vertex of degree >= 3 exists; the empty graph fails phi0
        return AxiomReport(
            "phi0", "fail", witness={"empty": True}, stats={"millis": _ms(t0)}
        )
    for u, v in g.edges():
        k = len(common_neighbors(g, u, v))
        if k != 2:
            return AxiomReport(
                "phi0",
                "fail",
                witness={"edge": [u, v], "triangles": k},
                stats={"millis": _ms(t0)},
            )
    return AxiomReport("phi0", "pass", stats={"millis": _ms(t0)})


def check_psi_exhaustive(
    g: Graph, n: int, budget: int = DEFAULT_SUBGRAPH_BUDGET
) -> AxiomReport:
    """Scan every connected induced subgraph of size <= n for a removable
    vertex; the first counterexample in enumeration order is the witness."""
    if n < 1:
        raise ValueError("psi index must be >= 1")
    t0 = time.perf_counter()
    indptr, indices = _kernels.graph_csr(g)
    status, count, wlen, wit = _kernels.psi_scan(indptr, indices, n, budget)
    stats = {"subgraphs": int(count), "millis": _ms(t0)}
    if status == _kernels.PSI_BUDGET:
        return AxiomReport(
            "psi",
            "error",
            n=n,
            mode="exhaustive",
            witness={"budget": budget},
            stats=stats,
        )
    if status == _kernels.PSI_FAIL:
        vertices = [int(wit[i]) for i in range(int(wlen))]
        return AxiomReport(
            "psi",
            "fail",
            n=n,
            mode="exhaustive",
            witness={"vertices": vertices},
            stats=stats,
        )
    return AxiomReport("psi", "pass", n=n, mode="exhaustive", stats=stats)


def certify_psi(m: OrientedMap, n: int) -> AxiomReport:
    """Certificate route: triangulation + connectivity >= n + face width >= n
    together certify removability for all induced subgraphs with fewer than
    n vertices, i.e. the axiom psi_{n-1}."""
    if n < 5:
        raise ValueError("certificate route requires n >= 5")
    t0 = time.perf_counter()
    tri, bad_face = is_triangulation(m)
    if not tri:
        return AxiomReport(
            "psi",
            "fail",
            n=n - 1,
            mode="certificate",
            witness={"non_triangular_face": [list(d) for d in bad_face]},
            stats={"millis": _ms(t0)},
        )
    kappa = vertex_connectivity(m.graph)
    fw = face_width(m)  # raises GenusNotSupportedError for genus >= 2
    stats = {
        "connectivity": kappa,
        "face_width": "infinite" if fw == float("inf") else int(fw),
        "millis": _ms(t0),
    }
    if kappa < n:
        return AxiomReport(
            "psi",
            "fail",
            n=n - 1,
            mode="certificate",
            witness={"connectivity": kappa, "required": n},
            stats=stats,
        )
    if fw < n:
        return AxiomReport(
            "psi",
            "fail",
            n=n - 1,
            mode="certificate",
            witness={"face_width": int(fw), "required": n},
            stats=stats,
        )
    return AxiomReport(
        "psi", "pass", n=n - 1, mode="certificate", certified_psi=n - 1, stats=stats
    )


def facial_triangle_thirds(m: OrientedMap) -> dict[tuple[int, int], set[int]]:
    """Per edge, the distinct third vertices of its triangular faces."""
    thirds: dict[tuple[int, int], set[int]] = {}
    for face in trace_faces(m):
        verts = [d[0] for d in face]
        if len(face) != 3 or len(set(verts)) != 3:
            continue
        a, b, c = verts
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            thirds.setdefault((min(x, y), max(x, y)), set()).add(z)
    return thirds


def check_two_triangles_lower(m: OrientedMap) -> AxiomReport:
    """Every edge must lie on exactly two facial triangles with distinct
    third vertices (checked on traced faces, not on graph triangles)."""
    tri, bad_face = is_triangulation(m)
    if not tri:
        raise ValueError(f"not a triangulation, offending face {bad_face}")
    if m.graph.n <= 3:
        raise ValueError("two-triangle check excludes maps on <= 3 vertices")
    t0 = time.perf_counter()
    thirds = facial_triangle_thirds(m)
    for u, v in m.graph.edges():
        zs = thirds.get((u, v), set())
        if len(zs) != 2:
            return AxiomReport(
                "two_triangles",
                "fail",
                witness={"edge": [u, v], "facial_thirds": sorted(zs)},
                stats={"millis": _ms(t0)},
            )
    return AxiomReport("two_triangles", "pass", stats={"millis": _ms(t0)})


def planar_obstruction(m: OrientedMap) -> dict:
    """On a sphere map passing phi0, exhibit a vertex v of degree <= 5 whose
    closed neighborhood induces a subgraph with no removable vertex; that
    set (size <= 6) refutes psi_6."""
    if euler_genus(m) != 0:
        raise ValueError("planar obstruction requires a genus-0 map")
    if not check_phi0(m.graph).passed:
        raise ValueError("planar obstruction requires phi0 to hold")
    g = m.graph
    for v in range(g.n):
        if g.degree(v) > 5:
            continue
        hood = sorted({v, *g.neighbors(v)})
        sub, relabel = induced_subgraph(g, hood)
        if not any(is_removable(sub, w) for w in range(sub.n)):
            return {"vertex": v, "neighborhood": hood, "size": len(hood)}
    raise AssertionError("phi0 planar map without obstruction vertex")


def pseudofiniteness_run(
    n_max: int,
    family: Sequence[tuple[str, Graph]],
    budget: int = DEFAULT_SUBGRAPH_BUDGET,
) -> dict:
    """For each n <= n_max, search the family for a finite graph satisfying
    both phi0 and psi_n; reports the witnessing member or says loudly that
    the family is exhausted."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    phi0_reports = {name: check_phi0(g) for name, g in family}
    results = []
    for n in range(1, n_max + 1):
        entry: dict = {"n": n, "witness_model": None}
        failures = {}
        for name, g in family:
            if not phi0_reports[name].passed:
                failures[name] = {"phi0": phi0_reports[name].to_json()}
                continue
            rep = check_psi_exhaustive(g, n, budget=budget)
            if rep.status == "error":
                raise BudgetExceededError(
                    f"psi_{n} scan on {name} exceeded budget {budget}"
                )
            if rep.passed:
                entry["witness_model"] = name
                break
            failures[name] = {"psi": rep.to_json()}
        if entry["witness_model"] is None:
            entry["failures"] = failures
        results.append(entry)
    return {
        "n_max": n_max,
        "family": [name for name, _ in family],
        "results": results,
        "complete": all(r["witness_model"] is not None for r in results),
    }
