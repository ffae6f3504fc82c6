"""Krstic graphs of quadratic equations.

Vertices are the operation occurrences of the generalized equation.  Each object
variable contributes an edge between the two occurrences it is an argument of,
each nested application an edge to its parent, and the two roots are joined by
one equality edge.  For a parastrophically uncancellable equation the result is
a 3-connected cubic multigraph.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx
import numpy as np

from quasieq.domain.constants import (
    EQUALITY_LABEL,
    KRSTIC_BRUTE_FORCE_MAX_VERTICES,
    KRSTIC_MIN_CONNECTIVITY_VERTICES,
    NESTING_LABEL,
)
from quasieq.domain.exceptions import KrsticGraphError
from quasieq.domain.models import GraphEdge, GraphExport, ShapeName
from quasieq.domain.terms import App, Equation, Term, Var, generalize, iter_applications
from quasieq.logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    label: str


@dataclass(frozen=True)
class KrsticGraph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def degree(self, vertex: str) -> int:
        return sum((e.u == vertex) + (e.v == vertex) for e in self.edges)

    def to_networkx(self, name: str = "krstic") -> nx.MultiGraph:
        """Labelled multigraph; edge keys are positions in ``edges``."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        graph.graph["name"] = name
        for index, edge in enumerate(self.edges):
            graph.add_edge(edge.u, edge.v, key=index, label=edge.label)
        return graph

    def adjacency(self) -> np.ndarray:
        """Edge-multiplicity matrix in vertex order."""
        position = {v: i for i, v in enumerate(self.vertices)}
        matrix = np.zeros((len(self.vertices), len(self.vertices)), dtype=np.int64)
        for edge in self.edges:
            i, j = position[edge.u], position[edge.v]
            matrix[i, j] += 1
            if i != j:
                matrix[j, i] += 1
        return matrix


@dataclass(frozen=True)
class GraphShape:
    name: ShapeName
    certificate: tuple[tuple[int, ...], ...] | None = None


def build_graph(e: Equation) -> KrsticGraph:
    """Build the Krstic graph of ``e`` (generalized first)."""
    g = generalize(e)
    if isinstance(g.lhs, Var) or isinstance(g.rhs, Var):
        raise KrsticGraphError(f"{e}: a side consisting of a bare variable has no root occurrence")

    vertices = tuple(app.op for side in g.sides for app in iter_applications(side))
    hosts: dict[str, list[str]] = {}
    nesting: list[Edge] = []

    def walk(t: Term) -> None:
        if not isinstance(t, App):
            return
        for child in (t.left, t.right):
            if isinstance(child, Var):
                hosts.setdefault(child.name, []).append(t.op)
            else:
                nesting.append(Edge(t.op, child.op, NESTING_LABEL))
                walk(child)

    walk(g.lhs)
    walk(g.rhs)

    variable_edges: list[Edge] = []
    for name, occurrences in hosts.items():
        if len(occurrences) != 2:
            raise KrsticGraphError(
                f"{e}: variable {name!r} occurs {len(occurrences)} times; the equation is not quadratic"
            )
        variable_edges.append(Edge(occurrences[0], occurrences[1], name))

    assert isinstance(g.lhs, App) and isinstance(g.rhs, App)
    graph = KrsticGraph(vertices, (*variable_edges, *nesting, Edge(g.lhs.op, g.rhs.op, EQUALITY_LABEL)))
    _validate(graph, str(e))
    logger.debug("krstic_graph_built", equation=str(e), vertices=len(vertices), edges=len(graph.edges))
    return graph


def _validate(graph: KrsticGraph, source: str) -> None:
    for vertex in graph.vertices:
        if graph.degree(vertex) != 3:
            raise KrsticGraphError(f"{source}: vertex {vertex} has degree {graph.degree(vertex)}, expected 3")
    if not nx.is_connected(graph.to_networkx()):
        raise KrsticGraphError(f"{source}: graph is not connected")


def is_three_connected(graph: KrsticGraph) -> bool:
    """True iff removing any set of at most two vertices leaves the graph connected."""
    if len(graph.vertices) < KRSTIC_MIN_CONNECTIVITY_VERTICES:
        raise KrsticGraphError(
            f"3-connectivity needs at least {KRSTIC_MIN_CONNECTIVITY_VERTICES} vertices, got {len(graph.vertices)}"
        )
    full = graph.to_networkx()
    if not nx.is_connected(full):
        return False
    for size in (1, 2):
        for cut in itertools.combinations(graph.vertices, size):
            remaining = full.subgraph(v for v in graph.vertices if v not in cut)
            if not nx.is_connected(remaining):
                logger.debug("vertex_cut_found", cut=list(cut))
                return False
    return True


def canonical_form(adjacency: np.ndarray) -> tuple[tuple[int, ...], ...]:
    """Lexicographically least adjacency matrix over all vertex orders."""
    n = adjacency.shape[0]
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    relabelled = adjacency[perms[:, :, None], perms[:, None, :]].reshape(len(perms), n * n)
    # lexsort treats its last key as primary
    best = relabelled[np.lexsort(relabelled.T[::-1])[0]]
    return tuple(tuple(int(c) for c in best[i * n : (i + 1) * n]) for i in range(n))


@lru_cache(maxsize=1)
def _reference_forms() -> dict[str, tuple[tuple[int, ...], ...]]:
    k33 = nx.to_numpy_array(nx.complete_bipartite_graph(3, 3), dtype=np.int64)
    prism = nx.to_numpy_array(nx.circular_ladder_graph(3), dtype=np.int64)
    return {"K33": canonical_form(k33), "Prism": canonical_form(prism)}


def classify_shape(graph: KrsticGraph) -> GraphShape:
    """K33, Prism, or Other with a canonical adjacency certificate."""
    n = len(graph.vertices)
    if n > KRSTIC_BRUTE_FORCE_MAX_VERTICES:
        logger.warning(
            "canonical_certificate_skipped",
            vertices=n,
            max_vertices=KRSTIC_BRUTE_FORCE_MAX_VERTICES,
        )
        return GraphShape("Other")
    form = canonical_form(graph.adjacency())
    for name, reference in _reference_forms().items():
        if form == reference:
            return GraphShape(name)  # type: ignore[arg-type]
    return GraphShape("Other", form)


def to_dot(graph: KrsticGraph, name: str = "krstic") -> str:
    """DOT text of the labelled multigraph; each edge keeps its stored position as ``key``."""
    return nx.nx_pydot.to_pydot(graph.to_networkx(name)).to_string()


def to_export(graph: KrsticGraph) -> GraphExport:
    """JSON view; graphs below the connectivity bound report ``threeConnected`` false."""
    shape = classify_shape(graph)
    connected = len(graph.vertices) >= KRSTIC_MIN_CONNECTIVITY_VERTICES and is_three_connected(graph)
    return GraphExport(
        vertices=list(graph.vertices),
        edges=[GraphEdge(u=e.u, v=e.v, label=e.label) for e in graph.edges],
        three_connected=connected,
        shape=shape.name,
        certificate=[list(row) for row in shape.certificate] if shape.certificate else None,
    )


def from_export(export: GraphExport) -> KrsticGraph:
    return KrsticGraph(tuple(export.vertices), tuple(Edge(e.u, e.v, e.label) for e in export.edges))
