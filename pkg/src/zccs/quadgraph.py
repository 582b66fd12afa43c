"""Graphs of quadratic GBFs and the "path plus isolated vertices" test.

Vertex j stands for variable x_j; an edge {i, j} with weight w records the
term ``w * x_i * x_j``.  The construction needs graphs which, after deleting
a set of vertices, consist of one path whose edges all weigh q/2 plus any
number of isolated vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .gbf import GBF

__all__ = [
    "QuadGraph",
    "GraphPartition",
    "ClassificationError",
    "quadratic_part",
    "delete_vertices",
    "classify",
    "check_partition",
    "find_deletion_sets",
]


@dataclass(frozen=True)
class QuadGraph:
    m: int
    vertices: frozenset
    edges: dict = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), w in self.edges.items():
            if not i < j:
                raise ValueError(f"edge keys must satisfy i < j, got {(i, j)}")
            if i not in self.vertices or j not in self.vertices:
                raise ValueError(f"edge {(i, j)} references a missing vertex")
            if w == 0:
                raise ValueError(f"edge {(i, j)} has zero weight")

    @classmethod
    def from_edges(cls, m: int, edges) -> "QuadGraph":
        norm = {}
        for (i, j), w in dict(edges).items():
            a, b = min(i, j), max(i, j)
            if a == b:
                raise ValueError(f"self-loop at {a}")
            norm[(a, b)] = w
        return cls(m, frozenset(range(m)), norm)

    def neighbours(self, v: int) -> list[int]:
        return sorted(b if a == v else a for (a, b) in self.edges if v in (a, b))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def weight(self, i: int, j: int) -> int:
        return self.edges.get((min(i, j), max(i, j)), 0)

    def __eq__(self, other):
        if not isinstance(other, QuadGraph):
            return NotImplemented
        return (self.m, self.vertices, self.edges) == (other.m, other.vertices, other.edges)

    def __hash__(self):
        return hash((self.m, self.vertices, tuple(sorted(self.edges.items()))))


@dataclass(frozen=True)
class GraphPartition:
    """Path order, deleted set, isolated set and the chosen path end gamma."""

    path: tuple
    deleted: tuple
    isolated: tuple
    gamma: int

    def __post_init__(self):
        if not self.path:
            raise ValueError("path must contain at least one vertex")
        if self.gamma not in (self.path[0], self.path[-1]):
            raise ValueError(f"gamma={self.gamma} is not an end of path {self.path}")

    def reversed(self) -> "GraphPartition":
        return GraphPartition(tuple(reversed(self.path)), self.deleted, self.isolated, self.gamma)


class ClassificationError(ValueError):
    """The deleted graph is not one q/2-weighted path plus isolated vertices.

    ``reason`` is one of ``"unknown-label"``, ``"no-path"``, ``"weight"``,
    ``"branching"``, ``"cycle"``, ``"components"``, ``"partition"``.
    """

    def __init__(self, reason: str, detail: str):
        super().__init__(f"{reason}: {detail}")
        self.reason = reason
        self.detail = detail


def quadratic_part(f: GBF) -> QuadGraph:
    if f.degree > 2:
        bad = next(k for k in f.terms if len(k) > 2)
        raise ValueError(f"GBF has a term of degree {len(bad)}: x{bad}")
    edges = {mono: c for mono, c in f.terms.items() if len(mono) == 2}
    return QuadGraph(f.m, frozenset(range(f.m)), edges)


def delete_vertices(g: QuadGraph, deleted) -> QuadGraph:
    deleted = frozenset(deleted)
    unknown = deleted - g.vertices
    if unknown:
        raise ValueError(f"unknown vertex labels {sorted(unknown)}")
    edges = {e: w for e, w in g.edges.items() if e[0] not in deleted and e[1] not in deleted}
    return QuadGraph(g.m, g.vertices - deleted, edges)


def _components(g: QuadGraph, active) -> list[list[int]]:
    seen, comps = set(), []
    for v in active:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.neighbours(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _trace_path(g: QuadGraph, q: int) -> tuple[int, ...]:
    """Order the non-isolated part of ``g`` as a path, or raise."""
    for (i, j), w in sorted(g.edges.items()):
        if q % 2 or w != q // 2:
            raise ClassificationError("weight", f"edge x{i}x{j} has weight {w}, path edges need q/2")
    active = sorted({v for e in g.edges for v in e})
    for v in active:
        if g.degree(v) > 2:
            raise ClassificationError("branching", f"vertex {v} has degree {g.degree(v)}")
    comps = _components(g, active)
    for comp in comps:
        n_edges = sum(1 for e in g.edges if e[0] in comp)
        if n_edges >= len(comp):
            raise ClassificationError("cycle", f"vertices {comp} form a cycle")
    if len(comps) > 1:
        raise ClassificationError("components", f"{len(comps)} path components: {comps}")
    order = [min(v for v in active if g.degree(v) == 1)]
    while len(order) < len(active):
        order.append(next(u for u in g.neighbours(order[-1]) if u not in order))
    return tuple(order)


def classify(g: QuadGraph, deleted, q: int) -> tuple[GraphPartition, GraphPartition]:
    """Delete ``deleted`` and split the rest into a path and isolated vertices.

    Returns the two partitions that differ in the choice of gamma; in both the
    path is listed so that gamma is its last vertex.  When nothing but isolated
    vertices survive, the smallest surviving label is taken as a one-vertex
    path.  Raises `ClassificationError` naming the first violated condition.
    """
    deleted = tuple(sorted(set(deleted)))
    if set(deleted) - g.vertices:
        raise ClassificationError("unknown-label", f"{sorted(set(deleted) - g.vertices)}")
    h = delete_vertices(g, deleted)
    if not h.vertices:
        raise ClassificationError("no-path", "every vertex was deleted")
    if h.edges:
        order = _trace_path(h, q)
    else:
        order = (min(h.vertices),)
    isolated = tuple(sorted(h.vertices - set(order)))
    fwd = order if order[0] <= order[-1] else tuple(reversed(order))
    back = tuple(reversed(fwd))
    return (
        GraphPartition(back, deleted, isolated, back[-1]),
        GraphPartition(fwd, deleted, isolated, fwd[-1]),
    )


def check_partition(g: QuadGraph, part: GraphPartition, q: int) -> None:
    """Verify that a user-supplied partition describes ``g``; raise otherwise."""
    labels = list(part.path) + list(part.deleted) + list(part.isolated)
    if sorted(labels) != sorted(g.vertices):
        raise ClassificationError(
            "partition", f"path/deleted/isolated must be disjoint and cover 0..{g.m - 1}, got {labels}"
        )
    if not part.path:
        raise ClassificationError("no-path", "path is empty")
    if q % 2:
        raise ClassificationError("weight", f"q={q} is odd, q/2 is not in Z_q")
    h = delete_vertices(g, part.deleted)
    expected = {}
    for a, b in zip(part.path, part.path[1:]):
        expected[(min(a, b), max(a, b))] = q // 2
    for e, w in sorted(expected.items()):
        got = h.edges.get(e, 0)
        if got != w:
            raise ClassificationError("weight", f"path edge x{e[0]}x{e[1]} has weight {got}, expected {w}")
    extra = sorted(set(h.edges) - set(expected))
    if extra:
        i, j = extra[0]
        kind = "components" if i in part.isolated or j in part.isolated else "cycle"
        if kind == "cycle" and (h.degree(i) > 2 or h.degree(j) > 2):
            kind = "branching"
        raise ClassificationError(kind, f"unexpected surviving edge x{i}x{j}")


def find_deletion_sets(g: QuadGraph, q: int, k_max: int) -> list[tuple[tuple, tuple[GraphPartition, GraphPartition]]]:
    """All deletion sets of size <= k_max that leave a valid path structure."""
    if k_max > g.m:
        raise ValueError(f"k_max={k_max} exceeds m={g.m}")
    found = []
    labels = sorted(g.vertices)
    for k in range(k_max + 1):
        for dset in itertools.combinations(labels, k):
            try:
                parts = classify(g, dset, q)
            except ClassificationError:
                continue
            found.append((dset, parts))
    return found
