"""Labeled undirected simple graphs and the edge-list text format.

File format::

    # comment
    vertices: 1 2 3 4
    1 2
    2 3

The first non-comment line lists every vertex, so isolated vertices survive a
round trip.  Each following line is one undirected edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .words import Letter, WordError, check_letter

Edge = tuple[Letter, Letter]


class GraphFormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


def label_key(label: Letter) -> tuple[int, int, str]:
    """Sort key placing integer labels first, in numeric order."""
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def canonical_edge(u: Letter, v: Letter) -> Edge:
    return (u, v) if label_key(u) <= label_key(v) else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: frozenset[Letter]
    edges: frozenset[Edge]
    # Edges in insertion order; reporting only, ignored by equality.
    edge_list: tuple[Edge, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.edge_list) != len(self.edges):
            ordered = sorted(self.edges, key=lambda e: (label_key(e[0]), label_key(e[1])))
            object.__setattr__(self, "edge_list", tuple(ordered))

    @classmethod
    def from_edges(cls, vertices: Iterable[Letter], edges: Iterable[tuple[Letter, Letter]]) -> Graph:
        """Validate and canonicalise.  Raises ``GraphFormatError`` on self-loops,
        unknown endpoints and duplicate edges."""
        vs = frozenset(check_letter(v) for v in vertices)
        seen: set[Edge] = set()
        ordered = []
        for u, v in edges:
            if u == v:
                raise GraphFormatError(f"self-loop on {u!r}")
            for x in (u, v):
                if x not in vs:
                    raise GraphFormatError(f"edge endpoint {x!r} is not a declared vertex")
            e = canonical_edge(u, v)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {u} {v}")
            seen.add(e)
            ordered.append((u, v))
        return cls(vs, frozenset(seen), tuple(ordered))

    def __len__(self) -> int:
        return len(self.vertices)

    def has_edge(self, u: Letter, v: Letter) -> bool:
        return canonical_edge(u, v) in self.edges

    def degree(self, v: Letter) -> int:
        return sum(1 for e in self.edges if v in e)

    def with_edge(self, u: Letter, v: Letter) -> Graph:
        return Graph.from_edges(self.vertices, self.edge_list + ((u, v),))

    def without_edge(self, u: Letter, v: Letter) -> Graph:
        e = canonical_edge(u, v)
        if e not in self.edges:
            raise KeyError(f"no edge {u} {v}")
        return Graph.from_edges(self.vertices, [x for x in self.edge_list if canonical_edge(*x) != e])

    def with_vertex(self, v: Letter) -> Graph:
        return Graph.from_edges(self.vertices | {v}, self.edge_list)


def cycle_graph(n: int) -> Graph:
    """C_n on the labels ``"1"`` .. ``"n"``."""
    if n < 3:
        raise ValueError(f"a cycle graph needs n >= 3, got {n}")
    labels = [str(k) for k in range(1, n + 1)]
    edges = [(labels[k], labels[k + 1]) for k in range(n - 1)]
    edges.append((labels[-1], labels[0]))
    return Graph.from_edges(labels, edges)


def graph_equal(g1: Graph, g2: Graph) -> bool:
    """Exact labeled equality, not isomorphism."""
    return g1.vertices == g2.vertices and g1.edges == g2.edges


def parse_graph(text: str) -> Graph:
    vertices: list[Letter] | None = None
    declared: set[Letter] = set()
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertices is None:
            head, sep, rest = line.partition(":")
            if not sep or head.strip() != "vertices":
                raise GraphFormatError("expected 'vertices: ...' header", lineno)
            vertices = rest.split()
            declared = set(vertices)
            if len(declared) != len(vertices):
                raise GraphFormatError("duplicate vertex in header", lineno)
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected two vertices per edge line, got {len(tokens)}", lineno)
        u, v = tokens
        if u == v:
            raise GraphFormatError(f"self-loop on {u!r}", lineno)
        for x in (u, v):
            if x not in declared:
                raise GraphFormatError(f"unknown vertex {x!r}", lineno)
        e = canonical_edge(u, v)
        if e in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
        edges.append((u, v))
    if vertices is None:
        raise GraphFormatError("missing 'vertices: ...' header")
    try:
        return Graph.from_edges(vertices, edges)
    except WordError as exc:
        raise GraphFormatError(str(exc)) from exc


def serialize_graph(g: Graph) -> str:
    lines = ["vertices: " + " ".join(sorted(g.vertices, key=label_key))]
    for u, v in sorted(g.edges, key=lambda e: (label_key(e[0]), label_key(e[1]))):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"
