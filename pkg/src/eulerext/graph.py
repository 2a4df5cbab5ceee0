"""Simple undirected graphs on vertices 0..n-1."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for edge lists that do not describe a simple graph."""


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    Edges are stored in canonical ``(min, max)`` form. Derived graphs are
    produced by :meth:`with_edges` / :meth:`without_edge`, never by mutation.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        adj = [set() for _ in range(n)]
        canon_edges = set()
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
            canon_edges.add(canon(u, v))
        self.n = n
        self.edges = frozenset(canon_edges)
        self._adj = tuple(frozenset(s) for s in adj)

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[Sequence[int]]) -> Graph:
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        seen: set[Edge] = set()
        for pair in pairs:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = canon(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, seen)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, b={len(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_edges(self, extra: Iterable[Edge]) -> Graph:
        extra = [canon(u, v) for u, v in extra]
        for u, v in extra:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
        merged = set(self.edges)
        merged.update(extra)
        if len(merged) != len(self.edges) + len(extra):
            raise GraphError("added edges overlap existing edges or each other")
        return Graph(self.n, merged)

    def without_edge(self, u: int, v: int) -> Graph:
        e = canon(u, v)
        if e not in self.edges:
            raise GraphError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def complement_edges(self) -> list[Edge]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self._adj[u]
        ]


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    return Graph.from_edge_list(n, pairs)


def odd_vertices(g: Graph) -> list[int]:
    """Ascending list of odd-degree vertices."""
    return [v for v in range(g.n) if g.degree(v) % 2 == 1]


def is_connected(g: Graph) -> bool:
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def is_eulerian(g: Graph) -> bool:
    return is_connected(g) and all(d % 2 == 0 for d in g.degrees())


def non_adjacent_pair(g: Graph, vertices: Iterable[int]) -> Edge | None:
    """Lexicographically smallest pair ``u < v`` from ``vertices`` with no edge
    between them, or ``None`` when ``vertices`` induce a clique."""
    members = sorted(set(vertices))
    for i, u in enumerate(members):
        nbrs = g.neighbors(u)
        for v in members[i + 1:]:
            if v not in nbrs:
                return (u, v)
    return None
