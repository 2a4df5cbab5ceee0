"""Marking phase: join non-adjacent odd vertices by direct edges.

Whatever odd vertices survive the marking form a clique in the input graph.
They are paired consecutively and handed on to the walk builder.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .errors import BudgetExhausted
from .graph import Edge, Graph, is_eulerian, non_adjacent_pair, odd_vertices


@dataclass(frozen=True)
class MarkingOutcome:
    g0: Graph
    m: int
    b: int
    marked: tuple[Edge, ...] = ()
    clique_pairs: tuple[Edge, ...] = ()
    finished: Graph | None = None
    # set by resolve_empty_clique when it un-marks an edge
    removed: Edge | None = field(default=None, compare=False)

    @property
    def l(self) -> int:
        return len(self.marked)

    @property
    def z(self) -> int:
        return len(self.clique_pairs)

    @property
    def b0(self) -> int:
        return self.g0.num_edges


def mark_edges(g: Graph, m: int) -> MarkingOutcome:
    """Run the marking loop with a fixed edge target ``m``.

    Raises :class:`BudgetExhausted` if the loop reaches ``m - b`` marked
    edges while odd vertices remain.
    """
    b = g.num_edges
    if m <= b:
        raise ValueError(f"target m={m} must exceed the current edge count b={b}")
    budget = m - b
    remaining = set(odd_vertices(g))
    marked: list[Edge] = []
    while True:
        pair = non_adjacent_pair(g, remaining)
        if pair is None:
            break
        marked.append(pair)
        remaining.difference_update(pair)
        if len(marked) == budget:
            h = g.with_edges(marked)
            if not is_eulerian(h):
                raise BudgetExhausted(
                    f"marked {budget} edges (= m - b) but {len(odd_vertices(h))} odd "
                    f"vertices remain; m is too small for this graph"
                )
            return MarkingOutcome(g0=h, m=m, b=b, marked=tuple(marked), finished=h)

    clique = sorted(remaining)
    pairs = tuple((clique[i], clique[i + 1]) for i in range(0, len(clique), 2))
    return MarkingOutcome(
        g0=g.with_edges(marked), m=m, b=b, marked=tuple(marked), clique_pairs=pairs
    )


def resolve_empty_clique(outcome: MarkingOutcome) -> MarkingOutcome:
    """Supply a walk anchor when marking left no clique vertices.

    With at least one marked edge, the last one is taken back out and its
    endpoints become the single pair. With none, the pair is ``(u, u)`` for
    the minimum-degree vertex ``u``, and a closed walk is built there.
    """
    if outcome.finished is not None or outcome.z != 0 or outcome.b0 >= outcome.m:
        raise ValueError("resolve_empty_clique needs an unfinished outcome with z = 0 and b0 < m")
    if outcome.marked:
        u, v = outcome.marked[-1]
        return replace(
            outcome,
            g0=outcome.g0.without_edge(u, v),
            marked=outcome.marked[:-1],
            clique_pairs=((u, v),),
            removed=(u, v),
        )
    degs = outcome.g0.degrees()
    anchor = min(range(len(degs)), key=lambda v: (degs[v], v))
    return replace(outcome, clique_pairs=((anchor, anchor),))
