"""Random walks of prescribed length that avoid an accumulated edge set.

A candidate walk ``u1, X_1, ..., X_w, u2`` is drawn with i.i.d. uniform
interior vertices, screened by four events (valid end edges, bounded vertex
multiplicity, few bad vertices, few bad edges) and then repaired in two
passes. Any failure leads to a fresh sample (Las Vegas loop).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import DegreeBudgetExceeded, NoCandidate, RetriesExhausted
from .graph import Edge, Graph, canon

K = 5


@dataclass
class WalkSequence:
    u1: int
    u2: int
    interior: list[int]
    vertex_repairs: int = 0
    edge_repairs: int = 0

    @property
    def w(self) -> int:
        return len(self.interior)

    @property
    def entries(self) -> list[int]:
        return [self.u1, *self.interior, self.u2]

    def edges(self) -> list[Edge]:
        e = self.entries
        return [(e[i], e[i + 1]) for i in range(len(e) - 1)]


@dataclass(frozen=True)
class EventStats:
    dv_max: int
    a_n: float
    n_v_bad: int
    n_e_bad: int
    c_n: float
    e_valid: bool
    e_deg: bool
    e_v_bad: bool
    e_e_bad: bool

    @property
    def e_joint(self) -> bool:
        return self.e_valid and self.e_deg and self.e_v_bad and self.e_e_bad

    def first_failure(self) -> str | None:
        for name in ("e_valid", "e_deg", "e_v_bad", "e_e_bad"):
            if not getattr(self, name):
                return name
        return None


def compute_a_n(w: int, n: int) -> float:
    return max(2 * w / n, 100 * math.log(n))


def compute_c_n(b0: int, w: int, n: int) -> float:
    return 1 + 2 * (b0 + w) * w / n**2


def sample_sequence(u1: int, u2: int, w: int, n: int, rng: np.random.Generator) -> WalkSequence:
    if w < 1:
        raise ValueError(f"interior length must be >= 1, got {w}")
    return WalkSequence(u1, u2, rng.integers(0, n, size=w).tolist())


def count_bad_vertices(entries: list[int]) -> int:
    """Bad vertices among X_0..X_{w-1}, plus one for X_w."""
    w = len(entries) - 2
    bad = sum(
        1
        for i in range(w)
        if entries[i] == entries[i + 1] or entries[i] == entries[i + 2]
    )
    return bad + 1


def bad_edge_flags(entries: list[int], acc: Graph) -> list[bool]:
    """Per-position flags for edges that lie in ``acc`` or recur two or more
    positions later. Self-loops are never flagged here."""
    last_pos: dict[Edge, int] = {}
    pairs = []
    for i in range(len(entries) - 1):
        p = canon(entries[i], entries[i + 1])
        pairs.append(p)
        last_pos[p] = i
    flags = []
    for i, (x, y) in enumerate(pairs):
        if x == y:
            flags.append(False)
        else:
            flags.append(acc.has_edge(x, y) or last_pos[(x, y)] >= i + 2)
    return flags


def evaluate_events(seq: WalkSequence, acc: Graph, b0: int | None = None) -> EventStats:
    n = acc.n
    w = seq.w
    if b0 is None:
        b0 = acc.num_edges
    e = seq.entries
    a_n = compute_a_n(w, n)
    c_n = compute_c_n(b0, w, n)
    dv_max = max(Counter(seq.interior).values())
    n_v_bad = count_bad_vertices(e)
    n_e_bad = sum(bad_edge_flags(e, acc))
    e_valid = (
        e[0] != e[1]
        and e[w] != e[w + 1]
        and not acc.has_edge(e[0], e[1])
        and not acc.has_edge(e[w], e[w + 1])
    )
    return EventStats(
        dv_max=dv_max,
        a_n=a_n,
        n_v_bad=n_v_bad,
        n_e_bad=n_e_bad,
        c_n=c_n,
        e_valid=e_valid,
        e_deg=dv_max <= a_n,
        e_v_bad=n_v_bad <= a_n + 1,
        e_e_bad=n_e_bad <= K * c_n,
    )


class _Workspace:
    """Mutable view of a sequence with neighbour multiplicities in the
    sequence multigraph, so replacement candidates can be tested in O(1)."""

    def __init__(self, seq: WalkSequence, acc: Graph, check_budget: bool):
        self.acc = acc
        self.n = acc.n
        self.e = seq.entries
        self.check_budget = check_budget
        self.nbr: list[Counter] = [Counter() for _ in range(self.n)]
        self.pos: dict[Edge, set[int]] = {}
        for k in range(len(self.e) - 1):
            self._link(k)

    def _link(self, k: int) -> None:
        x, y = self.e[k], self.e[k + 1]
        self.nbr[x][y] += 1
        self.nbr[y][x] += 1
        self.pos.setdefault(canon(x, y), set()).add(k)

    def _unlink(self, k: int) -> None:
        x, y = self.e[k], self.e[k + 1]
        for a, b in ((x, y), (y, x)):
            self.nbr[a][b] -= 1
            if not self.nbr[a][b]:
                del self.nbr[a][b]
        p = canon(x, y)
        self.pos[p].discard(k)
        if not self.pos[p]:
            del self.pos[p]

    def adjacent(self, x: int, y: int) -> bool:
        return self.acc.has_edge(x, y) or y in self.nbr[x]

    def put(self, idx: int, v: int) -> None:
        self._unlink(idx - 1)
        self._unlink(idx)
        self.e[idx] = v
        self._link(idx - 1)
        self._link(idx)

    def pick(self, avoid_adjacent: tuple[int, ...], exclude: tuple[int, ...]) -> int:
        for v in range(self.n):
            if v in exclude:
                continue
            if any(self.adjacent(a, v) for a in avoid_adjacent):
                continue
            return v
        raise NoCandidate(f"no vertex avoids {avoid_adjacent} and {exclude}")

    def degree(self, v: int) -> int:
        return self.acc.degree(v) + sum(self.nbr[v].values())

    def guard(self) -> None:
        if not self.check_budget:
            return
        limit = self.n / 2 - 5
        worst = max(self.degree(v) for v in range(self.n))
        if worst > limit:
            raise DegreeBudgetExceeded(f"degree {worst} exceeds n/2 - 5 = {limit}")

    def edge_is_bad(self, k: int) -> bool:
        x, y = self.e[k], self.e[k + 1]
        if x == y:
            return False
        return self.acc.has_edge(x, y) or max(self.pos[canon(x, y)]) >= k + 2


def repair_bad_vertices(seq: WalkSequence, acc: Graph, check_budget: bool = False) -> WalkSequence:
    """Remove every bad vertex, lowest index first, then re-pick ``X_w``.

    A bad ``X_i`` (``i <= w-2``) gets ``X_{i+1}, X_{i+2}`` overwritten by the
    smallest admissible non-neighbours, chosen so that neither new entry is
    itself bad; the count of bad entries below ``w`` drops every round. ``X_w`` is always replaced by the
    smallest vertex adjacent to neither ``X_{w-1}`` nor ``u2``; if
    ``X_{w-1} == u2`` that entry is replaced first.
    """
    ws = _Workspace(seq, acc, check_budget)
    e = ws.e
    w = seq.w
    t = 0
    for i in range(w - 1):
        if e[i] != e[i + 1] and e[i] != e[i + 2]:
            continue
        ws.guard()
        x, nxt = e[i], e[i + 3]
        after = e[i + 4] if i + 4 <= w + 1 else x
        # excluding nxt / after keeps the new entries themselves from being bad
        v1 = ws.pick((x,), (x, nxt))
        v2 = ws.pick((v1, nxt), (x, v1, nxt, after))
        ws.put(i + 1, v1)
        ws.put(i + 2, v2)
        t += 1

    ws.guard()
    u2 = e[w + 1]
    if w >= 2 and e[w - 1] == u2:
        prev = e[w - 2]
        ws.put(w - 1, ws.pick((prev,), (prev, u2)))
    prev = e[w - 1]
    ws.put(w, ws.pick((prev, u2), (prev, u2)))
    t += 1
    return WalkSequence(
        seq.u1, seq.u2, e[1:-1], seq.vertex_repairs + t, seq.edge_repairs
    )


def repair_bad_edges(seq: WalkSequence, acc: Graph, check_budget: bool = False) -> WalkSequence:
    """Remove every bad edge, lowest index first, by replacing its right
    endpoint (its left one for the final edge into ``u2``)."""
    ws = _Workspace(seq, acc, check_budget)
    e = ws.e
    w = seq.w
    if any(e[k] == e[k + 1] for k in range(w + 1)):
        raise ValueError("sequence still has a self-loop; repair bad vertices first")
    r = 0
    for k in range(w + 1):
        if not ws.edge_is_bad(k):
            continue
        ws.guard()
        if k < w:
            target, left, right = k + 1, e[k], e[k + 2]
        else:
            target, left, right = w, e[w - 1], e[w + 1]
        ws.put(target, ws.pick((left, right), (left, right)))
        r += 1
    return WalkSequence(
        seq.u1, seq.u2, e[1:-1], seq.vertex_repairs, seq.edge_repairs + r
    )


def walk_defects(entries: list[int], acc: Graph) -> list[str]:
    """Independent check of a finished walk; empty list means clean."""
    problems = []
    seen: set[Edge] = set()
    for i in range(len(entries) - 1):
        x, y = entries[i], entries[i + 1]
        if x == y:
            problems.append(f"self-loop at position {i}")
            continue
        p = canon(x, y)
        if acc.has_edge(x, y):
            problems.append(f"edge {p} already present")
        if p in seen:
            problems.append(f"edge {p} repeated")
        seen.add(p)
    return problems


@dataclass
class BuiltWalk:
    entries: list[int]
    retries: int
    vertex_repairs: int
    edge_repairs: int
    failures: Counter = field(default_factory=Counter)

    @property
    def edges(self) -> list[Edge]:
        e = self.entries
        return [canon(e[i], e[i + 1]) for i in range(len(e) - 1)]


def build_walk(
    u1: int,
    u2: int,
    w: int,
    acc: Graph,
    b0: int | None,
    rng: np.random.Generator,
    max_retries: int = 10_000,
    check_budget: bool = False,
) -> BuiltWalk:
    """Sample-screen-repair until a clean walk with ``w`` interior vertices
    (``w + 1`` edges) from ``u1`` to ``u2`` is found."""
    n = acc.n
    if u1 == u2 and w < 2:
        raise ValueError("a closed walk needs at least 2 interior vertices")
    if b0 is None:
        b0 = acc.num_edges
    failures: Counter = Counter()
    delta_acc = acc.max_degree()
    for attempt in range(max_retries + 1):
        seq = sample_sequence(u1, u2, w, n, rng)
        stats = evaluate_events(seq, acc, b0)
        if not stats.e_joint:
            failures[stats.first_failure()] += 1
            continue
        try:
            seq = repair_bad_vertices(seq, acc, check_budget)
            seq = repair_bad_edges(seq, acc, check_budget)
        except DegreeBudgetExceeded:
            failures["degree_budget"] += 1
            continue
        except NoCandidate:
            failures["no_candidate"] += 1
            continue
        entries = seq.entries
        defects = walk_defects(entries, acc)
        assert not defects, defects
        walk_deg = Counter()
        for x, y in seq.edges():
            walk_deg[x] += 1
            walk_deg[y] += 1
        bound = delta_acc + 2 * stats.dv_max + 2 + 2 * seq.vertex_repairs + 2 * seq.edge_repairs
        worst = max(acc.degree(v) + c for v, c in walk_deg.items())
        assert worst <= bound, (worst, bound)
        return BuiltWalk(entries, attempt, seq.vertex_repairs, seq.edge_repairs, failures)
    top = failures.most_common(1)[0][0] if failures else "none"
    raise RetriesExhausted(
        f"no walk {u1}->{u2} with {w + 1} edges after {max_retries} retries "
        f"(most frequent failure: {top})",
        failures,
    )
