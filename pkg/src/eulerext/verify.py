"""Certificate checking, Eulerian circuit extraction and an exhaustive oracle.

Nothing here imports the construction code: these checks are meant to be
an independent second opinion on whatever the engine returns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import NotEulerian
from .graph import Graph, is_connected

BRUTE_FORCE_MAX_N = 10


@dataclass
class VerificationReport:
    edge_count_ok: bool
    contains_g: bool
    connected: bool
    all_even: bool
    circuit_ok: bool
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.edge_count_ok
            and self.contains_g
            and self.connected
            and self.all_even
            and self.circuit_ok
        )


def _edge_positive_connected(h: Graph) -> bool:
    active = [v for v in range(h.n) if h.degree(v) > 0]
    if not active:
        return True
    seen = {active[0]}
    stack = [active[0]]
    while stack:
        u = stack.pop()
        for v in h.neighbors(u):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == len(active)


def hierholzer_circuit(h: Graph) -> list[int]:
    """Eulerian circuit as a vertex list; the closing edge last -> first is
    implicit. Starts at the smallest non-isolated vertex and always follows
    the smallest unused edge."""
    if h.num_edges == 0:
        raise NotEulerian("graph has no edges")
    odd = [v for v in range(h.n) if h.degree(v) % 2]
    if odd:
        raise NotEulerian(f"odd-degree vertices: {odd[:10]}")
    if not _edge_positive_connected(h):
        raise NotEulerian("edges span more than one component")

    adj = [sorted(h.neighbors(v)) for v in range(h.n)]
    ptr = [0] * h.n
    used: set[tuple[int, int]] = set()
    start = next(v for v in range(h.n) if adj[v])
    stack = [start]
    out: list[int] = []
    while stack:
        v = stack[-1]
        nbrs = adj[v]
        while ptr[v] < len(nbrs) and (min(v, nbrs[ptr[v]]), max(v, nbrs[ptr[v]])) in used:
            ptr[v] += 1
        if ptr[v] == len(nbrs):
            out.append(stack.pop())
        else:
            u = nbrs[ptr[v]]
            used.add((min(u, v), max(u, v)))
            stack.append(u)
    out.reverse()
    return out[:-1]


def circuit_covers(h: Graph, circuit: list[int]) -> bool:
    """True iff ``circuit`` (cyclically closed) uses every edge of ``h`` once."""
    if len(circuit) != h.num_edges or not circuit:
        return False
    seen = set()
    for i, v in enumerate(circuit):
        u = circuit[(i + 1) % len(circuit)]
        e = (min(u, v), max(u, v))
        if u == v or e not in h.edges or e in seen:
            return False
        seen.add(e)
    return True


def verify_extension(g: Graph, h: Graph, m: int) -> VerificationReport:
    if g.n != h.n:
        raise ValueError(f"vertex counts differ: {g.n} vs {h.n}")
    failures = []
    edge_count_ok = h.num_edges == m
    if not edge_count_ok:
        failures.append(f"H has {h.num_edges} edges, expected {m}")
    missing = g.edges - h.edges
    if missing:
        failures.append(f"{len(missing)} edges of G missing from H, e.g. {min(missing)}")
    connected = is_connected(h)
    if not connected:
        failures.append("H is not connected")
    odd = [v for v in range(h.n) if h.degree(v) % 2]
    if odd:
        failures.append(f"{len(odd)} odd-degree vertices, e.g. {odd[:5]}")
    try:
        circuit_ok = circuit_covers(h, hierholzer_circuit(h))
    except NotEulerian as exc:
        circuit_ok = False
        failures.append(f"no Eulerian circuit: {exc}")
    return VerificationReport(edge_count_ok, not missing, connected, not odd, circuit_ok, failures)


def brute_force_extendable(g: Graph, m: int) -> Graph | None:
    """First Eulerian ``H`` with exactly ``m`` edges containing ``g``, in
    lexicographic order of the added complement-edge subsets."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"instance too large for exhaustive search (n={g.n} > {BRUTE_FORCE_MAX_N})")
    k = m - g.num_edges
    complement = g.complement_edges()
    if k < 0 or k > len(complement):
        return None
    odd_mask = 0
    for v in range(g.n):
        if g.degree(v) % 2:
            odd_mask |= 1 << v
    toggles = [(1 << u) | (1 << v) for u, v in complement]
    for combo in combinations(range(len(complement)), k):
        mask = odd_mask
        for i in combo:
            mask ^= toggles[i]
        if mask:
            continue
        h = g.with_edges(complement[i] for i in combo)
        if is_connected(h):
            return h
    return None
