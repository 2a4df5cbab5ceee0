"""Instance generation and Monte Carlo probes of the sampling events."""

from __future__ import annotations

import csv
import heapq
import math
from dataclasses import asdict, dataclass

import numpy as np

from .graph import Graph, canon
from .pairing import mark_edges, resolve_empty_clique
from .walks import K, evaluate_events, sample_sequence

CSV_COLUMNS = ["n", "w", "b0", "trial", "e_valid", "e_deg", "e_v_bad", "e_e_bad", "e_joint", "retries"]
EVENTS = ["e_valid", "e_deg", "e_v_bad", "e_e_bad", "e_joint"]

# keeps generator draws independent of walk sampling run with the same seed
_GEN_STREAM = 0x6E6E


class GenerationError(ValueError):
    pass


def chernoff_bound(mu: float, eps: float) -> float:
    """Two-sided deviation bound ``P(|W - mu| >= eps*mu) <= 2 exp(-eps^2 mu / 4)``
    for sums of independent Bernoulli variables, capped at 1."""
    if not 0 < eps < 0.5:
        raise ValueError(f"eps must lie in (0, 1/2), got {eps}")
    if mu < 0:
        raise ValueError(f"mu must be non-negative, got {mu}")
    return min(1.0, 2.0 * math.exp(-eps * eps * mu / 4.0))


def _prufer_tree(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append(canon(leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append(canon(heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def gen_random_connected_graph(n: int, b: int, delta_cap: int, seed, tree_attempts: int = 200) -> Graph:
    """Random connected graph with ``b`` edges and max degree ``<= delta_cap``.

    A uniform labelled spanning tree (Pruefer code) is drawn first, rejected
    while it breaks the degree cap; after ``tree_attempts`` rejections a
    random Hamiltonian path is used instead. Extra edges are then sampled
    uniformly among non-edges whose endpoints are both below the cap.
    """
    max_edges = min(n * (n - 1) // 2, n * delta_cap // 2)
    if n < 1 or b < n - 1 or b > max_edges or (n > 2 and delta_cap < 2):
        raise GenerationError(
            f"cannot build a connected graph with n={n}, b={b}, degree cap {delta_cap}"
        )
    rng = np.random.default_rng([seed, _GEN_STREAM])
    for _ in range(tree_attempts):
        tree = _prufer_tree(n, rng)
        deg = [0] * n
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1
        if max(deg, default=0) <= delta_cap:
            break
    else:
        order = rng.permutation(n).tolist()
        tree = [canon(order[i], order[i + 1]) for i in range(n - 1)]
        deg = [0] * n
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1

    edges = set(tree)
    attempts = 0
    while len(edges) < b and attempts < 50 * b:
        attempts += 1
        u, v = rng.integers(0, n, size=2).tolist()
        e = canon(u, v)
        if u == v or e in edges or deg[u] >= delta_cap or deg[v] >= delta_cap:
            continue
        edges.add(e)
        deg[u] += 1
        deg[v] += 1
    while len(edges) < b:
        open_pairs = [
            (u, v)
            for u in range(n)
            if deg[u] < delta_cap
            for v in range(u + 1, n)
            if deg[v] < delta_cap and (u, v) not in edges
        ]
        if not open_pairs:
            raise GenerationError(f"stuck at {len(edges)} of {b} edges under degree cap {delta_cap}")
        u, v = open_pairs[rng.integers(len(open_pairs))]
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    return Graph(n, edges)


@dataclass(frozen=True)
class TrialRecord:
    n: int
    w: int
    b0: int
    trial: int
    e_valid: bool
    e_deg: bool
    e_v_bad: bool
    e_e_bad: bool
    e_joint: bool
    retries: int


def analytic_bounds(n: int) -> dict[str, float]:
    """Lower bounds on each event's probability, valid for large n."""
    return {
        "e_valid": (0.5 - 1 / n) ** 2,
        "e_deg": 1 - 1 / n,
        "e_v_bad": 1 - 3 / n**2,
        "e_e_bad": 1 - 1 / K,
        "e_joint": 1 / 21,
    }


def summarize(records: list[TrialRecord], n: int, sigmas: float = 3.0) -> dict[str, dict]:
    """Empirical frequency per event against its analytic lower bound.

    The tolerance is ``sigmas`` binomial standard errors computed at the
    bound itself, so a frequency passes when it is not significantly below
    the bound.
    """
    trials = len(records)
    out = {}
    for name, bound in analytic_bounds(n).items():
        freq = sum(getattr(r, name) for r in records) / trials
        sigma = math.sqrt(bound * (1 - bound) / trials)
        out[name] = {
            "freq": freq,
            "bound": bound,
            "sigma": sigma,
            "threshold": bound - sigmas * sigma,
            "ok": freq >= bound - sigmas * sigma,
        }
    return out


@dataclass
class TrialSetup:
    g0: Graph
    u1: int
    u2: int
    w: int
    m: int

    @property
    def b0(self) -> int:
        return self.g0.num_edges


def trial_setup(n: int, seed, alpha: float = 0.05, beta: float = 0.3, w: int | None = None) -> TrialSetup:
    """Generate a hypothesis-conforming instance and run the marking phase
    on it; the first leftover pair becomes the walk's endpoints."""
    m = max(2 * n, math.floor(alpha * n**1.5))
    g = gen_random_connected_graph(n, m - n, max(2, math.floor(beta * n)), seed)
    outcome = mark_edges(g, m)
    if outcome.finished is not None:
        raise GenerationError("marking consumed the whole budget; no walk to sample")
    if outcome.z == 0:
        outcome = resolve_empty_clique(outcome)
    u1, u2 = outcome.clique_pairs[0]
    if w is None:
        w = math.floor(alpha * n**1.5)
    return TrialSetup(outcome.g0, u1, u2, w, m)


def run_event_trials(
    n: int,
    trials: int,
    seed: int,
    alpha: float = 0.05,
    beta: float = 0.3,
    w: int | None = None,
) -> tuple[list[TrialRecord], dict[str, dict]]:
    """Sample ``trials`` independent sequences against one fixed instance.

    Trial ``i`` draws from ``default_rng([seed, i])`` so records do not
    depend on evaluation order. ``retries`` counts the failed samples since
    the last one that satisfied every event.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    setup = trial_setup(n, seed, alpha, beta, w)
    records = []
    streak = 0
    for i in range(trials):
        rng = np.random.default_rng([seed, i])
        seq = sample_sequence(setup.u1, setup.u2, setup.w, n, rng)
        st = evaluate_events(seq, setup.g0, setup.b0)
        records.append(
            TrialRecord(n, setup.w, setup.b0, i, st.e_valid, st.e_deg, st.e_v_bad, st.e_e_bad, st.e_joint, streak)
        )
        streak = 0 if st.e_joint else streak + 1
    return records, summarize(records, n)


def write_csv(path, records: list[TrialRecord]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for r in records:
            row = asdict(r)
            writer.writerow({k: int(v) if isinstance(v, bool) else v for k, v in row.items()})


def read_csv(path) -> list[TrialRecord]:
    with open(path, newline="") as fh:
        return [
            TrialRecord(**{k: (bool(int(v)) if k in EVENTS else int(v)) for k, v in row.items()})
            for row in csv.DictReader(fh)
        ]
