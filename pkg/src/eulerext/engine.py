"""End-to-end construction of an Eulerian supergraph with exactly m edges."""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .errors import DegreeOverflow, FeasibilityError, InfeasiblePlan, PreconditionError
from .graph import Edge, Graph, is_connected
from .pairing import mark_edges, resolve_empty_clique
from .verify import hierholzer_circuit, verify_extension
from .walks import build_walk

log = logging.getLogger(__name__)

MODES = ("strict", "advisory")


@dataclass(frozen=True)
class ExtendConfig:
    alpha: float = 0.05
    beta: float = 0.3
    mode: str = "strict"
    max_retries: int = 10_000

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not (0 < self.alpha < 1 and 0 < self.beta < 1):
            raise ValueError("alpha and beta must lie in (0, 1)")

    @property
    def strict(self) -> bool:
        return self.mode == "strict"


@dataclass(frozen=True)
class FeasibilityReport:
    n: int
    b: int
    delta: int
    m: int
    alpha: float
    beta: float
    checks: dict[str, bool]
    mode: str = "strict"

    @property
    def alpha_implied(self) -> float:
        return self.m / self.n**1.5

    @property
    def beta_implied(self) -> float:
        return self.delta / self.n

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failed(self) -> list[str]:
        return [name for name, passed in self.checks.items() if not passed]


def check_feasibility(g: Graph, m: int, alpha: float, beta: float, mode: str = "strict") -> FeasibilityReport:
    n, b, delta = g.n, g.num_edges, g.max_degree()
    checks = {
        "m >= 2n": m >= 2 * n,
        "m <= alpha*n^1.5": m <= alpha * n**1.5,
        "delta <= beta*n": delta <= beta * n,
        "b <= m-n": b <= m - n,
        "beta+40*alpha^2 < 1/2": beta + 40 * alpha**2 < 0.5,
    }
    return FeasibilityReport(n, b, delta, m, alpha, beta, checks, mode)


@dataclass(frozen=True)
class WalkPlan:
    z: int
    w: int
    r: int
    lengths: tuple[int, ...]


def plan_walks(b0: int, z: int, m: int) -> WalkPlan:
    """Split the ``m - b0`` remaining edges into ``z`` walks: ``z - 1`` of
    length ``w`` and a last one of length ``w + r`` with ``r <= w - 1``."""
    if z < 1:
        raise ValueError("need at least one walk")
    total = m - b0
    if total < z:
        raise InfeasiblePlan(f"{total} spare edges cannot cover {z} walks")
    w, r = divmod(total, z)
    if r > w - 1:
        raise InfeasiblePlan(f"remainder {r} exceeds w - 1 = {w - 1} for z={z}, w={w}")
    return WalkPlan(z, w, r, (w,) * (z - 1) + (w + r,))


def balanced_plan(b0: int, z: int, m: int) -> WalkPlan:
    """Fallback when the remainder is too large: lengths differ by at most
    one, longer walks last."""
    total = m - b0
    if total < z:
        raise InfeasiblePlan(f"{total} spare edges cannot cover {z} walks")
    w, r = divmod(total, z)
    return WalkPlan(z, w, r, (w,) * (z - r) + (w + 1,) * r)


@dataclass
class ExtensionCertificate:
    g: Graph
    h: Graph
    m: int
    marked: list[Edge]
    walks: list[list[Edge]]
    circuit: list[int]
    feasibility: FeasibilityReport
    plan: WalkPlan | None = None
    retries: list[int] = field(default_factory=list)
    failures: Counter = field(default_factory=Counter)
    max_degree: int = 0
    degree_overflow: bool = False

    @property
    def z(self) -> int:
        return len(self.walks)


def _min_walk_length(acc: Graph, u1: int, u2: int) -> int:
    if u1 == u2:
        return 3
    return 2 if acc.has_edge(u1, u2) else 1


def extend(g: Graph, m: int, seed=None, config: ExtendConfig | None = None) -> ExtensionCertificate:
    """Return a certificate for an Eulerian ``H`` with ``G <= H`` and ``|E(H)| = m``."""
    config = config or ExtendConfig()
    if not is_connected(g):
        raise PreconditionError("input graph must be connected")
    if m <= g.num_edges:
        raise PreconditionError(f"target m={m} must exceed b={g.num_edges}")
    n = g.n
    report = check_feasibility(g, m, config.alpha, config.beta, config.mode)
    if not report.ok:
        if config.strict:
            raise FeasibilityError("hypotheses violated: " + ", ".join(report.failed()))
        log.info("advisory mode: proceeding despite %s", report.failed())
    if m > n * (n - 1) // 2:
        raise InfeasiblePlan(f"m={m} exceeds the {n * (n - 1) // 2} edges of K_{n}")

    outcome = mark_edges(g, m)
    if outcome.finished is not None:
        h = outcome.finished
        return _certify(g, h, m, list(outcome.marked), [], report, None, [], Counter())
    if outcome.z == 0:
        outcome = resolve_empty_clique(outcome)
    z = outcome.z
    if config.strict and z > n**0.75:
        raise InfeasiblePlan(f"z={z} leftover pairs exceeds n^(3/4)")
    try:
        plan = plan_walks(outcome.b0, z, m)
    except InfeasiblePlan:
        plan = balanced_plan(outcome.b0, z, m)
        log.info("remainder rule inapplicable, using balanced lengths %s", plan.lengths)

    rng = np.random.default_rng(seed)
    acc = outcome.g0
    walks: list[list[Edge]] = []
    retries: list[int] = []
    failures: Counter = Counter()
    overflow = False
    for (u1, u2), length in zip(outcome.clique_pairs, plan.lengths):
        need = _min_walk_length(acc, u1, u2)
        if length < need:
            raise InfeasiblePlan(f"walk {u1}->{u2} needs >= {need} edges, plan gives {length}")
        if length == 1:
            edges = [(min(u1, u2), max(u1, u2))]
            retries.append(0)
        else:
            built = build_walk(
                u1, u2, length - 1, acc, acc.num_edges, rng,
                max_retries=config.max_retries, check_budget=config.strict,
            )
            edges = built.edges
            retries.append(built.retries)
            failures.update(built.failures)
        acc = acc.with_edges(edges)
        walks.append(edges)
        if acc.max_degree() >= n / 2:
            if config.strict:
                raise DegreeOverflow(f"max degree {acc.max_degree()} reached n/2 = {n / 2}")
            overflow = True
    return _certify(g, acc, m, list(outcome.marked), walks, report, plan, retries, failures, overflow)


def _certify(g, h, m, marked, walks, report, plan, retries, failures, overflow=False):
    verdict = verify_extension(g, h, m)
    if not verdict.passed:
        raise AssertionError("constructed graph failed verification: " + "; ".join(verdict.failures))
    return ExtensionCertificate(
        g=g,
        h=h,
        m=m,
        marked=marked,
        walks=walks,
        circuit=hierholzer_circuit(h),
        feasibility=report,
        plan=plan,
        retries=retries,
        failures=failures,
        max_degree=h.max_degree(),
        degree_overflow=overflow or h.max_degree() >= g.n / 2,
    )
