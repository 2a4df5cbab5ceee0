import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle
from eulerext.errors import NoCandidate, RetriesExhausted
from eulerext.graph import Graph
from eulerext.walks import (
    K,
    WalkSequence,
    build_walk,
    compute_a_n,
    compute_c_n,
    evaluate_events,
    repair_bad_edges,
    repair_bad_vertices,
    sample_sequence,
    walk_defects,
)


def brute_bad_edges(entries, acc):
    """Bad edges straight from the definition, O(w^2)."""
    w = len(entries) - 2
    count = 0
    for i in range(w + 1):
        x, y = entries[i], entries[i + 1]
        if x == y:
            continue
        dup = any({x, y} == {entries[j], entries[j + 1]} for j in range(i + 2, w + 1))
        count += acc.has_edge(x, y) or dup
    return count


def brute_bad_vertices(entries):
    w = len(entries) - 2
    return 1 + sum(entries[i] in (entries[i + 1], entries[i + 2]) for i in range(w))


def c4_in(n):
    return Graph(n, [(0, 1), (1, 2), (2, 3), (0, 3)])


@st.composite
def sequences(draw, n=12, max_w=20):
    w = draw(st.integers(1, max_w))
    u1 = draw(st.integers(0, n - 1))
    u2 = draw(st.integers(0, n - 1).filter(lambda v: v != u1))
    interior = draw(st.lists(st.integers(0, n - 1), min_size=w, max_size=w))
    return WalkSequence(u1, u2, interior)


def test_a_n_values():
    assert compute_a_n(10**5, 100) == pytest.approx(2000.0)
    assert compute_a_n(100, 100) == pytest.approx(460.517018598809, rel=1e-12)
    n = 50
    w = n * 50 * math.log(n)
    assert 2 * w / n == pytest.approx(100 * math.log(n))
    assert compute_a_n(w, n) == pytest.approx(100 * math.log(n))


@pytest.mark.parametrize("b0, w, n, expected", [(100, 100, 100, 5.0), (50, 50, 100, 2.0), (0, 1, 10, 1.02)])
def test_c_n_values(b0, w, n, expected):
    assert compute_c_n(b0, w, n) == pytest.approx(expected, rel=1e-12)


def test_sample_structure_and_determinism():
    s = sample_sequence(0, 2, 5, 10, np.random.default_rng(3))
    assert len(s.entries) == 7 and s.entries[0] == 0 and s.entries[-1] == 2
    assert s.entries == sample_sequence(0, 2, 5, 10, np.random.default_rng(3)).entries
    assert len(sample_sequence(0, 2, 1, 10, np.random.default_rng(0)).entries) == 3
    with pytest.raises(ValueError):
        sample_sequence(0, 2, 0, 10, np.random.default_rng(0))


def test_sampling_is_uniform():
    n, w, trials = 20, 50, 2000
    rng = np.random.default_rng(11)
    counts = Counter()
    for _ in range(trials):
        counts.update(sample_sequence(0, 1, w, n, rng).interior)
    draws = w * trials
    expected = draws / n
    sd = math.sqrt(draws * (1 / n) * (1 - 1 / n))
    assert draws >= 10**5
    assert all(abs(counts[v] - expected) <= 5 * sd for v in range(n))


def test_events_hand_traced(c4):
    st_ = evaluate_events(WalkSequence(0, 2, [2, 2, 1]), c4)
    assert st_.n_v_bad == 3
    assert st_.n_e_bad == 2
    assert st_.dv_max == 2


def test_events_clean_sequence():
    acc = c4_in(10)
    st_ = evaluate_events(WalkSequence(0, 2, [5, 6, 7, 8]), acc)
    assert st_.n_v_bad == 1 and st_.n_e_bad == 0
    assert st_.e_valid and st_.e_joint


def test_events_self_loop_first_edge_invalid():
    st_ = evaluate_events(WalkSequence(0, 2, [0, 6, 7]), c4_in(10))
    assert not st_.e_valid and not st_.e_joint


def test_events_end_edge_in_acc_invalid():
    assert not evaluate_events(WalkSequence(0, 2, [5, 6, 3]), c4_in(10)).e_valid
    assert not evaluate_events(WalkSequence(0, 2, [1, 6, 7]), c4_in(10)).e_valid


def test_e_e_bad_threshold():
    acc = Graph(10, [(i, i + 1) for i in range(9)])
    # every edge of the walk 0..9 is in acc
    seq = WalkSequence(0, 9, list(range(1, 9)))
    st_ = evaluate_events(seq, acc)
    assert st_.n_e_bad == 9
    assert st_.c_n == pytest.approx(1 + 2 * (9 + 8) * 8 / 100)
    assert st_.e_e_bad == (9 <= K * st_.c_n)


@given(sequences())
def test_event_counts_match_definitions(seq):
    acc = Graph(12, [(0, 1), (2, 3), (4, 5), (1, 7), (3, 9)])
    st_ = evaluate_events(seq, acc)
    assert st_.n_v_bad == brute_bad_vertices(seq.entries) >= 1
    assert st_.n_e_bad == brute_bad_edges(seq.entries, acc)
    assert st_.dv_max == max(Counter(seq.interior).values())
    assert st_.e_joint == (st_.e_valid and st_.e_deg and st_.e_v_bad and st_.e_e_bad)


def test_repair_vertices_hand_traced():
    acc = c4_in(8)
    out = repair_bad_vertices(WalkSequence(0, 2, [2, 2, 1]), acc)
    # X_1 = X_2 = 2: v1 = 4 (first non-neighbour of 2), v2 = 5; then X_3 -> 6
    assert out.entries == [0, 2, 4, 6, 2]
    assert out.vertex_repairs == 2
    assert repair_bad_edges(out, acc).entries == out.entries


def test_repair_vertices_near_noop():
    acc = c4_in(10)
    out = repair_bad_vertices(WalkSequence(0, 2, [5, 6, 7]), acc)
    assert out.interior[:2] == [5, 6]
    assert out.entries[-2] == 0  # smallest vertex adjacent to neither 6 nor 2
    assert out.vertex_repairs == 1


def test_repair_vertices_no_candidate():
    with pytest.raises(NoCandidate):
        repair_bad_vertices(WalkSequence(0, 2, [1, 1]), complete(3))


def test_repair_edges_replaces_acc_edge():
    acc = c4_in(8)
    out = repair_bad_edges(WalkSequence(0, 3, [5, 1, 2, 6]), acc)
    assert out.entries == [0, 5, 1, 4, 6, 3]
    assert out.edge_repairs == 1
    assert brute_bad_edges(out.entries, acc) == 0


def test_repair_edges_removes_duplicate():
    acc = Graph(8)
    out = repair_bad_edges(WalkSequence(0, 4, [1, 2, 3, 1, 2]), acc)
    assert out.entries == [0, 1, 4, 3, 1, 2, 4]
    assert brute_bad_edges(out.entries, acc) == 0


def test_repair_edges_identity_when_clean():
    seq = WalkSequence(0, 3, [5, 6, 7])
    assert repair_bad_edges(seq, c4_in(8)).entries == seq.entries


@settings(max_examples=300)
@given(sequences(n=30, max_w=25))
def test_repairs_are_monotone_and_clean(seq):
    acc = Graph(30, [(i, (i + 7) % 30) for i in range(30)])
    before_v = brute_bad_vertices(seq.entries)
    try:
        mid = repair_bad_vertices(seq, acc)
    except NoCandidate:
        return
    assert mid.vertex_repairs <= before_v
    assert brute_bad_vertices(mid.entries) == 1
    before_e = brute_bad_edges(mid.entries, acc)
    try:
        out = repair_bad_edges(mid, acc)
    except NoCandidate:
        return
    assert out.edge_repairs <= before_e
    assert walk_defects(out.entries, acc) == []
    assert out.entries[0] == seq.u1 and out.entries[-1] == seq.u2


def walk_degrees(entries):
    deg = Counter()
    for i in range(len(entries) - 1):
        deg[entries[i]] += 1
        deg[entries[i + 1]] += 1
    return deg


@pytest.mark.parametrize("seed", range(5))
def test_build_walk_sparse(seed):
    acc = Graph(100, [(i, i + 1) for i in range(99)])
    walk = build_walk(0, 3, 20, acc, None, np.random.default_rng(seed))
    assert len(walk.edges) == 21
    assert walk.entries[0] == 0 and walk.entries[-1] == 3
    assert walk_defects(walk.entries, acc) == []
    assert evaluate_events(WalkSequence(0, 3, walk.entries[1:-1]), acc).n_e_bad == 0
    deg = walk_degrees(walk.entries)
    assert {v for v, d in deg.items() if d % 2} == {0, 3}


def test_build_walk_closed():
    acc = Graph(30, [(i, i + 1) for i in range(29)])
    walk = build_walk(5, 5, 6, acc, None, np.random.default_rng(1))
    assert len(walk.edges) == 7 and walk_defects(walk.entries, acc) == []
    assert all(d % 2 == 0 for d in walk_degrees(walk.entries).values())


def test_build_walk_deterministic():
    acc = Graph(50, [(i, i + 1) for i in range(49)])
    a = build_walk(0, 7, 30, acc, None, np.random.default_rng(9))
    b = build_walk(0, 7, 30, acc, None, np.random.default_rng(9))
    assert a.entries == b.entries and a.retries == b.retries


def test_build_walk_retries_exhausted():
    # K_4 minus nothing: no edge is free, every attempt fails
    with pytest.raises(RetriesExhausted) as info:
        build_walk(0, 1, 2, complete(4), None, np.random.default_rng(0), max_retries=20)
    assert sum(info.value.failures.values()) == 21


def test_build_walk_budget_check_triggers():
    # star centre already has degree 9 > n/2 - 5 = 0
    acc = Graph(10, [(0, i) for i in range(1, 10)])
    with pytest.raises(RetriesExhausted) as info:
        build_walk(1, 2, 3, acc, None, np.random.default_rng(0), max_retries=30, check_budget=True)
    assert info.value.failures["degree_budget"] > 0
    assert "no_candidate" not in info.value.failures
