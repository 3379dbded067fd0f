import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from swingcompare.alignment import (
    AlignmentPath,
    BACKTRACK_PREFERENCE,
    dtw_align,
    sync_map,
    tiebreak_backtrack_order,
)
from swingcompare.errors import EmptyMatrix, PathShapeMismatch

from oracles import brute_force_path_costs

STEPS = {(1, 0), (0, 1), (1, 1)}


def assert_valid_path(path: AlignmentPath, n, m):
    assert path.steps[0] == (0, 0)
    assert path.steps[-1] == (n - 1, m - 1)
    for (i0, j0), (i1, j1) in zip(path.steps, path.steps[1:]):
        assert (i1 - i0, j1 - j0) in STEPS


small_matrices = st.integers(1, 6).flatmap(
    lambda n: st.integers(1, 6).flatmap(
        lambda m: arrays(np.float64, (n, m),
                         elements=st.floats(0, 9, allow_nan=False))))


def test_zero_cost_diagonal():
    path = dtw_align(np.array([[0.0, 1.0], [1.0, 0.0]]), 0.0)
    assert path.steps == ((0, 0), (1, 1))
    assert path.total_cost == 0.0


def test_self_alignment_is_the_diagonal():
    rng = np.random.default_rng(0)
    v = rng.normal(size=(7, 3))
    d = np.linalg.norm(v[:, None] - v[None, :], axis=2)
    path = dtw_align(d, 0.0)
    assert path.total_cost == 0.0
    for i in range(7):
        assert (i, i) in path.steps


@given(small_matrices, st.sampled_from([0.0, 0.1, 1.0]))
@settings(max_examples=60, deadline=None)
def test_oracle_equivalence_real(d, penalty):
    costs = brute_force_path_costs(d)
    want = min(c + penalty * k for c, k in costs)
    got = dtw_align(d, penalty)
    assert got.total_cost == pytest.approx(want, abs=1e-12)
    assert_valid_path(got, *d.shape)


def test_oracle_equivalence_integer_exact():
    rng = np.random.default_rng(42)
    for _ in range(50):
        n, m = rng.integers(1, 9, size=2)
        d = rng.integers(0, 10, size=(n, m)).astype(float)
        costs = brute_force_path_costs(d)
        for p in (0.0, 1.0, 3.0):
            assert dtw_align(d, p).total_cost == min(c + p * k for c, k in costs)


def test_transpose_cost_symmetry():
    rng = np.random.default_rng(1)
    for _ in range(20):
        d = rng.uniform(0, 1, size=rng.integers(1, 9, size=2))
        for p in (0.0, 0.5):
            assert dtw_align(d, p).total_cost == pytest.approx(
                dtw_align(d.T, p).total_cost, abs=1e-12)


def test_penalty_monotonicity():
    rng = np.random.default_rng(2)
    for _ in range(20):
        d = rng.uniform(0, 1, size=(6, 7))
        costs = [dtw_align(d, p).total_cost for p in (0.0, 0.25, 1.0, 4.0)]
        assert costs == sorted(costs)


def test_tiebreak_prefers_diagonal():
    path = dtw_align(np.zeros((2, 2)), 0.0)
    assert path.steps == ((0, 0), (1, 1))


def test_tiebreak_is_deterministic():
    d = np.zeros((2, 2))
    assert dtw_align(d, 0.0) == dtw_align(d, 0.0)


def test_uniform_zero_matrix_yields_main_diagonal():
    path = dtw_align(np.zeros((3, 3)), 0.0)
    assert path.steps == ((0, 0), (1, 1), (2, 2))


def test_tiebreak_order_documented():
    assert tiebreak_backtrack_order() == BACKTRACK_PREFERENCE == ("diagonal", "up", "left")


def test_empty_matrix_raises():
    with pytest.raises(EmptyMatrix):
        dtw_align(np.zeros((0, 3)))


def test_single_cell_matrix():
    path = dtw_align(np.array([[2.5]]), 1.0)
    assert path.steps == ((0, 0),)
    assert path.total_cost == 2.5


# ---- sync map ----

def test_diagonal_path_syncs_identity():
    d = np.random.default_rng(3).uniform(0, 1, size=(5, 5))
    path = AlignmentPath(tuple((i, i) for i in range(5)), 0.0)
    sync = sync_map(path, d)
    assert np.array_equal(sync.expert_for_user, np.arange(5))
    assert np.array_equal(sync.aligned_distance, np.diag(d))


def test_sync_takes_argmin_over_path_row():
    d = np.array([[0.5, 0.2, 0.9], [0.1, 0.1, 0.3]])
    path = AlignmentPath(((0, 0), (0, 1), (1, 2)), 0.0)
    sync = sync_map(path, d)
    assert sync.expert_for_user[0] == 1
    assert sync.aligned_distance[0] == 0.2


def test_sync_tie_takes_smallest_j():
    d = np.array([[0.7, 0.7, 0.7], [0.0, 0.0, 0.1]])
    path = AlignmentPath(((0, 0), (0, 1), (0, 2), (1, 2)), 0.0)
    assert sync_map(path, d).expert_for_user[0] == 0


@given(small_matrices)
@settings(max_examples=60, deadline=None)
def test_sync_monotone_on_dtw_paths(d):
    path = dtw_align(d, 0.1)
    sync = sync_map(path, d)
    assert (np.diff(sync.expert_for_user) >= 0).all()
    assert (sync.aligned_distance >= 0).all()
    assert np.isfinite(sync.aligned_distance).all()


def test_sync_rejects_mismatched_path():
    d = np.zeros((3, 3))
    path = AlignmentPath(((0, 0), (1, 1)), 0.0)
    with pytest.raises(PathShapeMismatch):
        sync_map(path, d)
