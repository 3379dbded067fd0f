from dataclasses import replace

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from swingcompare.compare import compare_frames
from swingcompare.data import Pose
from swingcompare.errors import LengthMismatch, TooFewSamples
from swingcompare.skeleton import BODY_PART_GROUPS, WHOLE_BODY
from swingcompare.stats import (
    CorrelationTable,
    correlation_table,
    pearson,
    rank_groups,
    undefined_table,
)

from oracles import random_pose_joints

series = st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=2, max_size=30)


def test_perfect_positive():
    assert pearson([1, 2, 3], [1, 2, 3]) == pytest.approx(1.0, abs=1e-12)


def test_perfect_negative():
    assert pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0, abs=1e-12)


def test_hand_computed_point_eight():
    # deviations a: -1.5,-0.5,0.5,1.5; b: -1.5,0.5,-0.5,1.5
    # covariance sum 4.0; each squared-deviation sum 5.0; r = 4/5
    assert pearson([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(0.8, abs=1e-12)


def test_zero_variance_is_undefined_not_error():
    assert pearson([1, 1, 1], [1, 2, 3]) is None
    assert pearson([1, 2, 3], [5, 5, 5]) is None


def test_constant_series_of_unrepresentable_mean_is_still_undefined():
    # mean([x, x, x]) can land a ulp off x; constancy must win anyway
    tiny = 2.5356064271403685e-129
    assert pearson([tiny, tiny, tiny], [1.0, 0.5, -0.4]) is None


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        pearson([1, 2], [1, 2, 3])


def test_too_few_samples():
    with pytest.raises(TooFewSamples):
        pearson([1], [2])


@given(series, series)
@settings(max_examples=100, deadline=None)
def test_symmetry(a, b):
    n = min(len(a), len(b))
    ra = pearson(a[:n], b[:n])
    rb = pearson(b[:n], a[:n])
    assert ra == rb or (ra is None and rb is None)


@given(series)
@settings(max_examples=100, deadline=None)
def test_magnitude_bounded(a):
    b = list(np.sin(np.arange(len(a))))
    r = pearson(a, b)
    if r is not None:
        assert abs(r) <= 1 + 1e-12


@given(series, st.floats(0.01, 100), st.floats(-100, 100))
@settings(max_examples=100, deadline=None)
def test_affine_invariance(a, alpha, beta):
    b = list(np.cos(np.arange(len(a))))
    base = pearson(a, b)
    # the property is about the transform, not float quantization: skip
    # inputs whose variation would drown in the ulp of alpha*x + beta
    spread = max(a) - min(a)
    magnitude = abs(beta) + alpha * max(abs(x) for x in a)
    assume(spread == 0 or alpha * spread >= 1e-3 * max(magnitude, 1e-300))
    forward = [alpha * x + beta for x in a]
    negated = [-alpha * x + beta for x in a]
    if base is None:
        assert pearson(forward, b) is None
    else:
        assert pearson(forward, b) == pytest.approx(base, abs=1e-12)
        assert pearson(negated, b) == pytest.approx(-base, abs=1e-12)


def make_comparisons(n=20, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        user = Pose(random_pose_joints(rng))
        expert = Pose(user.joints + rng.normal(scale=0.05, size=(17, 3)))
        out.append(compare_frames(user, expert, latent_distance=rng.uniform(0, 1)))
    return out


def test_table_covers_all_groups():
    table = correlation_table(make_comparisons())
    assert set(table.entries) == {WHOLE_BODY, *BODY_PART_GROUPS}
    assert table.sample_count == 20


def test_latent_equal_to_mpjpe_gives_whole_body_one():
    forced = [replace(c, latent_distance=c.mpjpe) for c in make_comparisons(n=10, seed=2)]
    table = correlation_table(forced)
    assert table.entries[WHOLE_BODY] == pytest.approx(1.0, abs=1e-12)


def test_affine_latent_of_group_error_correlates_exactly():
    rigged = [
        replace(c, latent_distance=2.5 * c.per_group_error["Wrist"] + 0.1)
        for c in make_comparisons(n=15, seed=3)
    ]
    table = correlation_table(rigged)
    assert table.entries["Wrist"] == pytest.approx(1.0, abs=1e-12)


def test_too_few_comparisons():
    with pytest.raises(TooFewSamples):
        correlation_table(make_comparisons(n=1))


def test_rank_groups_sorts_descending():
    table = CorrelationTable(entries={"A": 0.5, "B": 0.9}, sample_count=5)
    assert rank_groups(table) == [("B", 0.9), ("A", 0.5)]


def test_rank_groups_ties_alphabetical():
    table = CorrelationTable(entries={"B": 0.5, "A": 0.5}, sample_count=5)
    assert rank_groups(table) == [("A", 0.5), ("B", 0.5)]


def test_rank_groups_undefined_last():
    table = CorrelationTable(entries={"A": None, "B": 0.1, "C": -0.4}, sample_count=5)
    assert rank_groups(table) == [("B", 0.1), ("C", -0.4), ("A", None)]


def test_undefined_table_has_no_defined_entries():
    table = undefined_table(1)
    assert all(v is None for v in table.entries.values())
    assert table.sample_count == 1
