"""DTW alignment over a distance matrix and the per-frame sync map.

The alignment penalizes non-diagonal steps with an additive
``step_penalty`` (0 recovers textbook DTW). The motivation: a clip can
pass through near-identical postures at different times, and a flat
penalty discourages the path from stalling on such spurious matches.

Backtracking tie-breaks are fixed (diagonal, then up, then left) so the
same matrix always yields the same path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyMatrix, InvalidParams, PathShapeMismatch

#: Preference order when accumulated costs tie during backtracking.
#: "up" consumes a user frame (i-1, j); "left" an expert frame (i, j-1).
BACKTRACK_PREFERENCE: tuple[str, str, str] = ("diagonal", "up", "left")


@dataclass(frozen=True)
class AlignmentPath:
    """Monotone DTW path from (0, 0) to (N-1, M-1) and its total cost."""

    steps: tuple[tuple[int, int], ...]
    total_cost: float


@dataclass(frozen=True)
class SyncMap:
    """Per-user-frame expert match and the aligned distance signal.

    expert_for_user[i] is the expert frame shown against user frame i;
    aligned_distance[i] is the latent distance of that matched pair.
    """

    expert_for_user: np.ndarray
    aligned_distance: np.ndarray

    def __post_init__(self):
        e = np.asarray(self.expert_for_user, dtype=np.int64)
        d = np.asarray(self.aligned_distance, dtype=np.float64)
        e.setflags(write=False)
        d.setflags(write=False)
        object.__setattr__(self, "expert_for_user", e)
        object.__setattr__(self, "aligned_distance", d)


def tiebreak_backtrack_order() -> tuple[str, str, str]:
    """The fixed backtracking preference guaranteeing determinism."""
    return BACKTRACK_PREFERENCE


def dtw_align(d: np.ndarray, step_penalty: float = 0.0) -> AlignmentPath:
    """Minimum-cost monotone alignment of an N x M distance matrix.

    Recurrence: ``cost(i, j) = d[i, j] + min(cost(i-1, j-1),
    cost(i-1, j) + p, cost(i, j-1) + p)`` with ``cost(0, 0) = d[0, 0]``,
    where p is the non-diagonal step penalty.
    """
    d = np.asarray(d, dtype=np.float64)
    if d.ndim != 2:
        raise InvalidParams(f"distance matrix must be 2-D, got shape {d.shape}")
    n, m = d.shape
    if n == 0 or m == 0:
        raise EmptyMatrix(f"distance matrix has shape {d.shape}")
    if step_penalty < 0:
        raise InvalidParams(f"step_penalty must be non-negative, got {step_penalty}")
    p = float(step_penalty)

    acc = np.empty((n, m), dtype=np.float64)
    acc[0, 0] = d[0, 0]
    for j in range(1, m):
        acc[0, j] = d[0, j] + acc[0, j - 1] + p
    for i in range(1, n):
        acc[i, 0] = d[i, 0] + acc[i - 1, 0] + p
        row = acc[i]
        prev = acc[i - 1]
        di = d[i]
        for j in range(1, m):
            row[j] = di[j] + min(prev[j - 1], prev[j] + p, row[j - 1] + p)

    # Backtrack with the fixed preference: diagonal, up, left.
    i, j = n - 1, m - 1
    steps = [(i, j)]
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            diag = acc[i - 1, j - 1]
            up = acc[i - 1, j] + p
            left = acc[i, j - 1] + p
            if diag <= up and diag <= left:
                i, j = i - 1, j - 1
            elif up <= left:
                i -= 1
            else:
                j -= 1
        steps.append((i, j))
    steps.reverse()
    return AlignmentPath(tuple(steps), float(acc[n - 1, m - 1]))


def sync_map(path: AlignmentPath, d: np.ndarray) -> SyncMap:
    """Collapse a path to one expert frame per user frame.

    For each user frame i, pick the on-path expert frame minimizing
    d[i, j]; ties go to the smallest j. The result is monotone
    non-decreasing in i.
    """
    d = np.asarray(d, dtype=np.float64)
    n, m = d.shape
    if not path.steps or path.steps[0] != (0, 0) or path.steps[-1] != (n - 1, m - 1):
        raise PathShapeMismatch(f"path endpoints do not span a {n} x {m} matrix")
    expert = np.full(n, -1, dtype=np.int64)
    dist = np.empty(n, dtype=np.float64)
    for i, j in path.steps:
        if not (0 <= i < n and 0 <= j < m):
            raise PathShapeMismatch(f"path step ({i}, {j}) outside {n} x {m} matrix")
        if expert[i] < 0 or d[i, j] < dist[i]:
            expert[i] = j
            dist[i] = d[i, j]
    if (expert < 0).any():
        raise PathShapeMismatch("path does not visit every user frame")
    return SyncMap(expert, dist)
