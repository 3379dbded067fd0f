"""Adaptive thresholding of the aligned distance signal and key frames.

The threshold is mean + k * population std of the signal (the single
red line a reviewer sees over the distance graph). Frames strictly
above it form segments; segments separated by fewer than ``min_gap``
quiet frames merge, and each segment is represented by its
maximum-signal key frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySignal, InvalidParams


@dataclass(frozen=True)
class DiscrepancyResult:
    """Threshold, flagged (start, end) inclusive segments, one key frame each."""

    threshold: float
    flagged_segments: tuple[tuple[int, int], ...]
    key_frames: tuple[int, ...]


def adaptive_threshold(signal, k: float = 1.0) -> float:
    """mean(signal) + k * population std (variance divides by N)."""
    signal = np.asarray(signal, dtype=np.float64)
    if signal.size == 0:
        raise EmptySignal("cannot threshold an empty signal")
    return float(signal.mean() + k * signal.std())


def detect_discrepant_frames(signal, threshold: float, min_gap: int = 3) -> DiscrepancyResult:
    """Segment the frames whose signal exceeds the threshold.

    Maximal runs of ``signal > threshold`` become segments; runs whose
    separating quiet stretch is shorter than ``min_gap`` frames are
    merged. Each segment's key frame is the argmax of the signal inside
    it (ties resolve to the smallest index).
    """
    signal = np.asarray(signal, dtype=np.float64)
    if min_gap < 0:
        raise InvalidParams(f"min_gap must be non-negative, got {min_gap}")
    above = signal > threshold
    segments: list[list[int]] = []
    for i in np.flatnonzero(above):
        if segments and i == segments[-1][1] + 1:
            segments[-1][1] = int(i)
        else:
            segments.append([int(i), int(i)])

    merged: list[list[int]] = []
    for seg in segments:
        if merged and seg[0] - merged[-1][1] - 1 < min_gap:
            merged[-1][1] = seg[1]
        else:
            merged.append(seg)

    key_frames = tuple(
        start + int(np.argmax(signal[start:end + 1])) for start, end in merged
    )
    return DiscrepancyResult(
        threshold=float(threshold),
        flagged_segments=tuple((s, e) for s, e in merged),
        key_frames=key_frames,
    )
