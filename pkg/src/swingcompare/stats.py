"""Pearson correlation of per-part joint errors against latent distance.

A zero-variance series yields an *undefined* entry (None), deliberately
distinct from 0: a constant signal carries no correlation information,
and reports must not confuse "no signal" with "uncorrelated".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .compare import FrameComparison
from .errors import LengthMismatch, TooFewSamples
from .skeleton import BODY_PART_GROUPS, WHOLE_BODY


@dataclass(frozen=True)
class CorrelationTable:
    """Group name -> Pearson coefficient (None when undefined)."""

    entries: dict[str, float | None]
    sample_count: int


def pearson(a, b) -> float | None:
    """Sample Pearson correlation; None when either series is constant."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise LengthMismatch(f"series lengths differ: {a.shape} vs {b.shape}")
    if a.size < 2:
        raise TooFewSamples(f"need at least 2 samples, got {a.size}")
    # constancy checked exactly: the mean of identical values can round
    # a ulp away from them, leaving a spurious nonzero variance
    if (a == a[0]).all() or (b == b[0]).all():
        return None
    da = a - a.mean()
    db = b - b.mean()
    va = float(da @ da)
    vb = float(db @ db)
    if va == 0.0 or vb == 0.0:
        return None
    r = float((da @ db) / np.sqrt(va * vb))
    # Cauchy-Schwarz bounds |r| by 1; any excess is rounding error
    return min(1.0, max(-1.0, r))


def correlation_table(comparisons: Sequence[FrameComparison]) -> CorrelationTable:
    """Correlate each group's error with latent distance across frames."""
    if len(comparisons) < 2:
        raise TooFewSamples(f"need at least 2 comparisons, got {len(comparisons)}")
    latent = [c.latent_distance for c in comparisons]
    entries: dict[str, float | None] = {}
    for group in (WHOLE_BODY, *BODY_PART_GROUPS):
        errors = [c.per_group_error[group] for c in comparisons]
        entries[group] = pearson(errors, latent)
    return CorrelationTable(entries=entries, sample_count=len(comparisons))


def undefined_table(sample_count: int) -> CorrelationTable:
    """An all-undefined table, for sessions with too few key frames."""
    entries: dict[str, float | None] = {g: None for g in (WHOLE_BODY, *BODY_PART_GROUPS)}
    return CorrelationTable(entries=entries, sample_count=sample_count)


def rank_groups(table: CorrelationTable) -> list[tuple[str, float | None]]:
    """Entries sorted by coefficient, descending; undefined last;
    ties broken alphabetically."""
    defined = sorted(
        ((g, c) for g, c in table.entries.items() if c is not None),
        key=lambda item: (-item[1], item[0]),
    )
    undefined = sorted(
        ((g, c) for g, c in table.entries.items() if c is None),
        key=lambda item: item[0],
    )
    return [*defined, *undefined]
