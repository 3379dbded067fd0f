"""Latent-space distances and a deterministic pose-derived embedder.

The real system extracts per-frame latent vectors with a neural encoder;
that network is out of scope here. :func:`proxy_embed` stands in for it
in tests and demos: a translation- and scale-normalized flattening of
the skeleton. It is deliberately *not* rotation-normalized, since a
camera-dependent encoder would not be either.
"""

from __future__ import annotations

import numpy as np

from .data import EmbeddingSequence, PoseSequence
from .errors import DegeneratePose, DimensionMismatch
from .skeleton import PELVIS

_DEGENERATE_EPS = 1e-12


def euclidean_distance(u: np.ndarray, v: np.ndarray) -> float:
    """L2 norm of ``u - v``."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise DimensionMismatch(f"vector lengths differ: {u.shape} vs {v.shape}")
    return float(np.linalg.norm(u - v))


def distance_matrix(a: EmbeddingSequence, b: EmbeddingSequence) -> np.ndarray:
    """Pairwise Euclidean distances, shape (len(a), len(b)).

    Entry (i, j) equals ``euclidean_distance(a.vectors[i], b.vectors[j])``.
    """
    if a.dim != b.dim:
        raise DimensionMismatch(f"embedding dims differ: {a.dim} vs {b.dim}")
    diff = a.vectors[:, None, :] - b.vectors[None, :, :]
    return np.linalg.norm(diff, axis=2)


def proxy_embed(seq: PoseSequence, include_club: bool = True) -> EmbeddingSequence:
    """Embed each frame of a pose sequence deterministically.

    Per frame: translate so the pelvis sits at the origin, scale so the
    mean joint distance from the origin is 1, and flatten the 17 x 3
    coordinates into a 51-vector. When ``include_club`` is set and the
    clip carries club keypoints, the unit grip-to-head direction is
    appended (54-vector).
    """
    centered = seq.joints - seq.joints[:, PELVIS:PELVIS + 1, :]
    scales = np.linalg.norm(centered, axis=2).mean(axis=1)
    degenerate = np.flatnonzero(scales < _DEGENERATE_EPS)
    if degenerate.size:
        raise DegeneratePose(f"all joints coincide at frame {degenerate[0]}; scale undefined")
    flat = (centered / scales[:, None, None]).reshape(len(seq), -1)
    if include_club and seq.club is not None:
        shaft = seq.club[:, 1, :] - seq.club[:, 0, :]
        lengths = np.linalg.norm(shaft, axis=1)
        zero = np.flatnonzero(lengths < _DEGENERATE_EPS)
        if zero.size:
            raise DegeneratePose(f"zero-length club at frame {zero[0]}; direction undefined")
        flat = np.concatenate([flat, shaft / lengths[:, None]], axis=1)
    return EmbeddingSequence(flat.shape[1], flat)
