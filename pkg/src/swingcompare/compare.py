"""Procrustes superimposition and per-joint position errors.

The expert skeleton is the moving set: it is fitted onto the user's
camera frame (the viewer overlays the transformed expert on the user).
Reflections are always excluded; a mirrored skeleton is anatomically
wrong even when it lowers the residual.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .data import Pose
from .errors import DegeneratePose
from .skeleton import GROUP_INDICES, JOINT_COUNT, WHOLE_BODY

# Centered Frobenius norm below this (scaled by joint count) means the
# moving set collapses to a point and the scale is undefined.
_DEGENERATE_NORM = 1e-12 * JOINT_COUNT


@dataclass(frozen=True)
class SimilarityTransform:
    """p -> scale * rotation @ p + translation, det(rotation) = +1."""

    rotation: np.ndarray
    translation: np.ndarray
    scale: float

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=np.float64)
        t = np.asarray(self.translation, dtype=np.float64)
        r.setflags(write=False)
        t.setflags(write=False)
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Transform an (N, 3) point set."""
        return self.scale * np.asarray(points) @ self.rotation.T + self.translation


def procrustes_fit(reference: Pose, moving: Pose, with_scale: bool = True) -> SimilarityTransform:
    """Least-squares superimposition of ``moving`` onto ``reference``.

    Solves the orthogonal Procrustes problem: center both joint sets,
    take the SVD of the 3 x 3 cross-covariance, and compose the rotation
    with a determinant correction so reflections are never returned.
    With ``with_scale`` the optimal uniform scale is included
    (trace of the corrected singular values over the moving set's
    centered squared norm); otherwise scale is fixed at 1.
    """
    ref = reference.joints
    mov = moving.joints
    ref_centroid = ref.mean(axis=0)
    mov_centroid = mov.mean(axis=0)
    x = mov - mov_centroid
    y = ref - ref_centroid
    x_norm_sq = float((x * x).sum())
    if np.sqrt(x_norm_sq) < _DEGENERATE_NORM:
        raise DegeneratePose("moving pose has (near-)zero centered norm")
    u, s, vt = np.linalg.svd(x.T @ y)
    sign = np.sign(np.linalg.det(vt.T @ u.T))
    correction = np.array([1.0, 1.0, sign])
    rotation = (vt.T * correction) @ u.T
    scale = float((s * correction).sum() / x_norm_sq) if with_scale else 1.0
    translation = ref_centroid - scale * rotation @ mov_centroid
    return SimilarityTransform(rotation, translation, scale)


@dataclass(frozen=True)
class FrameComparison:
    """Position errors for one matched frame pair, in the input's units."""

    user_frame: int
    expert_frame: int
    transform: SimilarityTransform
    per_joint_error: np.ndarray
    per_group_error: dict[str, float]
    mpjpe: float
    latent_distance: float

    def __post_init__(self):
        e = np.asarray(self.per_joint_error, dtype=np.float64)
        e.setflags(write=False)
        object.__setattr__(self, "per_joint_error", e)


def compare_frames(
    user: Pose,
    expert: Pose,
    latent_distance: float,
    with_scale: bool = True,
    user_frame: int = 0,
    expert_frame: int = 0,
) -> FrameComparison:
    """Fit the expert pose onto the user pose and measure what remains.

    per_joint_error[k] is the distance between user joint k and the
    transformed expert joint k; mpjpe is their mean, and each body-part
    group gets the mean over its members.
    """
    transform = procrustes_fit(user, expert, with_scale=with_scale)
    aligned = transform.apply(expert.joints)
    per_joint = np.linalg.norm(user.joints - aligned, axis=1)
    per_group = {name: float(per_joint[list(idx)].mean()) for name, idx in GROUP_INDICES.items()}
    mpjpe = float(per_joint.mean())
    per_group[WHOLE_BODY] = mpjpe
    return FrameComparison(
        user_frame=user_frame,
        expert_frame=expert_frame,
        transform=transform,
        per_joint_error=per_joint,
        per_group_error=per_group,
        mpjpe=mpjpe,
        latent_distance=float(latent_distance),
    )


def raw_mpjpe(a: Pose, b: Pose) -> float:
    """Mean per-joint position error with no alignment at all."""
    return float(np.linalg.norm(a.joints - b.joints, axis=1).mean())
