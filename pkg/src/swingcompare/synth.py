"""Deterministic synthetic swings, time warps, and coupled embeddings.

These provide ground truth for the recovery experiments: a parametric
swing whose true motion is known, a monotone time warp whose true
frame correspondence is returned alongside the resampled clip, and an
embedding whose distance responds by construction more strongly to
heavily weighted body parts.

Randomness uses numpy's PCG64 with the caller's seed; one draw fills
the joint jitter, a second the club jitter, a third the embedding
noise. Bitwise determinism is promised within this implementation
only; other implementations can match it statistically, not bitwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .data import EmbeddingSequence, PoseSequence
from .errors import InvalidParams, InvalidWarp
from .skeleton import GROUP_INDICES, JOINT_INDEX, PELVIS, UPPER_BODY_JOINTS
from .swing_keyframes import KEYFRAME_CLUB, KEYFRAME_JOINTS, KEYFRAME_PHASES

PHASE_NAMES: tuple[str, ...] = KEYFRAME_PHASES[:8]

_UPPER_IDX = np.array([JOINT_INDEX[j] for j in UPPER_BODY_JOINTS])


@dataclass(frozen=True)
class SwingParams:
    """Parameters of one generated swing clip.

    frames_per_phase allocates frames to the eight phases (address
    through finish); the total must be at least 16. Amplitudes scale
    each joint's displacement from the address pose, split into the
    upper-body and lower-body joint sets. noise_std adds per-frame
    Gaussian jitter in pose units; only the noise depends on the seed.
    """

    seed: int = 0
    frames_per_phase: tuple[int, ...] = (20, 16, 14, 12, 12, 12, 16, 18)
    noise_std: float = 0.0
    upper_body_amplitude: float = 1.0
    lower_body_amplitude: float = 1.0
    fps: float = 30.0

    def __post_init__(self):
        if len(self.frames_per_phase) != 8 or any(n <= 0 for n in self.frames_per_phase):
            raise InvalidParams("frames_per_phase must be 8 positive counts")
        if sum(self.frames_per_phase) < 16:
            raise InvalidParams("total frame count must be at least 16")
        if self.noise_std < 0:
            raise InvalidParams("noise_std must be non-negative")
        if self.upper_body_amplitude <= 0 or self.lower_body_amplitude <= 0:
            raise InvalidParams("amplitudes must be positive")
        if self.fps <= 0:
            raise InvalidParams("fps must be positive")
        object.__setattr__(self, "frames_per_phase", tuple(int(n) for n in self.frames_per_phase))


def _ease(u: np.ndarray) -> np.ndarray:
    """Cubic ease (smoothstep) on [0, 1]."""
    return u * u * (3.0 - 2.0 * u)


def generate_swing(params: SwingParams) -> PoseSequence:
    """Render the keyframe swing into a clip, deterministically.

    Phase k interpolates keyframe k to keyframe k+1 with a cubic ease;
    the ninth (rest) keyframe gives the finish phase somewhere to go.
    Amplitudes scale displacements from the address keyframe before
    interpolation; jitter is added last.
    """
    keys = np.asarray(KEYFRAME_JOINTS, dtype=np.float64)
    club_keys = np.asarray(KEYFRAME_CLUB, dtype=np.float64)
    base = keys[0]
    club_base = club_keys[0]

    amp = np.full(keys.shape[1], params.lower_body_amplitude)
    amp[_UPPER_IDX] = params.upper_body_amplitude
    keys = base + amp[None, :, None] * (keys - base)
    club_keys = club_base + params.upper_body_amplitude * (club_keys - club_base)

    total = sum(params.frames_per_phase)
    joints = np.empty((total, keys.shape[1], 3))
    club = np.empty((total, 2, 3))
    t = 0
    for phase, count in enumerate(params.frames_per_phase):
        u = _ease(np.arange(count, dtype=np.float64) / count)
        a, b = keys[phase], keys[phase + 1]
        joints[t:t + count] = a + u[:, None, None] * (b - a)
        ca, cb = club_keys[phase], club_keys[phase + 1]
        club[t:t + count] = ca + u[:, None, None] * (cb - ca)
        t += count

    if params.noise_std > 0:
        # the root stays noise-free: lifted poses are root-relative, so
        # jitter lives in the other joints
        rng = np.random.Generator(np.random.PCG64(params.seed))
        jitter = rng.normal(0.0, params.noise_std, joints.shape)
        jitter[:, PELVIS, :] = 0.0
        joints = joints + jitter
        club = club + rng.normal(0.0, params.noise_std, club.shape)

    return PoseSequence(params.fps, joints, club)


@dataclass(frozen=True)
class WarpSpec:
    """Monotone (source time, target time) control points on [0, 1]^2."""

    control_points: tuple[tuple[float, float], ...] = ((0.0, 0.0), (1.0, 1.0))

    def __post_init__(self):
        pts = tuple((float(s), float(t)) for s, t in self.control_points)
        if len(pts) < 2 or pts[0] != (0.0, 0.0) or pts[-1] != (1.0, 1.0):
            raise InvalidWarp("control points must run from (0, 0) to (1, 1)")
        for (s0, t0), (s1, t1) in zip(pts, pts[1:]):
            if not (s1 > s0 and t1 > t0):
                raise InvalidWarp(f"control points must be strictly monotone, got {pts}")
        object.__setattr__(self, "control_points", pts)

    def source_time(self, target: np.ndarray) -> np.ndarray:
        """Invert the warp: normalized target time -> source time."""
        sources = [p[0] for p in self.control_points]
        targets = [p[1] for p in self.control_points]
        return np.interp(target, targets, sources)


def apply_warp(seq: PoseSequence, warp: WarpSpec, out_len: int) -> tuple[PoseSequence, np.ndarray]:
    """Resample a clip along a time warp.

    Returns the warped clip and the ground-truth correspondence: for
    each output frame, the nearest source frame index. Output frames
    landing between source frames are linearly interpolated; frames
    landing (numerically) on a source frame copy it exactly, so the
    identity warp is the identity.
    """
    if out_len < 2:
        raise InvalidParams(f"out_len must be at least 2, got {out_len}")
    n = len(seq)
    target = np.arange(out_len, dtype=np.float64) / (out_len - 1)
    positions = warp.source_time(target) * (n - 1)
    nearest = np.floor(positions + 0.5).astype(np.int64)
    nearest = np.clip(nearest, 0, n - 1)

    lo = np.clip(np.floor(positions).astype(np.int64), 0, n - 2)
    frac = positions - lo
    snap = np.abs(positions - nearest) < 1e-9

    joints = (1.0 - frac)[:, None, None] * seq.joints[lo] + frac[:, None, None] * seq.joints[lo + 1]
    joints[snap] = seq.joints[nearest[snap]]
    club = None
    if seq.club is not None:
        club = (1.0 - frac)[:, None, None] * seq.club[lo] + frac[:, None, None] * seq.club[lo + 1]
        club[snap] = seq.club[nearest[snap]]
    images = None
    if seq.frame_image_paths is not None:
        images = tuple(seq.frame_image_paths[i] for i in nearest)

    return PoseSequence(seq.fps, joints, club, images), nearest


def coupled_embedding(
    seq: PoseSequence,
    group_weights: dict[str, float],
    noise_std: float = 0.0,
    seed: int = 0,
) -> EmbeddingSequence:
    """Embed frames so distance tracks the weighted body parts.

    Per frame, the embedding concatenates weight * root-relative
    coordinates of each group's joints (groups in sorted name order),
    plus seeded Gaussian noise. Latent distance between two frames is
    then exactly the weighted norm of their part-wise differences,
    before noise.
    """
    if not group_weights:
        raise InvalidParams("group_weights must not be empty")
    unknown = [g for g in group_weights if g not in GROUP_INDICES]
    if unknown:
        raise InvalidParams(f"unknown groups: {unknown}")
    if any(w < 0 for w in group_weights.values()):
        raise InvalidParams("weights must be non-negative")
    if all(w == 0 for w in group_weights.values()):
        raise InvalidParams("at least one weight must be positive")

    relative = seq.joints - seq.joints[:, PELVIS:PELVIS + 1, :]
    blocks = []
    for group in sorted(group_weights):
        idx = list(GROUP_INDICES[group])
        blocks.append(group_weights[group] * relative[:, idx, :].reshape(len(seq), -1))
    vectors = np.concatenate(blocks, axis=1)
    if noise_std > 0:
        rng = np.random.Generator(np.random.PCG64(seed))
        vectors = vectors + rng.normal(0.0, noise_std, vectors.shape)
    return EmbeddingSequence(vectors.shape[1], vectors)
