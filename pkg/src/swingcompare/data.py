"""Core data model: poses, clips, embeddings, and their JSON file formats.

All types are immutable after construction (frozen dataclasses over
read-only numpy arrays), so they can be shared freely across threads.

File formats (UTF-8 JSON):

* pose file::

    {"fps": <number>, "joint_names": [<17 strings>],
     "frames": [[[x, y, z] * 17] * F],
     "club": [[[x, y, z] * 2] * F] | null,
     "frame_images": [<string> * F] | null}

* embedding file::

    {"dim": <int>, "frames": [[<dim numbers>] * F]}

Readers accept any finite decimal; writers emit the shortest
round-tripping representation, so ``load(save(x)) == x`` bitwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    InvalidParams,
    IoFailure,
    MalformedFile,
    NonFiniteValue,
    RaggedRows,
    SchemaMismatch,
)
from .skeleton import JOINT_COUNT, JOINT_INDEX, JOINT_NAMES


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Pose:
    """One frame's skeleton.

    joints: (17, 3) coordinates in schema order, any consistent unit.
    club: optional (2, 3) array holding the grip and club-head points.
    """

    joints: np.ndarray
    club: np.ndarray | None = None

    def __post_init__(self):
        joints = np.asarray(self.joints, dtype=np.float64)
        if joints.shape != (JOINT_COUNT, 3):
            raise InvalidParams(f"pose joints must be ({JOINT_COUNT}, 3), got {joints.shape}")
        if not np.isfinite(joints).all():
            raise NonFiniteValue("pose contains a non-finite joint coordinate")
        object.__setattr__(self, "joints", _readonly(joints))
        if self.club is not None:
            club = np.asarray(self.club, dtype=np.float64)
            if club.shape != (2, 3):
                raise InvalidParams(f"club keypoints must be (2, 3), got {club.shape}")
            if not np.isfinite(club).all():
                raise NonFiniteValue("club contains a non-finite coordinate")
            object.__setattr__(self, "club", _readonly(club))


@dataclass(frozen=True)
class PoseSequence:
    """Per-frame skeletons for one clip.

    joints: (F, 17, 3); club: (F, 2, 3) or None (all frames or none);
    frame_image_paths: optional opaque locators, one per frame.
    """

    fps: float
    joints: np.ndarray
    club: np.ndarray | None = None
    frame_image_paths: tuple[str, ...] | None = None

    def __post_init__(self):
        if not (self.fps > 0):
            raise InvalidParams(f"fps must be positive, got {self.fps}")
        joints = np.asarray(self.joints, dtype=np.float64)
        if joints.ndim != 3 or joints.shape[1:] != (JOINT_COUNT, 3):
            raise InvalidParams(f"joints must be (F, {JOINT_COUNT}, 3), got {joints.shape}")
        if joints.shape[0] < 2:
            raise InvalidParams("a pose sequence needs at least 2 frames")
        if not np.isfinite(joints).all():
            frame, joint = np.argwhere(~np.isfinite(joints).all(axis=2))[0]
            raise NonFiniteValue(f"non-finite coordinate at frame {frame}, joint {joint}")
        object.__setattr__(self, "joints", _readonly(joints))
        if self.club is not None:
            club = np.asarray(self.club, dtype=np.float64)
            if club.shape != (joints.shape[0], 2, 3):
                raise InvalidParams(f"club must be (F, 2, 3) matching F={joints.shape[0]}, got {club.shape}")
            if not np.isfinite(club).all():
                frame = int(np.argwhere(~np.isfinite(club).all(axis=(1, 2)))[0][0])
                raise NonFiniteValue(f"non-finite club coordinate at frame {frame}")
            object.__setattr__(self, "club", _readonly(club))
        if self.frame_image_paths is not None:
            paths = tuple(str(p) for p in self.frame_image_paths)
            if len(paths) != joints.shape[0]:
                raise InvalidParams("frame_image_paths length must equal frame count")
            object.__setattr__(self, "frame_image_paths", paths)

    def __len__(self) -> int:
        return self.joints.shape[0]

    def frame(self, i: int) -> Pose:
        club = self.club[i] if self.club is not None else None
        return Pose(self.joints[i], club)


@dataclass(frozen=True)
class EmbeddingSequence:
    """Per-frame latent vectors for one clip; vectors is (F, dim)."""

    dim: int
    vectors: np.ndarray

    def __post_init__(self):
        if self.dim <= 0:
            raise InvalidParams(f"embedding dim must be positive, got {self.dim}")
        vectors = np.asarray(self.vectors, dtype=np.float64)
        if vectors.ndim != 2 or vectors.shape[1] != self.dim:
            raise InvalidParams(f"vectors must be (F, {self.dim}), got {vectors.shape}")
        if vectors.shape[0] < 1:
            raise InvalidParams("an embedding sequence needs at least 1 frame")
        if not np.isfinite(vectors).all():
            frame = int(np.argwhere(~np.isfinite(vectors).all(axis=1))[0][0])
            raise NonFiniteValue(f"non-finite embedding entry at frame {frame}")
        object.__setattr__(self, "vectors", _readonly(vectors))

    def __len__(self) -> int:
        return self.vectors.shape[0]


@dataclass(frozen=True)
class ClipPair:
    """A learner clip and an expert clip with their embeddings.

    Construction does not enforce the pair-level invariants; use
    :func:`validate_pair` to collect violations as data.
    """

    user_pose: PoseSequence
    expert_pose: PoseSequence
    user_emb: EmbeddingSequence
    expert_emb: EmbeddingSequence


@dataclass(frozen=True)
class Violation:
    """One pair-level invariant violation, machine-readable."""

    code: str
    side: str | None
    message: str

    def __str__(self) -> str:
        side = f"({self.side})" if self.side else ""
        return f"{self.code}{side}: {self.message}"


def validate_pair(pair: ClipPair) -> list[Violation]:
    """Return every pair-level invariant violation; empty when valid."""
    violations = []
    for side in ("user", "expert"):
        pose: PoseSequence = getattr(pair, f"{side}_pose")
        emb: EmbeddingSequence = getattr(pair, f"{side}_emb")
        if len(pose) != len(emb):
            violations.append(Violation(
                "LENGTH_MISMATCH", side,
                f"{len(pose)} pose frames vs {len(emb)} embedding frames"))
    if pair.user_emb.dim != pair.expert_emb.dim:
        violations.append(Violation(
            "DIM_MISMATCH", None,
            f"user dim {pair.user_emb.dim} vs expert dim {pair.expert_emb.dim}"))
    return violations


def _read_json(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedFile(f"{path}: top level must be a JSON object")
    return doc


def _write_json(doc: dict, path) -> None:
    try:
        Path(path).write_text(
            json.dumps(doc, allow_nan=False) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def load_pose_sequence(path) -> PoseSequence:
    """Load and validate a pose file.

    Joints may be listed in any order in the file; they are matched by
    name and reordered to schema order.
    """
    doc = _read_json(path)
    for key in ("fps", "joint_names", "frames"):
        if key not in doc:
            raise MalformedFile(f"{path}: missing key '{key}'")
    names = doc["joint_names"]
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise MalformedFile(f"{path}: joint_names must be a list of strings")
    missing = [n for n in JOINT_NAMES if n not in names]
    unknown = [n for n in names if n not in JOINT_INDEX]
    if missing or unknown or len(names) != JOINT_COUNT or len(set(names)) != len(names):
        parts = []
        if missing:
            parts.append(f"missing {missing}")
        if unknown:
            parts.append(f"unknown {unknown}")
        if len(set(names)) != len(names):
            parts.append("duplicate names")
        raise SchemaMismatch(f"{path}: joint names do not match schema: {'; '.join(parts) or len(names)}")
    order = [names.index(n) for n in JOINT_NAMES]

    frames = doc["frames"]
    if not isinstance(frames, list) or len(frames) < 2:
        raise MalformedFile(f"{path}: frames must be a list of at least 2 frames")
    try:
        joints = np.asarray(frames, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise MalformedFile(f"{path}: frames are not a uniform numeric array: {exc}") from exc
    if joints.ndim != 3 or joints.shape[1:] != (JOINT_COUNT, 3):
        raise MalformedFile(f"{path}: frames must be F x {JOINT_COUNT} x 3, got {joints.shape}")
    if not np.isfinite(joints).all():
        frame, joint = np.argwhere(~np.isfinite(joints).all(axis=2))[0]
        raise NonFiniteValue(f"{path}: non-finite coordinate at frame {frame}, joint index {joint}")
    joints = joints[:, order, :]

    club = doc.get("club")
    if club is not None:
        try:
            club = np.asarray(club, dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise MalformedFile(f"{path}: club is not a uniform numeric array: {exc}") from exc
        if club.shape != (joints.shape[0], 2, 3):
            raise MalformedFile(f"{path}: club must be F x 2 x 3, got {club.shape}")
        if not np.isfinite(club).all():
            raise NonFiniteValue(f"{path}: non-finite club coordinate")

    images = doc.get("frame_images")
    if images is not None:
        if not isinstance(images, list) or not all(isinstance(p, str) for p in images):
            raise MalformedFile(f"{path}: frame_images must be a list of strings")
        if len(images) != joints.shape[0]:
            raise MalformedFile(f"{path}: frame_images length {len(images)} != frame count {joints.shape[0]}")
        images = tuple(images)

    fps = doc["fps"]
    if not isinstance(fps, (int, float)) or isinstance(fps, bool) or not fps > 0:
        raise MalformedFile(f"{path}: fps must be a positive number")

    try:
        return PoseSequence(float(fps), joints, club, images)
    except InvalidParams as exc:
        raise MalformedFile(f"{path}: {exc}") from exc


def save_pose_sequence(seq: PoseSequence, path) -> None:
    """Write a pose file in schema joint order."""
    doc = {
        "fps": seq.fps,
        "joint_names": list(JOINT_NAMES),
        "frames": seq.joints.tolist(),
        "club": seq.club.tolist() if seq.club is not None else None,
        "frame_images": list(seq.frame_image_paths) if seq.frame_image_paths is not None else None,
    }
    _write_json(doc, path)


def load_embedding_sequence(path) -> EmbeddingSequence:
    """Load and validate an embedding file."""
    doc = _read_json(path)
    for key in ("dim", "frames"):
        if key not in doc:
            raise MalformedFile(f"{path}: missing key '{key}'")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim <= 0:
        raise MalformedFile(f"{path}: dim must be a positive integer")
    frames = doc["frames"]
    if not isinstance(frames, list) or len(frames) < 1:
        raise MalformedFile(f"{path}: frames must be a non-empty list")
    for i, row in enumerate(frames):
        if not isinstance(row, list):
            raise MalformedFile(f"{path}: frame {i} is not a list")
        if len(row) != dim:
            raise RaggedRows(f"{path}: frame {i} has length {len(row)}, expected dim {dim}")
    try:
        vectors = np.asarray(frames, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise MalformedFile(f"{path}: frames are not numeric: {exc}") from exc
    if not np.isfinite(vectors).all():
        frame = int(np.argwhere(~np.isfinite(vectors).all(axis=1))[0][0])
        raise NonFiniteValue(f"{path}: non-finite embedding entry at frame {frame}")
    return EmbeddingSequence(dim, vectors)


def save_embedding_sequence(seq: EmbeddingSequence, path) -> None:
    """Write an embedding file."""
    _write_json({"dim": seq.dim, "frames": seq.vectors.tolist()}, path)
