"""End-to-end session analysis and the canonical report format.

The pipeline is: load -> embed (or take embeddings from files) ->
distance matrix -> DTW -> sync map -> adaptive threshold -> discrepancy
segments -> per-frame Procrustes comparison -> correlation tables. It
is fully deterministic for fixed inputs and config, and the report
serializer is canonical (sorted keys, shortest round-trip numerals), so
equal sessions produce byte-identical report files.
"""

from __future__ import annotations

import json
from contextlib import contextmanager
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import __version__
from .alignment import AlignmentPath, SyncMap, dtw_align, sync_map
from .compare import FrameComparison, SimilarityTransform, compare_frames
from .data import (
    ClipPair,
    load_embedding_sequence,
    load_pose_sequence,
    validate_pair,
)
from .discrepancy import DiscrepancyResult, adaptive_threshold, detect_discrepant_frames
from .embedding import distance_matrix, proxy_embed
from .errors import (
    InvalidPair,
    InvalidParams,
    IoFailure,
    MalformedFile,
    SchemaVersionMismatch,
    SwingCompareError,
)
from .stats import CorrelationTable, correlation_table, undefined_table

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class SessionConfig:
    """Inputs and knobs for one analysis session.

    Embedding paths are optional as a pair: when absent, the proxy
    embedder runs on the pose files, so the tool works with poses alone.
    """

    user_pose_path: str
    expert_pose_path: str
    user_emb_path: str | None = None
    expert_emb_path: str | None = None
    step_penalty: float = 0.0
    threshold_k: float = 1.0
    min_gap: int = 3
    with_scale: bool = True
    include_club_in_proxy: bool = True

    def __post_init__(self):
        if (self.user_emb_path is None) != (self.expert_emb_path is None):
            raise InvalidParams("embedding paths must be both present or both absent")
        if self.step_penalty < 0:
            raise InvalidParams("step_penalty must be non-negative")
        if self.min_gap < 0:
            raise InvalidParams("min_gap must be non-negative")


@dataclass(frozen=True)
class AnalysisReport:
    """Everything a reviewer needs from one session."""

    config: SessionConfig
    path: AlignmentPath
    sync: SyncMap
    threshold: float
    discrepancy: DiscrepancyResult
    comparisons: tuple[FrameComparison, ...]
    correlations_all: CorrelationTable
    correlations_keyframes: CorrelationTable
    versions: dict[str, str]


@contextmanager
def _stage(name: str):
    """Prefix pipeline errors with the stage that produced them."""
    try:
        yield
    except InvalidPair:
        raise
    except SwingCompareError as exc:
        raise type(exc)(f"[{name}] {exc}") from exc


def load_inputs(cfg: SessionConfig) -> ClipPair:
    """Load poses and embeddings (or proxy-embed) and validate the pair."""
    with _stage("load user pose"):
        user_pose = load_pose_sequence(cfg.user_pose_path)
    with _stage("load expert pose"):
        expert_pose = load_pose_sequence(cfg.expert_pose_path)
    if cfg.user_emb_path is not None:
        with _stage("load user embedding"):
            user_emb = load_embedding_sequence(cfg.user_emb_path)
        with _stage("load expert embedding"):
            expert_emb = load_embedding_sequence(cfg.expert_emb_path)
    else:
        with _stage("proxy embedding"):
            user_emb = proxy_embed(user_pose, include_club=cfg.include_club_in_proxy)
            expert_emb = proxy_embed(expert_pose, include_club=cfg.include_club_in_proxy)
    pair = ClipPair(user_pose, expert_pose, user_emb, expert_emb)
    violations = validate_pair(pair)
    if violations:
        raise InvalidPair(violations)
    return pair


def run_analysis(cfg: SessionConfig, pair: ClipPair | None = None) -> AnalysisReport:
    """Run the full pipeline for one session."""
    if pair is None:
        pair = load_inputs(cfg)
    with _stage("distance matrix"):
        d = distance_matrix(pair.user_emb, pair.expert_emb)
    with _stage("alignment"):
        path = dtw_align(d, cfg.step_penalty)
        sync = sync_map(path, d)
    with _stage("discrepancy"):
        threshold = adaptive_threshold(sync.aligned_distance, cfg.threshold_k)
        disc = detect_discrepant_frames(sync.aligned_distance, threshold, cfg.min_gap)
    with _stage("pose comparison"):
        comparisons = tuple(
            compare_frames(
                pair.user_pose.frame(i),
                pair.expert_pose.frame(int(j)),
                latent_distance=float(sync.aligned_distance[i]),
                with_scale=cfg.with_scale,
                user_frame=i,
                expert_frame=int(j),
            )
            for i, j in enumerate(sync.expert_for_user)
        )
    with _stage("correlation"):
        correlations_all = correlation_table(comparisons)
        key_comparisons = [comparisons[i] for i in disc.key_frames]
        if len(key_comparisons) >= 2:
            correlations_keyframes = correlation_table(key_comparisons)
        else:
            correlations_keyframes = undefined_table(len(key_comparisons))
    return AnalysisReport(
        config=cfg,
        path=path,
        sync=sync,
        threshold=threshold,
        discrepancy=disc,
        comparisons=comparisons,
        correlations_all=correlations_all,
        correlations_keyframes=correlations_keyframes,
        versions={"schema": SCHEMA_VERSION, "tool": __version__},
    )


# ---- serialization ----

def _config_to_dict(cfg: SessionConfig) -> dict:
    return {
        "user_pose_path": cfg.user_pose_path,
        "expert_pose_path": cfg.expert_pose_path,
        "user_emb_path": cfg.user_emb_path,
        "expert_emb_path": cfg.expert_emb_path,
        "step_penalty": float(cfg.step_penalty),
        "threshold_k": float(cfg.threshold_k),
        "min_gap": int(cfg.min_gap),
        "with_scale": bool(cfg.with_scale),
        "include_club_in_proxy": bool(cfg.include_club_in_proxy),
    }


def config_from_dict(doc: dict) -> SessionConfig:
    try:
        return SessionConfig(
            user_pose_path=doc["user_pose_path"],
            expert_pose_path=doc["expert_pose_path"],
            user_emb_path=doc.get("user_emb_path"),
            expert_emb_path=doc.get("expert_emb_path"),
            step_penalty=float(doc.get("step_penalty", 0.0)),
            threshold_k=float(doc.get("threshold_k", 1.0)),
            min_gap=int(doc.get("min_gap", 3)),
            with_scale=bool(doc.get("with_scale", True)),
            include_club_in_proxy=bool(doc.get("include_club_in_proxy", True)),
        )
    except KeyError as exc:
        raise MalformedFile(f"session config is missing {exc}") from exc


def load_config(path) -> SessionConfig:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedFile(f"{path}: config must be a JSON object")
    return config_from_dict(doc)


def _transform_to_dict(t: SimilarityTransform) -> dict:
    return {
        "rotation": t.rotation.tolist(),
        "translation": t.translation.tolist(),
        "scale": float(t.scale),
    }


def comparison_to_dict(c: FrameComparison) -> dict:
    return {
        "user_frame": int(c.user_frame),
        "expert_frame": int(c.expert_frame),
        "transform": _transform_to_dict(c.transform),
        "per_joint_error": c.per_joint_error.tolist(),
        "per_group_error": {g: float(v) for g, v in c.per_group_error.items()},
        "mpjpe": float(c.mpjpe),
        "latent_distance": float(c.latent_distance),
    }


def _table_to_dict(t: CorrelationTable) -> dict:
    return {
        "entries": {g: (None if v is None else float(v)) for g, v in t.entries.items()},
        "sample_count": int(t.sample_count),
    }


def report_to_dict(r: AnalysisReport) -> dict:
    return {
        "versions": dict(r.versions),
        "config": _config_to_dict(r.config),
        "path": {
            "steps": [[int(i), int(j)] for i, j in r.path.steps],
            "total_cost": float(r.path.total_cost),
        },
        "sync": {
            "expert_for_user": r.sync.expert_for_user.tolist(),
            "aligned_distance": r.sync.aligned_distance.tolist(),
        },
        "threshold": float(r.threshold),
        "discrepancy": {
            "threshold": float(r.discrepancy.threshold),
            "flagged_segments": [[int(s), int(e)] for s, e in r.discrepancy.flagged_segments],
            "key_frames": [int(k) for k in r.discrepancy.key_frames],
        },
        "comparisons": [comparison_to_dict(c) for c in r.comparisons],
        "correlations_all": _table_to_dict(r.correlations_all),
        "correlations_keyframes": _table_to_dict(r.correlations_keyframes),
    }


def report_from_dict(doc: dict) -> AnalysisReport:
    versions = doc.get("versions", {})
    if versions.get("schema") != SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"report schema {versions.get('schema')!r} is not supported "
            f"(expected {SCHEMA_VERSION!r})")
    try:
        comparisons = tuple(
            FrameComparison(
                user_frame=c["user_frame"],
                expert_frame=c["expert_frame"],
                transform=SimilarityTransform(
                    rotation=np.asarray(c["transform"]["rotation"], dtype=np.float64),
                    translation=np.asarray(c["transform"]["translation"], dtype=np.float64),
                    scale=float(c["transform"]["scale"]),
                ),
                per_joint_error=np.asarray(c["per_joint_error"], dtype=np.float64),
                per_group_error={g: float(v) for g, v in c["per_group_error"].items()},
                mpjpe=float(c["mpjpe"]),
                latent_distance=float(c["latent_distance"]),
            )
            for c in doc["comparisons"]
        )
        return AnalysisReport(
            config=config_from_dict(doc["config"]),
            path=AlignmentPath(
                steps=tuple((int(i), int(j)) for i, j in doc["path"]["steps"]),
                total_cost=float(doc["path"]["total_cost"]),
            ),
            sync=SyncMap(
                expert_for_user=np.asarray(doc["sync"]["expert_for_user"], dtype=np.int64),
                aligned_distance=np.asarray(doc["sync"]["aligned_distance"], dtype=np.float64),
            ),
            threshold=float(doc["threshold"]),
            discrepancy=DiscrepancyResult(
                threshold=float(doc["discrepancy"]["threshold"]),
                flagged_segments=tuple(
                    (int(s), int(e)) for s, e in doc["discrepancy"]["flagged_segments"]),
                key_frames=tuple(int(k) for k in doc["discrepancy"]["key_frames"]),
            ),
            comparisons=comparisons,
            correlations_all=CorrelationTable(
                entries=dict(doc["correlations_all"]["entries"]),
                sample_count=int(doc["correlations_all"]["sample_count"]),
            ),
            correlations_keyframes=CorrelationTable(
                entries=dict(doc["correlations_keyframes"]["entries"]),
                sample_count=int(doc["correlations_keyframes"]["sample_count"]),
            ),
            versions={k: str(v) for k, v in versions.items()},
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedFile(f"report is structurally invalid: {exc!r}") from exc


def canonical_report_json(r: AnalysisReport) -> str:
    """Canonical serialization: sorted keys, compact separators, shortest
    round-trip float representation."""
    return json.dumps(report_to_dict(r), sort_keys=True,
                      separators=(",", ":"), allow_nan=False, ensure_ascii=False)


def write_report(r: AnalysisReport, path) -> None:
    try:
        Path(path).write_text(canonical_report_json(r) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def read_report(path) -> AnalysisReport:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedFile(f"{path}: report must be a JSON object")
    return report_from_dict(doc)


def recompute_discrepancy(
    report: AnalysisReport,
    threshold_k: float | None = None,
    min_gap: int | None = None,
) -> AnalysisReport:
    """Re-run only the discrepancy stage on a finished report.

    Alignment, sync, and comparisons are untouched; the config echo
    picks up the new knobs so the report invariants keep holding.
    """
    cfg = report.config
    k = cfg.threshold_k if threshold_k is None else float(threshold_k)
    gap = cfg.min_gap if min_gap is None else int(min_gap)
    signal = report.sync.aligned_distance
    threshold = adaptive_threshold(signal, k)
    disc = detect_discrepant_frames(signal, threshold, gap)
    return replace(
        report,
        config=replace(cfg, threshold_k=k, min_gap=gap),
        threshold=threshold,
        discrepancy=disc,
    )
