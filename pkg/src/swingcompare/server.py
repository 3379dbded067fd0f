"""HTTP service hosting one analysis session for the browser viewer.

The API is the single source of truth: every number the viewer shows is
fetched from here, and every served value equals what the library
computes directly on the same inputs. Threshold/min-gap changes re-run
only the discrepancy stage against the cached aligned-distance signal;
alignment and pose comparisons are never recomputed.

All failures return a machine-readable ``{code, message, context}``
object with 4xx/5xx semantics.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from .data import PoseSequence, load_pose_sequence
from .errors import SwingCompareError
from .pipeline import (
    AnalysisReport,
    SessionConfig,
    canonical_report_json,
    comparison_to_dict,
    load_inputs,
    read_report,
    recompute_discrepancy,
    report_to_dict,
    run_analysis,
)
from .skeleton import BODY_PART_GROUPS, BONES, JOINT_NAMES


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, context: dict | None = None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.context = context or {}


class Session:
    """One served analysis: an immutable report behind a recompute lock.

    Reads take a consistent snapshot; recomputes are serialized
    (last writer wins on threshold_k / min_gap).
    """

    def __init__(
        self,
        report: AnalysisReport,
        user_pose: PoseSequence | None = None,
        expert_pose: PoseSequence | None = None,
    ):
        self.report = report
        self.user_pose = user_pose
        self.expert_pose = expert_pose
        self._lock = threading.Lock()

    @classmethod
    def from_config(cls, cfg: SessionConfig) -> "Session":
        pair = load_inputs(cfg)
        report = run_analysis(cfg, pair)
        return cls(report, pair.user_pose, pair.expert_pose)

    @classmethod
    def from_report_file(cls, path) -> "Session":
        report = read_report(path)
        user_pose = expert_pose = None
        try:
            user_pose = load_pose_sequence(report.config.user_pose_path)
            expert_pose = load_pose_sequence(report.config.expert_pose_path)
        except SwingCompareError:
            user_pose = expert_pose = None  # viewer falls back to errors-only
        return cls(report, user_pose, expert_pose)

    def recompute(self, threshold_k=None, min_gap=None) -> AnalysisReport:
        with self._lock:
            self.report = recompute_discrepancy(self.report, threshold_k, min_gap)
            return self.report

    def frame_count(self) -> int:
        return len(self.report.comparisons)

    def max_joint_error(self) -> float:
        return max(float(c.per_joint_error.max()) for c in self.report.comparisons)


def _frame_payload(session: Session, i: int) -> dict:
    report = session.report
    if not (0 <= i < session.frame_count()):
        raise ApiError(404, "NOT_FOUND",
                       f"frame {i} outside session range",
                       {"frame": i, "frame_count": session.frame_count()})
    comparison = report.comparisons[i]
    j = int(comparison.expert_frame)
    payload = comparison_to_dict(comparison)
    payload["user_image"] = None
    payload["expert_image"] = None
    payload["user_joints"] = None
    payload["expert_joints_aligned"] = None
    if session.user_pose is not None and session.expert_pose is not None:
        if session.user_pose.frame_image_paths is not None:
            payload["user_image"] = session.user_pose.frame_image_paths[i]
        if session.expert_pose.frame_image_paths is not None:
            payload["expert_image"] = session.expert_pose.frame_image_paths[j]
        payload["user_joints"] = session.user_pose.joints[i].tolist()
        aligned = comparison.transform.apply(session.expert_pose.joints[j])
        payload["expert_joints_aligned"] = aligned.tolist()
    return payload


def create_app(session: Session, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="swingcompare", docs_url=None, redoc_url=None)

    @app.exception_handler(ApiError)
    async def api_error_handler(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": str(exc), "context": exc.context})

    @app.exception_handler(StarletteHTTPException)
    async def http_error_handler(request: Request, exc: StarletteHTTPException):
        return JSONResponse(
            status_code=exc.status_code,
            content={"code": "NOT_FOUND" if exc.status_code == 404 else "HTTP_ERROR",
                     "message": str(exc.detail),
                     "context": {"path": str(request.url.path)}})

    @app.exception_handler(RequestValidationError)
    async def validation_error_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "BAD_REQUEST", "message": "malformed request",
                     "context": {"errors": exc.errors()}})

    @app.get("/api/report")
    def get_report():
        return Response(content=canonical_report_json(session.report),
                        media_type="application/json")

    @app.get("/api/signal")
    def get_signal():
        report = session.report
        values = report.sync.aligned_distance.tolist()
        return {
            "frames": list(range(len(values))),
            "values": values,
            "threshold": float(report.threshold),
        }

    @app.get("/api/frame/{i}")
    def get_frame(i: int):
        return _frame_payload(session, i)

    @app.post("/api/recompute")
    async def recompute(request: Request):
        try:
            body = await request.json()
        except Exception:
            raise ApiError(400, "BAD_REQUEST", "body must be a JSON object", {})
        if not isinstance(body, dict):
            raise ApiError(400, "BAD_REQUEST", "body must be a JSON object", {})
        unknown = set(body) - {"threshold_k", "min_gap"}
        if unknown:
            raise ApiError(400, "BAD_REQUEST", "unknown recompute fields",
                           {"fields": sorted(unknown)})
        threshold_k = body.get("threshold_k")
        min_gap = body.get("min_gap")
        if threshold_k is not None and not isinstance(threshold_k, (int, float)):
            raise ApiError(400, "BAD_REQUEST", "threshold_k must be a number", {})
        if min_gap is not None and (not isinstance(min_gap, int) or min_gap < 0):
            raise ApiError(400, "BAD_REQUEST", "min_gap must be a non-negative integer", {})
        report = session.recompute(threshold_k, min_gap)
        return {
            "threshold": float(report.threshold),
            "discrepancy": {
                "threshold": float(report.discrepancy.threshold),
                "flagged_segments": [list(s) for s in report.discrepancy.flagged_segments],
                "key_frames": list(report.discrepancy.key_frames),
            },
        }

    @app.get("/api/meta")
    def get_meta():
        report = session.report
        return {
            "versions": dict(report.versions),
            "config": report_to_dict(report)["config"],
            "frame_count": session.frame_count(),
            "expert_frame_count": int(report.path.steps[-1][1]) + 1,
            "joint_names": list(JOINT_NAMES),
            "bones": [list(b) for b in BONES],
            "groups": {g: list(m) for g, m in BODY_PART_GROUPS.items()},
            "max_joint_error": session.max_joint_error(),
            "has_poses": session.user_pose is not None,
        }

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def default_static_dir() -> Path | None:
    """The built viewer: an installed copy next to the package, or a
    frontend build in the working directory."""
    candidates = (
        Path(__file__).resolve().parent / "ui_dist",
        Path.cwd() / "frontend" / "dist",
    )
    for candidate in candidates:
        if (candidate / "index.html").is_file():
            return candidate
    return None


def serve(session: Session, port: int, host: str = "127.0.0.1",
          static_dir: str | Path | None = None) -> None:
    import uvicorn

    app = create_app(session, static_dir if static_dir is not None else default_static_dir())
    uvicorn.run(app, host=host, port=port, log_level="warning")
