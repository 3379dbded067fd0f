"""Command-line interface.

Subcommands:
  analyze  run the full pipeline on pose (and optional embedding) files
  synth    generate a synthetic session (poses, embeddings, ground truth)
  serve    host a session for the browser viewer
  report   dump a report as JSON or flat CSV

Exit codes: 0 success, 2 validation failure, 3 I/O failure, 4 internal
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import traceback
from dataclasses import replace
from pathlib import Path

from .data import save_embedding_sequence, save_pose_sequence
from .errors import InvalidParams, IoFailure, SwingCompareError
from .pipeline import (
    AnalysisReport,
    SessionConfig,
    canonical_report_json,
    load_config,
    read_report,
    run_analysis,
    write_report,
)
from .skeleton import LOWER_BODY_GROUPS, UPPER_BODY_GROUPS
from .synth import SwingParams, WarpSpec, apply_warp, coupled_embedding, generate_swing

# Synthetic-session presets: an expert clip, a learner clip derived from
# different amplitudes/noise and a timing warp, and coupled embeddings
# weighted toward the upper body.
SYNTH_PRESETS: dict[str, dict] = {
    "default": {
        "expert": dict(noise_std=0.008),
        "user": dict(noise_std=0.012, upper_body_amplitude=1.15, lower_body_amplitude=0.85),
        "warp": "0:0,0.45:0.35,0.75:0.8,1:1",
        "emb_noise": 0.02,
    },
    "clean": {
        "expert": dict(noise_std=0.0),
        "user": dict(noise_std=0.0),
        "warp": "identity",
        "emb_noise": 0.0,
    },
    "timing": {
        "expert": dict(noise_std=0.004),
        "user": dict(noise_std=0.004),
        "warp": "0:0,0.3:0.55,0.6:0.75,1:1",
        "emb_noise": 0.01,
    },
}


def parse_warp(spec: str) -> WarpSpec:
    """Parse ``s:t,s:t,...`` control points; ``identity`` for no warp."""
    if spec == "identity":
        return WarpSpec()
    points = []
    try:
        for chunk in spec.split(","):
            s, t = chunk.split(":")
            points.append((float(s), float(t)))
    except ValueError as exc:
        raise InvalidParams(f"cannot parse warp spec {spec!r}: {exc}") from exc
    return WarpSpec(tuple(points))


def cmd_analyze(args) -> int:
    if (args.user_emb is None) != (args.expert_emb is None):
        raise InvalidParams("--user-emb and --expert-emb must be given together")
    cfg = SessionConfig(
        user_pose_path=args.user_pose,
        expert_pose_path=args.expert_pose,
        user_emb_path=args.user_emb,
        expert_emb_path=args.expert_emb,
        step_penalty=args.penalty,
        threshold_k=args.k,
        min_gap=args.min_gap,
        with_scale=not args.no_scale,
    )
    report = run_analysis(cfg)
    write_report(report, args.out)
    n_frames = len(report.comparisons)
    n_key = len(report.discrepancy.key_frames)
    print(f"analyzed {n_frames} frames: total cost {report.path.total_cost:.6g}, "
          f"threshold {report.threshold:.6g}, {n_key} key frame(s) -> {args.out}")
    return 0


def cmd_synth(args) -> int:
    if args.preset not in SYNTH_PRESETS:
        raise InvalidParams(f"unknown preset {args.preset!r}; "
                            f"choose from {sorted(SYNTH_PRESETS)}")
    preset = SYNTH_PRESETS[args.preset]
    warp = parse_warp(args.warp if args.warp is not None else preset["warp"])
    expert_params = SwingParams(seed=args.seed, **preset["expert"])
    user_params = SwingParams(seed=args.seed + 1, **preset["user"])

    expert = generate_swing(expert_params)
    user_base = generate_swing(user_params)
    user, truth = apply_warp(user_base, warp, out_len=len(user_base))

    weights = {g: 1.0 for g in UPPER_BODY_GROUPS}
    weights.update({g: 0.3 for g in LOWER_BODY_GROUPS})
    emb_noise = preset["emb_noise"]
    user_emb = coupled_embedding(user, weights, emb_noise, seed=args.seed + 2)
    expert_emb = coupled_embedding(expert, weights, emb_noise, seed=args.seed + 3)

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    save_pose_sequence(user, out / "user_pose.json")
    save_pose_sequence(expert, out / "expert_pose.json")
    save_embedding_sequence(user_emb, out / "user_emb.json")
    save_embedding_sequence(expert_emb, out / "expert_emb.json")
    try:
        (out / "truth.json").write_text(json.dumps({
            "preset": args.preset,
            "seed": args.seed,
            "warp": [list(p) for p in warp.control_points],
            "true_expert_for_user": truth.tolist(),
            "group_weights": weights,
        }, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot write {out / 'truth.json'}: {exc}") from exc
    print(f"wrote synthetic session ({len(user)} user / {len(expert)} expert frames) to {out}")
    return 0


def cmd_serve(args) -> int:
    from .server import Session, serve

    if (args.report is None) == (args.config is None):
        raise InvalidParams("give exactly one of --report or --config")
    if args.report is not None:
        session = Session.from_report_file(args.report)
    else:
        session = Session.from_config(load_config(args.config))
    print(f"serving {session.frame_count()} frames on http://{args.host}:{args.port}")
    serve(session, port=args.port, host=args.host, static_dir=args.static_dir)
    return 0


def _report_csv(report: AnalysisReport, out) -> None:
    writer = csv.writer(out)
    writer.writerow(["record", "table", "group", "frame", "expert_frame", "value"])
    for name, table in (("all", report.correlations_all),
                        ("keyframes", report.correlations_keyframes)):
        writer.writerow(["samples", name, "", "", "", table.sample_count])
        for group in sorted(table.entries):
            value = table.entries[group]
            writer.writerow(["correlation", name, group, "", "",
                             "" if value is None else repr(value)])
    writer.writerow(["threshold", "", "", "", "", repr(float(report.threshold))])
    expert_for_user = report.sync.expert_for_user
    for i, value in enumerate(report.sync.aligned_distance):
        writer.writerow(["signal", "", "", i, int(expert_for_user[i]), repr(float(value))])


def cmd_report(args) -> int:
    report = read_report(getattr(args, "in"))
    if args.format == "json":
        sys.stdout.write(canonical_report_json(report) + "\n")
    else:
        _report_csv(report, sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swingcompare",
                                     description="Compare two motion clips.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the pipeline and write a report")
    p.add_argument("--user-pose", required=True, help="learner pose file")
    p.add_argument("--expert-pose", required=True, help="expert pose file")
    p.add_argument("--user-emb", help="learner embedding file (else proxy embedder)")
    p.add_argument("--expert-emb", help="expert embedding file")
    p.add_argument("--penalty", type=float, default=0.0,
                   help="additive DTW penalty for non-diagonal steps")
    p.add_argument("--k", type=float, default=1.0,
                   help="threshold = mean + k * std of the distance signal")
    p.add_argument("--min-gap", type=int, default=3,
                   help="merge flagged segments separated by fewer quiet frames")
    p.add_argument("--no-scale", action="store_true",
                   help="rigid Procrustes (no uniform scale)")
    p.add_argument("--out", required=True, help="report output path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synth", help="generate a synthetic session")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--preset", default="default",
                   help=f"one of {sorted(SYNTH_PRESETS)}")
    p.add_argument("--warp", help="s:t,s:t,... control points or 'identity'")
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("serve", help="host a session over HTTP")
    p.add_argument("--report", help="serve an existing report file")
    p.add_argument("--config", help="run a session config, then serve it")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static-dir", help="override the built viewer directory")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("report", help="dump a report as json or csv")
    p.add_argument("--in", required=True, help="report file")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except IoFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SwingCompareError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except KeyboardInterrupt:
        return 130
    except Exception:
        traceback.print_exc()
        return 4


if __name__ == "__main__":
    sys.exit(main())
