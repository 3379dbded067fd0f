// A tiny fake session served through an injectable fetch. Shapes mirror
// the HTTP API exactly; values are small and hand-checkable.

import type { Discrepancy, FramePayload, MetaPayload, SignalPayload } from "../src/api";

export const JOINTS = [
  "pelvis", "r_hip", "r_knee", "r_ankle", "l_hip", "l_knee", "l_ankle",
  "spine", "thorax", "neck", "head",
  "l_shoulder", "l_elbow", "l_wrist", "r_shoulder", "r_elbow", "r_wrist",
];

const BONES: [string, string][] = [
  ["pelvis", "spine"], ["spine", "thorax"], ["thorax", "neck"], ["neck", "head"],
];

export const META: MetaPayload = {
  versions: { schema: "1", tool: "0.1.0" },
  config: { threshold_k: 1.0, min_gap: 3 },
  frame_count: 6,
  expert_frame_count: 6,
  joint_names: JOINTS,
  bones: BONES,
  groups: {
    Wrist: ["l_wrist", "r_wrist"],
    Head: ["head"],
    Foot: ["l_ankle", "r_ankle"],
  },
  max_joint_error: 0.5,
  has_poses: true,
};

export const SIGNAL: SignalPayload = {
  frames: [0, 1, 2, 3, 4, 5],
  values: [0.1, 0.2, 0.9, 0.3, 0.8, 0.1],
  threshold: 0.55,
};

export const DISCREPANCY: Discrepancy = {
  threshold: 0.55,
  flagged_segments: [[2, 2], [4, 4]],
  key_frames: [2, 4],
};

// expert_for_user for the fixture session: frame i matches expert i + 1 (capped)
export const EXPERT_FOR_USER = [1, 2, 3, 4, 5, 5];

function grid(offset: number): number[][] {
  return JOINTS.map((_, i) => [0.1 * i + offset, 1 + 0.05 * i, 0.02 * i]);
}

export function framePayload(i: number, zeroError = false): FramePayload {
  return {
    user_frame: i,
    expert_frame: EXPERT_FOR_USER[i],
    transform: {
      rotation: [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
      translation: [0, 0, 0],
      scale: 1,
    },
    per_joint_error: JOINTS.map((_, k) => (zeroError ? 0 : (k % 5) * 0.1)),
    per_group_error: { Wrist: 0.2, Head: 0.1, Foot: 0.05, WholeBody: 0.12 },
    mpjpe: zeroError ? 0 : 0.12,
    latent_distance: SIGNAL.values[i],
    user_image: `img/user/${i}.jpg`,
    expert_image: `img/expert/${EXPERT_FOR_USER[i]}.jpg`,
    user_joints: grid(0),
    expert_joints_aligned: grid(0.01),
  };
}

type Handler = (url: string, init?: RequestInit) => { status: number; body: unknown };

export function makeFakeFetch(overrides: Partial<Record<string, Handler>> = {}) {
  const calls: { url: string; init?: RequestInit }[] = [];
  const fetchFn = async (url: string, init?: RequestInit): Promise<Response> => {
    calls.push({ url, init });
    let result: { status: number; body: unknown };
    const frameMatch = url.match(/^\/api\/frame\/(\d+)$/);
    if (overrides[url]) {
      result = overrides[url]!(url, init);
    } else if (url === "/api/meta") {
      result = { status: 200, body: META };
    } else if (url === "/api/signal") {
      result = { status: 200, body: SIGNAL };
    } else if (frameMatch) {
      const i = Number(frameMatch[1]);
      result =
        i < META.frame_count
          ? { status: 200, body: framePayload(i) }
          : {
              status: 404,
              body: { code: "NOT_FOUND", message: `frame ${i} outside session range`, context: {} },
            };
    } else if (url === "/api/recompute") {
      const request = JSON.parse(String(init?.body ?? "{}"));
      // a fake but deterministic server rule: threshold = 0.5 + 0.1 * k
      const threshold = 0.5 + 0.1 * (request.threshold_k ?? 1.0);
      result = {
        status: 200,
        body: {
          threshold,
          discrepancy: {
            threshold,
            flagged_segments: SIGNAL.values.some((v) => v > threshold) ? [[2, 2]] : [],
            key_frames: SIGNAL.values.some((v) => v > threshold) ? [2] : [],
          },
        },
      };
    } else {
      result = { status: 404, body: { code: "NOT_FOUND", message: url, context: {} } };
    }
    return {
      ok: result.status < 400,
      status: result.status,
      json: async () => result.body,
    } as Response;
  };
  return { fetchFn, calls };
}
