// Typed client for the session API. The viewer computes no analysis
// values of its own; every number it draws comes through here.

export interface SignalPayload {
  frames: number[];
  values: number[];
  threshold: number;
}

export interface Discrepancy {
  threshold: number;
  flagged_segments: [number, number][];
  key_frames: number[];
}

export interface RecomputeResponse {
  threshold: number;
  discrepancy: Discrepancy;
}

export interface TransformPayload {
  rotation: number[][];
  translation: number[];
  scale: number;
}

export interface FramePayload {
  user_frame: number;
  expert_frame: number;
  transform: TransformPayload;
  per_joint_error: number[];
  per_group_error: Record<string, number>;
  mpjpe: number;
  latent_distance: number;
  user_image: string | null;
  expert_image: string | null;
  user_joints: number[][] | null;
  expert_joints_aligned: number[][] | null;
}

export interface MetaPayload {
  versions: Record<string, string>;
  config: Record<string, unknown>;
  frame_count: number;
  expert_frame_count: number;
  joint_names: string[];
  bones: [string, string][];
  groups: Record<string, string[]>;
  max_joint_error: number;
  has_poses: boolean;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  context: Record<string, unknown>;
}

export class ApiError extends Error {
  constructor(public status: number, public body: ApiErrorBody) {
    super(`${body.code}: ${body.message}`);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
    private base: string = "",
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body as ApiErrorBody);
    }
    return body as T;
  }

  meta(): Promise<MetaPayload> {
    return this.request("/api/meta");
  }

  signal(): Promise<SignalPayload> {
    return this.request("/api/signal");
  }

  frame(i: number): Promise<FramePayload> {
    return this.request(`/api/frame/${i}`);
  }

  recompute(body: { threshold_k?: number; min_gap?: number }): Promise<RecomputeResponse> {
    return this.request("/api/recompute", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }
}

// Serializes a stream of async requests: only the most recently started
// one may deliver. Each call bumps a sequence number; responses arriving
// for an older number resolve to undefined and must be ignored.
export class LatestOnly {
  private seq = 0;

  async run<T>(task: () => Promise<T>): Promise<T | undefined> {
    const ticket = ++this.seq;
    const result = await task();
    return ticket === this.seq ? result : undefined;
  }
}
