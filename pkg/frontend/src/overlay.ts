// The 3D overlay: the user's skeleton in color, the server-transformed
// expert skeleton in black, and a red circle per joint whose radius and
// opacity grow monotonically with that joint's position error,
// normalized by the session's maximum joint error. The viewer does no
// Procrustes math; the expert joints arrive already aligned.

import type { FramePayload, MetaPayload } from "./api";
import type { Camera } from "./state";

export interface Projected {
  x: number;
  y: number;
  depth: number;
}

export interface Viewport {
  width: number;
  height: number;
}

// Orbit projection around a target point: yaw about +y, pitch above the
// horizon, mild perspective. Canvas y grows downward.
export function projectPoint(
  point: [number, number, number],
  camera: Camera,
  target: [number, number, number],
  viewport: Viewport,
): Projected {
  const [px, py, pz] = [point[0] - target[0], point[1] - target[1], point[2] - target[2]];
  const cy = Math.cos(camera.yaw);
  const sy = Math.sin(camera.yaw);
  const x1 = cy * px + sy * pz;
  const z1 = -sy * px + cy * pz;
  const cp = Math.cos(camera.pitch);
  const sp = Math.sin(camera.pitch);
  const y2 = cp * py - sp * z1;
  const z2 = sp * py + cp * z1;
  const depth = camera.distance - z2;
  const focal = 2.2;
  const scale = (Math.min(viewport.width, viewport.height) * focal) / (focal + Math.max(depth, 0.1));
  return {
    x: viewport.width / 2 + x1 * scale * 0.42,
    y: viewport.height / 2 - y2 * scale * 0.42,
    depth,
  };
}

export interface CircleStyle {
  radius: number;
  opacity: number;
}

// Monotone mapping from error to marker size: zero error draws nothing,
// the session-max error gets the full radius and opacity.
export function circleStyle(
  error: number,
  sessionMax: number,
  maxRadius = 20,
): CircleStyle {
  if (sessionMax <= 0 || error <= 0) {
    return { radius: 0, opacity: 0 };
  }
  const t = Math.min(error / sessionMax, 1);
  return { radius: maxRadius * t, opacity: 0.2 + 0.75 * t };
}

export interface SceneSegment {
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  role: "user" | "expert";
}

export interface SceneCircle {
  joint: string;
  x: number;
  y: number;
  radius: number;
  opacity: number;
  dimmed: boolean;
}

export interface OverlayScene {
  segments: SceneSegment[];
  circles: SceneCircle[];
  hasSkeletons: boolean;
}

function centroid(points: number[][]): [number, number, number] {
  const sum = [0, 0, 0];
  for (const p of points) {
    sum[0] += p[0];
    sum[1] += p[1];
    sum[2] += p[2];
  }
  return [sum[0] / points.length, sum[1] / points.length, sum[2] / points.length];
}

export function buildOverlayScene(
  frame: FramePayload,
  meta: MetaPayload,
  camera: Camera,
  viewport: Viewport,
  selectedGroup: string | null,
): OverlayScene {
  if (!frame.user_joints || !frame.expert_joints_aligned) {
    return { segments: [], circles: [], hasSkeletons: false };
  }
  const target = centroid(frame.user_joints);
  const jointIndex = new Map(meta.joint_names.map((name, i) => [name, i]));
  const project = (joints: number[][], name: string) => {
    const p = joints[jointIndex.get(name)!];
    return projectPoint([p[0], p[1], p[2]], camera, target, viewport);
  };

  const segments: SceneSegment[] = [];
  for (const [a, b] of meta.bones) {
    for (const role of ["expert", "user"] as const) {
      const joints = role === "user" ? frame.user_joints : frame.expert_joints_aligned;
      const pa = project(joints, a);
      const pb = project(joints, b);
      segments.push({ x1: pa.x, y1: pa.y, x2: pb.x, y2: pb.y, role });
    }
  }

  const members = selectedGroup ? new Set(meta.groups[selectedGroup] ?? []) : null;
  const circles: SceneCircle[] = [];
  meta.joint_names.forEach((name, i) => {
    const style = circleStyle(frame.per_joint_error[i], meta.max_joint_error);
    if (style.radius <= 0) {
      return;
    }
    const p = project(frame.user_joints!, name);
    circles.push({
      joint: name,
      x: p.x,
      y: p.y,
      radius: style.radius,
      opacity: style.opacity,
      dimmed: members !== null && !members.has(name),
    });
  });

  return { segments, circles, hasSkeletons: true };
}

export function renderOverlay(canvas: HTMLCanvasElement, scene: OverlayScene): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    return;
  }
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!scene.hasSkeletons) {
    ctx.fillStyle = "#777";
    ctx.font = "14px sans-serif";
    ctx.textAlign = "center";
    ctx.fillText("skeletons unavailable (pose files not found)",
                 canvas.width / 2, canvas.height / 2);
    return;
  }
  for (const circle of scene.circles) {
    ctx.beginPath();
    ctx.arc(circle.x, circle.y, circle.radius, 0, Math.PI * 2);
    ctx.fillStyle = `rgba(214, 40, 30, ${(circle.dimmed ? 0.12 : 1) * circle.opacity})`;
    ctx.fill();
  }
  for (const seg of scene.segments) {
    ctx.beginPath();
    ctx.moveTo(seg.x1, seg.y1);
    ctx.lineTo(seg.x2, seg.y2);
    if (seg.role === "user") {
      ctx.strokeStyle = "#1f77b4";
      ctx.lineWidth = 3;
    } else {
      ctx.strokeStyle = "#111";
      ctx.lineWidth = 2;
    }
    ctx.stroke();
  }
}
