import { describe, expect, it } from "vitest";

import { buildOverlayScene, circleStyle, projectPoint } from "../src/overlay";
import { DEFAULT_CAMERA } from "../src/state";
import { framePayload, META } from "./fixtures";

const VIEWPORT = { width: 460, height: 360 };

describe("error circles", () => {
  it("zero error draws nothing", () => {
    expect(circleStyle(0, 0.5).radius).toBe(0);
  });

  it("radius grows monotonically with error", () => {
    const errors = [0.01, 0.05, 0.1, 0.2, 0.35, 0.5];
    const radii = errors.map((e) => circleStyle(e, 0.5).radius);
    for (let i = 1; i < radii.length; i++) {
      expect(radii[i]).toBeGreaterThan(radii[i - 1]);
    }
    const opacities = errors.map((e) => circleStyle(e, 0.5).opacity);
    for (let i = 1; i < opacities.length; i++) {
      expect(opacities[i]).toBeGreaterThan(opacities[i - 1]);
    }
  });

  it("the session-max error gets the full radius", () => {
    expect(circleStyle(0.5, 0.5, 20).radius).toBe(20);
    expect(circleStyle(0.7, 0.5, 20).radius).toBe(20); // capped
  });

  it("degenerate session max is safe", () => {
    expect(circleStyle(0.1, 0).radius).toBe(0);
  });
});

describe("projection", () => {
  it("the orbit target lands at the viewport center", () => {
    const p = projectPoint([1, 2, 3], DEFAULT_CAMERA, [1, 2, 3], VIEWPORT);
    expect(p.x).toBeCloseTo(VIEWPORT.width / 2, 6);
    expect(p.y).toBeCloseTo(VIEWPORT.height / 2, 6);
  });

  it("higher points render higher on screen (smaller y)", () => {
    const camera = { yaw: 0, pitch: 0, distance: 5 };
    const low = projectPoint([0, 0, 0], camera, [0, 0.5, 0], VIEWPORT);
    const high = projectPoint([0, 1, 0], camera, [0, 0.5, 0], VIEWPORT);
    expect(high.y).toBeLessThan(low.y);
  });

  it("yaw rotation moves points horizontally", () => {
    const before = projectPoint([1, 0, 0], { yaw: 0, pitch: 0, distance: 5 }, [0, 0, 0], VIEWPORT);
    const after = projectPoint([1, 0, 0], { yaw: 1.0, pitch: 0, distance: 5 }, [0, 0, 0], VIEWPORT);
    expect(Math.abs(after.x - before.x)).toBeGreaterThan(1);
  });
});

describe("overlay scene", () => {
  it("draws user and expert bone sets", () => {
    const scene = buildOverlayScene(framePayload(1), META, DEFAULT_CAMERA, VIEWPORT, null);
    expect(scene.hasSkeletons).toBe(true);
    const users = scene.segments.filter((s) => s.role === "user");
    const experts = scene.segments.filter((s) => s.role === "expert");
    expect(users).toHaveLength(META.bones.length);
    expect(experts).toHaveLength(META.bones.length);
  });

  it("zero-error frames render no circles", () => {
    const scene = buildOverlayScene(
      framePayload(0, true), META, DEFAULT_CAMERA, VIEWPORT, null);
    expect(scene.circles).toHaveLength(0);
  });

  it("only joints with error get circles, radii monotone in error", () => {
    const frame = framePayload(1);
    const scene = buildOverlayScene(frame, META, DEFAULT_CAMERA, VIEWPORT, null);
    const zeroErrors = frame.per_joint_error.filter((e) => e === 0).length;
    expect(scene.circles).toHaveLength(META.joint_names.length - zeroErrors);
    const byJoint = new Map(scene.circles.map((c) => [c.joint, c.radius]));
    META.joint_names.forEach((name, i) => {
      META.joint_names.forEach((other, j) => {
        if (byJoint.has(name) && byJoint.has(other)
            && frame.per_joint_error[i] > frame.per_joint_error[j]) {
          expect(byJoint.get(name)!).toBeGreaterThan(byJoint.get(other)!);
        }
      });
    });
  });

  it("selecting a group dims circles of non-member joints", () => {
    const scene = buildOverlayScene(framePayload(1), META, DEFAULT_CAMERA, VIEWPORT, "Wrist");
    const members = new Set(META.groups["Wrist"]);
    for (const circle of scene.circles) {
      expect(circle.dimmed).toBe(!members.has(circle.joint));
    }
    expect(scene.circles.some((c) => !c.dimmed)).toBe(true);
  });

  it("missing skeleton payloads fall back gracefully", () => {
    const frame = { ...framePayload(1), user_joints: null, expert_joints_aligned: null };
    const scene = buildOverlayScene(frame, META, DEFAULT_CAMERA, VIEWPORT, null);
    expect(scene.hasSkeletons).toBe(false);
    expect(scene.segments).toHaveLength(0);
    expect(scene.circles).toHaveLength(0);
  });
});
