// Viewer state and its transitions. All pure; the DOM layer applies them.

export interface Camera {
  yaw: number;    // radians around the vertical axis
  pitch: number;  // radians above the horizon, clamped
  distance: number;
}

export interface ViewState {
  currentUserFrame: number;
  thresholdK: number;
  minGap: number;
  camera: Camera;
  selectedGroup: string | null;
  frameCount: number;
}

export const DEFAULT_CAMERA: Camera = { yaw: 0.5, pitch: 0.25, distance: 4.5 };

export function createViewState(
  frameCount: number,
  thresholdK: number,
  minGap: number,
): ViewState {
  return {
    currentUserFrame: 0,
    thresholdK,
    minGap,
    camera: { ...DEFAULT_CAMERA },
    selectedGroup: null,
    frameCount,
  };
}

export function scrubTo(state: ViewState, frame: number): ViewState {
  const clamped = Math.min(Math.max(Math.round(frame), 0), state.frameCount - 1);
  return { ...state, currentUserFrame: clamped };
}

export function selectGroup(state: ViewState, group: string | null): ViewState {
  return { ...state, selectedGroup: group };
}

export function setThresholdK(state: ViewState, k: number): ViewState {
  return { ...state, thresholdK: k };
}

export function setMinGap(state: ViewState, minGap: number): ViewState {
  return { ...state, minGap: Math.max(0, Math.round(minGap)) };
}

const PITCH_LIMIT = Math.PI / 2 - 0.05;

export function orbit(state: ViewState, dYaw: number, dPitch: number): ViewState {
  const pitch = Math.min(Math.max(state.camera.pitch + dPitch, -PITCH_LIMIT), PITCH_LIMIT);
  return { ...state, camera: { ...state.camera, yaw: state.camera.yaw + dYaw, pitch } };
}

export function zoom(state: ViewState, factor: number): ViewState {
  const distance = Math.min(Math.max(state.camera.distance * factor, 1.0), 20.0);
  return { ...state, camera: { ...state.camera, distance } };
}
