// Wires the viewer together: fetch session data, render the signal
// chart / frame pair / 3D overlay, and keep every displayed number
// sourced from the API. Threshold and min-gap edits trigger a
// server-side recompute; stale responses are discarded by sequence.

import { ApiClient, LatestOnly } from "./api";
import type { Discrepancy, FramePayload, MetaPayload, SignalPayload } from "./api";
import { framePairView, renderFramePair } from "./frames";
import { buildOverlayScene, renderOverlay } from "./overlay";
import { computeSignalGeometry, renderSignal } from "./signal";
import {
  createViewState,
  orbit,
  scrubTo,
  selectGroup,
  setMinGap,
  setThresholdK,
  zoom,
  type ViewState,
} from "./state";

interface SessionData {
  meta: MetaPayload;
  signal: SignalPayload;
  threshold: number;
  discrepancy: Discrepancy;
  frame: FramePayload | null;
}

const api = new ApiClient();
const recomputeQueue = new LatestOnly();
const frameQueue = new LatestOnly();

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

async function start(): Promise<void> {
  const meta = await api.meta();
  const signal = await api.signal();
  const report = await (await fetch("/api/report")).json();
  const data: SessionData = {
    meta,
    signal,
    threshold: signal.threshold,
    discrepancy: report.discrepancy as Discrepancy,
    frame: null,
  };
  let state: ViewState = createViewState(
    meta.frame_count,
    Number(meta.config["threshold_k"]),
    Number(meta.config["min_gap"]),
  );

  const svg = byId<HTMLElement>("signal") as unknown as SVGSVGElement;
  const canvas = byId<HTMLCanvasElement>("overlay");
  const pairBox = byId<HTMLDivElement>("frame-pair");
  const kSlider = byId<HTMLInputElement>("k-slider");
  const kValue = byId<HTMLSpanElement>("k-value");
  const thresholdValue = byId<HTMLSpanElement>("threshold-value");
  const gapInput = byId<HTMLInputElement>("gap-input");
  const groupSelect = byId<HTMLSelectElement>("group-select");
  const frameStats = byId<HTMLDivElement>("frame-stats");

  kSlider.value = String(state.thresholdK);
  gapInput.value = String(state.minGap);
  for (const group of ["", ...Object.keys(meta.groups)]) {
    const option = document.createElement("option");
    option.value = group;
    option.textContent = group === "" ? "all parts" : group;
    groupSelect.appendChild(option);
  }

  function drawSignal(): void {
    const geometry = computeSignalGeometry(
      data.signal.values,
      data.threshold,
      data.discrepancy.flagged_segments,
      data.discrepancy.key_frames,
      state.currentUserFrame,
    );
    renderSignal(svg, geometry, (frame) => void setFrame(frame));
    kValue.textContent = state.thresholdK.toFixed(2);
    thresholdValue.textContent = data.threshold.toPrecision(5);
  }

  function drawOverlay(): void {
    if (!data.frame) {
      return;
    }
    const scene = buildOverlayScene(
      data.frame, data.meta, state.camera,
      { width: canvas.width, height: canvas.height },
      state.selectedGroup,
    );
    renderOverlay(canvas, scene);
  }

  function drawFrame(): void {
    if (!data.frame) {
      return;
    }
    renderFramePair(pairBox, framePairView(data.frame));
    frameStats.textContent =
      `MPJPE ${data.frame.mpjpe.toPrecision(4)} | ` +
      `latent distance ${data.frame.latent_distance.toPrecision(4)}`;
    drawOverlay();
  }

  async function setFrame(frame: number): Promise<void> {
    state = scrubTo(state, frame);
    drawSignal();
    const payload = await frameQueue.run(() => api.frame(state.currentUserFrame));
    if (payload !== undefined) {
      data.frame = payload;
      drawFrame();
    }
  }

  async function recompute(): Promise<void> {
    const body = { threshold_k: state.thresholdK, min_gap: state.minGap };
    const response = await recomputeQueue.run(() => api.recompute(body));
    if (response !== undefined) {
      data.threshold = response.threshold;
      data.discrepancy = response.discrepancy;
      drawSignal(); // alignment, comparisons, and the overlay stay as-is
    }
  }

  kSlider.addEventListener("input", () => {
    state = setThresholdK(state, Number(kSlider.value));
    void recompute();
  });
  gapInput.addEventListener("change", () => {
    state = setMinGap(state, Number(gapInput.value));
    void recompute();
  });
  groupSelect.addEventListener("change", () => {
    state = selectGroup(state, groupSelect.value === "" ? null : groupSelect.value);
    drawOverlay();
  });

  let dragging = false;
  let lastX = 0;
  let lastY = 0;
  canvas.addEventListener("pointerdown", (event) => {
    dragging = true;
    lastX = event.clientX;
    lastY = event.clientY;
    canvas.setPointerCapture(event.pointerId);
  });
  canvas.addEventListener("pointermove", (event) => {
    if (!dragging) {
      return;
    }
    state = orbit(state, (event.clientX - lastX) * 0.01, (event.clientY - lastY) * 0.01);
    lastX = event.clientX;
    lastY = event.clientY;
    drawOverlay();
  });
  canvas.addEventListener("pointerup", () => {
    dragging = false;
  });
  canvas.addEventListener("wheel", (event) => {
    event.preventDefault();
    state = zoom(state, event.deltaY > 0 ? 1.1 : 0.9);
    drawOverlay();
  });
  window.addEventListener("keydown", (event) => {
    if (event.key === "ArrowRight") {
      void setFrame(state.currentUserFrame + 1);
    } else if (event.key === "ArrowLeft") {
      void setFrame(state.currentUserFrame - 1);
    }
  });

  drawSignal();
  await setFrame(0);
}

start().catch((error) => {
  const banner = document.getElementById("error-banner");
  if (banner) {
    banner.textContent = `failed to load session: ${error}`;
    banner.style.display = "block";
  }
});
