// The paired frame panel: user frame i next to the expert frame the
// sync map matched to it. Falls back to a skeleton-only notice when no
// image locators exist; both labels always update together.

import type { FramePayload } from "./api";

export interface FramePairView {
  userLabel: string;
  expertLabel: string;
  userImage: string | null;
  expertImage: string | null;
  showImages: boolean;
}

export function framePairView(frame: FramePayload): FramePairView {
  const showImages = frame.user_image !== null && frame.expert_image !== null;
  return {
    userLabel: `you: frame ${frame.user_frame}`,
    expertLabel: `expert: frame ${frame.expert_frame}`,
    userImage: showImages ? frame.user_image : null,
    expertImage: showImages ? frame.expert_image : null,
    showImages,
  };
}

export function renderFramePair(container: HTMLElement, view: FramePairView): void {
  const panels: [string, string | null][] = [
    [view.userLabel, view.userImage],
    [view.expertLabel, view.expertImage],
  ];
  container.innerHTML = "";
  for (const [label, image] of panels) {
    const panel = document.createElement("div");
    panel.className = "frame-panel";
    const caption = document.createElement("div");
    caption.className = "frame-caption";
    caption.textContent = label;
    panel.appendChild(caption);
    if (view.showImages && image) {
      const img = document.createElement("img");
      img.src = image;
      img.alt = label;
      panel.appendChild(img);
    } else {
      const placeholder = document.createElement("div");
      placeholder.className = "frame-placeholder";
      placeholder.textContent = "no frame image; see skeleton view";
      panel.appendChild(placeholder);
    }
    container.appendChild(panel);
  }
}
