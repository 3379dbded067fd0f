// Geometry for the aligned-distance chart: the polyline, the threshold
// line, shaded flagged segments, and clickable key-frame marks. The
// threshold value is carried through untouched so the drawn line always
// reflects exactly what the server returned.

export interface ChartLayout {
  width: number;
  height: number;
  marginLeft: number;
  marginRight: number;
  marginTop: number;
  marginBottom: number;
}

export const DEFAULT_LAYOUT: ChartLayout = {
  width: 900,
  height: 220,
  marginLeft: 46,
  marginRight: 12,
  marginTop: 10,
  marginBottom: 24,
};

export interface Rect {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface KeyMark {
  frame: number;
  x: number;
  y: number;
}

export interface SignalGeometry {
  threshold: number;       // raw server value, for equality checks
  thresholdY: number;
  linePoints: string;      // SVG polyline "x,y x,y ..."
  segmentRects: Rect[];
  keyMarks: KeyMark[];
  cursorX: number;
  plot: Rect;
  yMax: number;
  xForFrame(frame: number): number;
  frameForX(x: number): number;
}

export function computeSignalGeometry(
  values: number[],
  threshold: number,
  segments: [number, number][],
  keyFrames: number[],
  currentFrame: number,
  layout: ChartLayout = DEFAULT_LAYOUT,
): SignalGeometry {
  const plot: Rect = {
    x: layout.marginLeft,
    y: layout.marginTop,
    width: layout.width - layout.marginLeft - layout.marginRight,
    height: layout.height - layout.marginTop - layout.marginBottom,
  };
  const n = values.length;
  const top = Math.max(...values, threshold, 0);
  const yMax = top > 0 ? top * 1.05 : 1.0;

  const xForFrame = (frame: number) =>
    plot.x + (n <= 1 ? 0 : (frame / (n - 1)) * plot.width);
  const yForValue = (value: number) =>
    plot.y + plot.height * (1 - value / yMax);
  const frameForX = (x: number) => {
    const raw = ((x - plot.x) / plot.width) * (n - 1);
    return Math.min(Math.max(Math.round(raw), 0), n - 1);
  };

  const linePoints = values
    .map((v, i) => `${xForFrame(i).toFixed(2)},${yForValue(v).toFixed(2)}`)
    .join(" ");

  const half = n <= 1 ? plot.width / 2 : plot.width / (n - 1) / 2;
  const segmentRects = segments.map(([start, end]) => {
    const x0 = Math.max(plot.x, xForFrame(start) - half);
    const x1 = Math.min(plot.x + plot.width, xForFrame(end) + half);
    return { x: x0, y: plot.y, width: x1 - x0, height: plot.height };
  });

  const keyMarks = keyFrames.map((frame) => ({
    frame,
    x: xForFrame(frame),
    y: yForValue(values[frame]),
  }));

  return {
    threshold,
    thresholdY: yForValue(threshold),
    linePoints,
    segmentRects,
    keyMarks,
    cursorX: xForFrame(currentFrame),
    plot,
    yMax,
    xForFrame,
    frameForX,
  };
}

const SVG_NS = "http://www.w3.org/2000/svg";

function el(name: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

export function renderSignal(
  svg: SVGSVGElement,
  geometry: SignalGeometry,
  onScrub: (frame: number) => void,
): void {
  svg.innerHTML = "";
  svg.setAttribute("viewBox", `0 0 ${geometry.plot.x + geometry.plot.width + 12} ${geometry.plot.y + geometry.plot.height + 24}`);

  const { plot } = geometry;
  svg.appendChild(el("rect", {
    x: plot.x, y: plot.y, width: plot.width, height: plot.height,
    fill: "#fafafa", stroke: "#ccc", "stroke-width": 1,
  }));

  for (const rect of geometry.segmentRects) {
    svg.appendChild(el("rect", {
      x: rect.x, y: rect.y, width: rect.width, height: rect.height,
      fill: "rgba(220, 60, 50, 0.14)", class: "segment",
    }));
  }

  if (geometry.linePoints) {
    svg.appendChild(el("polyline", {
      points: geometry.linePoints, fill: "none",
      stroke: "#2a6fb0", "stroke-width": 1.6, class: "signal-line",
    }));
  }

  svg.appendChild(el("line", {
    x1: plot.x, x2: plot.x + plot.width,
    y1: geometry.thresholdY, y2: geometry.thresholdY,
    stroke: "#d03028", "stroke-width": 1.4, "stroke-dasharray": "6 3",
    class: "threshold-line",
  }));

  svg.appendChild(el("line", {
    x1: geometry.cursorX, x2: geometry.cursorX,
    y1: plot.y, y2: plot.y + plot.height,
    stroke: "#444", "stroke-width": 1, class: "cursor",
  }));

  for (const mark of geometry.keyMarks) {
    const dot = el("circle", {
      cx: mark.x, cy: mark.y, r: 6,
      fill: "#d03028", stroke: "#fff", "stroke-width": 1.5,
      class: "key-frame", cursor: "pointer",
    });
    dot.addEventListener("click", (event) => {
      event.stopPropagation();
      onScrub(mark.frame);
    });
    svg.appendChild(dot);
  }

  svg.addEventListener("click", (event) => {
    const bounds = svg.getBoundingClientRect();
    const scale = (geometry.plot.x + geometry.plot.width + 12) / bounds.width;
    onScrub(geometry.frameForX((event.clientX - bounds.left) * scale));
  });
}
