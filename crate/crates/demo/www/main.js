// Canvas glue for the polyq demo. No framework; the wasm module does all
// the mathematics and hands back JSON.

import init, { analyze, lattice_cloud, activity_cells } from "./pkg/polyq_demo.js";

const $ = (id) => document.getElementById(id);
const status = $("status");

const CELL_COLORS = [
  "#2a6f4e", "#b0543f", "#3e5fa8", "#a8803e", "#7a4ea8",
  "#3e9ba8", "#a83e70", "#6b8f3e", "#8f5b3e", "#4ea87a",
];

// e1, e2(, e3) drawn in the plane: identity for n = 2, the triangular
// projection of the sum's hyperplane for n = 3.
function project(p) {
  if (p.length === 2) return [p[0], p[1]];
  const s3 = Math.sqrt(3) / 2;
  return [p[0] - 0.5 * (p[1] + p[2]), s3 * (p[1] - p[2])];
}

function drawPoints(canvas, groups, highlight) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const projected = [];
  for (const [gi, group] of groups.entries()) {
    for (const p of group) projected.push([gi, project(p), p]);
  }
  if (projected.length === 0) return;
  let minX = Infinity, maxX = -Infinity, minY = Infinity, maxY = -Infinity;
  for (const [, [x, y]] of projected) {
    minX = Math.min(minX, x); maxX = Math.max(maxX, x);
    minY = Math.min(minY, y); maxY = Math.max(maxY, y);
  }
  const pad = 40;
  const spanX = Math.max(maxX - minX, 1e-9);
  const spanY = Math.max(maxY - minY, 1e-9);
  const scale = Math.min(
    (canvas.width - 2 * pad) / spanX,
    (canvas.height - 2 * pad) / spanY,
  );
  const toCanvas = ([x, y]) => [
    pad + (x - minX) * scale + (canvas.width - 2 * pad - spanX * scale) / 2,
    canvas.height - pad - (y - minY) * scale - (canvas.height - 2 * pad - spanY * scale) / 2,
  ];
  const radius = Math.max(4, Math.min(11, scale * 0.18));
  ctx.font = "11px ui-monospace, monospace";
  for (const [gi, xy, original] of projected) {
    const [cx, cy] = toCanvas(xy);
    ctx.beginPath();
    ctx.arc(cx, cy, radius, 0, 2 * Math.PI);
    ctx.fillStyle = CELL_COLORS[gi % CELL_COLORS.length];
    ctx.fill();
    if (highlight && highlight.has(original.join(","))) {
      ctx.lineWidth = 2.5;
      ctx.strokeStyle = "#1c2330";
      ctx.stroke();
    }
    if (projected.length <= 60) {
      ctx.fillStyle = "#6a7184";
      ctx.fillText(original.join(","), cx + radius + 2, cy + 3);
    }
  }
}

function message(canvas, text) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.fillStyle = "#6a7184";
  ctx.font = "14px Georgia, serif";
  ctx.fillText(text, 20, 40);
}

function renderInvariants(data) {
  const rows = [
    ["n", data.n],
    ["bases", data.bases],
    ["rank", data.rank],
    ["matroid", data.matroid],
    ["Q′(x,y)", data.qprime],
    ["T(x,y)", data.tutte ?? "— (polymatroid)"],
    ["I(ξ)", data.internal],
    ["X(η)", data.external],
  ];
  $("invariants").innerHTML = rows
    .map(([k, v]) => `<dt>${k}</dt><dd>${v}</dd>`)
    .join("");
}

function renderCloud(text) {
  const t = +$("cloud-t").value;
  const u = +$("cloud-u").value;
  $("cloud-t-val").textContent = t;
  $("cloud-u-val").textContent = u;
  const data = JSON.parse(lattice_cloud(text, t, u));
  if (data.error) {
    $("cloud-count").textContent = "–";
    message($("cloud"), data.error);
    return;
  }
  $("cloud-count").textContent = data.count;
  if (data.n > 3) {
    message($("cloud"), `counted ${data.count} points; drawing needs 2 or 3 elements`);
    return;
  }
  const baseSet = new Set(data.bases.map((b) => b.join(",")));
  drawPoints($("cloud"), [data.points], baseSet);
}

function renderPartition(text) {
  const t = +$("part-t").value;
  $("part-t-val").textContent = t;
  const internal = document.querySelector("input[name=side]:checked").value === "internal";
  const data = JSON.parse(activity_cells(text, t, internal));
  if (data.error) {
    $("part-cells").textContent = "–";
    message($("partition"), data.error);
    return;
  }
  $("part-cells").textContent = `${data.cells.length} (points ${data.total})`;
  if (data.n > 3) {
    message($("partition"), `${data.cells.length} cells; drawing needs 2 or 3 elements`);
    return;
  }
  const baseSet = new Set(data.cells.map((c) => c.base.join(",")));
  drawPoints($("partition"), data.cells.map((c) => c.points), baseSet);
}

function refresh() {
  const text = $("bases").value;
  status.textContent = "";
  const data = JSON.parse(analyze(text));
  if (data.error) {
    status.textContent = data.error;
    $("invariants").innerHTML = "";
    message($("cloud"), "fix the input to draw");
    message($("partition"), "fix the input to draw");
    return;
  }
  renderInvariants(data);
  renderCloud(text);
  renderPartition(text);
}

async function main() {
  try {
    await init();
  } catch (e) {
    status.textContent =
      "wasm module not found: run wasm-pack build crates/demo --target web --out-dir www/pkg";
    return;
  }
  $("bases").addEventListener("input", refresh);
  for (const id of ["cloud-t", "cloud-u", "part-t"]) {
    $(id).addEventListener("input", refresh);
  }
  for (const radio of document.querySelectorAll("input[name=side]")) {
    radio.addEventListener("change", refresh);
  }
  for (const button of document.querySelectorAll("button[data-preset]")) {
    button.addEventListener("click", () => {
      $("bases").value = button.dataset.preset;
      refresh();
    });
  }
  refresh();
}

main();
