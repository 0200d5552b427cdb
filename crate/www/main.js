// Demo page wiring: three interactive plots over the wasm bindings.
// No framework; plain canvas drawing.

import init, {
  network_names,
  layer_trace,
  heatmap_grid,
  recurrence_curves,
} from "./pkg/dtqw_wasm.js";

const PALETTE = ["#dc2626", "#2563eb", "#059669", "#9333ea"];

function el(id) {
  return document.getElementById(id);
}

function clearCanvas(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  return ctx;
}

// Axis frame with y in [0, yMax]; returns a mapper from data to pixels.
function frame(ctx, canvas, xMax, yMax, xLabel) {
  const m = { left: 46, right: 12, top: 12, bottom: 30 };
  const w = canvas.width - m.left - m.right;
  const h = canvas.height - m.top - m.bottom;
  ctx.strokeStyle = "#9aa3af";
  ctx.lineWidth = 1;
  ctx.strokeRect(m.left, m.top, w, h);
  ctx.fillStyle = "#6b7280";
  ctx.font = "11px system-ui";
  ctx.textAlign = "center";
  for (let i = 0; i <= 4; i++) {
    const y = m.top + (h * i) / 4;
    const value = (yMax * (4 - i)) / 4;
    ctx.textAlign = "right";
    ctx.fillText(value.toFixed(2), m.left - 6, y + 3);
    if (i > 0 && i < 4) {
      ctx.strokeStyle = "#eceff3";
      ctx.beginPath();
      ctx.moveTo(m.left, y);
      ctx.lineTo(m.left + w, y);
      ctx.stroke();
    }
  }
  ctx.textAlign = "center";
  for (let i = 0; i <= 4; i++) {
    const x = m.left + (w * i) / 4;
    ctx.fillText(Math.round((xMax * i) / 4), x, m.top + h + 14);
  }
  ctx.fillText(xLabel, m.left + w / 2, m.top + h + 27);
  return (x, y) => [m.left + (x / xMax) * w, m.top + h - (y / yMax) * h];
}

function drawCurve(ctx, map, values, xs, color) {
  ctx.strokeStyle = color;
  ctx.lineWidth = 1.6;
  ctx.beginPath();
  values.forEach((v, i) => {
    const [px, py] = map(xs ? xs[i] : i, v);
    if (i === 0) ctx.moveTo(px, py);
    else ctx.lineTo(px, py);
  });
  ctx.stroke();
}

function legend(ctx, entries) {
  ctx.font = "12px system-ui";
  ctx.textAlign = "left";
  let x = 60;
  for (const [name, color] of entries) {
    ctx.fillStyle = color;
    ctx.fillRect(x, 18, 14, 3);
    ctx.fillStyle = "#374151";
    ctx.fillText(name, x + 18, 23);
    x += 28 + ctx.measureText(name).width;
  }
}

// Dark-blue to yellow color ramp for the heatmap.
function ramp(t) {
  const stops = [
    [13, 8, 135],
    [126, 3, 168],
    [204, 71, 120],
    [248, 149, 64],
    [240, 249, 33],
  ];
  const s = Math.min(Math.max(t, 0), 1) * (stops.length - 1);
  const i = Math.min(Math.floor(s), stops.length - 2);
  const f = s - i;
  const mix = (a, b) => Math.round(a + (b - a) * f);
  const [r, g, b] = [0, 1, 2].map((k) => mix(stops[i][k], stops[i + 1][k]));
  return `rgb(${r},${g},${b})`;
}

function showError(id, err) {
  el(id).textContent = err ? String(err.message ?? err) : "";
}

function drawTrace() {
  const canvas = el("trace-canvas");
  try {
    const walker = el("trace-walker").value;
    const steps = Number(el("trace-steps").value);
    const payload = JSON.parse(
      layer_trace(
        el("trace-network").value,
        walker,
        el("trace-coin").value,
        el("trace-initial").value,
        Number(el("trace-node").value),
        Number(el("trace-label").value),
        steps,
      ),
    );
    showError("trace-error", null);
    const ctx = clearCanvas(canvas);
    const map = frame(ctx, canvas, payload.steps, 1, "time step");
    const entries = [];
    payload.layers.forEach((layer, i) => {
      const color = PALETTE[i % PALETTE.length];
      drawCurve(ctx, map, layer, null, color);
      entries.push([`layer ${i + 1}`, color]);
    });
    legend(ctx, entries);
  } catch (err) {
    clearCanvas(canvas);
    showError("trace-error", err);
  }
}

function drawHeatmap() {
  const canvas = el("heat-canvas");
  try {
    const payload = JSON.parse(
      heatmap_grid(
        el("heat-family").value,
        el("heat-coin").value,
        Number(el("heat-steps").value),
      ),
    );
    showError("heat-error", null);
    const ctx = clearCanvas(canvas);
    const n = payload.matrix.length;
    const peak = Math.max(...payload.matrix.flat());
    const m = { left: 70, top: 24, cell: 42 };
    ctx.font = "11px system-ui";
    for (let r = 0; r < n; r++) {
      for (let c = 0; c < n; c++) {
        const v = payload.matrix[r][c];
        const x = m.left + c * m.cell;
        const y = m.top + r * m.cell;
        ctx.fillStyle = ramp(peak > 0 ? v / peak : 0);
        ctx.fillRect(x, y, m.cell - 2, m.cell - 2);
        ctx.fillStyle = v / (peak || 1) > 0.55 ? "#1f2937" : "#f3f4f6";
        ctx.textAlign = "center";
        ctx.fillText(v.toFixed(2), x + m.cell / 2 - 1, y + m.cell / 2 + 3);
      }
      ctx.fillStyle = "#374151";
      ctx.textAlign = "right";
      ctx.fillText(`from ${r + 1}`, m.left - 8, m.top + r * m.cell + m.cell / 2 + 3);
      ctx.textAlign = "center";
      ctx.fillText(`${r + 1}`, m.left + r * m.cell + m.cell / 2, m.top - 8);
    }
    ctx.textAlign = "left";
    ctx.fillStyle = "#374151";
    ctx.fillText(
      `${payload.walker}, ${payload.steps} steps`,
      m.left + n * m.cell + 16,
      m.top + 10,
    );
  } catch (err) {
    clearCanvas(canvas);
    showError("heat-error", err);
  }
}

function drawPolya() {
  const canvas = el("polya-canvas");
  try {
    const payload = JSON.parse(
      recurrence_curves(el("polya-network").value, Number(el("polya-tmax").value)),
    );
    showError("polya-error", null);
    const ctx = clearCanvas(canvas);
    const xMax = payload.grid[payload.grid.length - 1];
    const map = frame(ctx, canvas, xMax, 1, "cutoff");
    const curves = [
      ["classical", payload.classical, PALETTE[0]],
      ["fourier", payload.fourier, PALETTE[1]],
      ["grover", payload.grover, PALETTE[2]],
    ];
    for (const [, values, color] of curves) {
      drawCurve(ctx, map, values, payload.grid, color);
    }
    legend(ctx, curves.map(([name, , color]) => [name, color]));
  } catch (err) {
    clearCanvas(canvas);
    showError("polya-error", err);
  }
}

function syncTraceControls() {
  const quantum = el("trace-walker").value === "quantum";
  el("trace-coin").disabled = !quantum;
  el("trace-initial").disabled = !quantum;
  el("trace-label").disabled = !quantum || el("trace-initial").value !== "localized";
}

function syncHeatControls() {
  el("heat-coin").disabled = el("heat-family").value === "classical";
}

async function main() {
  await init();
  const names = JSON.parse(network_names());
  for (const id of ["trace-network", "polya-network"]) {
    const select = el(id);
    for (const name of names) {
      const option = document.createElement("option");
      option.value = name;
      option.textContent = name;
      select.appendChild(option);
    }
  }
  el("polya-network").value = "toy";

  for (const [ids, draw, sync] of [
    [
      ["trace-network", "trace-walker", "trace-coin", "trace-initial",
       "trace-node", "trace-label", "trace-steps"],
      drawTrace,
      syncTraceControls,
    ],
    [["heat-family", "heat-coin", "heat-steps"], drawHeatmap, syncHeatControls],
    [["polya-network", "polya-tmax"], drawPolya, null],
  ]) {
    for (const id of ids) {
      el(id).addEventListener("change", () => {
        if (sync) sync();
        draw();
      });
    }
  }
  syncTraceControls();
  syncHeatControls();
  drawTrace();
  drawHeatmap();
  drawPolya();
}

main();
