/**
 * DOM rendering for the what-if dashboard.
 *
 * Discipline: every numeric value shown as text is written by `numCell`,
 * which renders the service's value verbatim (String(value)) and stamps the
 * element with the endpoint it came from (`data-src`) and the JSON path of
 * the value inside that response (`data-num`). Nothing numeric is computed
 * here beyond pixel projection for the sweep lines and bar widths, which
 * never becomes visible text.
 */

import type { BreakevenPanel } from "./breakeven.js";
import type { Session } from "./session.js";
import type { SweepRow, TornadoResult } from "./types.js";
import { conditionBadges } from "./badges.js";
import { DEAL_FIELDS, isSliderKind } from "./fields.js";

export type NumSource = "evaluate" | "sweep" | "breakeven" | "tornado";

const escapeHtml = (value: unknown): string =>
  String(value ?? "")
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");

/** Render a service number exactly as received, tagged with its origin. */
export function numCell(src: NumSource, path: string, value: number): string {
  return `<span class="num" data-src="${src}" data-num="${escapeHtml(path)}">${escapeHtml(
    String(value)
  )}</span>`;
}

function section(title: string, body: string, extra = ""): string {
  return `<section class="card${extra ? " " + extra : ""}"><h3>${escapeHtml(title)}</h3>${body}</section>`;
}

/* ------------------------------------------------------------------ form */

/** Build the static scenario form skeleton once. */
export function buildForm(host: HTMLElement): void {
  const rows = DEAL_FIELDS.map((spec) => {
    const symbol = spec.symbol ? ` <small class="symbol">${escapeHtml(spec.symbol)}</small>` : "";
    let control: string;
    if (spec.kind === "choice") {
      control = `<select data-field="${spec.name}">
        <option value="capital">capital</option>
        <option value="operating">operating</option>
      </select>`;
    } else if (isSliderKind(spec.kind)) {
      control = `<span class="slider-pair">
        <input type="range" min="0" max="1" step="0.0001" data-field="${spec.name}" data-control="slider" />
        <input type="number" min="0" max="1" step="0.0001" data-field="${spec.name}" data-control="number" />
      </span>`;
    } else if (spec.kind === "months") {
      control = `<input type="number" min="1" step="1" data-field="${spec.name}" data-control="number" />`;
    } else {
      control = `<input type="number" step="any" data-field="${spec.name}" data-control="number" />`;
    }
    return `<label class="field" data-field-row="${spec.name}">
      <span class="field-label">${escapeHtml(spec.label)}${symbol}</span>
      ${control}
      <span class="field-error" data-error-for="deal.${spec.name}" hidden></span>
    </label>`;
  }).join("\n");
  host.innerHTML = rows;
}

/** Push current scenario values into the form, skipping the focused input. */
export function renderForm(host: HTMLElement, session: Session): void {
  const deal = session.current.deal as unknown as Record<string, number | string | null>;
  for (const input of host.querySelectorAll<HTMLInputElement | HTMLSelectElement>("[data-field]")) {
    if (input === document.activeElement) continue;
    const name = input.getAttribute("data-field")!;
    const value = deal[name];
    input.value = value === null || value === undefined ? "" : String(value);
  }
  for (const span of host.querySelectorAll<HTMLElement>("[data-error-for]")) {
    const path = span.getAttribute("data-error-for")!;
    const message = session.fieldErrors[path];
    span.hidden = message === undefined;
    span.textContent = message ?? "";
  }
}

/* ------------------------------------------------------------- dashboard */

function componentsTable(src: NumSource, prefix: string, components: Record<string, number>): string {
  const rows = Object.entries(components)
    .map(
      ([key, value]) =>
        `<tr><td>${escapeHtml(key)}</td><td class="right">${numCell(src, `${prefix}.${key}`, value)}</td></tr>`
    )
    .join("");
  return `<table class="kv">${rows}</table>`;
}

function badgeGrid(session: Session): string {
  const report = session.lastReport!;
  const badges = conditionBadges(report);
  const items = badges
    .map((badge, i) => {
      return `<span class="badge ${badge.state}" data-badge="${escapeHtml(badge.id)}" title="${escapeHtml(
        badge.tooltip
      )}">${escapeHtml(badge.id)} <span class="badge-margin">${numCell(
        "evaluate",
        `conditions[${i}].margin`,
        badge.margin
      )}</span></span>`;
    })
    .join("");
  return `<div class="badges">${items}</div>`;
}

/** Rebuild the report view from the session's last report. */
export function renderDashboard(host: HTMLElement, session: Session): void {
  const report = session.lastReport;
  const flags: string[] = [];
  if (session.pending) flags.push(`<span class="flag pending">evaluating</span>`);
  if (session.dirty) flags.push(`<span class="flag dirty">edited</span>`);
  if (session.reportStale) flags.push(`<span class="flag stale">stale</span>`);
  const statusBar = `<div class="status-bar">${flags.join(" ")}</div>`;

  if (!report) {
    host.innerHTML = `${statusBar}<p class="empty">No report yet. Load a scenario to evaluate.</p>`;
    return;
  }

  const warnings =
    report.warnings.length === 0
      ? ""
      : section(
          "Warnings",
          `<ul class="warnings">${report.warnings.map((w) => `<li>${escapeHtml(w)}</li>`).join("")}</ul>`
        );

  const failed =
    report.failed_conditions.length === 0
      ? `<p class="all-hold">All conditions hold.</p>`
      : `<p class="failed-list">Failed: ${report.failed_conditions.map((id) => escapeHtml(id)).join(", ")}</p>`;

  host.innerHTML = `
${statusBar}
<section class="card headline">
  <div class="recommendation" id="recommendation" data-str="recommendation">${escapeHtml(report.recommendation)}</div>
  <div class="netpair">
    <div class="net"><span class="net-label">N_sl</span> ${numCell("evaluate", "n_sl.value", report.n_sl.value)}</div>
    <div class="net"><span class="net-label">N_b</span> ${numCell("evaluate", "n_b.value", report.n_b.value)}</div>
  </div>
</section>
${section(
    "Conditions",
    badgeGrid(session) + failed
  )}
${section(
    "Cashflow present values",
    `<table class="kv">
      <tr><td>L_s (lease)</td><td class="right">${numCell("evaluate", "cashflows.L_s", report.cashflows.L_s)}</td></tr>
      <tr><td>I (interest)</td><td class="right">${numCell("evaluate", "cashflows.I", report.cashflows.I)}</td></tr>
      <tr><td>D (depreciation)</td><td class="right">${numCell("evaluate", "cashflows.D", report.cashflows.D)}</td></tr>
      <tr><td>TV (terminal)</td><td class="right">${numCell("evaluate", "cashflows.TV", report.cashflows.TV)}</td></tr>
    </table>`
  )}
${section(
    "N_sl components",
    componentsTable("evaluate", "n_sl.components", report.n_sl.components) +
      `<p class="fineprint">survival factor ${numCell("evaluate", "n_sl.survival_factor", report.n_sl.survival_factor)}</p>`
  )}
${section(
    "N_b components",
    componentsTable("evaluate", "n_b.components", report.n_b.components) +
      `<p class="fineprint">survival factor ${numCell("evaluate", "n_b.survival_factor", report.n_b.survival_factor)}</p>`
  )}
${warnings}
<p class="fineprint">${escapeHtml(report.tool.name)} ${escapeHtml(report.tool.version)}, generated ${escapeHtml(
    report.generated_at
  )}</p>
`;
}

/* ---------------------------------------------------------------- banner */

export function renderBanner(host: HTMLElement, session: Session): void {
  if (!session.banner) {
    host.innerHTML = "";
    host.hidden = true;
    return;
  }
  host.hidden = false;
  host.innerHTML = `<div class="banner" role="alert">
    <span class="banner-code">${escapeHtml(session.banner.code)}</span>
    <span class="banner-message">${escapeHtml(session.banner.message)}</span>
    <button type="button" class="banner-dismiss" data-role="dismiss-banner">dismiss</button>
  </div>`;
  host
    .querySelector("[data-role='dismiss-banner']")
    ?.addEventListener("click", () => session.dismissBanner());
}

/* ----------------------------------------------------------- sweep panel */

interface PlotPoint {
  x: number;
  y: number;
  px: number;
  py: number;
}

const PLOT = { width: 640, height: 240, pad: 42 };

function collectSeries(
  rows: SweepRow[],
  key: "n_sl" | "n_b"
): { index: number; value: number }[] {
  const out: { index: number; value: number }[] = [];
  rows.forEach((row, index) => {
    const value = row[key];
    if (value !== null) out.push({ index, value });
  });
  return out;
}

/**
 * Render the sweep curve with the breakeven marker. Coordinates are pixel
 * projections; every number printed as text is a verbatim service value.
 */
export function renderSweepPanel(
  host: HTMLElement,
  panel: BreakevenPanel,
  onMarkerClick?: (value: number) => void
): void {
  const errorBlock = panel.error
    ? `<p class="panel-error" data-role="breakeven-error">${escapeHtml(panel.error)}</p>`
    : "";

  if (panel.curve.length === 0) {
    host.innerHTML = errorBlock || `<p class="empty">No sweep yet.</p>`;
    return;
  }

  const slSeries = collectSeries(panel.curve, "n_sl");
  const bSeries = collectSeries(panel.curve, "n_b");
  const all = [...slSeries, ...bSeries];
  if (all.length === 0) {
    host.innerHTML = `${errorBlock}<p class="empty">No evaluable points in this bracket.</p>`;
    return;
  }

  // Select (never compute) the extreme values for the axis labels.
  let loPoint = all[0]!;
  let hiPoint = all[0]!;
  let loKey: "n_sl" | "n_b" = slSeries.length > 0 && all[0] === slSeries[0] ? "n_sl" : "n_b";
  let hiKey = loKey;
  for (const key of ["n_sl", "n_b"] as const) {
    for (const point of key === "n_sl" ? slSeries : bSeries) {
      if (point.value < loPoint.value) {
        loPoint = point;
        loKey = key;
      }
      if (point.value > hiPoint.value) {
        hiPoint = point;
        hiKey = key;
      }
    }
  }

  const xs = panel.curve.map((row) => row.x);
  const x0 = xs[0]!;
  const x1 = xs[xs.length - 1]!;
  const ySpan = hiPoint.value - loPoint.value || 1;
  const xSpan = x1 - x0 || 1;
  const { width, height, pad } = PLOT;
  const projX = (x: number): number => pad + ((x - x0) / xSpan) * (width - 2 * pad);
  const projY = (y: number): number =>
    height - pad - ((y - loPoint.value) / ySpan) * (height - 2 * pad);

  const toPolylines = (series: { index: number; value: number }[]): string[] => {
    // Break the line at gaps left by error rows.
    const segments: PlotPoint[][] = [];
    let current: PlotPoint[] = [];
    let previousIndex = -2;
    for (const { index, value } of series) {
      const point = {
        x: panel.curve[index]!.x,
        y: value,
        px: projX(panel.curve[index]!.x),
        py: projY(value),
      };
      if (index !== previousIndex + 1 && current.length > 0) {
        segments.push(current);
        current = [];
      }
      current.push(point);
      previousIndex = index;
    }
    if (current.length > 0) segments.push(current);
    return segments.map(
      (segment) =>
        `<polyline fill="none" points="${segment.map((p) => `${p.px.toFixed(1)},${p.py.toFixed(1)}`).join(" ")}" />`
    );
  };

  const slLines = toPolylines(slSeries)
    .map((line) => line.replace("<polyline", `<polyline class="line-sl"`))
    .join("");
  const bLines = toPolylines(bSeries)
    .map((line) => line.replace("<polyline", `<polyline class="line-b"`))
    .join("");

  let markerSvg = "";
  let markerLabel = "";
  if (panel.marker) {
    const mx = projX(panel.marker.value).toFixed(1);
    markerSvg = `
      <line class="marker-line" x1="${mx}" y1="${pad}" x2="${mx}" y2="${height - pad}" />
      <circle class="marker" data-role="breakeven-marker" cx="${mx}" cy="${height - pad}" r="6" />`;
    markerLabel = `<p class="marker-label">breakeven ${escapeHtml(panel.variable)} = ${numCell(
      "breakeven",
      "value",
      panel.marker.value
    )} <button type="button" class="link" data-role="load-breakeven">load into form</button><br/>
    <span class="fineprint">residual ${numCell("breakeven", "residual", panel.marker.residual)},
    iterations ${numCell("breakeven", "iterations", panel.marker.iterations)}</span></p>`;
  }

  host.innerHTML = `
${errorBlock}
<svg viewBox="0 0 ${width} ${height}" class="sweep-plot" role="img">
  <rect class="plot-bg" x="${pad}" y="${pad}" width="${width - 2 * pad}" height="${height - 2 * pad}" />
  ${slLines}
  ${bLines}
  ${markerSvg}
</svg>
<div class="axis-labels">
  <span>x from ${numCell("sweep", "rows[0].x", x0)} to ${numCell(
    "sweep",
    `rows[${panel.curve.length - 1}].x`,
    x1
  )}</span>
  <span>y from ${numCell("sweep", `rows[${loPoint.index}].${loKey}`, loPoint.value)} to ${numCell(
    "sweep",
    `rows[${hiPoint.index}].${hiKey}`,
    hiPoint.value
  )}</span>
  <span class="legend"><span class="swatch sl"></span> N_sl <span class="swatch b"></span> N_b</span>
</div>
${markerLabel}
`;

  if (panel.marker && onMarkerClick) {
    const value = panel.marker.value;
    for (const selector of ["[data-role='breakeven-marker']", "[data-role='load-breakeven']"]) {
      host.querySelector(selector)?.addEventListener("click", () => onMarkerClick(value));
    }
  }
}

/* --------------------------------------------------------------- tornado */

/** Render the ranked tornado rows as a bar list. Bar widths are relative. */
export function renderTornado(host: HTMLElement, result: TornadoResult): void {
  if (result.rows.length === 0) {
    host.innerHTML = `<p class="empty">No perturbable parameters.</p>`;
    return;
  }
  // Select the largest |rank_key| for scaling the bars (presentation only).
  let scale = 0;
  for (const row of result.rows) {
    const magnitude = Math.abs(row.rank_key);
    if (magnitude > scale) scale = magnitude;
  }
  if (scale === 0) scale = 1;

  const bars = result.rows
    .map((row, i) => {
      const width = Math.max(1, Math.round((Math.abs(row.rank_key) / scale) * 100));
      return `<div class="tornado-row" data-parameter="${escapeHtml(row.parameter)}">
  <span class="tornado-name">${escapeHtml(row.parameter)}</span>
  <span class="tornado-bar"><span class="tornado-fill" style="width:${width}%"></span></span>
  <span class="tornado-nums">gap ${numCell("tornado", `rows[${i}].delta_gap_down`, row.delta_gap_down)} /
  ${numCell("tornado", `rows[${i}].delta_gap_up`, row.delta_gap_up)}
  (rank ${numCell("tornado", `rows[${i}].rank_key`, row.rank_key)})</span>
</div>`;
    })
    .join("\n");

  host.innerHTML = `<p class="fineprint">perturbation ${numCell(
    "tornado",
    "perturbation",
    result.perturbation
  )}</p>\n${bars}`;
}
