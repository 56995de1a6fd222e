/**
 * Entry point: builds the page, wires the form, dashboard, breakeven and
 * tornado panels to a Session over the decision-service HTTP API.
 *
 * The service base URL defaults to the local decision service and can be
 * overridden with ?api=<base-url>. Start the service with CORS enabled for
 * the origin this page is served from, e.g.
 *   slb-decider serve --port 8321 --cors-origin http://127.0.0.1:8710
 */

import { DecisionClient, DEFAULT_BASE_URL } from "./api.js";
import { BREAKEVEN_VARIABLES, runBreakevenPanel } from "./breakeven.js";
import {
  buildForm,
  renderBanner,
  renderDashboard,
  renderForm,
  renderSweepPanel,
  renderTornado,
} from "./dom.js";
import { Session } from "./session.js";
import { desk1Template } from "./template.js";

function apiBaseFromLocation(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("api") ?? DEFAULT_BASE_URL;
}

/** Build the page against the service at the default or ?api= base URL. */
export function bootstrap(root: HTMLElement): Session {
  return wireApp(root, new DecisionClient(apiBaseFromLocation()));
}

/** Build the page and wire every control to the given client. */
export function wireApp(root: HTMLElement, client: DecisionClient): Session {
  const session = new Session(client, desk1Template());

  root.innerHTML = `
<header class="topbar">
  <h1>whatif-ui</h1>
  <span class="api-base">${client.baseUrl}</span>
</header>
<div id="banner-host" hidden></div>
<main class="layout">
  <aside class="pane form-pane">
    <div class="toolbar">
      <button type="button" id="load-template">Load DESK-1 template</button>
      <button type="button" id="undo">Undo</button>
      <button type="button" id="export">Export</button>
      <label class="import-label">Import
        <input type="file" id="import-file" accept="application/json" hidden />
      </label>
    </div>
    <div id="scenario-form"></div>
  </aside>
  <section class="pane dashboard-pane">
    <div id="dashboard"></div>
    <section class="card">
      <h3>Breakeven</h3>
      <div class="breakeven-controls">
        <select id="breakeven-variable">
          ${Object.keys(BREAKEVEN_VARIABLES)
            .map((name) => `<option value="${name}">${name}</option>`)
            .join("")}
        </select>
        <input type="number" id="breakeven-lo" step="any" placeholder="lo" />
        <input type="number" id="breakeven-hi" step="any" placeholder="hi" />
        <button type="button" id="run-breakeven">Run</button>
      </div>
      <div id="breakeven-panel"></div>
    </section>
    <section class="card">
      <h3>Tornado</h3>
      <div class="breakeven-controls">
        <input type="number" id="tornado-perturbation" step="any" value="0.1" />
        <button type="button" id="run-tornado">Run</button>
      </div>
      <div id="tornado-panel"></div>
    </section>
  </section>
</main>
`;

  const formHost = root.querySelector<HTMLElement>("#scenario-form")!;
  const dashboardHost = root.querySelector<HTMLElement>("#dashboard")!;
  const bannerHost = root.querySelector<HTMLElement>("#banner-host")!;
  const breakevenHost = root.querySelector<HTMLElement>("#breakeven-panel")!;
  const tornadoHost = root.querySelector<HTMLElement>("#tornado-panel")!;

  buildForm(formHost);

  session.subscribe(() => {
    renderForm(formHost, session);
    renderDashboard(dashboardHost, session);
    renderBanner(bannerHost, session);
  });

  // One handler for every field control; blocked values revert the input.
  const onFieldEvent = (event: Event): void => {
    const target = event.target as HTMLInputElement | HTMLSelectElement;
    const field = target.getAttribute?.("data-field");
    if (!field) return;
    const raw = target.tagName === "SELECT" ? target.value : target.value.trim();
    if (raw === "") return;
    const blocked = session.onParameterChange(field, raw);
    if (blocked !== null) {
      renderForm(formHost, session); // snap the control back to the model
    }
  };
  formHost.addEventListener("input", onFieldEvent);
  formHost.addEventListener("change", onFieldEvent);

  root.querySelector("#load-template")?.addEventListener("click", () => {
    void session.loadScenario(desk1Template());
  });
  root.querySelector("#undo")?.addEventListener("click", () => {
    session.undo();
  });
  root.querySelector("#export")?.addEventListener("click", () => {
    const blob = new Blob([session.exportScenario()], { type: "application/json" });
    const url = URL.createObjectURL(blob);
    const anchor = document.createElement("a");
    anchor.href = url;
    anchor.download = `${session.current.meta.name || "scenario"}.json`;
    anchor.click();
    URL.revokeObjectURL(url);
  });
  const importInput = root.querySelector<HTMLInputElement>("#import-file");
  root.querySelector<HTMLElement>(".import-label")?.addEventListener("click", () => {
    importInput?.click();
  });
  importInput?.addEventListener("change", async () => {
    const file = importInput.files?.[0];
    if (!file) return;
    await session.importScenario(await file.text());
    importInput.value = "";
  });

  const runBreakevenButton = root.querySelector<HTMLButtonElement>("#run-breakeven")!;
  runBreakevenButton.addEventListener("click", async () => {
    const variable = root.querySelector<HTMLSelectElement>("#breakeven-variable")!.value;
    const lo = Number(root.querySelector<HTMLInputElement>("#breakeven-lo")!.value);
    const hi = Number(root.querySelector<HTMLInputElement>("#breakeven-hi")!.value);
    runBreakevenButton.disabled = true;
    try {
      const panel = await runBreakevenPanel(client, session.current, variable, lo, hi);
      renderSweepPanel(breakevenHost, panel, (value) => {
        session.onParameterChange(BREAKEVEN_VARIABLES[variable]!, value);
      });
    } finally {
      runBreakevenButton.disabled = false;
    }
  });

  const runTornadoButton = root.querySelector<HTMLButtonElement>("#run-tornado")!;
  runTornadoButton.addEventListener("click", async () => {
    const perturbation = Number(
      root.querySelector<HTMLInputElement>("#tornado-perturbation")!.value
    );
    runTornadoButton.disabled = true;
    try {
      const envelope = await client.tornado(session.current, perturbation);
      if (envelope.ok) {
        renderTornado(tornadoHost, envelope.result);
      } else {
        tornadoHost.innerHTML = `<p class="panel-error">${envelope.error.message.replace(/</g, "&lt;")}</p>`;
      }
    } finally {
      runTornadoButton.disabled = false;
    }
  });

  // First paint, then evaluate the built-in template.
  renderForm(formHost, session);
  renderDashboard(dashboardHost, session);
  void session.loadScenario(desk1Template());
  return session;
}

const appRoot = typeof document !== "undefined" ? document.getElementById("app") : null;
if (appRoot) {
  bootstrap(appRoot);
}
