import { afterEach, describe, expect, it } from "vitest";

import { DecisionClient } from "../src/api.js";
import {
  buildForm,
  renderBanner,
  renderDashboard,
  renderForm,
  renderTornado,
} from "../src/dom.js";
import { DEAL_FIELDS, isSliderKind } from "../src/fields.js";
import { Session } from "../src/session.js";
import { desk1Template } from "../src/template.js";
import type { Envelope, ReportDocument, TornadoResult } from "../src/types.js";
import { loadFixture } from "./helpers.js";

const reportEnvelope = loadFixture<Envelope<ReportDocument>>("desk1_evaluate.json");
const report = reportEnvelope.ok
  ? reportEnvelope.result
  : (() => {
      throw new Error("fixture not ok");
    })();
const tornadoEnvelope = loadFixture<Envelope<TornadoResult>>("desk1_tornado.json");
const tornado = tornadoEnvelope.ok
  ? tornadoEnvelope.result
  : (() => {
      throw new Error("fixture not ok");
    })();

function freshSession(): Session {
  return new Session(new DecisionClient("http://test.invalid/api/v1"), desk1Template());
}

afterEach(() => {
  document.body.innerHTML = "";
});

describe("buildForm", () => {
  it("creates a control for every deal field", () => {
    const host = document.createElement("div");
    buildForm(host);
    for (const spec of DEAL_FIELDS) {
      expect(host.querySelector(`[data-field="${spec.name}"]`)).not.toBeNull();
    }
  });

  it("gives unit-interval fields a bounded slider and number pair", () => {
    const host = document.createElement("div");
    buildForm(host);
    for (const spec of DEAL_FIELDS) {
      if (!isSliderKind(spec.kind)) continue;
      const slider = host.querySelector<HTMLInputElement>(
        `input[type="range"][data-field="${spec.name}"]`
      )!;
      const number = host.querySelector<HTMLInputElement>(
        `input[type="number"][data-field="${spec.name}"]`
      )!;
      expect(slider).not.toBeNull();
      expect(number).not.toBeNull();
      expect(slider.min).toBe("0");
      expect(slider.max).toBe("1");
      expect(number.min).toBe("0");
      expect(number.max).toBe("1");
    }
  });

  it("includes an inline error slot per field", () => {
    const host = document.createElement("div");
    buildForm(host);
    const slot = host.querySelector<HTMLElement>(`[data-error-for="deal.sale_price"]`)!;
    expect(slot.hidden).toBe(true);
  });
});

describe("renderForm", () => {
  it("pushes scenario values into the controls", () => {
    const host = document.createElement("div");
    buildForm(host);
    const session = freshSession();
    renderForm(host, session);

    const sale = host.querySelector<HTMLInputElement>(
      `input[data-field="sale_price"]`
    )!;
    expect(sale.value).toBe("10000000");
    const classification = host.querySelector<HTMLSelectElement>(
      `select[data-field="classification"]`
    )!;
    expect(classification.value).toBe("capital");
  });

  it("skips the control the user is typing in", () => {
    const host = document.createElement("div");
    document.body.appendChild(host);
    buildForm(host);
    const session = freshSession();
    renderForm(host, session);

    const rent = host.querySelector<HTMLInputElement>(
      `input[type="number"][data-field="monthly_rent"]`
    )!;
    rent.focus();
    rent.value = "95001";
    (session.current.deal as { monthly_rent: number }).monthly_rent = 90000;
    renderForm(host, session);

    expect(rent.value).toBe("95001"); // untouched while focused
    const sale = host.querySelector<HTMLInputElement>(`input[data-field="sale_price"]`)!;
    expect(sale.value).toBe("10000000"); // others refreshed
  });

  it("shows inline field errors at the offending field", () => {
    const host = document.createElement("div");
    buildForm(host);
    const session = freshSession();
    session.fieldErrors["deal.sale_price"] = "must be positive";
    renderForm(host, session);

    const slot = host.querySelector<HTMLElement>(`[data-error-for="deal.sale_price"]`)!;
    expect(slot.hidden).toBe(false);
    expect(slot.textContent).toBe("must be positive");

    delete session.fieldErrors["deal.sale_price"];
    renderForm(host, session);
    expect(slot.hidden).toBe(true);
  });
});

describe("renderDashboard", () => {
  it("renders an empty state before the first report", () => {
    const host = document.createElement("div");
    renderDashboard(host, freshSession());
    expect(host.textContent).toContain("No report yet");
  });

  it("renders recommendation, badges, and status flags", () => {
    const host = document.createElement("div");
    const session = freshSession();
    session.lastReport = report;
    session.dirty = true;
    session.reportStale = true;
    renderDashboard(host, session);

    expect(host.querySelector("#recommendation")!.textContent).toBe(report.recommendation);
    expect(host.querySelectorAll(".badge").length).toBe(report.conditions.length);
    expect(host.querySelector(".flag.dirty")).not.toBeNull();
    expect(host.querySelector(".flag.stale")).not.toBeNull();
    expect(host.querySelector(".flag.pending")).toBeNull();
  });

  it("badge classes mirror holds and tooltips quote the report text", () => {
    const host = document.createElement("div");
    const session = freshSession();
    session.lastReport = report;
    renderDashboard(host, session);

    for (const [i, condition] of report.conditions.entries()) {
      const badge = host.querySelector<HTMLElement>(`[data-badge="${condition.id}"]`)!;
      expect(badge.classList.contains(condition.holds ? "holds" : "fails")).toBe(true);
      expect(badge.getAttribute("title")).toBe(condition.text);
      const margin = badge.querySelector(`[data-num="conditions[${i}].margin"]`)!;
      expect(margin.textContent).toBe(String(condition.margin));
    }
  });
});

describe("renderBanner", () => {
  it("hides when there is no banner and dismisses on click", () => {
    const host = document.createElement("div");
    const session = freshSession();

    renderBanner(host, session);
    expect(host.hidden).toBe(true);

    session.banner = { code: "domain", message: "boom", path: null };
    renderBanner(host, session);
    expect(host.hidden).toBe(false);
    expect(host.textContent).toContain("boom");

    (host.querySelector("[data-role='dismiss-banner']") as HTMLElement).click();
    expect(session.banner).toBeNull();
  });
});

describe("renderTornado", () => {
  it("renders one bar per parameter with verbatim numbers", () => {
    const host = document.createElement("div");
    renderTornado(host, tornado);

    expect(host.querySelectorAll(".tornado-row").length).toBe(tornado.rows.length);
    for (const [i, row] of tornado.rows.entries()) {
      const rank = host.querySelector(`[data-num="rows[${i}].rank_key"]`)!;
      expect(rank.textContent).toBe(String(row.rank_key));
    }
  });

  it("scales the widest bar to 100%", () => {
    const host = document.createElement("div");
    renderTornado(host, tornado);
    const widths = [...host.querySelectorAll<HTMLElement>(".tornado-fill")].map(
      (el) => el.style.width
    );
    expect(widths).toContain("100%");
  });

  it("handles an empty row list", () => {
    const host = document.createElement("div");
    renderTornado(host, { perturbation: 0.1, rows: [] });
    expect(host.textContent).toContain("No perturbable parameters");
  });
});
