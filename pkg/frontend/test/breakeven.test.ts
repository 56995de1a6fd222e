import { describe, expect, it } from "vitest";

import { DecisionClient } from "../src/api.js";
import {
  BREAKEVEN_VARIABLES,
  bracketProblem,
  runBreakevenPanel,
} from "../src/breakeven.js";
import { renderSweepPanel } from "../src/dom.js";
import { desk1Template } from "../src/template.js";
import type { BreakevenResult, Envelope, SweepResult } from "../src/types.js";
import { loadFixture, stubFetch } from "./helpers.js";

const sweepFixture = loadFixture<Envelope<SweepResult>>("desk1_sweep.json");
const breakevenFixture = loadFixture<Envelope<BreakevenResult>>("desk1_breakeven.json");
const badBracketFixture = loadFixture<Envelope<BreakevenResult>>("desk1_bad_bracket.json");

describe("bracketProblem", () => {
  it("rejects a single-point bracket client-side", () => {
    expect(bracketProblem(5, 5)).toMatch(/single-point bracket \(5, 5\)/);
  });

  it("rejects a reversed bracket", () => {
    expect(bracketProblem(10, 2)).toMatch(/lo < hi/);
  });

  it("rejects non-finite endpoints", () => {
    expect(bracketProblem(Number.NaN, 1)).toMatch(/finite/);
    expect(bracketProblem(0, Infinity)).toMatch(/finite/);
  });

  it("accepts an ordered finite bracket", () => {
    expect(bracketProblem(0.1, 0.9)).toBeNull();
  });
});

describe("BREAKEVEN_VARIABLES", () => {
  it("exposes exactly the four solver variables", () => {
    expect(Object.keys(BREAKEVEN_VARIABLES).sort()).toEqual(
      ["P_dss", "R_ts", "S", "monthly_rent"].sort()
    );
    expect(BREAKEVEN_VARIABLES["S"]).toBe("sale_price");
    expect(BREAKEVEN_VARIABLES["P_dss"]).toBe("p_bankrupt_slb");
  });
});

describe("runBreakevenPanel", () => {
  it("returns curve plus marker on success", async () => {
    const { impl, requests } = stubFetch({
      sweep: { payload: sweepFixture },
      breakeven: { payload: breakevenFixture },
    });
    const client = new DecisionClient("http://test.invalid/api/v1", impl);

    const panel = await runBreakevenPanel(client, desk1Template(), "S", 5e6, 2e7);

    expect(panel.error).toBeNull();
    expect(panel.curve.length).toBeGreaterThan(0);
    expect(panel.marker).toEqual(breakevenFixture.ok ? breakevenFixture.result : null);

    const sweepReq = requests.find((r) => r.url.endsWith("/sweep"))!;
    expect(sweepReq.body).toMatchObject({ variable: "S", from: 5e6, to: 2e7 });
    const breakevenReq = requests.find((r) => r.url.endsWith("/breakeven"))!;
    expect(breakevenReq.body).toMatchObject({ variable: "S", lo: 5e6, hi: 2e7 });
  });

  it("never sends a degenerate bracket", async () => {
    const { impl, requests } = stubFetch({});
    const client = new DecisionClient("http://test.invalid/api/v1", impl);

    const panel = await runBreakevenPanel(client, desk1Template(), "S", 7, 7);
    expect(panel.error).toMatch(/single-point bracket/);
    expect(panel.curve).toEqual([]);
    expect(panel.marker).toBeNull();
    expect(requests.length).toBe(0);
  });

  it("rejects unknown variables without touching the wire", async () => {
    const { impl, requests } = stubFetch({});
    const client = new DecisionClient("http://test.invalid/api/v1", impl);

    const panel = await runBreakevenPanel(client, desk1Template(), "R_f", 0, 1);
    expect(panel.error).toMatch(/unknown breakeven variable/);
    expect(requests.length).toBe(0);
  });

  it("surfaces the solver's no-sign-change message with g(lo) and g(hi)", async () => {
    const { impl } = stubFetch({
      sweep: { payload: sweepFixture },
      breakeven: { payload: badBracketFixture, status: 422 },
    });
    const client = new DecisionClient("http://test.invalid/api/v1", impl);

    const panel = await runBreakevenPanel(client, desk1Template(), "S", 100, 200);
    expect(panel.marker).toBeNull();
    expect(panel.curve.length).toBeGreaterThan(0); // sweep still drawn
    expect(panel.error).toMatch(/no sign change over bracket/);
    expect(panel.error).toMatch(/g\(lo\)=/);
    expect(panel.error).toMatch(/g\(hi\)=/);
  });

  it("reports a failed sweep with an empty curve", async () => {
    const { impl } = stubFetch({
      sweep: {
        payload: { ok: false, error: { code: "domain", message: "sweep exploded", path: null } },
        status: 422,
      },
      breakeven: { payload: breakevenFixture },
    });
    const client = new DecisionClient("http://test.invalid/api/v1", impl);

    const panel = await runBreakevenPanel(client, desk1Template(), "S", 5e6, 2e7);
    expect(panel.curve).toEqual([]);
    expect(panel.error).toBe("sweep exploded");
  });
});

describe("renderSweepPanel", () => {
  const successPanel = () => ({
    variable: "S",
    curve: sweepFixture.ok ? sweepFixture.result.rows : [],
    marker: breakevenFixture.ok ? breakevenFixture.result : null,
    error: null,
  });

  it("draws both curves and the breakeven marker", () => {
    const host = document.createElement("div");
    renderSweepPanel(host, successPanel());

    expect(host.querySelectorAll("polyline.line-sl").length).toBeGreaterThan(0);
    expect(host.querySelectorAll("polyline.line-b").length).toBeGreaterThan(0);
    expect(host.querySelector("[data-role='breakeven-marker']")).not.toBeNull();

    const valueCell = host.querySelector("[data-src='breakeven'][data-num='value']")!;
    const marker = breakevenFixture.ok ? breakevenFixture.result : null;
    expect(valueCell.textContent).toBe(String(marker!.value));
  });

  it("marker click loads the breakeven value into the callback", () => {
    const host = document.createElement("div");
    const loaded: number[] = [];
    renderSweepPanel(host, successPanel(), (value) => loaded.push(value));

    (host.querySelector("[data-role='load-breakeven']") as HTMLElement).click();
    host.querySelector("[data-role='breakeven-marker']")!.dispatchEvent(new Event("click"));

    const marker = breakevenFixture.ok ? breakevenFixture.result : null;
    expect(loaded).toEqual([marker!.value, marker!.value]);
  });

  it("renders the bracket error verbatim alongside the curve", () => {
    const host = document.createElement("div");
    const badMessage = badBracketFixture.ok ? "" : badBracketFixture.error.message;
    renderSweepPanel(host, {
      variable: "S",
      curve: sweepFixture.ok ? sweepFixture.result.rows : [],
      marker: null,
      error: badMessage,
    });

    const errorNode = host.querySelector("[data-role='breakeven-error']")!;
    expect(errorNode.textContent).toBe(badMessage);
    expect(host.querySelector("[data-role='breakeven-marker']")).toBeNull();
  });

  it("shows only the error when there is no curve", () => {
    const host = document.createElement("div");
    renderSweepPanel(host, { variable: "S", curve: [], marker: null, error: "nope" });
    expect(host.textContent).toContain("nope");
    expect(host.querySelector("svg")).toBeNull();
  });
});
