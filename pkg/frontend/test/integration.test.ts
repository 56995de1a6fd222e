/**
 * Live-service integration: boots the actual decision service on a local
 * port and drives the real app wiring against it.
 *
 *   - a slider edit must land an updated dashboard within 500 ms
 *   - sweeping the P(bankrupt | SLB) slider upward must show monotonically
 *     decreasing N_sl on a deal whose bracket term is positive (verified
 *     from the service's own component values, not local math)
 */

import { spawn, type ChildProcess } from "node:child_process";
import { request as httpRequest } from "node:http";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { DecisionClient, type FetchLike } from "../src/api.js";
import { wireApp } from "../src/main.js";
import type { Scenario } from "../src/types.js";
import { loadScenarioFile, waitUntil } from "./helpers.js";

const port = 8400 + Math.floor(Math.random() * 500);
const baseUrl = `http://127.0.0.1:${port}/api/v1`;

/** Plain node:http fetch: the DOM environment must not shape real traffic. */
const nodeFetch: FetchLike = (url, init) =>
  new Promise((resolve, reject) => {
    const req = httpRequest(
      url,
      { method: init?.method ?? "GET", headers: init?.headers },
      (res) => {
        const chunks: Buffer[] = [];
        res.on("data", (chunk: Buffer) => chunks.push(chunk));
        res.on("end", () =>
          resolve({
            status: res.statusCode ?? 0,
            text: async () => Buffer.concat(chunks).toString("utf8"),
          })
        );
      }
    );
    req.on("error", reject);
    if (init?.body !== undefined) req.write(init.body);
    req.end();
  });

let service: ChildProcess | undefined;
let serviceLog = "";

beforeAll(async () => {
  service = spawn("slb-decider", ["serve", "--port", String(port), "--bind", "127.0.0.1"], {
    stdio: ["ignore", "pipe", "pipe"],
  });
  service.stdout?.on("data", (chunk: Buffer) => {
    serviceLog += chunk.toString();
  });
  service.stderr?.on("data", (chunk: Buffer) => {
    serviceLog += chunk.toString();
  });

  const deadline = Date.now() + 20_000;
  for (;;) {
    try {
      const res = await nodeFetch(`${baseUrl}/health`);
      if (res.status === 200) return;
    } catch {
      // not accepting connections yet
    }
    if (Date.now() > deadline) {
      throw new Error(`decision service did not come up on :${port}\n${serviceLog}`);
    }
    await new Promise((resolve) => setTimeout(resolve, 100));
  }
});

afterAll(() => {
  service?.kill("SIGTERM");
});

function mount(): { root: HTMLElement; session: ReturnType<typeof wireApp> } {
  const root = document.createElement("div");
  document.body.appendChild(root);
  const session = wireApp(root, new DecisionClient(baseUrl, nodeFetch));
  return { root, session };
}

function probSlider(root: HTMLElement): HTMLInputElement {
  return root.querySelector<HTMLInputElement>(
    "input[type='range'][data-field='p_bankrupt_slb']"
  )!;
}

describe("against a live decision service", () => {
  it("updates the dashboard within 500 ms of a slider edit", async () => {
    const { root, session } = mount();
    await waitUntil(() => session.lastReport !== null && !session.pending, 15_000);

    const cellText = (): string =>
      root.querySelector("[data-num='n_sl.value']")?.textContent ?? "";
    const before = cellText();
    expect(before).not.toBe("");

    const slider = probSlider(root);
    slider.value = "0.5";
    const t0 = Date.now();
    slider.dispatchEvent(new Event("input", { bubbles: true }));

    await waitUntil(() => cellText() !== before, 5_000, 2);
    const elapsed = Date.now() - t0;
    expect(elapsed).toBeLessThanOrEqual(500);

    // The displayed report corresponds to the edited scenario end to end.
    expect(session.lastReport!.scenario.deal.p_bankrupt_slb).toBe(0.5);
    expect(session.dirty).toBe(false);
  });

  it("shows monotone decreasing N_sl across a P_dss slider sweep when the bracket term is positive", async () => {
    const { root, session } = mount();
    await waitUntil(() => session.lastReport !== null && !session.pending, 15_000);

    // A toy deal tilted so the survival-scaled bracket is positive: a large
    // terminal value outweighs the rent burden.
    const scenario = loadScenarioFile<Scenario>("mini-linear.json");
    scenario.deal.terminal_value_pv = 100.0;
    await session.loadScenario(scenario);
    await waitUntil(() => !session.pending && !session.dirty, 15_000);

    // Precondition, from the service's own numbers: this deal starts at
    // P(bankrupt | SLB) = 0, so the reported components are the unscaled
    // bracket terms and their sum is the bracket itself.
    const components = session.lastReport!.n_sl.components;
    const bracket =
      (components["rent_tax_shield"] ?? 0) +
      (components["depreciation_tax_shield"] ?? 0) +
      (components["rent_burden"] ?? 0) +
      (components["leverage_benefit"] ?? 0) +
      (components["terminal_value"] ?? 0);
    expect(bracket).toBeGreaterThan(0);

    const slider = probSlider(root);
    const seen: number[] = [];
    for (const p of [0.1, 0.3, 0.5, 0.7, 0.9]) {
      slider.value = String(p);
      slider.dispatchEvent(new Event("input", { bubbles: true }));
      await waitUntil(() => {
        const report = session.lastReport;
        return (
          report !== null &&
          !session.pending &&
          !session.dirty &&
          report.scenario.deal.p_bankrupt_slb === p
        );
      }, 10_000);
      seen.push(Number(root.querySelector("[data-num='n_sl.value']")!.textContent));
    }

    expect(seen.length).toBe(5);
    for (let i = 1; i < seen.length; i++) {
      expect(seen[i]!).toBeLessThan(seen[i - 1]!);
    }
  });
});
