/**
 * Thin client for the decision-service HTTP API.
 *
 * Every call resolves to the service envelope, parsed but otherwise
 * untouched. Transport failures (refused connection, bad JSON) are folded
 * into the same envelope shape with code "network" so callers handle one
 * error channel. The fetch implementation is injectable for tests.
 */

import type {
  BreakevenResult,
  Envelope,
  HealthResult,
  ReportDocument,
  Scenario,
  SweepResult,
  TornadoResult,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string }
) => Promise<{ status: number; text(): Promise<string> }>;

export const DEFAULT_BASE_URL = "http://127.0.0.1:8321/api/v1";

export class DecisionClient {
  readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string = DEFAULT_BASE_URL, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? (globalThis.fetch as unknown as FetchLike);
  }

  async health(): Promise<Envelope<HealthResult>> {
    return this.request<HealthResult>("GET", "/health", undefined, true);
  }

  async evaluate(scenario: Scenario): Promise<Envelope<ReportDocument>> {
    return this.request<ReportDocument>("POST", "/evaluate", scenario);
  }

  async breakeven(
    scenario: Scenario,
    variable: string,
    lo: number,
    hi: number
  ): Promise<Envelope<BreakevenResult>> {
    return this.request<BreakevenResult>("POST", "/breakeven", {
      scenario,
      variable,
      lo,
      hi,
    });
  }

  async sweep(
    scenario: Scenario,
    variable: string,
    from: number,
    to: number,
    steps: number
  ): Promise<Envelope<SweepResult>> {
    return this.request<SweepResult>("POST", "/sweep", {
      scenario,
      variable,
      from,
      to,
      steps,
    });
  }

  async tornado(
    scenario: Scenario,
    perturbation = 0.1
  ): Promise<Envelope<TornadoResult>> {
    return this.request<TornadoResult>("POST", "/tornado", {
      scenario,
      perturbation,
    });
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
    bareResult = false
  ): Promise<Envelope<T>> {
    let status: number;
    let text: string;
    try {
      const response = await this.fetchImpl(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { "content-type": "application/json" },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
      status = response.status;
      text = await response.text();
    } catch (err) {
      return networkError(`request failed: ${describe(err)}`);
    }

    let parsed: unknown;
    try {
      parsed = JSON.parse(text);
    } catch {
      return networkError(`service returned non-JSON (HTTP ${status})`);
    }

    // GET /health answers with a bare document, not an envelope.
    if (bareResult) {
      return { ok: true, result: parsed as T };
    }
    const envelope = parsed as Envelope<T>;
    if (typeof envelope !== "object" || envelope === null || !("ok" in envelope)) {
      return networkError(`unexpected response shape (HTTP ${status})`);
    }
    return envelope;
  }
}

function networkError<T>(message: string): Envelope<T> {
  return { ok: false, error: { code: "network", message, path: null } };
}

function describe(err: unknown): string {
  if (err instanceof Error) return err.message;
  return String(err);
}
