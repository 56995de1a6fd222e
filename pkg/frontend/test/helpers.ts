/** Shared test utilities: fixture loading, path lookup, fetch stubbing. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";

const here = dirname(fileURLToPath(import.meta.url));

export function loadFixture<T = unknown>(name: string): T {
  return JSON.parse(readFileSync(join(here, "fixtures", name), "utf8")) as T;
}

export function loadScenarioFile<T = unknown>(name: string): T {
  return JSON.parse(readFileSync(join(here, "..", "..", "scenarios", name), "utf8")) as T;
}

/**
 * Resolve a path like "rows[3].n_sl" or "n_sl.components.gross_proceeds"
 * inside a parsed JSON document.
 */
export function valueAtPath(obj: unknown, path: string): unknown {
  let current: unknown = obj;
  const tokens = path.match(/[^.[\]]+/g) ?? [];
  for (const token of tokens) {
    if (current === null || typeof current !== "object") return undefined;
    current = (current as Record<string, unknown>)[token];
  }
  return current;
}

export interface RecordedRequest {
  url: string;
  method: string;
  body: unknown;
}

export interface StubRoutes {
  /** Keyed by endpoint suffix: "evaluate", "breakeven", "sweep", "tornado", "health". */
  [endpoint: string]: { status?: number; payload: unknown } | undefined;
}

/**
 * A fetch stub that answers each endpoint from canned payloads and records
 * every request it sees.
 */
export function stubFetch(routes: StubRoutes, requests: RecordedRequest[] = []) {
  const impl: FetchLike = async (url, init) => {
    const endpoint = url.split("?")[0]!.split("/").pop()!;
    requests.push({
      url,
      method: init?.method ?? "GET",
      body: init?.body === undefined ? undefined : JSON.parse(init.body),
    });
    const route = routes[endpoint];
    if (!route) {
      return { status: 404, text: async () => JSON.stringify({ detail: "not found" }) };
    }
    return {
      status: route.status ?? 200,
      text: async () => JSON.stringify(route.payload),
    };
  };
  return { impl, requests };
}

export async function waitUntil(
  predicate: () => boolean,
  timeoutMs = 5000,
  intervalMs = 5
): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!predicate()) {
    if (Date.now() > deadline) {
      throw new Error(`waitUntil: condition not met within ${timeoutMs} ms`);
    }
    await new Promise((resolve) => setTimeout(resolve, intervalMs));
  }
}

export function flushMicrotasks(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
