/**
 * Breakeven panel logic: a sweep of N_sl and N_b across a bracket plus the
 * breakeven marker where they cross, both fetched from the service.
 *
 * The panel accepts only the four breakeven variables the solver exposes.
 * A degenerate single-point bracket never reaches the wire; a bracket the
 * solver rejects (no sign change) comes back with g(lo) and g(hi) in the
 * message, which the panel surfaces verbatim.
 */

import type { DecisionClient } from "./api.js";
import type { BreakevenResult, Scenario, SweepRow } from "./types.js";

/** Variable symbol -> deal field it drives (for loading a marker into the form). */
export const BREAKEVEN_VARIABLES: Record<string, string> = {
  S: "sale_price",
  R_ts: "tax_rate_seller_lessee",
  monthly_rent: "monthly_rent",
  P_dss: "p_bankrupt_slb",
};

export const DEFAULT_SWEEP_STEPS = 41;

export interface BreakevenPanel {
  variable: string;
  /** Sweep rows for the curve; empty when the sweep itself failed. */
  curve: SweepRow[];
  /** Crossing point, or null when the solver reported no sign change. */
  marker: BreakevenResult | null;
  /** Service error text (verbatim), or null. */
  error: string | null;
}

/**
 * Client-side bracket gate. Returns the rejection reason or null when the
 * bracket is worth sending.
 */
export function bracketProblem(lo: number, hi: number): string | null {
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) {
    return "bracket endpoints must be finite numbers";
  }
  if (lo === hi) {
    return `single-point bracket (${lo}, ${hi}) cannot contain a crossing`;
  }
  if (lo > hi) {
    return `bracket must satisfy lo < hi, got (${lo}, ${hi})`;
  }
  return null;
}

export async function runBreakevenPanel(
  client: DecisionClient,
  scenario: Scenario,
  variable: string,
  lo: number,
  hi: number,
  steps: number = DEFAULT_SWEEP_STEPS
): Promise<BreakevenPanel> {
  if (!(variable in BREAKEVEN_VARIABLES)) {
    return {
      variable,
      curve: [],
      marker: null,
      error: `unknown breakeven variable ${JSON.stringify(variable)}; expected one of ${Object.keys(BREAKEVEN_VARIABLES).join(", ")}`,
    };
  }
  const problem = bracketProblem(lo, hi);
  if (problem !== null) {
    return { variable, curve: [], marker: null, error: problem };
  }

  const [sweepEnv, breakevenEnv] = await Promise.all([
    client.sweep(scenario, variable, lo, hi, steps),
    client.breakeven(scenario, variable, lo, hi),
  ]);

  if (!sweepEnv.ok) {
    return { variable, curve: [], marker: null, error: sweepEnv.error.message };
  }

  if (!breakevenEnv.ok) {
    // Typically the no-sign-change report, message carrying g(lo) and g(hi).
    return {
      variable,
      curve: sweepEnv.result.rows,
      marker: null,
      error: breakevenEnv.error.message,
    };
  }

  return {
    variable,
    curve: sweepEnv.result.rows,
    marker: breakevenEnv.result,
    error: null,
  };
}
