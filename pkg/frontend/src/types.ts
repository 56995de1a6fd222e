/**
 * Wire types for the decision-service HTTP API.
 *
 * These mirror the JSON the service emits, field for field. The UI treats
 * every numeric value as opaque: it is rendered as received, never recomputed.
 */

/** One sampled curve in a scenario. */
export interface CurveSpec {
  interpolation: string;
  xs: number[];
  ys: number[];
}

/** The deal block of a scenario. All 26 keys are present in canonical form. */
export interface DealBlock {
  sale_price: number;
  loan_principal: number;
  monthly_rent: number;
  term_months: number;
  implicit_lease_rate: number;
  borrow_cost_before: number;
  borrow_cost_after: number;
  firm_borrow_cost: number;
  tax_rate_seller_lessee: number;
  tax_rate_buyer_lessor: number;
  txn_cost_slb: number;
  txn_cost_loan: number;
  leverage_benefit: number;
  leverage_penalty_rate: number;
  debt_to_capital: number;
  total_capital: number;
  terminal_value_pv: number;
  p_bankrupt_slb: number;
  p_bankrupt_borrow: number;
  p_lessor_bankrupt_slb: number;
  p_lessor_bankrupt_borrow: number;
  p_taxable_income: number;
  classification: "capital" | "operating";
  depreciation_basis: number | null;
  depreciation_life_months: number | null;
  discount_rate: number | null;
}

export interface ScenarioMeta {
  name: string;
  lifecycle_stage: string;
  notes: string;
}

export interface ScenarioOptions {
  mode: string;
  fd_step_fraction: number | null;
  breakeven_tol: number;
  breakeven_max_iterations: number;
}

/** A scenario document, schema version 1. */
export interface Scenario {
  schema_version: string;
  meta: ScenarioMeta;
  deal: DealBlock;
  curves: Record<string, CurveSpec>;
  options: ScenarioOptions;
}

export interface AmortizationRow {
  period: number;
  payment: number;
  interest: number;
  principal: number;
  balance_after: number;
}

export interface DepreciationRow {
  period: number;
  amount: number;
}

export interface CashflowBlock {
  L_s: number;
  I: number;
  D: number;
  TV: number;
  schedules?: {
    amortization?: AmortizationRow[];
    depreciation?: DepreciationRow[];
  };
}

export interface NetPositionBlock {
  value: number;
  components: Record<string, number>;
  survival_factor: number;
  notes: string[];
}

export interface ConditionRow {
  id: string;
  holds: boolean;
  lhs: number;
  rhs: number;
  margin: number;
  inputs_echo: Record<string, number>;
  text: string;
  notes: string[];
}

export type Recommendation =
  | "Borrow"
  | "SaleLeaseback"
  | "NoAction"
  | "Indeterminate";

/** The full report document returned by POST /api/v1/evaluate. */
export interface ReportDocument {
  tool: { name: string; version: string };
  generated_at: string;
  scenario: Scenario;
  cashflows: CashflowBlock;
  n_sl: NetPositionBlock;
  n_b: NetPositionBlock;
  conditions: ConditionRow[];
  recommendation: Recommendation;
  failed_conditions: string[];
  warnings: string[];
}

export interface BreakevenResult {
  variable: string;
  value: number;
  residual: number;
  iterations: number;
  bracket: [number, number];
}

export interface SweepRow {
  x: number;
  n_sl: number | null;
  n_b: number | null;
  recommendation: Recommendation | null;
  error: string | null;
  is_argmax_n_sl: boolean;
  is_argmax_n_b: boolean;
}

export interface SweepResult {
  variable: string;
  rows: SweepRow[];
}

export interface TornadoRow {
  parameter: string;
  base: number;
  x_down: number;
  x_up: number;
  delta_n_sl_down: number;
  delta_n_sl_up: number;
  delta_n_b_down: number;
  delta_n_b_up: number;
  delta_gap_down: number;
  delta_gap_up: number;
  rank_key: number;
}

export interface TornadoResult {
  perturbation: number;
  rows: TornadoRow[];
}

export interface ServiceError {
  code: string;
  message: string;
  path: string | null;
}

/** Every endpoint wraps its payload in this envelope. */
export type Envelope<T> =
  | { ok: true; result: T }
  | { ok: false; error: ServiceError };

export interface HealthResult {
  status: string;
  version: string;
}
