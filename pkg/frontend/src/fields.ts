/**
 * Catalog of editable deal fields: display labels, input kinds, and the
 * client-side bound checks applied before a value is accepted into the form.
 *
 * Rates, probabilities, and the debt-to-capital fraction live on the unit
 * interval. The service treats values strictly outside [0, 1] as violations
 * and values sitting exactly on 0 or 1 as evaluable warnings, so the inputs
 * here block only the former and let the endpoints through.
 */

import type { DealBlock } from "./types.js";

export type FieldKind =
  | "currency"
  | "rate"
  | "probability"
  | "fraction"
  | "months"
  | "choice";

export interface FieldSpec {
  /** Key into scenario.deal. */
  name: keyof DealBlock;
  label: string;
  kind: FieldKind;
  /** Short symbol shown next to the label where one exists. */
  symbol?: string;
}

/** Editable deal fields in canonical scenario order. */
export const DEAL_FIELDS: FieldSpec[] = [
  { name: "sale_price", label: "Sale price", kind: "currency", symbol: "S" },
  { name: "loan_principal", label: "Loan principal", kind: "currency", symbol: "P" },
  { name: "monthly_rent", label: "Monthly rent", kind: "currency" },
  { name: "term_months", label: "Term (months)", kind: "months" },
  { name: "implicit_lease_rate", label: "Implicit lease rate", kind: "rate", symbol: "R_s" },
  { name: "borrow_cost_before", label: "Borrow cost before", kind: "rate", symbol: "R_bb" },
  { name: "borrow_cost_after", label: "Borrow cost after", kind: "rate", symbol: "R_ba" },
  { name: "firm_borrow_cost", label: "Firm borrow cost", kind: "rate", symbol: "R_f" },
  { name: "tax_rate_seller_lessee", label: "Seller/lessee tax rate", kind: "rate", symbol: "R_ts" },
  { name: "tax_rate_buyer_lessor", label: "Buyer/lessor tax rate", kind: "rate", symbol: "R_tb" },
  { name: "txn_cost_slb", label: "SLB transaction cost", kind: "rate", symbol: "R_sl" },
  { name: "txn_cost_loan", label: "Loan transaction cost", kind: "rate", symbol: "R_ltc" },
  { name: "leverage_benefit", label: "Leverage benefit (PV)", kind: "currency", symbol: "R_a" },
  { name: "leverage_penalty_rate", label: "Leverage penalty rate", kind: "rate", symbol: "R_dlev" },
  { name: "debt_to_capital", label: "Debt to capital", kind: "fraction", symbol: "DC" },
  { name: "total_capital", label: "Total capital", kind: "currency", symbol: "TC" },
  { name: "terminal_value_pv", label: "Terminal value (PV)", kind: "currency", symbol: "TV" },
  { name: "p_bankrupt_slb", label: "P(bankrupt | SLB)", kind: "probability", symbol: "P_dss" },
  { name: "p_bankrupt_borrow", label: "P(bankrupt | borrow)", kind: "probability", symbol: "P_dsb" },
  { name: "p_lessor_bankrupt_slb", label: "P(lessor bankrupt | SLB)", kind: "probability", symbol: "P_dls" },
  { name: "p_lessor_bankrupt_borrow", label: "P(lessor bankrupt | borrow)", kind: "probability", symbol: "P_dlb" },
  { name: "p_taxable_income", label: "P(taxable income)", kind: "probability", symbol: "P_t" },
  { name: "classification", label: "Lease classification", kind: "choice" },
  { name: "depreciation_basis", label: "Depreciation basis", kind: "currency" },
  { name: "depreciation_life_months", label: "Depreciation life (months)", kind: "months" },
  { name: "discount_rate", label: "Discount rate", kind: "rate" },
];

const BY_NAME = new Map(DEAL_FIELDS.map((spec) => [spec.name, spec]));

export function fieldSpec(name: string): FieldSpec | undefined {
  return BY_NAME.get(name as keyof DealBlock);
}

/** Kinds rendered as a slider plus a number input, bounded to the unit interval. */
export function isSliderKind(kind: FieldKind): boolean {
  return kind === "rate" || kind === "probability" || kind === "fraction";
}

/**
 * Decide whether a candidate value must be blocked before it reaches the
 * scenario. Returns a human-readable reason, or null when the value passes.
 *
 * Blocking here is an input gate only; everything that passes still goes to
 * the service, which owns the real validation.
 */
export function blockedReason(spec: FieldSpec, value: number | string): string | null {
  if (spec.kind === "choice") {
    return value === "capital" || value === "operating"
      ? null
      : `expected "capital" or "operating", got ${JSON.stringify(value)}`;
  }
  const num = typeof value === "number" ? value : Number(value);
  if (!Number.isFinite(num)) {
    return "expected a finite number";
  }
  if (isSliderKind(spec.kind) && (num < 0 || num > 1)) {
    return `out of (0,1): ${num}`;
  }
  if (spec.kind === "months" && (!Number.isInteger(num) || num < 1)) {
    return `expected a whole number of months >= 1, got ${num}`;
  }
  return null;
}
