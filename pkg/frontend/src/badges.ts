/**
 * Condition badges: one per condition row in the report. A badge's state
 * mirrors the row's `holds` exactly, and its tooltip quotes the condition
 * text carried in the report itself.
 */

import type { ConditionRow, ReportDocument } from "./types.js";

export interface ConditionBadge {
  id: string;
  /** Mirrors ConditionRow.holds with no reinterpretation. */
  state: "holds" | "fails";
  margin: number;
  /** Quoted from the report's own text field. */
  tooltip: string;
}

export function badgeFor(row: ConditionRow): ConditionBadge {
  return {
    id: row.id,
    state: row.holds ? "holds" : "fails",
    margin: row.margin,
    tooltip: row.text,
  };
}

export function conditionBadges(report: ReportDocument): ConditionBadge[] {
  return report.conditions.map(badgeFor);
}
