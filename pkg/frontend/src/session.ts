/**
 * Session state for the what-if dashboard.
 *
 * Holds the scenario being edited, the last report the service produced,
 * and the bookkeeping around them:
 *
 *   - `dirty` is true exactly while there are edits the service has not
 *     evaluated yet.
 *   - the report on display always corresponds to some snapshot in
 *     `history`; reports enter the session only through a successful
 *     evaluate (pushed as a snapshot) or through undo (restored from one).
 *   - at most one evaluate request is in flight. Every mutation advances a
 *     sequence number; a response is applied only if it carries the newest
 *     number, otherwise it is discarded and the latest state is re-sent.
 *   - service failures keep the last good report, flag it stale, and raise
 *     a dismissible banner. Schema and validation errors also land on the
 *     offending field via their `path`.
 *
 * No model math happens here: every number shown downstream is a value the
 * service returned.
 */

import type { DecisionClient } from "./api.js";
import type { ReportDocument, Scenario, ServiceError } from "./types.js";
import { blockedReason, fieldSpec } from "./fields.js";
import { debounce } from "./debounce.js";

export interface Snapshot {
  scenario: Scenario;
  report: ReportDocument;
}

export interface Banner {
  code: string;
  message: string;
  path: string | null;
}

export const EVALUATE_DEBOUNCE_MS = 150;

type Listener = (session: Session) => void;

export class Session {
  current: Scenario;
  lastReport: ReportDocument | null = null;
  /** True while edits exist that the service has not evaluated. */
  dirty = false;
  /** True when the report on display predates a failed or pending edit. */
  reportStale = false;
  banner: Banner | null = null;
  /** Inline errors keyed by scenario path, e.g. "deal.sale_price". */
  fieldErrors: Record<string, string> = {};
  /** Snapshots of (scenario, report) pairs, oldest first. */
  readonly history: Snapshot[] = [];

  private readonly client: DecisionClient;
  private readonly listeners: Listener[] = [];
  /** Advances on every scenario mutation; requests carry the value they saw. */
  private seq = 0;
  /** Sequence number of the in-flight request, or null when idle. */
  private inFlight: number | null = null;
  /** Debounced evaluate, armed by edits and disarmed by load/undo/evaluate. */
  private readonly scheduleEvaluate = debounce(() => {
    void this.evaluateNow();
  }, EVALUATE_DEBOUNCE_MS);

  constructor(client: DecisionClient, initial: Scenario) {
    this.client = client;
    this.current = structuredClone(initial);
  }

  /** Pending-request marker: an evaluate is on the wire. */
  get pending(): boolean {
    return this.inFlight !== null;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      const at = this.listeners.indexOf(listener);
      if (at >= 0) this.listeners.splice(at, 1);
    };
  }

  private notify(): void {
    for (const listener of [...this.listeners]) listener(this);
  }

  /**
   * Replace the scenario (from a file or a template) and evaluate at once,
   * skipping the debounce. Resolves when the response has settled.
   */
  async loadScenario(scenario: Scenario): Promise<void> {
    this.scheduleEvaluate.cancel();
    this.current = structuredClone(scenario);
    this.seq += 1;
    this.dirty = true;
    this.fieldErrors = {};
    this.reportStale = this.lastReport !== null;
    this.notify();
    await this.evaluateNow();
  }

  /** Parse scenario text (import); syntax problems become a banner. */
  async importScenario(text: string): Promise<boolean> {
    let parsed: unknown;
    try {
      parsed = JSON.parse(text);
    } catch (err) {
      this.banner = {
        code: "syntax",
        message: `scenario is not valid JSON: ${err instanceof Error ? err.message : String(err)}`,
        path: null,
      };
      this.notify();
      return false;
    }
    await this.loadScenario(parsed as Scenario);
    return true;
  }

  /** Canonical export of the scenario currently in the form. */
  exportScenario(): string {
    return JSON.stringify(this.current, null, 2) + "\n";
  }

  /**
   * Accept one edited field. Out-of-bound values are blocked before they
   * touch the scenario; accepted values mark the session dirty and schedule
   * a debounced evaluate. Returns the blocking reason, or null on accept.
   */
  onParameterChange(field: string, value: number | string): string | null {
    const spec = fieldSpec(field);
    if (!spec) return `unknown field: ${field}`;
    const reason = blockedReason(spec, value);
    if (reason !== null) return reason;

    const deal = this.current.deal as unknown as Record<string, number | string>;
    deal[field] = spec.kind === "choice" ? value : Number(value);
    this.seq += 1;
    this.dirty = true;
    delete this.fieldErrors[`deal.${field}`];
    this.scheduleEvaluate();
    this.notify();
    return null;
  }

  /** Restore the newest snapshot whose state differs from what is shown. */
  undo(): boolean {
    if (this.dirty && this.history.length >= 1) {
      // Un-evaluated edits: fall back to the snapshot on display.
      this.restore(this.history[this.history.length - 1]!);
      return true;
    }
    if (this.history.length >= 2) {
      this.history.pop();
      this.restore(this.history[this.history.length - 1]!);
      return true;
    }
    return false;
  }

  dismissBanner(): void {
    this.banner = null;
    this.notify();
  }

  /** Evaluate immediately (used by load; edits go through the debounce). */
  async evaluateNow(): Promise<void> {
    this.scheduleEvaluate.cancel();
    if (this.inFlight !== null) return; // the settle handler re-sends
    await this.fire();
  }

  private async fire(): Promise<void> {
    const mySeq = this.seq;
    this.inFlight = mySeq;
    const sent = structuredClone(this.current);
    this.notify();

    const envelope = await this.client.evaluate(sent);

    this.inFlight = null;
    if (mySeq !== this.seq) {
      // Stale by sequence number: the scenario changed while this request
      // was on the wire. Drop the response; if the newest state still awaits
      // evaluation, send it now. (After an undo nothing is owed.)
      if (this.dirty) void this.fire();
      return;
    }

    if (envelope.ok) {
      this.lastReport = envelope.result;
      this.history.push({ scenario: sent, report: envelope.result });
      this.dirty = false;
      this.reportStale = false;
      this.banner = null;
      this.fieldErrors = {};
    } else {
      this.applyError(envelope.error);
    }
    this.notify();
  }

  private applyError(error: ServiceError): void {
    this.banner = { code: error.code, message: error.message, path: error.path };
    if ((error.code === "schema" || error.code === "validation") && error.path) {
      this.fieldErrors[error.path] = error.message;
    }
    // Last good report stays on display, marked stale.
    this.reportStale = this.lastReport !== null;
  }

  private restore(snapshot: Snapshot): void {
    this.scheduleEvaluate.cancel();
    this.seq += 1; // anything in flight is now stale
    this.current = structuredClone(snapshot.scenario);
    this.lastReport = snapshot.report;
    this.dirty = false;
    this.reportStale = false;
    this.fieldErrors = {};
    this.notify();
  }
}
