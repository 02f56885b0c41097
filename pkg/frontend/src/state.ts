/** Pure view-state logic: rank deltas, form parsing, click de-duplication. */

import type { Mode, SearchResponse } from "./api.js";
import { MODES } from "./api.js";

/** The mode dropdown: the four service modes plus the side-by-side view. */
export const VIEWS = [...MODES, "split"] as const;
export type View = (typeof VIEWS)[number];

export function isView(value: string): value is View {
  return (VIEWS as readonly string[]).includes(value);
}

/** Service mode whose results the active view displays. */
export function modeOfView(view: View): Mode {
  return view === "split" ? "comprehensive" : view;
}

/**
 * Per-document rank movement relative to the baseline response:
 * baseline rank minus current rank, so positive means the doc moved up.
 * Documents absent from the baseline map to null ("new").
 */
export function rankDeltas(
  current: SearchResponse,
  baseline: SearchResponse,
): Map<string, number | null> {
  const baselineRank = new Map<string, number>();
  for (const result of baseline.results) baselineRank.set(result.id, result.rank);
  const deltas = new Map<string, number | null>();
  for (const result of current.results) {
    const before = baselineRank.get(result.id);
    deltas.set(result.id, before === undefined ? null : before - result.rank);
  }
  return deltas;
}

export function parseHobbies(text: string): string[] {
  return text
    .split(",")
    .map((hobby) => hobby.trim())
    .filter((hobby) => hobby.length > 0);
}

export function hobbiesText(hobbies: string[]): string {
  return hobbies.join(", ");
}

/**
 * Serializes an async action per key so rapid repeat triggers fire it once:
 * while a key's action is in flight, further runs for that key are dropped.
 */
export class SingleFlight {
  private readonly pending = new Set<string>();

  get inFlight(): number {
    return this.pending.size;
  }

  async run(key: string, action: () => Promise<void>): Promise<boolean> {
    if (this.pending.has(key)) return false;
    this.pending.add(key);
    try {
      await action();
      return true;
    } finally {
      this.pending.delete(key);
    }
  }
}
