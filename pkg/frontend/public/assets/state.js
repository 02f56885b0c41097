/** Pure view-state logic: rank deltas, form parsing, click de-duplication. */
import { MODES } from "./api.js";
/** The mode dropdown: the four service modes plus the side-by-side view. */
export const VIEWS = [...MODES, "split"];
export function isView(value) {
    return VIEWS.includes(value);
}
/** Service mode whose results the active view displays. */
export function modeOfView(view) {
    return view === "split" ? "comprehensive" : view;
}
/**
 * Per-document rank movement relative to the baseline response:
 * baseline rank minus current rank, so positive means the doc moved up.
 * Documents absent from the baseline map to null ("new").
 */
export function rankDeltas(current, baseline) {
    const baselineRank = new Map();
    for (const result of baseline.results)
        baselineRank.set(result.id, result.rank);
    const deltas = new Map();
    for (const result of current.results) {
        const before = baselineRank.get(result.id);
        deltas.set(result.id, before === undefined ? null : before - result.rank);
    }
    return deltas;
}
export function parseHobbies(text) {
    return text
        .split(",")
        .map((hobby) => hobby.trim())
        .filter((hobby) => hobby.length > 0);
}
export function hobbiesText(hobbies) {
    return hobbies.join(", ");
}
/**
 * Serializes an async action per key so rapid repeat triggers fire it once:
 * while a key's action is in flight, further runs for that key are dropped.
 */
export class SingleFlight {
    pending = new Set();
    get inFlight() {
        return this.pending.size;
    }
    async run(key, action) {
        if (this.pending.has(key))
            return false;
        this.pending.add(key);
        try {
            await action();
            return true;
        }
        finally {
            this.pending.delete(key);
        }
    }
}
