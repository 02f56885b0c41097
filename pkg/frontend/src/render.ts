/** DOM views over API payloads.
 *
 * Rendering is a faithful projection: rows appear exactly in response order,
 * never filtered, re-scored, or re-sorted here. All elements are created via
 * the container's own document so any DOM implementation works.
 */

import type { Profile, SearchResponse, SearchResult } from "./api.js";

export interface ProfileFields {
  occupation: HTMLInputElement;
  hobbies: HTMLInputElement;
  gender: HTMLSelectElement;
}

function doc(container: HTMLElement): Document {
  return container.ownerDocument;
}

function el(
  container: HTMLElement,
  tag: string,
  className: string,
  text?: string,
): HTMLElement {
  const node = doc(container).createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function deltaBadgeText(delta: number | null): string {
  if (delta === null) return "new";
  if (delta > 0) return `▲${delta}`;
  if (delta < 0) return `▼${-delta}`;
  return "0";
}

function deltaClass(delta: number | null): string {
  if (delta === null) return "delta delta-new";
  if (delta > 0) return "delta delta-up";
  if (delta < 0) return "delta delta-down";
  return "delta delta-zero";
}

function resultRow(
  container: HTMLElement,
  result: SearchResult,
  delta: number | null,
  onResultClick: (docId: string) => void,
): HTMLElement {
  const row = el(container, "li", "result");
  row.dataset.docId = result.id;

  const head = el(container, "div", "result-head");
  head.appendChild(el(container, "span", "rank", String(result.rank)));
  head.appendChild(el(container, "span", deltaClass(delta), deltaBadgeText(delta)));
  head.appendChild(el(container, "span", "doc-id", result.id));
  if (result.clicked) head.appendChild(el(container, "span", "badge clicked", "clicked"));
  if (result.hot) head.appendChild(el(container, "span", "badge hot", "hot"));
  row.appendChild(head);

  row.appendChild(el(container, "p", "snippet", result.snippet));

  const meta = el(container, "div", "result-meta");
  meta.appendChild(
    el(
      container,
      "span",
      "scores",
      `score ${result.base_score.toFixed(4)} → ${result.new_score.toFixed(4)}`,
    ),
  );
  for (const category of result.categories) {
    const matched = category === result.matched_concept;
    meta.appendChild(
      el(container, "span", matched ? "category matched" : "category", category),
    );
  }
  row.appendChild(meta);

  row.addEventListener("click", () => onResultClick(result.id));
  return row;
}

export function renderResults(
  container: HTMLElement,
  response: SearchResponse,
  deltas: Map<string, number | null>,
  onResultClick: (docId: string) => void,
): void {
  container.textContent = "";
  if (response.results.length === 0) {
    container.appendChild(el(container, "p", "placeholder", "no results"));
    return;
  }
  const list = el(container, "ul", "results");
  for (const result of response.results) {
    list.appendChild(
      resultRow(container, result, deltas.get(result.id) ?? null, onResultClick),
    );
  }
  container.appendChild(list);
}

/** Baseline and comprehensive side by side; deltas on the right pane only. */
export function renderSplit(
  container: HTMLElement,
  baseline: SearchResponse,
  comprehensive: SearchResponse,
  deltas: Map<string, number | null>,
  onResultClick: (docId: string) => void,
): void {
  container.textContent = "";
  const zero = new Map<string, number | null>(
    baseline.results.map((result) => [result.id, 0]),
  );
  for (const [label, response, paneDeltas] of [
    ["baseline", baseline, zero],
    ["comprehensive", comprehensive, deltas],
  ] as const) {
    const pane = el(container, "section", `pane pane-${label}`);
    pane.appendChild(el(container, "h3", "pane-title", label));
    const body = el(container, "div", "pane-body");
    renderResults(body, response, paneDeltas, onResultClick);
    pane.appendChild(body);
    container.appendChild(pane);
  }
}

/** Shows the message, or hides the banner when message is null. */
export function renderError(banner: HTMLElement, message: string | null): void {
  banner.textContent = message ?? "";
  banner.hidden = message === null;
}

export function fillProfileForm(fields: ProfileFields, profile: Profile): void {
  fields.occupation.value = profile.occupation;
  fields.hobbies.value = profile.hobbies.join(", ");
  fields.gender.value = profile.gender;
}
