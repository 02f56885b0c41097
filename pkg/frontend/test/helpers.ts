import type { Mode, SearchResponse, SearchResult } from "../src/api.js";

export function makeResult(id: string, rank: number, extra: Partial<SearchResult> = {}): SearchResult {
  return {
    id,
    rank,
    snippet: `snippet of ${id}`,
    base_score: 1 / rank,
    new_score: 1 / rank,
    categories: ["general"],
    matched_concept: null,
    clicked: false,
    hot: false,
    ...extra,
  };
}

export function makeResponse(
  ids: string[],
  mode: Mode = "baseline",
  query = "q",
): SearchResponse {
  return {
    query,
    mode,
    results: ids.map((id, index) => makeResult(id, index + 1)),
  };
}
