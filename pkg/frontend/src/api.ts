/** Typed client for the conceptsearch HTTP API. */

export const MODES = ["baseline", "personalized", "history", "comprehensive"] as const;
export type Mode = (typeof MODES)[number];

export const GENDERS = ["female", "male", "unspecified"] as const;
export type Gender = (typeof GENDERS)[number];

export interface SearchResult {
  id: string;
  rank: number;
  snippet: string;
  base_score: number;
  new_score: number;
  categories: string[];
  matched_concept: string | null;
  clicked: boolean;
  hot: boolean;
}

export interface SearchResponse {
  query: string;
  mode: Mode;
  results: SearchResult[];
}

export interface Profile {
  user_id: string;
  occupation: string;
  hobbies: string[];
  gender: Gender;
}

export interface SearchOptions {
  user?: string;
  mode?: Mode;
  k?: number;
  signal?: AbortSignal;
}

/** The service surface the UI depends on; ApiClient is the HTTP implementation. */
export interface SearchApi {
  search(query: string, options?: SearchOptions): Promise<SearchResponse>;
  click(userId: string, docId: string): Promise<void>;
  putProfile(profile: Profile): Promise<Profile>;
  getProfile(userId: string): Promise<Profile | null>;
  health(): Promise<boolean>;
}

/** Non-2xx response, carrying the service's detail message. */
export class ApiError extends Error {
  readonly status: number;
  readonly detail: string;

  constructor(status: number, detail: string) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
    this.status = status;
    this.detail = detail;
  }
}

async function detailOf(response: Response): Promise<string> {
  try {
    const body: unknown = await response.json();
    if (body && typeof body === "object" && "detail" in body) {
      return String((body as { detail: unknown }).detail);
    }
  } catch {
    // fall through to the status line
  }
  return response.statusText || `status ${response.status}`;
}

export class ApiClient implements SearchApi {
  private readonly baseUrl: string;
  private readonly fetchImpl: typeof fetch;

  constructor(baseUrl = "", fetchImpl?: typeof fetch) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    // keep fetch's own this-binding when running in a browser
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      throw new ApiError(response.status, await detailOf(response));
    }
    return response;
  }

  async search(query: string, options: SearchOptions = {}): Promise<SearchResponse> {
    const params = new URLSearchParams({ q: query });
    if (options.user) params.set("user", options.user);
    if (options.mode) params.set("mode", options.mode);
    if (options.k !== undefined) params.set("k", String(options.k));
    const response = await this.request(`/search?${params.toString()}`, {
      signal: options.signal,
    });
    return (await response.json()) as SearchResponse;
  }

  /** Records one click; resolves on the service's 204. */
  async click(userId: string, docId: string): Promise<void> {
    await this.request("/click", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ user_id: userId, doc_id: docId }),
    });
  }

  async putProfile(profile: Profile): Promise<Profile> {
    const response = await this.request(
      `/profile/${encodeURIComponent(profile.user_id)}`,
      {
        method: "PUT",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({
          occupation: profile.occupation,
          hobbies: profile.hobbies,
          gender: profile.gender,
        }),
      },
    );
    return (await response.json()) as Profile;
  }

  /** null when the user has no stored profile yet. */
  async getProfile(userId: string): Promise<Profile | null> {
    try {
      const response = await this.request(`/profile/${encodeURIComponent(userId)}`);
      return (await response.json()) as Profile;
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) return null;
      throw err;
    }
  }

  async health(): Promise<boolean> {
    try {
      const response = await this.fetchImpl(`${this.baseUrl}/healthz`);
      return response.ok;
    } catch {
      return false;
    }
  }
}
