/** Typed client for the conceptsearch HTTP API. */
export const MODES = ["baseline", "personalized", "history", "comprehensive"];
export const GENDERS = ["female", "male", "unspecified"];
/** Non-2xx response, carrying the service's detail message. */
export class ApiError extends Error {
    status;
    detail;
    constructor(status, detail) {
        super(`HTTP ${status}: ${detail}`);
        this.name = "ApiError";
        this.status = status;
        this.detail = detail;
    }
}
async function detailOf(response) {
    try {
        const body = await response.json();
        if (body && typeof body === "object" && "detail" in body) {
            return String(body.detail);
        }
    }
    catch {
        // fall through to the status line
    }
    return response.statusText || `status ${response.status}`;
}
export class ApiClient {
    baseUrl;
    fetchImpl;
    constructor(baseUrl = "", fetchImpl) {
        this.baseUrl = baseUrl.replace(/\/+$/, "");
        // keep fetch's own this-binding when running in a browser
        this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
    }
    async request(path, init) {
        const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
        if (!response.ok) {
            throw new ApiError(response.status, await detailOf(response));
        }
        return response;
    }
    async search(query, options = {}) {
        const params = new URLSearchParams({ q: query });
        if (options.user)
            params.set("user", options.user);
        if (options.mode)
            params.set("mode", options.mode);
        if (options.k !== undefined)
            params.set("k", String(options.k));
        const response = await this.request(`/search?${params.toString()}`, {
            signal: options.signal,
        });
        return (await response.json());
    }
    /** Records one click; resolves on the service's 204. */
    async click(userId, docId) {
        await this.request("/click", {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({ user_id: userId, doc_id: docId }),
        });
    }
    async putProfile(profile) {
        const response = await this.request(`/profile/${encodeURIComponent(profile.user_id)}`, {
            method: "PUT",
            headers: { "content-type": "application/json" },
            body: JSON.stringify({
                occupation: profile.occupation,
                hobbies: profile.hobbies,
                gender: profile.gender,
            }),
        });
        return (await response.json());
    }
    /** null when the user has no stored profile yet. */
    async getProfile(userId) {
        try {
            const response = await this.request(`/profile/${encodeURIComponent(userId)}`);
            return (await response.json());
        }
        catch (err) {
            if (err instanceof ApiError && err.status === 404)
                return null;
            throw err;
        }
    }
    async health() {
        try {
            const response = await this.fetchImpl(`${this.baseUrl}/healthz`);
            return response.ok;
        }
        catch {
            return false;
        }
    }
}
