/** Page controller: wires the form controls to the API client and views.
 *
 * Ranking always comes from the service; this layer only fetches, renders,
 * and forwards clicks. A newer search aborts any in-flight one, and each
 * result click posts at most one click event.
 */
import { ApiClient, ApiError } from "./api.js";
import { SingleFlight, isView, modeOfView, parseHobbies, rankDeltas, } from "./state.js";
import { fillProfileForm, renderError, renderResults, renderSplit, } from "./render.js";
function isAbort(err) {
    return err instanceof Error && err.name === "AbortError";
}
export class App {
    elements;
    client;
    controller = null;
    clicks = new SingleFlight();
    lastResponse = null;
    lastBaseline = null;
    constructor(elements, client) {
        this.elements = elements;
        this.client = client;
    }
    get view() {
        const value = this.elements.viewSelect.value;
        return isView(value) ? value : "comprehensive";
    }
    wire() {
        const { searchForm, viewSelect, userInput, profileForm } = this.elements;
        searchForm.addEventListener("submit", (event) => {
            event.preventDefault();
            void this.refresh();
        });
        viewSelect.addEventListener("change", () => void this.refresh());
        userInput.addEventListener("change", () => void this.loadProfile());
        profileForm.addEventListener("submit", (event) => {
            event.preventDefault();
            void this.saveProfile();
        });
    }
    /** Re-runs the current query in the active view, superseding any in-flight search. */
    async refresh() {
        const { queryInput, userInput, results, errorBanner } = this.elements;
        const query = queryInput.value.trim();
        if (!query) {
            this.controller?.abort();
            results.textContent = "";
            return;
        }
        this.controller?.abort();
        const controller = new AbortController();
        this.controller = controller;
        const user = userInput.value.trim() || undefined;
        const mode = modeOfView(this.view);
        try {
            const current = await this.client.search(query, {
                user,
                mode,
                signal: controller.signal,
            });
            const baseline = mode === "baseline"
                ? current
                : await this.client.search(query, {
                    user,
                    mode: "baseline",
                    signal: controller.signal,
                });
            if (controller.signal.aborted)
                return;
            this.lastResponse = current;
            this.lastBaseline = baseline;
            const deltas = rankDeltas(current, baseline);
            if (this.view === "split") {
                renderSplit(results, baseline, current, deltas, this.onResultClick);
            }
            else {
                renderResults(results, current, deltas, this.onResultClick);
            }
            renderError(errorBanner, null);
        }
        catch (err) {
            if (isAbort(err))
                return;
            renderError(errorBanner, err instanceof Error ? err.message : String(err));
        }
    }
    onResultClick = (docId) => {
        const user = this.elements.userInput.value.trim();
        if (!user) {
            renderError(this.elements.errorBanner, "set a user id to record clicks");
            return;
        }
        void this.clicks
            .run(docId, async () => {
            await this.client.click(user, docId);
            await this.refresh();
        })
            .catch((err) => {
            renderError(this.elements.errorBanner, err instanceof Error ? err.message : String(err));
        });
    };
    async saveProfile() {
        const { userInput, profileFields, profileStatus, errorBanner } = this.elements;
        const user = userInput.value.trim();
        if (!user) {
            profileStatus.textContent = "set a user id first";
            return;
        }
        try {
            await this.client.putProfile({
                user_id: user,
                occupation: profileFields.occupation.value.trim(),
                hobbies: parseHobbies(profileFields.hobbies.value),
                gender: profileFields.gender.value,
            });
            profileStatus.textContent = "saved";
            renderError(errorBanner, null);
            if (this.elements.queryInput.value.trim())
                await this.refresh();
        }
        catch (err) {
            // validation problems stay next to the form; the state is untouched
            profileStatus.textContent =
                err instanceof ApiError ? err.detail : "could not save profile";
        }
    }
    async loadProfile() {
        const { userInput, profileFields, profileStatus } = this.elements;
        const user = userInput.value.trim();
        if (!user)
            return;
        try {
            const profile = await this.client.getProfile(user);
            if (profile) {
                fillProfileForm(profileFields, profile);
                profileStatus.textContent = "profile loaded";
            }
            else {
                profileStatus.textContent = "no stored profile";
            }
        }
        catch (err) {
            profileStatus.textContent =
                err instanceof Error ? err.message : String(err);
        }
    }
}
export function initApp(root, client = new ApiClient()) {
    const byId = (id) => {
        const node = root.getElementById(id);
        if (!node)
            throw new Error(`missing element #${id}`);
        return node;
    };
    const app = new App({
        searchForm: byId("search-form"),
        queryInput: byId("query"),
        userInput: byId("user"),
        viewSelect: byId("view"),
        results: byId("results"),
        errorBanner: byId("error"),
        profileForm: byId("profile-form"),
        profileFields: {
            occupation: byId("occupation"),
            hobbies: byId("hobbies"),
            gender: byId("gender"),
        },
        profileStatus: byId("profile-status"),
    }, client);
    app.wire();
    return app;
}
if (typeof document !== "undefined" && document.getElementById("search-form")) {
    initApp(document);
}
