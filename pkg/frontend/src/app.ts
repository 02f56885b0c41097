/** Page controller: wires the form controls to the API client and views.
 *
 * Ranking always comes from the service; this layer only fetches, renders,
 * and forwards clicks. A newer search aborts any in-flight one, and each
 * result click posts at most one click event.
 */

import { ApiClient, ApiError, type Gender, type SearchApi, type SearchResponse } from "./api.js";
import {
  SingleFlight,
  isView,
  modeOfView,
  parseHobbies,
  rankDeltas,
  type View,
} from "./state.js";
import {
  fillProfileForm,
  renderError,
  renderResults,
  renderSplit,
  type ProfileFields,
} from "./render.js";

export interface AppElements {
  searchForm: HTMLFormElement;
  queryInput: HTMLInputElement;
  userInput: HTMLInputElement;
  viewSelect: HTMLSelectElement;
  results: HTMLElement;
  errorBanner: HTMLElement;
  profileForm: HTMLFormElement;
  profileFields: ProfileFields;
  profileStatus: HTMLElement;
}

function isAbort(err: unknown): boolean {
  return err instanceof Error && err.name === "AbortError";
}

export class App {
  readonly elements: AppElements;
  readonly client: SearchApi;
  private controller: AbortController | null = null;
  private readonly clicks = new SingleFlight();
  lastResponse: SearchResponse | null = null;
  lastBaseline: SearchResponse | null = null;

  constructor(elements: AppElements, client: SearchApi) {
    this.elements = elements;
    this.client = client;
  }

  get view(): View {
    const value = this.elements.viewSelect.value;
    return isView(value) ? value : "comprehensive";
  }

  wire(): void {
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
  async refresh(): Promise<void> {
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
      const baseline =
        mode === "baseline"
          ? current
          : await this.client.search(query, {
              user,
              mode: "baseline",
              signal: controller.signal,
            });
      if (controller.signal.aborted) return;
      this.lastResponse = current;
      this.lastBaseline = baseline;
      const deltas = rankDeltas(current, baseline);
      if (this.view === "split") {
        renderSplit(results, baseline, current, deltas, this.onResultClick);
      } else {
        renderResults(results, current, deltas, this.onResultClick);
      }
      renderError(errorBanner, null);
    } catch (err) {
      if (isAbort(err)) return;
      renderError(errorBanner, err instanceof Error ? err.message : String(err));
    }
  }

  private readonly onResultClick = (docId: string): void => {
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
      .catch((err: unknown) => {
        renderError(
          this.elements.errorBanner,
          err instanceof Error ? err.message : String(err),
        );
      });
  };

  async saveProfile(): Promise<void> {
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
        gender: profileFields.gender.value as Gender,
      });
      profileStatus.textContent = "saved";
      renderError(errorBanner, null);
      if (this.elements.queryInput.value.trim()) await this.refresh();
    } catch (err) {
      // validation problems stay next to the form; the state is untouched
      profileStatus.textContent =
        err instanceof ApiError ? err.detail : "could not save profile";
    }
  }

  async loadProfile(): Promise<void> {
    const { userInput, profileFields, profileStatus } = this.elements;
    const user = userInput.value.trim();
    if (!user) return;
    try {
      const profile = await this.client.getProfile(user);
      if (profile) {
        fillProfileForm(profileFields, profile);
        profileStatus.textContent = "profile loaded";
      } else {
        profileStatus.textContent = "no stored profile";
      }
    } catch (err) {
      profileStatus.textContent =
        err instanceof Error ? err.message : String(err);
    }
  }
}

export function initApp(root: Document, client: SearchApi = new ApiClient()): App {
  const byId = (id: string): HTMLElement => {
    const node = root.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node;
  };
  const app = new App(
    {
      searchForm: byId("search-form") as HTMLFormElement,
      queryInput: byId("query") as HTMLInputElement,
      userInput: byId("user") as HTMLInputElement,
      viewSelect: byId("view") as HTMLSelectElement,
      results: byId("results"),
      errorBanner: byId("error"),
      profileForm: byId("profile-form") as HTMLFormElement,
      profileFields: {
        occupation: byId("occupation") as HTMLInputElement,
        hobbies: byId("hobbies") as HTMLInputElement,
        gender: byId("gender") as HTMLSelectElement,
      },
      profileStatus: byId("profile-status"),
    },
    client,
  );
  app.wire();
  return app;
}

declare const document: Document | undefined;

if (typeof document !== "undefined" && document.getElementById("search-form")) {
  initApp(document);
}
