/**
 * The single-page faceted search view: a filter panel on the left, ranked
 * company groups on the right. All scores come from the service; this
 * layer only renders. Facet changes sync to the URL (shareable searches)
 * and fire a latest-wins search; expanding a posting reveals its ranking
 * factor breakdown and emits one session-deduplicated feedback event.
 */

import { ApiClient, ApiError } from "./api.js";
import { SessionClickDedup } from "./click-dedup.js";
import {
  FacetState,
  emptyFacetState,
  fromURLParams,
  isQueryEmpty,
  toQueryJson,
  toURLParams,
} from "./facet-state.js";
import type { CompanyGroup, Contact, SearchResponse } from "./types.js";

const TYPEAHEAD_MIN_CHARS = 2;

interface AppOptions {
  window?: Pick<Window, "history" | "location">;
  initialState?: FacetState;
}

type Phase = "idle" | "loading" | "ready" | "error";

export class SearchApp {
  state: FacetState;
  response: SearchResponse | null = null;
  suggestions: string[] = [];
  contactsByDomain = new Map<string, Contact[] | null>();
  phase: Phase = "idle";
  errorMessage = "";

  private readonly dedup = new SessionClickDedup();
  private readonly win: AppOptions["window"];
  private searchSeq = 0;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    options: AppOptions = {},
  ) {
    this.win = options.window;
    this.state =
      options.initialState ??
      (this.win
        ? fromURLParams(new URLSearchParams(this.win.location.search))
        : emptyFacetState());
    this.render();
  }

  // ----- state transitions -------------------------------------------------

  /** Apply a facet mutation, sync the URL, and kick off a search. */
  async updateFacets(mutate: (state: FacetState) => void): Promise<void> {
    mutate(this.state);
    this.syncUrl();
    await this.runSearch();
  }

  async runSearch(): Promise<void> {
    if (isQueryEmpty(this.state)) {
      this.phase = "idle";
      this.response = null;
      this.render();
      return;
    }
    const seq = ++this.searchSeq;
    this.phase = "loading";
    this.render();
    try {
      const response = await this.api.search(toQueryJson(this.state));
      if (seq !== this.searchSeq) return; // a newer search superseded this one
      this.response = response;
      this.phase = "ready";
    } catch (err) {
      if (err instanceof Error && err.name === "AbortError") return;
      if (seq !== this.searchSeq) return;
      this.phase = "error";
      this.errorMessage =
        err instanceof ApiError ? err.message : "unexpected error";
    }
    this.render();
  }

  async onTypeahead(text: string): Promise<void> {
    this.state.typeaheadText = text;
    if (text.trim().length < TYPEAHEAD_MIN_CHARS) {
      this.suggestions = [];
      this.render();
      return;
    }
    try {
      this.suggestions = await this.api.typeahead(text.trim().toLowerCase());
    } catch {
      this.suggestions = [];
    }
    this.render();
  }

  async addSkill(skill: string): Promise<void> {
    const cleaned = skill.trim().toLowerCase();
    if (!cleaned || this.state.skills.includes(cleaned)) return;
    this.state.typeaheadText = "";
    this.suggestions = [];
    await this.updateFacets((s) => s.skills.push(cleaned));
  }

  /** Expand a posting; the first expansion per session emits feedback. */
  async expandPosting(postingId: string): Promise<void> {
    this.state.expandedPosting =
      this.state.expandedPosting === postingId ? null : postingId;
    this.syncUrl();
    if (this.state.expandedPosting && this.dedup.shouldEmit(postingId)) {
      try {
        await this.api.feedback(postingId);
      } catch {
        // feedback is advisory; losing an event must not break the view
      }
    }
    this.render();
  }

  async revealContacts(domain: string): Promise<void> {
    this.state.selectedGroup =
      this.state.selectedGroup === domain ? null : domain;
    this.syncUrl();
    if (
      this.state.selectedGroup === domain &&
      !this.contactsByDomain.has(domain)
    ) {
      this.contactsByDomain.set(domain, await this.api.contacts(domain));
    }
    this.render();
  }

  private syncUrl(): void {
    if (!this.win) return;
    const params = toURLParams(this.state).toString();
    this.win.history.replaceState(null, "", params ? `?${params}` : "?");
  }

  // ----- rendering ---------------------------------------------------------

  render(): void {
    this.root.innerHTML = "";
    this.root.append(this.renderPanel(), this.renderResults());
  }

  private renderPanel(): HTMLElement {
    const panel = el("div", "facet-panel");

    panel.append(this.renderSkillInput());
    panel.append(
      this.renderChipInput("Technologies", "technologies"),
      this.renderChipInput("Industries", "industries"),
      this.renderChipInput("Micro-industries", "microIndustries"),
      this.renderChipInput("Departments", "departments"),
      this.renderChipInput("Management levels", "managementLevels"),
      this.renderChipInput("Degree keywords", "degreeKeywords"),
      this.renderChipInput("Keywords", "freeKeywords"),
      this.renderRangeInput("Revenue (kUSD)", "revenueRange"),
      this.renderRangeInput("Employees", "employeesRange"),
    );

    const button = el("button", "search-button", "Search") as HTMLButtonElement;
    button.disabled = isQueryEmpty(this.state);
    button.addEventListener("click", () => void this.runSearch());
    panel.append(button);
    if (button.disabled) {
      panel.append(
        el("p", "empty-prompt", "Pick at least one filter to search."),
      );
    }
    return panel;
  }

  private renderSkillInput(): HTMLElement {
    const box = el("div", "facet skills-facet");
    box.append(el("label", "", "Skills"));
    box.append(this.renderChips("skills"));
    const input = el("input", "skill-input") as HTMLInputElement;
    input.value = this.state.typeaheadText;
    input.placeholder = "type 2+ characters…";
    input.addEventListener("input", () => void this.onTypeahead(input.value));
    input.addEventListener("keydown", (event) => {
      if ((event as KeyboardEvent).key === "Enter" && input.value.trim()) {
        void this.addSkill(input.value);
      }
    });
    box.append(input);
    if (this.suggestions.length > 0) {
      const list = el("ul", "typeahead");
      for (const suggestion of this.suggestions) {
        const item = el("li", "suggestion", suggestion);
        item.addEventListener("click", () => void this.addSkill(suggestion));
        list.append(item);
      }
      box.append(list);
    }
    return box;
  }

  private renderChipInput(
    label: string,
    field:
      | "technologies"
      | "industries"
      | "microIndustries"
      | "departments"
      | "managementLevels"
      | "degreeKeywords"
      | "freeKeywords",
  ): HTMLElement {
    const box = el("div", `facet ${field}-facet`);
    box.append(el("label", "", label));
    box.append(this.renderChips(field));
    const input = el("input") as HTMLInputElement;
    input.addEventListener("keydown", (event) => {
      const value = input.value.trim();
      if ((event as KeyboardEvent).key === "Enter" && value) {
        void this.updateFacets((s) => {
          if (!s[field].includes(value)) s[field].push(value);
        });
      }
    });
    box.append(input);
    return box;
  }

  private renderChips(
    field:
      | "skills"
      | "technologies"
      | "industries"
      | "microIndustries"
      | "departments"
      | "managementLevels"
      | "degreeKeywords"
      | "freeKeywords",
  ): HTMLElement {
    const chips = el("span", "chips");
    for (const value of this.state[field]) {
      const chip = el("span", "chip", value);
      const remove = el("button", "chip-remove", "×");
      remove.addEventListener("click", () =>
        void this.updateFacets((s) => {
          (s[field] as string[]) = (s[field] as string[]).filter(
            (v) => v !== value,
          );
        }),
      );
      chip.append(remove);
      chips.append(chip);
    }
    return chips;
  }

  private renderRangeInput(
    label: string,
    field: "revenueRange" | "employeesRange",
  ): HTMLElement {
    const box = el("div", `facet ${field}-facet`);
    box.append(el("label", "", label));
    const minInput = el("input", "range-min") as HTMLInputElement;
    const maxInput = el("input", "range-max") as HTMLInputElement;
    const current = this.state[field];
    minInput.placeholder = "min";
    maxInput.placeholder = "max";
    if (current) {
      minInput.value = current[0] === null ? "" : String(current[0]);
      maxInput.value = current[1] === null ? "" : String(current[1]);
    }
    const apply = () => {
      const lo = minInput.value.trim() === "" ? null : Number(minInput.value);
      const hi = maxInput.value.trim() === "" ? null : Number(maxInput.value);
      void this.updateFacets((s) => {
        s[field] = lo === null && hi === null ? null : [lo, hi];
      });
    };
    minInput.addEventListener("change", apply);
    maxInput.addEventListener("change", apply);
    box.append(minInput, el("span", "", "–"), maxInput);
    return box;
  }

  private renderResults(): HTMLElement {
    const container = el("div", "results");
    if (this.phase === "idle") {
      container.append(el("p", "idle-note", "No search yet."));
      return container;
    }
    if (this.phase === "loading") {
      container.append(el("p", "loading", "Searching…"));
      return container;
    }
    if (this.phase === "error") {
      const banner = el("div", "error-state");
      banner.append(el("p", "error-message", this.errorMessage));
      const retry = el("button", "retry-button", "Retry");
      retry.addEventListener("click", () => void this.runSearch());
      banner.append(retry);
      container.append(banner);
      return container;
    }
    const response = this.response!;
    container.append(
      el(
        "p",
        "summary",
        `${response.total_matches} matching postings across ` +
          `${response.groups.length} companies`,
      ),
    );
    for (const group of response.groups) {
      container.append(this.renderGroup(group));
    }
    return container;
  }

  private renderGroup(group: CompanyGroup): HTMLElement {
    const domain = group.domain ?? "(unresolved company)";
    const card = el("div", "company-group");
    card.dataset.domain = group.domain ?? "";

    const header = el("div", "group-header");
    header.append(el("span", "group-domain", domain));
    header.append(el("span", "group-score", group.best_score.toFixed(4)));
    if (group.company) {
      const c = group.company;
      const bits = [
        c.industry ?? "",
        c.employees !== null ? `${c.employees} employees` : "",
        c.revenue_kusd !== null ? `${c.revenue_kusd} kUSD revenue` : "",
      ].filter(Boolean);
      header.append(el("span", "group-summary", bits.join(" · ")));
    }
    card.append(header);

    if (group.domain) {
      const contactsButton = el("button", "contacts-button", "Contacts");
      const target = group.domain;
      contactsButton.addEventListener("click", () =>
        void this.revealContacts(target),
      );
      card.append(contactsButton);
      if (this.state.selectedGroup === group.domain) {
        card.append(this.renderContacts(group.domain));
      }
    }

    for (const result of group.results) {
      const row = el("div", "posting");
      row.dataset.postingId = result.posting_id;
      const headline = el("div", "posting-headline");
      headline.append(el("span", "posting-id", result.posting_id));
      headline.append(el("span", "posting-score", result.rank_score.toFixed(4)));
      headline.addEventListener("click", () =>
        void this.expandPosting(result.posting_id),
      );
      row.append(headline);
      if (this.state.expandedPosting === result.posting_id) {
        row.append(this.renderFactorBreakdown(result));
      }
      card.append(row);
    }
    return card;
  }

  private renderFactorBreakdown(
    result: CompanyGroup["results"][number],
  ): HTMLElement {
    const detail = el("div", "posting-detail");
    const factors = el("ul", "factor-breakdown");
    const f = result.factors;
    const rows: Array<[string, number]> = [
      ["feedback", f.feedback],
      ["af", f.af],
      ["ef", f.ef],
      ["nlf", f.nlf],
      ["cks", f.cks],
    ];
    for (const [name, value] of rows) {
      const neutral = f.neutral.includes(name) ? " (neutral)" : "";
      factors.append(
        el("li", `factor factor-${name}`, `${name} = ${value.toFixed(4)}${neutral}`),
      );
    }
    detail.append(factors);
    const skills = el("ul", "matched-skills");
    for (const [skill, score] of Object.entries(result.matched_skills)) {
      skills.append(el("li", "matched-skill", `${skill}: ${score.toFixed(3)}`));
    }
    detail.append(skills);
    return detail;
  }

  private renderContacts(domain: string): HTMLElement {
    const panel = el("div", "contacts-panel");
    const contacts = this.contactsByDomain.get(domain);
    if (contacts === undefined) {
      panel.append(el("p", "", "Loading contacts…"));
    } else if (contacts === null || contacts.length === 0) {
      panel.append(el("p", "contacts-empty", "No contacts on file."));
    } else {
      const list = el("ul", "contact-list");
      for (const contact of contacts) {
        list.append(
          el(
            "li",
            "contact",
            `${contact.name} — ${contact.title_raw} [${contact.level}]`,
          ),
        );
      }
      panel.append(list);
    }
    return panel;
  }
}

function el(tag: string, className = "", text = ""): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}
