/**
 * FacetState: everything the filter panel and result view hold, split into
 * the query facets (which serialize to exactly one valid Query JSON and
 * round-trip through the URL, so searches are shareable links) and
 * ephemeral UI state (typeahead text never hits the URL; the selected
 * group / expanded posting do, so deep links restore the view).
 */

import type { QueryJson, Range } from "./types.js";

export interface FacetState {
  skills: string[];
  technologies: string[];
  industries: string[];
  microIndustries: string[];
  revenueRange: Range;
  employeesRange: Range;
  departments: string[];
  managementLevels: string[];
  degreeKeywords: string[];
  freeKeywords: string[];
  // UI state
  typeaheadText: string;
  selectedGroup: string | null;
  expandedPosting: string | null;
}

export function emptyFacetState(): FacetState {
  return {
    skills: [],
    technologies: [],
    industries: [],
    microIndustries: [],
    revenueRange: null,
    employeesRange: null,
    departments: [],
    managementLevels: [],
    degreeKeywords: [],
    freeKeywords: [],
    typeaheadText: "",
    selectedGroup: null,
    expandedPosting: null,
  };
}

/** True when no query facet is populated; searching is disabled then. */
export function isQueryEmpty(state: FacetState): boolean {
  return (
    state.skills.length === 0 &&
    state.technologies.length === 0 &&
    state.industries.length === 0 &&
    state.microIndustries.length === 0 &&
    state.revenueRange === null &&
    state.employeesRange === null &&
    state.departments.length === 0 &&
    state.managementLevels.length === 0 &&
    state.degreeKeywords.length === 0 &&
    state.freeKeywords.length === 0
  );
}

/** The one valid Query JSON for this state (the API's request body). */
export function toQueryJson(state: FacetState): QueryJson {
  return {
    skills: [...state.skills].sort(),
    technologies: [...state.technologies].sort(),
    industries: [...state.industries].sort(),
    micro_industries: [...state.microIndustries].sort(),
    revenue_kusd_range: state.revenueRange ? [...state.revenueRange] : null,
    employees_range: state.employeesRange ? [...state.employeesRange] : null,
    departments: [...state.departments].sort(),
    management_levels: [...state.managementLevels].sort(),
    degree_keywords: [...state.degreeKeywords].sort(),
    free_keywords: [...state.freeKeywords].sort(),
  };
}

const LIST_PARAMS: Array<[keyof FacetState & string, string]> = [
  ["skills", "skills"],
  ["technologies", "tech"],
  ["industries", "industry"],
  ["microIndustries", "micro"],
  ["departments", "dept"],
  ["managementLevels", "level"],
  ["degreeKeywords", "degree"],
  ["freeKeywords", "kw"],
];

function encodeRange(range: Range): string {
  if (!range) return "";
  const [lo, hi] = range;
  return `${lo ?? ""}:${hi ?? ""}`;
}

function decodeRange(text: string | null): Range {
  if (!text || !text.includes(":")) return null;
  const [loText, hiText] = text.split(":", 2) as [string, string];
  const lo = loText === "" ? null : Number(loText);
  const hi = hiText === "" ? null : Number(hiText);
  if ((lo !== null && Number.isNaN(lo)) || (hi !== null && Number.isNaN(hi))) {
    return null;
  }
  if (lo === null && hi === null) return null;
  return [lo, hi];
}

/** Encode the shareable portion of the state (everything but typeahead). */
export function toURLParams(state: FacetState): URLSearchParams {
  const params = new URLSearchParams();
  for (const [field, key] of LIST_PARAMS) {
    const values = state[field] as string[];
    if (values.length > 0) params.set(key, values.join(","));
  }
  if (state.revenueRange) params.set("rev", encodeRange(state.revenueRange));
  if (state.employeesRange) params.set("emp", encodeRange(state.employeesRange));
  if (state.selectedGroup) params.set("company", state.selectedGroup);
  if (state.expandedPosting) params.set("posting", state.expandedPosting);
  return params;
}

export function fromURLParams(params: URLSearchParams): FacetState {
  const state = emptyFacetState();
  for (const [field, key] of LIST_PARAMS) {
    const raw = params.get(key);
    if (raw) {
      (state[field] as string[]) = raw
        .split(",")
        .map((v) => v.trim())
        .filter((v) => v.length > 0);
    }
  }
  state.revenueRange = decodeRange(params.get("rev"));
  state.employeesRange = decodeRange(params.get("emp"));
  state.selectedGroup = params.get("company");
  state.expandedPosting = params.get("posting");
  return state;
}
