/**
 * Thin client for the skillgrep service. Search is latest-wins: firing a
 * new search aborts the previous in-flight request, so a stale response
 * can never overwrite a fresh one. All ranking comes from the API; the
 * client never computes scores.
 */

import type { Contact, QueryJson, SearchResponse } from "./types.js";

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number | null,
  ) {
    super(message);
  }
}

export class ApiClient {
  private searchController: AbortController | null = null;

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  /** POST /search, aborting any previous in-flight search. */
  async search(query: QueryJson, limit = 40): Promise<SearchResponse> {
    this.searchController?.abort();
    const controller = new AbortController();
    this.searchController = controller;
    const response = await this.request(`/search?limit=${limit}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(query),
      signal: controller.signal,
    });
    return (await response.json()) as SearchResponse;
  }

  /** GET /skills?prefix= — the caller enforces the 2-character guard. */
  async typeahead(prefix: string): Promise<string[]> {
    const response = await this.request(
      `/skills?prefix=${encodeURIComponent(prefix)}`,
    );
    return (await response.json()) as string[];
  }

  /** GET /companies/{domain}/contacts; null signals the 404 empty-state. */
  async contacts(domain: string): Promise<Contact[] | null> {
    const response = await this.fetchFn(
      `${this.baseUrl}/companies/${encodeURIComponent(domain)}/contacts`,
    );
    if (response.status === 404) return null;
    if (!response.ok) {
      throw new ApiError(`contacts failed: ${response.status}`, response.status);
    }
    const body = (await response.json()) as { contacts: Contact[] };
    return body.contacts;
  }

  /** POST /feedback for one posting click. */
  async feedback(postingId: string): Promise<void> {
    await this.request("/feedback", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ posting_id: postingId }),
    });
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    } catch (err) {
      if (err instanceof Error && err.name === "AbortError") throw err;
      throw new ApiError(`service unreachable: ${String(err)}`, null);
    }
    if (!response.ok) {
      let message = `request failed with ${response.status}`;
      try {
        const body = (await response.json()) as { message?: string };
        if (body.message) message = body.message;
      } catch {
        // non-JSON error body; keep the status message
      }
      throw new ApiError(message, response.status);
    }
    return response;
  }
}
