/** Thin client for the knowledge service. Same-origin paths: the bundle is
 * served by `oak serve --ui-dir`, so no base URL is needed. */

import type { Card, SearchResponse } from "./types";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
    readonly unrecognized: string[] = [],
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class OfflineError extends Error {
  constructor() {
    super("the knowledge service is unreachable");
    this.name = "OfflineError";
  }
}

export function isAbort(error: unknown): boolean {
  return error instanceof Error && error.name === "AbortError";
}

async function request(path: string, init: RequestInit = {}): Promise<unknown> {
  let response: Response;
  try {
    response = await fetch(path, init);
  } catch (error) {
    if (isAbort(error)) throw error;
    throw new OfflineError();
  }
  let body: unknown = null;
  try {
    body = await response.json();
  } catch {
    body = null;
  }
  if (!response.ok) {
    const doc = (body ?? {}) as { error?: string; unrecognized?: string[] };
    throw new ApiError(
      response.status,
      doc.error ?? `request failed with status ${response.status}`,
      doc.unrecognized ?? [],
    );
  }
  return body;
}

export function search(q: string, signal?: AbortSignal): Promise<SearchResponse> {
  return request("/search", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ q }),
    signal,
  }) as Promise<SearchResponse>;
}

export function fetchCard(id: string, signal?: AbortSignal): Promise<Card> {
  return request(`/kmap/${encodeURIComponent(id)}`, { signal }) as Promise<Card>;
}
