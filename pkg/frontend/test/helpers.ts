import { vi } from "vitest";

/** A response-shaped object good enough for the api client. */
export function jsonResponse(body: unknown, status = 200) {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  };
}

export type FetchHandler = (url: string, init?: RequestInit) => unknown;

/** Replace global fetch with a handler; returns the spy for assertions. */
export function mockFetch(handler: FetchHandler) {
  const spy = vi.fn(async (url: string, init?: RequestInit) => handler(url, init));
  globalThis.fetch = spy as unknown as typeof fetch;
  return spy;
}

/** A fetch result that never settles until its signal aborts. */
export function hanging(init?: RequestInit): Promise<never> {
  return new Promise((_, reject) => {
    init?.signal?.addEventListener("abort", () => {
      reject(Object.assign(new Error("aborted"), { name: "AbortError" }));
    });
  });
}

export function searchBody(init?: RequestInit): { q?: string } {
  return JSON.parse(String(init?.body ?? "{}"));
}

/** Let queued promises and the hashchange event settle. */
export async function flush(): Promise<void> {
  for (let i = 0; i < 4; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}

/** Fresh DOM and a neutral URL for each test. */
export function freshRoot(): HTMLElement {
  history.replaceState(null, "", "/");
  document.body.innerHTML = "";
  const root = document.createElement("div");
  document.body.append(root);
  return root;
}

export function submitSearch(query: string): void {
  const input = document.querySelector<HTMLInputElement>("#search-input");
  const form = document.querySelector<HTMLFormElement>("#search-form");
  if (!input || !form) {
    throw new Error("search form not rendered");
  }
  input.value = query;
  form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
}

export function cardIds(): string[] {
  return [...document.querySelectorAll<HTMLElement>(".card")].map(
    (card) => card.dataset.id ?? "",
  );
}

export function chipNames(): string[] {
  return [...document.querySelectorAll<HTMLElement>(".chip-filter .chip-name")].map(
    (chip) => chip.textContent ?? "",
  );
}
