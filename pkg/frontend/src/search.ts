/** The search page: query box, recognized-concept chips, result cards.
 *
 * At most one search is in flight; a newer one aborts its predecessor.
 * Failure states are told apart: empty input never leaves the page, a 400
 * is rendered inline with the service's message, and a network failure
 * shows the offline banner.
 */

import * as api from "./api";
import { queryWithoutChip, searchForCondition } from "./refine";
import { el, renderCard } from "./render";
import { searchHash } from "./router";
import type { SearchResponse } from "./types";

export class SearchPage {
  private inflight: AbortController | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly navigate: (hash: string) => void,
  ) {}

  show(query: string | null): void {
    this.inflight?.abort();
    this.inflight = null;
    this.root.innerHTML = "";

    const section = el("section", "search-page");
    const form = el("form", "search-form");
    form.id = "search-form";
    const input = el("input", "search-input");
    input.id = "search-input";
    input.type = "search";
    input.placeholder = "Ask about crops, conditions, models";
    input.autocomplete = "off";
    const button = el("button", "search-button", "Search");
    button.type = "submit";
    form.append(input, button);
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      this.submit(input.value);
    });

    const note = el("div", "note");
    note.id = "search-note";
    note.hidden = true;
    const chips = el("div", "chips");
    chips.id = "search-chips";
    const meta = el("div", "meta");
    meta.id = "search-meta";
    meta.hidden = true;
    const results = el("div", "results");
    results.id = "search-results";

    section.append(form, note, chips, meta, results);
    this.root.append(section);

    if (query) {
      input.value = query;
      void this.run(query);
    }
  }

  private submit(raw: string): void {
    const text = raw.trim();
    if (!text) {
      this.note("Type a few words to search the repository.", "hint");
      return;
    }
    this.navigate(searchHash(text));
  }

  private async run(text: string): Promise<void> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    this.note("Searching.", "hint");
    try {
      const doc = await api.search(text, controller.signal);
      if (this.inflight !== controller) {
        return;
      }
      this.inflight = null;
      this.note(null);
      this.renderOutcome(doc);
    } catch (error) {
      if (this.inflight !== controller || api.isAbort(error)) {
        return;
      }
      this.inflight = null;
      if (error instanceof api.OfflineError) {
        this.banner();
      } else if (error instanceof api.ApiError) {
        this.renderFailure(error);
      } else {
        throw error;
      }
    }
  }

  private renderOutcome(doc: SearchResponse): void {
    this.renderChips(doc);
    const meta = this.part("search-meta");
    const count = doc.cards.length;
    const items = count === 1 ? "1 matching knowledge item" : `${count} matching knowledge items`;
    meta.textContent = `${items} (${doc.action}, template ${doc.form})`;
    meta.hidden = false;

    const results = this.part("search-results");
    results.innerHTML = "";
    if (count === 0) {
      results.append(el("p", "empty", "Nothing in the repository matches this query."));
      return;
    }
    for (const card of doc.cards) {
      results.append(
        renderCard(card, {
          onCondition: (concept) => this.navigate(searchHash(searchForCondition(concept))),
        }),
      );
    }
  }

  private renderChips(doc: SearchResponse): void {
    const holder = this.part("search-chips");
    holder.innerHTML = "";
    for (const name of doc.recognized) {
      const chip = el("button", "chip chip-filter");
      chip.type = "button";
      chip.dataset.chip = name;
      chip.title = `Search again without ${name}`;
      chip.append(el("span", "chip-name", name), el("span", "chip-remove", "×"));
      chip.addEventListener("click", () => this.removeChip(doc, name));
      holder.append(chip);
    }
  }

  private removeChip(doc: SearchResponse, name: string): void {
    const next = queryWithoutChip(doc.form, doc.recognized, name);
    if (next === null) {
      this.show(null);
      this.note("All filters removed. Type a new query to search.", "hint");
      return;
    }
    this.navigate(searchHash(next));
  }

  private renderFailure(error: api.ApiError): void {
    this.part("search-chips").innerHTML = "";
    this.part("search-results").innerHTML = "";
    this.part("search-meta").hidden = true;
    let text = error.message;
    if (error.unrecognized.length) {
      text += ` (not recognized: ${error.unrecognized.join(", ")})`;
    }
    this.note(text, "error");
  }

  private banner(): void {
    this.note(
      "The knowledge service is unreachable. Start it with: oak serve",
      "offline",
    );
  }

  private note(text: string | null, kind?: string): void {
    const note = this.part("search-note");
    if (text === null) {
      note.hidden = true;
      note.textContent = "";
      return;
    }
    note.className = kind ? `note note-${kind}` : "note";
    note.textContent = text;
    note.hidden = false;
  }

  private part(id: string): HTMLElement {
    const found = this.root.querySelector<HTMLElement>(`#${id}`);
    if (!found) {
      throw new Error(`search page part missing: ${id}`);
    }
    return found;
  }
}
