/** The item detail page: every role section the payload carries, plus a
 * toggle for the item's raw Turtle document. */

import * as api from "./api";
import { searchForCondition } from "./refine";
import { algorithmLabel, conditionChip, el, featureLabel, stateText } from "./render";
import { searchHash } from "./router";
import type { Card, CardFeature } from "./types";

export class DetailPage {
  private inflight: AbortController | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly navigate: (hash: string) => void,
  ) {}

  show(id: string): void {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    this.root.innerHTML = "";

    const section = el("section", "detail-page");
    section.append(this.backLink(), el("p", "note note-hint", `Loading ${id}.`));
    this.root.append(section);

    void api
      .fetchCard(id, controller.signal)
      .then((card) => {
        if (this.inflight === controller) {
          this.inflight = null;
          this.render(card);
        }
      })
      .catch((error) => {
        if (this.inflight !== controller || api.isAbort(error)) {
          return;
        }
        this.inflight = null;
        if (error instanceof api.ApiError && error.status === 404) {
          this.renderMissing(id, error.message);
        } else if (error instanceof api.OfflineError) {
          this.renderOffline();
        } else {
          throw error;
        }
      });
  }

  private backLink(): HTMLAnchorElement {
    const back = el("a", "back-link", "Back to search");
    back.href = "#/search";
    return back;
  }

  private render(card: Card): void {
    this.root.innerHTML = "";
    const section = el("section", "detail-page");
    section.append(this.backLink());

    const head = el("header", "detail-head");
    head.append(el("h2", "detail-id", card.id));
    if (card.task) {
      head.append(el("span", "badge badge-task", card.task));
    }
    if (card.grade !== null) {
      head.append(el("span", "badge badge-grade", `grade ${card.grade}`));
    }
    section.append(head);

    if (card.algorithms.length) {
      section.append(
        this.block("algorithms", this.textRows(card.algorithms.map(algorithmLabel))),
      );
    }
    if (card.conditions.length) {
      section.append(this.block("conditions", this.featureRows(card.conditions, true)));
    }
    if (card.targets.length) {
      section.append(this.block("targets", this.featureRows(card.targets, false)));
    }
    if (card.dataset?.name) {
      const size = card.dataset.size !== undefined ? ` (${card.dataset.size} rows)` : "";
      section.append(this.block("dataset", this.textRows([`${card.dataset.name}${size}`])));
    }
    if (card.evaluation.length) {
      section.append(
        this.block(
          "evaluation",
          this.textRows(card.evaluation.map((e) => `${e.metric ?? "?"}: ${e.value ?? "?"}`)),
        ),
      );
    }
    if (card.locations.length) {
      section.append(this.block("locations", this.textRows(card.locations)));
    }
    if (card.context.length) {
      section.append(this.block("context", this.textRows(card.context)));
    }
    if (card.source) {
      const parts: string[] = [];
      if (card.source.identifier) {
        parts.push(card.source.identifier);
      }
      if (card.source.title) {
        parts.push(`"${card.source.title}"`);
      }
      if (card.source.year !== undefined) {
        parts.push(`(${card.source.year})`);
      }
      section.append(this.block("source", this.textRows([parts.join(" ")])));
    }

    if (card.turtle) {
      section.append(this.turtleBlock(card.turtle));
    }
    this.root.append(section);
  }

  private block(title: string, body: HTMLElement): HTMLElement {
    const wrap = el("div", `detail-block detail-${title}`);
    wrap.append(el("h3", "detail-title", title), body);
    return wrap;
  }

  private textRows(lines: string[]): HTMLUListElement {
    const list = el("ul", "detail-list");
    for (const line of lines) {
      list.append(el("li", "detail-item", line));
    }
    return list;
  }

  private featureRows(features: CardFeature[], clickable: boolean): HTMLUListElement {
    const list = el("ul", "detail-list detail-features");
    for (const feature of features) {
      const item = el("li", "detail-item feature-row");
      if (clickable) {
        item.append(
          conditionChip(feature, (concept) =>
            this.navigate(searchHash(searchForCondition(concept))),
          ),
        );
      } else {
        item.append(el("span", "chip chip-target", featureLabel(feature)));
      }
      if (feature.transformation) {
        item.append(el("span", "feature-transformation", feature.transformation));
      }
      const state = stateText(feature);
      if (state) {
        item.append(el("span", "feature-state", `= ${state}`));
      }
      list.append(item);
    }
    return list;
  }

  private turtleBlock(turtle: string): HTMLElement {
    const wrap = el("div", "detail-block detail-turtle");
    const toggle = el("button", "turtle-toggle", "Show Turtle");
    toggle.type = "button";
    const pre = el("pre", "turtle-text", turtle);
    pre.hidden = true;
    toggle.addEventListener("click", () => {
      pre.hidden = !pre.hidden;
      toggle.textContent = pre.hidden ? "Show Turtle" : "Hide Turtle";
    });
    wrap.append(toggle, pre);
    return wrap;
  }

  private renderMissing(id: string, message: string): void {
    this.root.innerHTML = "";
    const section = el("section", "detail-page");
    section.append(
      this.backLink(),
      el("h2", "detail-id", "Not found"),
      el("p", "note note-error", `No knowledge item named ${id}. ${message}`),
    );
    this.root.append(section);
  }

  private renderOffline(): void {
    this.root.innerHTML = "";
    const section = el("section", "detail-page");
    section.append(
      this.backLink(),
      el(
        "p",
        "note note-offline",
        "The knowledge service is unreachable. Start it with: oak serve",
      ),
    );
    this.root.append(section);
  }
}
