/** DOM builders shared by the two pages. No framework: elements are built
 * directly and handlers are attached where the caller asks for them. */

import type { Card, CardFeature } from "./types";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

export function algorithmLabel(id: string): string {
  return id.startsWith("Algorithm_") ? id.slice("Algorithm_".length) : id;
}

export function featureLabel(feature: CardFeature): string {
  return feature.concept ?? feature.instance;
}

export function stateText(feature: CardFeature): string | null {
  if (feature.state === undefined || feature.state === null) {
    return null;
  }
  const unit = feature.unit ? ` ${feature.unit}` : "";
  return `${feature.state}${unit}`;
}

export function conditionChip(
  feature: CardFeature,
  onClick: (concept: string) => void,
): HTMLButtonElement {
  const label = featureLabel(feature);
  const chip = el("button", "chip chip-condition", label);
  chip.type = "button";
  chip.dataset.concept = label;
  chip.title = `Search for models that use ${label}`;
  chip.addEventListener("click", () => onClick(label));
  return chip;
}

export function targetChip(feature: CardFeature): HTMLSpanElement {
  const chip = el("span", "chip chip-target", featureLabel(feature));
  const state = stateText(feature);
  if (state) {
    chip.append(el("small", "chip-state", state));
  }
  return chip;
}

function row(label: string, ...content: (HTMLElement | string)[]): HTMLDivElement {
  const line = el("div", "card-row");
  line.append(el("span", "card-row-label", label));
  const body = el("span", "card-row-body");
  body.append(...content);
  line.append(body);
  return line;
}

function sourceLine(card: Card): string | null {
  if (!card.source) {
    return null;
  }
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
  return parts.length ? parts.join(" ") : null;
}

export interface CardHandlers {
  onCondition: (concept: string) => void;
}

/** One result card. Collapsed by default: identity, conditions, and targets
 * stay visible; the details section unfolds on demand. */
export function renderCard(card: Card, handlers: CardHandlers): HTMLElement {
  const article = el("article", "card");
  article.dataset.id = card.id;

  const head = el("header", "card-head");
  const link = el("a", "card-id", card.id);
  link.href = `#/kmap/${encodeURIComponent(card.id)}`;
  head.append(link);
  if (card.task) {
    head.append(el("span", "badge badge-task", card.task));
  }
  if (card.grade !== null) {
    head.append(el("span", "badge badge-grade", `grade ${card.grade}`));
  }
  article.append(head);

  if (card.conditions.length) {
    article.append(
      row(
        "conditions",
        ...card.conditions.map((c) => conditionChip(c, handlers.onCondition)),
      ),
    );
  }
  if (card.targets.length) {
    article.append(row("predicts", ...card.targets.map(targetChip)));
  }

  const details = el("div", "card-details");
  details.hidden = true;
  if (card.algorithms.length) {
    details.append(
      row("algorithms", card.algorithms.map(algorithmLabel).join(", ")),
    );
  }
  if (card.dataset?.name) {
    const size = card.dataset.size !== undefined ? ` (${card.dataset.size} rows)` : "";
    details.append(row("dataset", `${card.dataset.name}${size}`));
  }
  if (card.evaluation.length) {
    const text = card.evaluation
      .map((e) => `${e.metric ?? "?"}: ${e.value ?? "?"}`)
      .join(", ");
    details.append(row("evaluation", text));
  }
  if (card.locations.length) {
    details.append(row("locations", card.locations.join(", ")));
  }
  if (card.context.length) {
    details.append(row("context", card.context.join(", ")));
  }
  const source = sourceLine(card);
  if (source) {
    details.append(row("source", source));
  }

  if (details.childElementCount > 0) {
    const toggle = el("button", "card-toggle", "More");
    toggle.type = "button";
    toggle.addEventListener("click", () => {
      details.hidden = !details.hidden;
      toggle.textContent = details.hidden ? "More" : "Less";
    });
    head.append(toggle);
    article.append(details);
  }
  return article;
}
