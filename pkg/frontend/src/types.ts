/** Shapes of the service's JSON payloads. Fields the service omits when
 * absent are optional here; the UI renders only what arrives. */

export interface CardFeature {
  instance: string;
  concept?: string;
  transformation?: string;
  state?: string | number;
  unit?: string;
}

export interface Dataset {
  instance?: string;
  name?: string;
  size?: number;
}

export interface Evaluation {
  metric?: string;
  value?: number;
}

export interface Source {
  article?: string;
  identifier?: string;
  title?: string;
  year?: number;
}

export interface Card {
  id: string;
  task: string | null;
  grade: number | null;
  algorithms: string[];
  conditions: CardFeature[];
  targets: CardFeature[];
  dataset: Dataset | null;
  evaluation: Evaluation[];
  locations: string[];
  context: string[];
  source: Source | null;
  /** Only the kmap endpoint includes the item's raw document. */
  turtle?: string;
}

export interface SearchResponse {
  cards: Card[];
  recognized: string[];
  action: string;
  form: string;
  query: string;
  results: unknown;
}
