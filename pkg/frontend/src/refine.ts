/** Query synthesis for the refinement loop.
 *
 * Chips are the concepts the service recognized in the last query. Removing
 * one re-issues a search over the remaining set, and clicking a condition
 * on a card searches for models that use it. The phrasing matters: each
 * template family needs a different scaffold so the intent parser lands the
 * remaining chips in the same slots, keeping the recognized set equal to
 * the chips we sent.
 */

export function searchForCondition(concept: string): string {
  return `predict based on ${concept}`;
}

export function queryForChips(form: string, chips: string[]): string | null {
  if (chips.length === 0) {
    return null;
  }
  const joined = chips.join(" ");
  switch (form) {
    case "QF3":
      return `predict based on ${joined}`;
    case "QF4":
    case "QF7":
    case "QF8":
      return `predict ${joined}`;
    case "QF5":
      return `transformations that process ${joined}`;
    case "QF6":
      return chips.length >= 2
        ? `relationships between ${chips[0]} and ${chips[1]}`
        : joined;
    case "QF10":
      return `related to dataset ${joined}`;
    default:
      return joined;
  }
}

export function queryWithoutChip(
  form: string,
  chips: string[],
  removed: string,
): string | null {
  return queryForChips(
    form,
    chips.filter((chip) => chip !== removed),
  );
}
