/** Hash routing between the two pages: search and item detail. */

export type Route =
  | { page: "search"; query: string | null }
  | { page: "detail"; id: string };

export function parseHash(hash: string): Route {
  const text = hash.startsWith("#") ? hash.slice(1) : hash;
  if (text.startsWith("/kmap/")) {
    const id = decodeURIComponent(text.slice("/kmap/".length));
    if (id) {
      return { page: "detail", id };
    }
  }
  const queryAt = text.indexOf("?");
  const path = queryAt < 0 ? text : text.slice(0, queryAt);
  if (path === "" || path === "/" || path === "/search") {
    const params = new URLSearchParams(queryAt < 0 ? "" : text.slice(queryAt + 1));
    const q = params.get("q");
    return { page: "search", query: q && q.trim() ? q : null };
  }
  return { page: "search", query: null };
}

export function searchHash(query: string): string {
  return `#/search?q=${encodeURIComponent(query)}`;
}

export function detailHash(id: string): string {
  return `#/kmap/${encodeURIComponent(id)}`;
}
