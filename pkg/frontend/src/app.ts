/** Application shell: header, routing, page mounting. */

import { DetailPage } from "./detail";
import { parseHash } from "./router";
import { SearchPage } from "./search";
import { el } from "./render";

export class App {
  private readonly searchPage: SearchPage;
  private readonly detailPage: DetailPage;
  private readonly view: HTMLElement;

  constructor(root: HTMLElement) {
    root.innerHTML = "";
    const header = el("header", "app-header");
    const title = el("h1", "app-title");
    const home = el("a", "app-home", "Knowledge Browser");
    home.href = "#/search";
    title.append(home);
    header.append(title);
    this.view = el("main", "app-view");
    root.append(header, this.view);

    const navigate = (hash: string) => this.navigate(hash);
    this.searchPage = new SearchPage(this.view, navigate);
    this.detailPage = new DetailPage(this.view, navigate);
    window.addEventListener("hashchange", () => this.route());
  }

  navigate(hash: string): void {
    if (location.hash === hash) {
      this.route();
    } else {
      location.hash = hash;
    }
  }

  route(): void {
    if (!this.view.isConnected) {
      return;
    }
    const route = parseHash(location.hash);
    if (route.page === "detail") {
      this.detailPage.show(route.id);
    } else {
      this.searchPage.show(route.query);
    }
  }
}

export function mount(root: HTMLElement): App {
  const app = new App(root);
  app.route();
  return app;
}

const auto = document.getElementById("app");
if (auto) {
  mount(auto);
}
