/** Application bootstrap: hash routing, request sequencing, and view
 * dispatch.  All data flows through ApiClient; stale responses for
 * superseded navigations are discarded. */

import { ApiClient, ApiError } from "./api.js";
import { parseHash, Route, routeToHash } from "./router.js";
import { ExplorerState, RequestSequencer } from "./state.js";
import { TreeState } from "./tree.js";
import type { SememeInfo } from "./types.js";
import {
  compareView,
  el,
  emptyState,
  errorNotice,
  loading,
  Navigate,
  searchView,
  senseCardView,
  sememePivotView,
  statsBar,
} from "./views.js";

const api = new ApiClient("");
const state = new ExplorerState();
const sequencer = new RequestSequencer();
const sememeLabelCache = new Map<number, SememeInfo>();

function goto(route: Route): void {
  const hash = routeToHash(route);
  if (location.hash === hash) {
    void render(route);
  } else {
    location.hash = hash;
  }
}

const nav: Navigate = {
  toSense(id) {
    goto({ view: "sense", id });
  },
  toSememeRef(ref) {
    void (async () => {
      try {
        const matches = await api.sememes(ref);
        const first = matches[0];
        if (first === undefined) {
          mount(errorNotice(`sememe ${ref} not found`));
          return;
        }
        sememeLabelCache.set(first.id, first);
        goto({ view: "sememe", id: first.id });
      } catch (err) {
        mount(errorNotice(describe(err)));
      }
    })();
  },
  toCompare(a, b, lang) {
    goto({ view: "compare", a, b, lang });
  },
};

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return `${err.kind}: ${err.message}`;
  }
  return String(err);
}

function mount(view: HTMLElement): void {
  const app = document.getElementById("app");
  if (app) {
    app.replaceChildren(view);
  }
}

async function render(route: Route): Promise<void> {
  const token = sequencer.next();
  mount(loading());
  const retry = () => void render(route);
  try {
    const view = await buildView(route);
    if (sequencer.isCurrent(token)) {
      mount(view);
    }
  } catch (err) {
    if (sequencer.isCurrent(token)) {
      mount(errorNotice(describe(err), retry));
    }
  }
}

async function buildView(route: Route): Promise<HTMLElement> {
  switch (route.view) {
    case "home": {
      const stats = await api.stats();
      const view = el("section", { class: "view home-view" },
        el("h2", {}, "sememe knowledge base explorer"),
        statsBar(stats),
        emptyState("Search a word above, or try the compare view."));
      const compareLink = el("a", { href: "#/compare?a=apple&b=peach&lang=en" },
        "compare two words");
      view.append(el("p", {}, compareLink));
      return view;
    }
    case "search": {
      state.query = route.q;
      state.lang = route.lang;
      state.mode = route.mode;
      syncSearchForm(route.q, route.lang, route.mode);
      const results = route.q
        ? await api.search(route.q, route.lang, route.mode)
        : [];
      return searchView(route.q, results, nav);
    }
    case "sense": {
      const card = await api.sense(route.id);
      state.visitSense(card.id);
      return senseCardView(card, new TreeState(card.def_tree), nav);
    }
    case "sememe": {
      const senses = await api.sememeSenses(route.id);
      const info = sememeLabelCache.get(route.id) ?? null;
      return sememePivotView(route.id, info, senses, nav);
    }
    case "compare": {
      const result = route.a && route.b
        ? await api.similarity(route.a, route.b, route.lang)
        : null;
      return compareView(route.a, route.b, route.lang, result, nav);
    }
  }
}

function syncSearchForm(q: string, lang: string, mode: string): void {
  const input = document.getElementById("search-input") as HTMLInputElement | null;
  const langSelect = document.getElementById("search-lang") as HTMLSelectElement | null;
  const modeSelect = document.getElementById("search-mode") as HTMLSelectElement | null;
  if (input) input.value = q;
  if (langSelect) langSelect.value = lang;
  if (modeSelect) modeSelect.value = mode;
}

function wireSearchForm(): void {
  const form = document.getElementById("search-form");
  form?.addEventListener("submit", (event) => {
    event.preventDefault();
    const input = document.getElementById("search-input") as HTMLInputElement;
    const langSelect = document.getElementById("search-lang") as HTMLSelectElement;
    const modeSelect = document.getElementById("search-mode") as HTMLSelectElement;
    goto({
      view: "search",
      q: input.value.trim(),
      lang: (langSelect.value as "zh" | "en" | "auto") ?? "auto",
      mode: (modeSelect.value as "exact" | "prefix" | "substring") ?? "exact",
    });
  });
}

export function start(): void {
  wireSearchForm();
  window.addEventListener("hashchange", () => void render(parseHash(location.hash)));
  void render(parseHash(location.hash));
}

start();
