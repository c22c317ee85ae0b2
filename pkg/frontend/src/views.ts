/** DOM renderers.  Every view is built from API payloads only; errors
 * and empty results render inline notices, never a blank screen. */

import { headLabel, headSememeRef, TreeState } from "./tree.js";
import type {
  SememeInfo,
  SenseCard,
  SenseSummary,
  SimilarityResult,
  Stats,
  TreeNode,
} from "./types.js";

type Child = Node | string | null | undefined;

export function el(
  tag: string,
  attrs: Record<string, string> = {},
  ...children: Child[]
): HTMLElement {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  for (const child of children) {
    if (child !== null && child !== undefined) {
      node.append(child);
    }
  }
  return node;
}

export interface Navigate {
  toSense(id: number): void;
  toSememeRef(ref: string): void;
  toCompare(a: string, b: string, lang: "zh" | "en"): void;
}

export function loading(): HTMLElement {
  return el("p", { class: "loading" }, "loading…");
}

export function emptyState(text: string): HTMLElement {
  return el("p", { class: "empty-state" }, text);
}

export function errorNotice(message: string, onRetry?: () => void): HTMLElement {
  const notice = el("div", { class: "error-notice", role: "alert" },
    el("span", {}, message));
  if (onRetry) {
    const retry = el("button", { class: "retry", type: "button" }, "retry");
    retry.addEventListener("click", onRetry);
    notice.append(" ", retry);
  }
  return notice;
}

export function statsBar(stats: Stats): HTMLElement {
  return el("p", { class: "stats-bar" },
    `${stats.sense_count} senses · ${stats.distinct_zh_words} Chinese words · ` +
    `${stats.distinct_en_words} English words · ${stats.sememe_count} sememes`);
}

function senseRow(sense: SenseSummary, nav: Navigate): HTMLElement {
  const link = el("a", { class: "sense-link", href: `#/sense/${sense.id}` },
    `#${sense.id} ${sense.zh} · ${sense.en}`);
  link.addEventListener("click", (event) => {
    event.preventDefault();
    nav.toSense(sense.id);
  });
  return el("li", { class: "sense-row" },
    link,
    el("span", { class: "pos" }, sense.pos),
    el("code", { class: "def-text" }, sense.def_text));
}

export function searchView(
  query: string,
  results: SenseSummary[],
  nav: Navigate,
): HTMLElement {
  const view = el("section", { class: "view search-view" });
  if (!query) {
    view.append(emptyState("Type a word (Chinese or English) to search the lexicon."));
    return view;
  }
  view.append(el("h2", {}, `results for “${query}”`));
  if (results.length === 0) {
    view.append(emptyState("No senses found."));
    return view;
  }
  const list = el("ul", { class: "sense-list" });
  for (const sense of results) {
    list.append(senseRow(sense, nav));
  }
  view.append(list);
  return view;
}

export function treeView(
  root: TreeNode,
  state: TreeState,
  nav: Navigate,
): HTMLElement {
  const render = (node: TreeNode, path: string, role: string | null): HTMLElement => {
    const item = el("li", { class: "tree-node", "data-path": path });
    const label = el("span", { class: "node-label" });
    if (role !== null) {
      label.append(el("span", { class: "edge-role" }, `[${role}] `));
    }
    const ref = headSememeRef(node.head);
    if (ref !== null) {
      const link = el("a", { class: "sememe-link", href: "#" }, headLabel(node.head));
      link.addEventListener("click", (event) => {
        event.preventDefault();
        nav.toSememeRef(ref);
      });
      label.append(link);
    } else {
      label.append(el("span", { class: "head-opaque" }, headLabel(node.head)));
    }
    item.append(label);
    if (node.children.length > 0) {
      const toggle = el("button", {
        class: "toggle",
        type: "button",
        "aria-expanded": String(!state.isCollapsed(path)),
      }, state.isCollapsed(path) ? "+" : "−");
      toggle.addEventListener("click", () => {
        state.toggle(path);
        const branch = item.querySelector(":scope > ul.tree-children");
        branch?.classList.toggle("hidden", state.isCollapsed(path));
        toggle.textContent = state.isCollapsed(path) ? "+" : "−";
        toggle.setAttribute("aria-expanded", String(!state.isCollapsed(path)));
      });
      item.prepend(toggle);
      const branch = el("ul", {
        class: "tree-children" + (state.isCollapsed(path) ? " hidden" : ""),
      });
      node.children.forEach((child, i) => {
        branch.append(render(child.tree, `${path}.${i}`, child.role));
      });
      item.append(branch);
    }
    return item;
  };
  return el("ul", { class: "tree" }, render(root, "0", null));
}

export function senseCardView(
  card: SenseCard,
  state: TreeState,
  nav: Navigate,
): HTMLElement {
  const view = el("section", { class: "view sense-card" });
  view.append(el("h2", { class: "sense-id" }, `sense #${card.id}`));
  view.append(el("p", { class: "sense-words" },
    el("strong", {}, card.zh), " · ", el("strong", {}, card.en)));
  view.append(el("p", { class: "sense-pos" }, "POS: ", el("code", {}, card.pos)));
  view.append(el("p", { class: "sense-def" },
    "definition: ", el("code", {}, card.def_text)));
  if (card.sentiment) {
    view.append(el("p", { class: "sense-sentiment" }, `sentiment: ${card.sentiment}`));
  }
  if (card.examples.length > 0) {
    const list = el("ul", { class: "sense-examples" });
    for (const example of card.examples) {
      list.append(el("li", {}, example));
    }
    view.append(el("div", {}, el("h3", {}, "examples"), list));
  }
  const treeSection = el("div", { class: "sense-tree" },
    el("h3", {}, "sememe tree"));
  treeSection.append(treeView(card.def_tree, state, nav));
  view.append(treeSection);

  const nearSection = el("div", { class: "sense-near" },
    el("h3", {}, "near senses"));
  if (card.near.length === 0) {
    nearSection.append(emptyState("No other senses loaded."));
  } else {
    const list = el("ul", { class: "near-list" });
    for (const entry of card.near) {
      const row = senseRow(entry.sense, nav);
      row.append(el("span", { class: "score" }, entry.score.toFixed(4)));
      list.append(row);
    }
    nearSection.append(list);
  }
  view.append(nearSection);
  return view;
}

export function sememePivotView(
  sememeId: number,
  info: SememeInfo | null,
  senses: SenseSummary[],
  nav: Navigate,
): HTMLElement {
  const title = info
    ? `senses containing ${info.ref} (${info.category})`
    : `senses containing sememe #${sememeId}`;
  const view = el("section", { class: "view sememe-pivot" },
    el("h2", {}, title));
  if (senses.length === 0) {
    view.append(emptyState("No sense uses this sememe."));
    return view;
  }
  const list = el("ul", { class: "sense-list" });
  for (const sense of senses) {
    list.append(senseRow(sense, nav));
  }
  view.append(list);
  return view;
}

export function compareView(
  a: string,
  b: string,
  lang: "zh" | "en",
  result: SimilarityResult | null,
  nav: Navigate,
): HTMLElement {
  const view = el("section", { class: "view compare-view" },
    el("h2", {}, "word similarity"));
  const form = el("form", { class: "compare-form" });
  const inputA = el("input", { name: "a", value: a, placeholder: "first word" }) as HTMLInputElement;
  const inputB = el("input", { name: "b", value: b, placeholder: "second word" }) as HTMLInputElement;
  const select = el("select", { name: "lang" }) as HTMLSelectElement;
  for (const option of ["en", "zh"] as const) {
    const node = el("option", { value: option }, option) as HTMLOptionElement;
    node.selected = option === lang;
    select.append(node);
  }
  form.append(inputA, inputB, select, el("button", { type: "submit" }, "compare"));
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    nav.toCompare(inputA.value.trim(), inputB.value.trim(),
      select.value === "zh" ? "zh" : "en");
  });
  view.append(form);

  if (result) {
    view.append(el("p", { class: "compare-score" },
      `similarity of “${a}” and “${b}”: `,
      el("strong", {}, result.score.toFixed(6))));
    if (result.best_pair) {
      const { a: senseA, b: senseB } = result.best_pair;
      const pair = el("ul", { class: "best-pair" });
      pair.append(senseRow(senseA, nav), senseRow(senseB, nav));
      view.append(el("div", {},
        el("h3", {}, "best sense pair"), pair));
    }
  }
  return view;
}
