// @vitest-environment happy-dom
import { describe, expect, it, vi } from "vitest";
import { TreeState, nodeCount } from "../src/tree.js";
import type { Navigate } from "../src/views.js";
import {
  compareView,
  errorNotice,
  searchView,
  senseCardView,
  sememePivotView,
  treeView,
} from "../src/views.js";
import type { SenseCard, SenseSummary, TreeNode } from "../src/types.js";

const noopNav: Navigate = {
  toSense: () => {},
  toSememeRef: () => {},
  toCompare: () => {},
};

const summary = (id: number, en = "apple"): SenseSummary => ({
  id, zh: "苹果", en, pos: "noun", def_text: "{fruit|水果}",
});

const DEEP_TREE: TreeNode = {
  head: { sememe: "tool|用具" },
  children: [{
    role: "use",
    tree: {
      head: { sememe: "communicate|交流" },
      children: [{
        role: "instrument",
        tree: {
          head: { sememe: "phone|电话" },
          children: [{
            role: "modifier",
            tree: {
              head: { sememe: "small|小" },
              children: [{ role: "degree", tree: { head: { placeholder: "~" }, children: [] } }],
            },
          }],
        },
      }],
    },
  }],
};

const CARD: SenseCard = {
  id: 1002,
  zh: "苹果",
  en: "apple",
  pos: "noun",
  def_text: "{fruit|水果}",
  def_tree: { head: { sememe: "fruit|水果" }, children: [] },
  sentiment: null,
  examples: ["An apple a day keeps the doctor away"],
  near: [{ sense: summary(1019, "plant"), score: 0.8077 }],
};

describe("search view", () => {
  it("renders an empty-state prompt for the empty query", () => {
    const view = searchView("", [], noopNav);
    expect(view.querySelector(".empty-state")).not.toBeNull();
    expect(view.querySelectorAll(".sense-row")).toHaveLength(0);
  });

  it("renders one clickable row per result", () => {
    const onSense = vi.fn();
    const view = searchView("apple", [summary(1), summary(2)],
      { ...noopNav, toSense: onSense });
    const rows = view.querySelectorAll(".sense-row");
    expect(rows).toHaveLength(2);
    (rows[0]!.querySelector("a.sense-link") as HTMLAnchorElement).click();
    expect(onSense).toHaveBeenCalledWith(1);
  });

  it("shows a no-results notice instead of a blank screen", () => {
    const view = searchView("zzz", [], noopNav);
    expect(view.textContent).toContain("No senses found");
  });
});

describe("sense card view", () => {
  it("shows all five exhibition elements", () => {
    const view = senseCardView(CARD, new TreeState(CARD.def_tree), noopNav);
    expect(view.querySelector(".sense-id")?.textContent).toContain("1002");
    expect(view.querySelector(".sense-pos")?.textContent).toContain("noun");
    expect(view.querySelector(".sense-def")?.textContent).toContain("{fruit|水果}");
    expect(view.querySelector(".sense-tree ul.tree")).not.toBeNull();
    expect(view.querySelectorAll(".sense-near .sense-row")).toHaveLength(1);
  });

  it("links near senses to their own cards", () => {
    const onSense = vi.fn();
    const view = senseCardView(CARD, new TreeState(CARD.def_tree),
      { ...noopNav, toSense: onSense });
    (view.querySelector(".sense-near a.sense-link") as HTMLAnchorElement).click();
    expect(onSense).toHaveBeenCalledWith(1019);
  });
});

describe("tree diagram", () => {
  it("renders exactly one node per JSON-render node", () => {
    for (const tree of [CARD.def_tree, DEEP_TREE]) {
      const view = treeView(tree, new TreeState(tree), noopNav);
      expect(view.querySelectorAll("li.tree-node")).toHaveLength(nodeCount(tree));
    }
  });

  it("labels edges with their dynamic roles", () => {
    const view = treeView(DEEP_TREE, new TreeState(DEEP_TREE), noopNav);
    const roles = [...view.querySelectorAll(".edge-role")].map((n) => n.textContent);
    expect(roles).toEqual(["[use] ", "[instrument] ", "[modifier] ", "[degree] "]);
  });

  it("hides branches beyond depth 3 until toggled", () => {
    const state = new TreeState(DEEP_TREE);
    const view = treeView(DEEP_TREE, state, noopNav);
    const hidden = view.querySelector("ul.tree-children.hidden");
    expect(hidden).not.toBeNull();
    const collapsedNode = hidden!.parentElement as HTMLElement;
    expect(collapsedNode.getAttribute("data-path")).toBe("0.0.0.0");
    (collapsedNode.querySelector(":scope > button.toggle") as HTMLButtonElement).click();
    expect(view.querySelector("ul.tree-children.hidden")).toBeNull();
  });

  it("pivots on sememe click but not on placeholders", () => {
    const onRef = vi.fn();
    const view = treeView(DEEP_TREE, new TreeState(DEEP_TREE, 99),
      { ...noopNav, toSememeRef: onRef });
    (view.querySelector("a.sememe-link") as HTMLAnchorElement).click();
    expect(onRef).toHaveBeenCalledWith("tool|用具");
    expect(view.querySelectorAll(".head-opaque")).toHaveLength(1); // the "~"
  });
});

describe("sememe pivot view", () => {
  it("lists the senses containing the sememe", () => {
    const view = sememePivotView(28, {
      id: 28, en: "ProperName", zh: "专", ref: "ProperName|专",
      category: "Attribute", parent: 25,
    }, [summary(1000), summary(1001)], noopNav);
    expect(view.textContent).toContain("ProperName|专");
    expect(view.querySelectorAll(".sense-row")).toHaveLength(2);
  });

  it("shows an empty state for unused sememes", () => {
    const view = sememePivotView(47, null, [], noopNav);
    expect(view.querySelector(".empty-state")).not.toBeNull();
  });
});

describe("compare view", () => {
  it("shows the score and the best sense pair", () => {
    const view = compareView("apple", "peach", "en", {
      score: 0.5,
      best_pair: { a: summary(1002), b: summary(1015, "peach") },
    }, noopNav);
    expect(view.querySelector(".compare-score")?.textContent).toContain("0.500000");
    expect(view.querySelectorAll(".best-pair .sense-row")).toHaveLength(2);
  });

  it("submits a new comparison through navigation", () => {
    const onCompare = vi.fn();
    const view = compareView("", "", "en", null, { ...noopNav, toCompare: onCompare });
    (view.querySelector("input[name=a]") as HTMLInputElement).value = "dog";
    (view.querySelector("input[name=b]") as HTMLInputElement).value = "cat";
    view.querySelector("form")!.dispatchEvent(new Event("submit", { cancelable: true }));
    expect(onCompare).toHaveBeenCalledWith("dog", "cat", "en");
  });
});

describe("error notice", () => {
  it("renders the message and a retry hook", () => {
    const onRetry = vi.fn();
    const notice = errorNotice("service unreachable", onRetry);
    expect(notice.textContent).toContain("service unreachable");
    (notice.querySelector("button.retry") as HTMLButtonElement).click();
    expect(onRetry).toHaveBeenCalledOnce();
  });
});
