/** End-to-end explorer contract: the full search → sense card →
 * near-sense pivot → sememe pivot → compare flow against a real
 * fixture-backed service, with every step deep-linkable. */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { ApiClient, ApiError } from "../src/api.js";
import { parseHash, Route, routeToHash } from "../src/router.js";
import { nodeCount, TreeState } from "../src/tree.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;
const REPO_ROOT = new URL("../..", import.meta.url).pathname;

let server: ChildProcess;
const api = new ApiClient(BASE);

async function waitForService(timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      await api.stats();
      return;
    } catch {
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
  }
  throw new Error("service did not become ready");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "sememe_kb.cli", "serve", "--data", "fixtures/mini",
     "--port", String(PORT)],
    { cwd: REPO_ROOT, stdio: "ignore" },
  );
  await waitForService();
}, 40_000);

afterAll(() => {
  server?.kill();
});

function assertDeepLinkable(route: Route): void {
  expect(parseHash(routeToHash(route))).toEqual(route);
}

describe("explorer flow against the live service", () => {
  it("walks search → card → near pivot → sememe pivot → compare", async () => {
    // 1. search
    const searchRoute: Route = { view: "search", q: "apple", lang: "en", mode: "exact" };
    assertDeepLinkable(searchRoute);
    const results = await api.search("apple", "en", "exact");
    expect(results.map((s) => s.id)).toEqual([1000, 1001, 1002, 1003]);

    // 2. open a sense card: all five exhibition elements present
    const fruitReading = results[2]!;
    assertDeepLinkable({ view: "sense", id: fruitReading.id });
    const card = await api.sense(fruitReading.id);
    expect(card.id).toBe(1002);
    expect(card.pos).toBe("noun");
    expect(card.def_text).toBe("{fruit|水果}");
    expect(card.def_tree).toBeDefined();
    expect(card.near.length).toBeGreaterThan(0);
    // the collapsible diagram model covers exactly the JSON render
    const treeState = new TreeState(card.def_tree);
    expect(treeState.visibleCount(card.def_tree)).toBeLessThanOrEqual(nodeCount(card.def_tree));

    // 3. pivot to the top near sense: its own card loads
    const nearest = card.near[0]!;
    expect(nearest.sense.id).not.toBe(card.id);
    assertDeepLinkable({ view: "sense", id: nearest.sense.id });
    const nearCard = await api.sense(nearest.sense.id);
    expect(nearCard.id).toBe(nearest.sense.id);
    const scores = card.near.map((entry) => entry.score);
    expect([...scores].sort((a, b) => b - a)).toEqual(scores);

    // 4. sememe pivot from a tree node: resolve the clicked ref, then list
    const rootHead = card.def_tree.head;
    expect("sememe" in rootHead).toBe(true);
    const ref = ("sememe" in rootHead ? rootHead.sememe : "");
    const matches = await api.sememes(ref);
    expect(matches).toHaveLength(1);
    const sememe = matches[0]!;
    assertDeepLinkable({ view: "sememe", id: sememe.id });
    const containing = await api.sememeSenses(sememe.id);
    expect(containing.map((s) => s.id)).toContain(card.id);

    // 5. compare two words: score plus the attaining sense pair
    const compareRoute: Route = { view: "compare", a: "apple", b: "peach", lang: "en" };
    assertDeepLinkable(compareRoute);
    const comparison = await api.similarity("apple", "peach", "en");
    expect(comparison.score).toBeGreaterThan(0);
    expect(comparison.score).toBeLessThanOrEqual(1);
    expect(comparison.best_pair).toBeDefined();
    const pairCard = await api.sense(comparison.best_pair!.a.id);
    expect(pairCard.en).toBe("apple");
  });

  it("surfaces unknown ids and words as typed errors, not blank data", async () => {
    const missingSense = await api.sense(999_999).catch((e) => e);
    expect(missingSense).toBeInstanceOf(ApiError);
    expect(missingSense.kind).toBe("UnknownSense");
    expect(missingSense.status).toBe(404);

    const missingWord = await api.similarity("zzz-none", "apple", "en").catch((e) => e);
    expect(missingWord).toBeInstanceOf(ApiError);
    expect(missingWord.kind).toBe("NoSuchWord");
  });

  it("reports identity comparisons at exactly 1.0", async () => {
    const comparison = await api.similarity("apple", "apple", "en");
    expect(comparison.score).toBe(1.0);
  });

  it("serves deterministic responses for repeated queries", async () => {
    const first = await api.nearest(1002, 5);
    const second = await api.nearest(1002, 5);
    expect(second).toEqual(first);
  });
});
