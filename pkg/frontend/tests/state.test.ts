import { describe, expect, it } from "vitest";
import { ExplorerState, RequestSequencer } from "../src/state.js";

describe("request sequencer", () => {
  it("keeps only the latest token current", () => {
    const seq = new RequestSequencer();
    const first = seq.next();
    expect(seq.isCurrent(first)).toBe(true);
    const second = seq.next();
    expect(seq.isCurrent(first)).toBe(false);
    expect(seq.isCurrent(second)).toBe(true);
  });

  it("discards a stale response arriving after a newer request", async () => {
    const seq = new RequestSequencer();
    const applied: string[] = [];

    async function fetchAndApply(label: string, delayMs: number) {
      const token = seq.next();
      await new Promise((resolve) => setTimeout(resolve, delayMs));
      if (seq.isCurrent(token)) {
        applied.push(label);
      }
    }

    // the slow first request resolves after the fast second one
    const slow = fetchAndApply("first", 30);
    const fast = fetchAndApply("second", 1);
    await Promise.all([slow, fast]);
    expect(applied).toEqual(["second"]);
  });
});

describe("explorer state", () => {
  it("appends every visited sense to history", () => {
    const state = new ExplorerState();
    state.visitSense(1002);
    state.visitSense(1019);
    state.visitSense(1002);
    expect(state.selectedSense).toBe(1002);
    expect(state.history).toEqual([1002, 1019, 1002]);
  });
});
