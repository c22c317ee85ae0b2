import { describe, expect, it } from "vitest";
import { ApiClient, ApiError, buildUrl } from "../src/api.js";

function fakeFetch(handler: (url: string) => { status: number; body: unknown }) {
  const calls: string[] = [];
  const impl = (async (input: RequestInfo | URL) => {
    const url = String(input);
    calls.push(url);
    const { status, body } = handler(url);
    return new Response(JSON.stringify(body), {
      status,
      statusText: status === 200 ? "OK" : "Error",
      headers: { "content-type": "application/json" },
    });
  }) as typeof fetch;
  return { impl, calls };
}

describe("buildUrl", () => {
  it("encodes parameters and skips undefined ones", () => {
    expect(buildUrl("", "/api/search", { q: "苹果", lang: "zh", limit: undefined }))
      .toBe("/api/search?q=%E8%8B%B9%E6%9E%9C&lang=zh");
    expect(buildUrl("http://x", "/api/stats")).toBe("http://x/api/stats");
  });
});

describe("api client", () => {
  it("requests the exact endpoint inventory", async () => {
    const { impl, calls } = fakeFetch(() => ({ status: 200, body: [] }));
    const api = new ApiClient("", impl);
    await api.search("apple", "en", "exact");
    await api.nearest(7, 3);
    await api.sememeSenses(28);
    const decoded = calls.map(decodeURIComponent);
    expect(decoded[0]).toBe("/api/search?q=apple&lang=en&mode=exact");
    expect(decoded[1]).toBe("/api/sense/7/nearest?k=3");
    expect(decoded[2]).toBe("/api/sememe/28/senses");
  });

  it("asks for the best pair on compare", async () => {
    const { impl, calls } = fakeFetch(() => ({
      status: 200,
      body: { score: 0.5 },
    }));
    const api = new ApiClient("", impl);
    await api.similarity("apple", "peach", "en");
    expect(calls[0]).toBe("/api/similarity?a=apple&b=peach&lang=en&detail=true");
  });

  it("turns error envelopes into ApiError", async () => {
    const { impl } = fakeFetch(() => ({
      status: 404,
      body: { error: { kind: "UnknownSense", message: "no sense with id 1" } },
    }));
    const api = new ApiClient("", impl);
    const failure = await api.sense(1).catch((e) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.kind).toBe("UnknownSense");
    expect(failure.status).toBe(404);
    expect(failure.message).toContain("no sense");
  });

  it("flags an unreachable service distinctly", async () => {
    const impl = (async () => {
      throw new TypeError("fetch failed");
    }) as unknown as typeof fetch;
    const api = new ApiClient("", impl);
    const failure = await api.stats().catch((e) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.kind).toBe("Unreachable");
    expect(failure.status).toBe(0);
  });
});
