/** Typed client for the knowledge-base HTTP API.  The explorer computes
 * nothing itself: every displayed value comes through this module. */

import type {
  Lang,
  SearchMode,
  SememeInfo,
  SenseCard,
  SenseSummary,
  SimilarityResult,
  Stats,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly kind: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type Params = Record<string, string | number | boolean | undefined>;

export function buildUrl(base: string, path: string, params?: Params): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params ?? {})) {
    if (value !== undefined) {
      search.set(key, String(value));
    }
  }
  const query = search.toString();
  return base + path + (query ? `?${query}` : "");
}

export class ApiClient {
  constructor(
    private readonly base = "",
    private readonly fetchImpl: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async get<T>(path: string, params?: Params): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(buildUrl(this.base, path, params));
    } catch (cause) {
      throw new ApiError("Unreachable", `service unreachable: ${cause}`, 0);
    }
    if (!response.ok) {
      let kind = "HttpError";
      let message = `${response.status} ${response.statusText}`;
      try {
        const body = (await response.json()) as {
          error?: { kind?: string; message?: string };
        };
        if (body.error) {
          kind = body.error.kind ?? kind;
          message = body.error.message ?? message;
        }
      } catch {
        // non-JSON error body; keep the status line
      }
      throw new ApiError(kind, message, response.status);
    }
    return (await response.json()) as T;
  }

  search(
    q: string,
    lang: Lang,
    mode: SearchMode,
    limit?: number,
  ): Promise<SenseSummary[]> {
    return this.get("/api/search", { q, lang, mode, limit });
  }

  sense(id: number): Promise<SenseCard> {
    return this.get(`/api/sense/${id}`);
  }

  nearest(id: number, k?: number): Promise<{ sense: SenseSummary; score: number }[]> {
    return this.get(`/api/sense/${id}/nearest`, { k });
  }

  similarity(a: string, b: string, lang: "zh" | "en"): Promise<SimilarityResult> {
    return this.get("/api/similarity", { a, b, lang, detail: true });
  }

  sememes(q: string): Promise<SememeInfo[]> {
    return this.get("/api/sememes", { q });
  }

  sememeSenses(id: number): Promise<SenseSummary[]> {
    return this.get(`/api/sememe/${id}/senses`);
  }

  stats(): Promise<Stats> {
    return this.get("/api/stats");
  }
}
