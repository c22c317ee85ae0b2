/** Hash-based routes: every view state is fully encoded in the URL, so
 * any screen is reachable from the address bar alone. */

import type { Lang, SearchMode } from "./types.js";

export type Route =
  | { view: "home" }
  | { view: "search"; q: string; lang: Lang; mode: SearchMode }
  | { view: "sense"; id: number }
  | { view: "sememe"; id: number }
  | { view: "compare"; a: string; b: string; lang: "zh" | "en" };

const LANGS: Lang[] = ["zh", "en", "auto"];
const MODES: SearchMode[] = ["exact", "prefix", "substring"];

export function routeToHash(route: Route): string {
  switch (route.view) {
    case "home":
      return "#/";
    case "search": {
      const params = new URLSearchParams({
        q: route.q,
        lang: route.lang,
        mode: route.mode,
      });
      return `#/search?${params}`;
    }
    case "sense":
      return `#/sense/${route.id}`;
    case "sememe":
      return `#/sememe/${route.id}`;
    case "compare": {
      const params = new URLSearchParams({
        a: route.a,
        b: route.b,
        lang: route.lang,
      });
      return `#/compare?${params}`;
    }
  }
}

export function parseHash(hash: string): Route {
  const raw = hash.startsWith("#") ? hash.slice(1) : hash;
  const [path, query = ""] = raw.split("?", 2) as [string, string?];
  const params = new URLSearchParams(query);

  if (path === "/search") {
    const lang = params.get("lang") ?? "auto";
    const mode = params.get("mode") ?? "exact";
    return {
      view: "search",
      q: params.get("q") ?? "",
      lang: (LANGS as string[]).includes(lang) ? (lang as Lang) : "auto",
      mode: (MODES as string[]).includes(mode) ? (mode as SearchMode) : "exact",
    };
  }
  const senseMatch = /^\/sense\/(\d+)$/.exec(path);
  if (senseMatch) {
    return { view: "sense", id: Number(senseMatch[1]) };
  }
  const sememeMatch = /^\/sememe\/(\d+)$/.exec(path);
  if (sememeMatch) {
    return { view: "sememe", id: Number(sememeMatch[1]) };
  }
  if (path === "/compare") {
    const lang = params.get("lang") === "zh" ? "zh" : "en";
    return {
      view: "compare",
      a: params.get("a") ?? "",
      b: params.get("b") ?? "",
      lang,
    };
  }
  return { view: "home" };
}
