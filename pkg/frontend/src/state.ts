/** Session state: navigation history and in-flight request sequencing. */

export class RequestSequencer {
  private seq = 0;

  /** Claim a token for a new request; earlier tokens become stale. */
  next(): number {
    return ++this.seq;
  }

  /** A response should be applied only while its token is still current. */
  isCurrent(token: number): boolean {
    return token === this.seq;
  }
}

export class ExplorerState {
  query = "";
  lang: "zh" | "en" | "auto" = "auto";
  mode: "exact" | "prefix" | "substring" = "exact";
  selectedSense: number | null = null;
  /** Visited sense ids, append-only within a session. */
  readonly history: number[] = [];

  visitSense(id: number): void {
    this.selectedSense = id;
    this.history.push(id);
  }
}
