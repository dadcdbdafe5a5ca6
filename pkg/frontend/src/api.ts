// Typed client for the /v1 session protocol.  The fetch implementation is
// injectable so tests can run against a scripted transport.

import type {
  ClusterOut,
  GoalOut,
  HintOut,
  InvariantsOut,
  MoveBody,
  MoveOut,
  SessionOut,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, public detail: string) {
    super(`${status}: ${detail}`);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class SessionClient {
  private base: string;
  private fetchImpl: FetchLike;

  constructor(base: string, fetchImpl?: FetchLike) {
    this.base = base.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchImpl(`${this.base}${path}`, init);
    if (!resp.ok) {
      let detail = resp.statusText;
      try {
        const data = (await resp.json()) as { detail?: unknown };
        if (typeof data.detail === "string") detail = data.detail;
        else if (data.detail !== undefined) detail = JSON.stringify(data.detail);
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiError(resp.status, detail);
    }
    return (await resp.json()) as T;
  }

  listClusters(): Promise<{ clusters: string[] }> {
    return this.request("GET", "/v1/clusters");
  }

  getCluster(name: string): Promise<ClusterOut> {
    return this.request("GET", `/v1/cluster/${encodeURIComponent(name)}`);
  }

  createSession(source: { name?: string; text?: string }): Promise<SessionOut> {
    return this.request("POST", "/v1/session", source);
  }

  moves(session: string): Promise<{ moves: MoveOut[] }> {
    return this.request("GET", `/v1/session/${session}/moves`);
  }

  apply(session: string, move: MoveBody): Promise<SessionOut> {
    return this.request("POST", `/v1/session/${session}/apply`, move);
  }

  undo(session: string): Promise<SessionOut> {
    return this.request("POST", `/v1/session/${session}/undo`);
  }

  invariants(session: string): Promise<InvariantsOut> {
    return this.request("GET", `/v1/session/${session}/invariants`);
  }

  goal(session: string, target: string): Promise<GoalOut> {
    return this.request(
      "GET", `/v1/session/${session}/goal?target=${encodeURIComponent(target)}`);
  }

  hint(session: string, target: string, depth = 4): Promise<HintOut> {
    return this.request(
      "GET",
      `/v1/session/${session}/hint?target=${encodeURIComponent(target)}&depth=${depth}`);
  }
}
