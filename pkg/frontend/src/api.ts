import type { Move, MoveResponse, RenderGrid, SessionResponse } from "./types";

export type FetchFn = typeof fetch;

export interface NewGameOptions {
  mode: string;
  size: number;
  seed?: number;
  moves?: number;
  tolerance?: number;
}

export class ApiError extends Error {
  code: string;
  constructor(code: string, message: string) {
    super(message);
    this.code = code;
  }
}

/** Thin JSON client for the session service; the board truth always
 * lives server-side, the UI only displays what comes back. */
export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchFn = fetch.bind(globalThis),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchFn(`${this.baseUrl}${path}`, {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
    const body = await res.json();
    if (!res.ok) {
      throw new ApiError(body.code ?? "UNKNOWN", body.message ?? res.statusText);
    }
    return body as T;
  }

  createSession(opts: NewGameOptions): Promise<SessionResponse> {
    return this.request("/sessions", { method: "POST", body: JSON.stringify(opts) });
  }

  postMove(id: string, move: Move): Promise<MoveResponse> {
    return this.request(`/sessions/${id}/moves`, {
      method: "POST",
      body: JSON.stringify(move),
    });
  }

  postUndo(id: string): Promise<MoveResponse> {
    return this.request(`/sessions/${id}/undo`, { method: "POST" });
  }

  getRender(id: string): Promise<{ renderGrid: RenderGrid }> {
    return this.request(`/sessions/${id}/render`, { method: "GET" });
  }
}
