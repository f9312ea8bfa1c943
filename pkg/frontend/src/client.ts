/** Thin fetch wrapper over the conversation service wire API. */

import type {
  CreateResponse,
  EndResponse,
  SessionState,
  TurnPayload,
} from "./types.js";

/** Server said no: carries the HTTP status for the caller to map. */
export class ApiError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

/** Could not reach the server at all; the UI shows the banner. */
export class ConnectionLost extends Error {
  constructor(cause: unknown) {
    super("connection to the engine lost");
    this.name = "ConnectionLost";
    this.cause = cause;
  }
}

export interface Transport {
  createSession(body: {
    user_id?: string;
    seed?: number;
    variant?: string;
  }): Promise<CreateResponse>;
  postTurn(sessionId: string, utterance: string): Promise<TurnPayload>;
  getState(sessionId: string): Promise<SessionState>;
  endSession(sessionId: string, rating: number | null): Promise<EndResponse>;
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, init);
  } catch (err) {
    throw new ConnectionLost(err);
  }
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body, keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

function post<T>(url: string, body: unknown): Promise<T> {
  return request<T>(url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
}

export class HttpTransport implements Transport {
  constructor(private readonly base: string = "") {}

  createSession(body: {
    user_id?: string;
    seed?: number;
    variant?: string;
  }): Promise<CreateResponse> {
    return post(`${this.base}/api/sessions`, body);
  }

  postTurn(sessionId: string, utterance: string): Promise<TurnPayload> {
    return post(`${this.base}/api/sessions/${sessionId}/turns`, { utterance });
  }

  getState(sessionId: string): Promise<SessionState> {
    return request(`${this.base}/api/sessions/${sessionId}`);
  }

  endSession(sessionId: string, rating: number | null): Promise<EndResponse> {
    return post(`${this.base}/api/sessions/${sessionId}/end`, { rating });
  }
}
