/** Typed client for the engine's JSON-over-HTTP session protocol.
 *
 * The client owns no game logic: it serializes requests canonically,
 * records every request it sends (for byte-level replay checks), and
 * enforces the one-request-at-a-time rule a turn-based session needs.
 */

export type GraphJson = { n: number; edges: [number, number][] };

export type CopMove = {
  actor: string;
  from: number;
  to: number;
  step: string | null;
};

export type Phase = "robber_place" | "cops_move" | "robber_move" | "captured";

export type ServerState = {
  graph: GraphJson;
  cops: number[];
  cop_names: string[];
  robber: number | null;
  u0: number;
  u1: number | null;
  phase: Phase;
  round: number;
  captured: boolean;
  captured_at: number | null;
  bound: number;
  legal_moves: number[];
  hints: Record<string, number | null> | null;
};

export type GraphChoice =
  | { edge_list: string }
  | { family: { name: string; params: number[]; seed?: number | null } };

export type CreateRequest = {
  graph: GraphChoice;
  cops: number;
  u0?: number | null;
  hints?: boolean | null;
  override?: boolean;
};

export type CreateResponse = { id: string; state: ServerState };

export type RobberResponse = {
  state: ServerState;
  cop_moves: CopMove[];
  captured: boolean;
  round: number;
  hints: Record<string, number | null> | null;
};

export type TranscriptJson = {
  graph: GraphJson;
  u0: number;
  u1: number | null;
  cops: number;
  moves: CopMove[];
  outcome: { captured_at: number } | { timeout: number } | null;
};

/** JSON with object keys recursively sorted; the only serialization
 *  this client ever puts on the wire, so replays are byte-identical. */
export function canonicalJson(value: unknown): string {
  if (value === null || typeof value !== "object") {
    return JSON.stringify(value);
  }
  if (Array.isArray(value)) {
    return "[" + value.map(canonicalJson).join(",") + "]";
  }
  const entries = Object.entries(value as Record<string, unknown>)
    .filter(([, v]) => v !== undefined)
    .sort(([a], [b]) => (a < b ? -1 : a > b ? 1 : 0))
    .map(([k, v]) => JSON.stringify(k) + ":" + canonicalJson(v));
  return "{" + entries.join(",") + "}";
}

export type RecordedRequest = {
  method: string;
  path: string;
  body: string | null;
};

export type TransportResponse = { status: number; text: string };

export type Transport = (
  method: string,
  url: string,
  body: string | null,
) => Promise<TransportResponse>;

export class ProtocolError extends Error {
  constructor(
    public status: number,
    public detail: unknown,
  ) {
    super(typeof detail === "string" ? detail : extractError(detail));
    this.name = "ProtocolError";
  }
}

function extractError(detail: unknown): string {
  if (detail && typeof detail === "object" && "error" in detail) {
    return String((detail as { error: unknown }).error);
  }
  return JSON.stringify(detail);
}

export function fetchTransport(impl: typeof fetch = fetch): Transport {
  return async (method, url, body) => {
    const resp = await impl(url, {
      method,
      headers: body === null ? {} : { "content-type": "application/json" },
      body: body ?? undefined,
    });
    return { status: resp.status, text: await resp.text() };
  };
}

export class SessionClient {
  readonly recorded: RecordedRequest[] = [];
  private inFlight = false;

  constructor(
    private baseUrl: string,
    private transport: Transport,
  ) {}

  get busy(): boolean {
    return this.inFlight;
  }

  private async call<T>(
    method: string,
    path: string,
    body: unknown | null,
  ): Promise<T> {
    if (this.inFlight) {
      throw new Error("one request at a time: a request is already in flight");
    }
    this.inFlight = true;
    const wire = body === null ? null : canonicalJson(body);
    this.recorded.push({ method, path, body: wire });
    try {
      const resp = await this.transport(method, this.baseUrl + path, wire);
      let parsed: unknown;
      try {
        parsed = JSON.parse(resp.text);
      } catch {
        throw new ProtocolError(resp.status, resp.text);
      }
      if (resp.status < 200 || resp.status >= 300) {
        const detail =
          parsed && typeof parsed === "object" && "detail" in parsed
            ? (parsed as { detail: unknown }).detail
            : parsed;
        throw new ProtocolError(resp.status, detail);
      }
      return parsed as T;
    } finally {
      this.inFlight = false;
    }
  }

  createSession(req: CreateRequest): Promise<CreateResponse> {
    return this.call<CreateResponse>("POST", "/session", req);
  }

  robberMove(id: string, to: number): Promise<RobberResponse> {
    return this.call<RobberResponse>("POST", `/session/${id}/robber`, { to });
  }

  getState(id: string): Promise<ServerState> {
    return this.call<ServerState>("GET", `/session/${id}`, null);
  }

  getTranscript(id: string): Promise<TranscriptJson> {
    return this.call<TranscriptJson>("GET", `/session/${id}/transcript`, null);
  }
}
