/** Session state machine behind the page.
 *
 * Owns the transcript, the selected turn, and the offline flag; the
 * DOM layer renders whatever is here after each await. Menu clicks go
 * through the same send path as typed text, the engine treats them
 * identically.
 */

import { ConnectionLost, type Transport } from "./client.js";
import type { EndResponse, TurnPayload, UserSummary } from "./types.js";

export interface TranscriptEntry {
  utterance: string;
  payload: TurnPayload;
}

export class ChatController {
  readonly entries: TranscriptEntry[] = [];
  sessionId: string | null = null;
  seed: number | null = null;
  selected = -1;
  offline = false;
  closed = false;
  topics: Record<string, number> = {};
  user: UserSummary | null = null;

  constructor(private readonly transport: Transport) {}

  async start(options: { seed?: number; userId?: string; variant?: string } = {}): Promise<void> {
    const created = await this.guard(() =>
      this.transport.createSession({
        seed: options.seed,
        user_id: options.userId,
        variant: options.variant,
      }),
    );
    this.sessionId = created.session_id;
    this.seed = created.seed;
    this.entries.length = 0;
    this.selected = -1;
    this.closed = false;
    this.topics = {};
    this.user = null;
  }

  /** Post one user turn; returns the payload or null while offline. */
  async send(utterance: string): Promise<TurnPayload | null> {
    const text = utterance.trim();
    if (!text || this.sessionId === null || this.closed) return null;
    const payload = await this.guard(() =>
      this.transport.postTurn(this.sessionId as string, text),
    );
    this.entries.push({ utterance: text, payload });
    this.selected = this.entries.length - 1;
    this.topics = payload.topics;
    this.user = payload.user;
    if (payload.turn.action === "conv_closing") {
      this.closed = true;
    }
    return payload;
  }

  /** A menu button click is just the option posted as the user turn. */
  chooseOption(topic: string): Promise<TurnPayload | null> {
    return this.send(topic);
  }

  async end(rating: number | null): Promise<EndResponse> {
    if (this.sessionId === null) throw new Error("no session");
    const ended = await this.guard(() =>
      this.transport.endSession(this.sessionId as string, rating),
    );
    this.closed = true;
    return ended;
  }

  select(index: number): void {
    if (index >= 0 && index < this.entries.length) {
      this.selected = index;
    }
  }

  current(): TranscriptEntry | null {
    return this.selected >= 0 ? this.entries[this.selected] ?? null : null;
  }

  /** Run a transport call, tracking connection state either way. */
  private async guard<T>(call: () => Promise<T>): Promise<T> {
    try {
      const result = await call();
      this.offline = false;
      return result;
    } catch (err) {
      if (err instanceof ConnectionLost) {
        this.offline = true;
      }
      throw err;
    }
  }
}
