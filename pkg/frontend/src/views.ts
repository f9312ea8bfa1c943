/** Pure payload-to-view transforms.
 *
 * Each function takes wire data and returns exactly what a pane
 * renders. No fetching, no DOM, no state: the tests replay a recorded
 * session through these and compare against the raw payloads.
 */

import type {
  CandidateRow,
  TurnLog,
  TurnPayload,
  UserSummary,
} from "./types.js";

export interface PoolRow extends CandidateRow {
  won: boolean;
}

/** Candidate table rows, best score first.
 *
 * Unscored rows (gated or dropped before ranking) sink to the bottom
 * in their original order, so the table reads: winner, the ranked
 * losers, then everything that never made it to the ranker.
 */
export function poolRows(turn: TurnLog): PoolRow[] {
  const indexed = turn.candidates.map((candidate, index) => ({ candidate, index }));
  indexed.sort((a, b) => {
    const aScore = a.candidate.score;
    const bScore = b.candidate.score;
    if (aScore === null && bScore === null) return a.index - b.index;
    if (aScore === null) return 1;
    if (bScore === null) return -1;
    if (bScore !== aScore) return bScore - aScore;
    return a.index - b.index;
  });
  return indexed.map(({ candidate }) => ({
    ...candidate,
    won: candidate.status === "won",
  }));
}

export interface TimelineRow {
  turn_index: number;
  surface: string;
  entity_id: string;
  entity_type: string;
  source: string;
}

/** Every linked mention of the session so far, oldest first. */
export function entityTimeline(turns: TurnLog[]): TimelineRow[] {
  const rows: TimelineRow[] = [];
  for (const turn of turns) {
    for (const entity of turn.entities) {
      rows.push({
        turn_index: turn.turn_index,
        surface: entity.surface,
        entity_id: entity.entity_id,
        entity_type: entity.entity_type,
        source: entity.source,
      });
    }
  }
  return rows;
}

export type SegmentKind = "prefix" | "ground" | "opener" | "body";

export interface Segment {
  kind: SegmentKind;
  text: string;
}

function tidy(text: string): string {
  return text.replace(/\s+/g, " ").trim();
}

/** The reply split into its labeled parts for styling.
 *
 * The parts come from the winning candidate row; the engine joins the
 * same pieces to build the spoken response, so their concatenation is
 * the response text. When the winner row is missing (it never is on a
 * healthy payload) the whole reply renders as one body segment.
 */
export function responseSegments(turn: TurnLog): Segment[] {
  const winner = turn.candidates.find((c) => c.status === "won");
  if (!winner) {
    return [{ kind: "body", text: tidy(turn.response) }];
  }
  const segments: Segment[] = [];
  if (turn.prefix) segments.push({ kind: "prefix", text: tidy(turn.prefix) });
  if (winner.ground) segments.push({ kind: "ground", text: tidy(winner.ground) });
  if (winner.opener) segments.push({ kind: "opener", text: tidy(winner.opener) });
  if (winner.body) segments.push({ kind: "body", text: tidy(winner.body) });
  return segments;
}

/** The clickable topic offers of a menu turn; empty otherwise. */
export function menuOptions(turn: TurnLog): string[] {
  return [...turn.menu_options];
}

export interface ConstraintView {
  action: string;
  topic: string | null;
  hardness: string;
  entityMentions: string[];
  initiative: string | null;
  signal: string;
}

export function constraintView(turn: TurnLog): ConstraintView {
  const { kind, topic } = turn.topic_signal;
  return {
    action: turn.action,
    topic: turn.constraint_topic,
    hardness: turn.constraint_hardness,
    entityMentions: [...turn.entity_mentions],
    initiative: turn.initiative,
    signal: topic === null ? kind : `${kind}: ${topic}`,
  };
}

export interface TopicShare {
  topic: string;
  turns: number;
  share: number;
}

/** Session topic distribution, largest slice first. */
export function topicShares(topics: Record<string, number>): TopicShare[] {
  const total = Object.values(topics).reduce((a, b) => a + b, 0);
  return Object.entries(topics)
    .map(([topic, turns]) => ({
      topic,
      turns,
      share: total > 0 ? turns / total : 0,
    }))
    .sort((a, b) => b.turns - a.turns || a.topic.localeCompare(b.topic));
}

export interface UserField {
  label: string;
  value: string;
}

export function userFields(user: UserSummary | null): UserField[] {
  if (!user) {
    return [{ label: "user", value: "anonymous session" }];
  }
  const fields: UserField[] = [
    { label: "user", value: user.user_id },
    { label: "name", value: user.name ?? "unknown" },
    { label: "conversations", value: String(user.conversations) },
  ];
  const liked = Object.entries(user.affinities)
    .sort((a, b) => b[1] - a[1] || a[0].localeCompare(b[0]))
    .slice(0, 5)
    .map(([topic, value]) => `${topic} ${value.toFixed(2)}`);
  if (liked.length > 0) {
    fields.push({ label: "affinities", value: liked.join(", ") });
  }
  return fields;
}

/** One-line gist of what the manager did, for the transcript margin. */
export function turnBadge(payload: TurnPayload): string {
  const turn = payload.turn;
  const topic = turn.current_topic ?? "-";
  return `#${turn.turn_index} ${turn.action} · ${topic} · ${turn.winner_rg}`;
}
