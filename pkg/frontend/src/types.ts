/** Wire shapes, verbatim from the conversation service.
 *
 * Everything the inspector shows is one of these; the client never
 * recomputes engine state, it only rearranges these payloads.
 */

export interface CandidateRow {
  rg_name: string;
  body: string;
  ground: string | null;
  opener: string | null;
  topic: string | null;
  dialogue_acts: string[];
  score: number | null;
  status: string; // "won" | "ranked" | "gated" | "dropped:<reason>"
}

export interface EntityRow {
  surface: string;
  entity_id: string;
  entity_type: string;
  source: string; // "user" | "system", shown as a badge
}

export interface CorefRow {
  pronoun: string;
  entity_id: string;
  entity_type: string;
  antecedent: string;
}

export interface TopicSignal {
  kind: string;
  topic: string | null;
}

export interface TurnLog {
  turn_index: number;
  user_utterance: string;
  acts: string[];
  intents: string[];
  sentiment: string;
  topic_signal: TopicSignal;
  coref: CorefRow[];
  entities: EntityRow[];
  action: string;
  constraint_topic: string | null;
  constraint_hardness: string;
  entity_mentions: string[];
  candidates: CandidateRow[];
  winner_rg: string;
  prefix: string | null;
  response: string;
  current_topic: string | null;
  initiative: string | null;
  menu_options: string[];
}

export interface UserSummary {
  user_id: string;
  name: string | null;
  conversations: number;
  affinities: Record<string, number>;
}

export interface TurnPayload {
  session_id: string;
  response: string;
  turn: TurnLog;
  topics: Record<string, number>;
  user: UserSummary | null;
}

export interface CreateResponse {
  session_id: string;
  seed: number;
  user_id: string | null;
  variant: string | null;
}

export interface SessionState {
  session_id: string;
  seed: number;
  user_id: string | null;
  variant: string | null;
  closed: boolean;
  current_topic: string | null;
  turns: TurnLog[];
  topics: Record<string, number>;
  user: UserSummary | null;
}

export interface EndResponse {
  session_id: string;
  turns: number;
  rating: number | null;
}
