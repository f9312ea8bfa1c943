/** DOM wiring: render the controller's state, forward events to it.
 *
 * Rendering is rebuild-on-change; the transcript and inspector are
 * small enough that diffing would be ceremony. All text lands via
 * textContent, payload strings never meet innerHTML.
 */

import { ApiError, HttpTransport } from "./client.js";
import { ChatController } from "./controller.js";
import {
  constraintView,
  entityTimeline,
  menuOptions,
  poolRows,
  responseSegments,
  topicShares,
  turnBadge,
  userFields,
} from "./views.js";

const controller = new ChatController(new HttpTransport());

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

// ---------------------------------------------------------------------------
// transcript pane

function renderTranscript(): void {
  const pane = byId<HTMLDivElement>("transcript");
  pane.replaceChildren();
  controller.entries.forEach((entry, index) => {
    const user = el("div", "bubble user");
    user.appendChild(el("div", "text", entry.utterance));
    pane.appendChild(user);

    const bot = el("div", index === controller.selected ? "bubble bot selected" : "bubble bot");
    bot.dataset["index"] = String(index);
    const text = el("div", "text");
    if (entry.payload.turn.winner_rg === "fallback") {
      text.appendChild(el("span", "badge fallback-badge", "fallback"));
    }
    for (const segment of responseSegments(entry.payload.turn)) {
      text.appendChild(el("span", `seg seg-${segment.kind}`, segment.text));
      text.appendChild(document.createTextNode(" "));
    }
    bot.appendChild(text);

    const options = menuOptions(entry.payload.turn);
    if (options.length > 0) {
      const row = el("div", "menu-row");
      const latest = index === controller.entries.length - 1;
      for (const topic of options) {
        const button = el("button", "menu-option", topic);
        button.disabled = !latest || controller.closed;
        button.addEventListener("click", () => {
          void submit(topic);
        });
        row.appendChild(button);
      }
      bot.appendChild(row);
    }

    bot.appendChild(el("div", "badge", turnBadge(entry.payload)));
    bot.addEventListener("click", () => {
      controller.select(index);
      renderAll();
    });
    pane.appendChild(bot);
  });
  pane.scrollTop = pane.scrollHeight;
}

// ---------------------------------------------------------------------------
// inspector panes

function card(title: string): { root: HTMLDivElement; body: HTMLDivElement } {
  const root = el("div", "card");
  root.appendChild(el("h3", undefined, title));
  const body = el("div", "card-body");
  root.appendChild(body);
  return { root, body };
}

function definition(body: HTMLElement, label: string, value: string): void {
  const row = el("div", "kv");
  row.appendChild(el("span", "k", label));
  row.appendChild(el("span", "v", value));
  body.appendChild(row);
}

function renderInspector(): void {
  const pane = byId<HTMLDivElement>("inspector");
  pane.replaceChildren();
  const entry = controller.current();
  if (!entry) {
    pane.appendChild(el("p", "hint", "Say something to see how the reply is chosen."));
    return;
  }
  const turn = entry.payload.turn;

  const decision = card(`turn ${turn.turn_index}: decision`);
  const view = constraintView(turn);
  definition(decision.body, "action", view.action);
  definition(decision.body, "topic signal", view.signal);
  definition(
    decision.body,
    "constraint",
    view.topic === null ? `(none) · ${view.hardness}` : `${view.topic} · ${view.hardness}`,
  );
  if (view.entityMentions.length > 0) {
    definition(decision.body, "mentions", view.entityMentions.join(", "));
  }
  definition(decision.body, "initiative", view.initiative ?? "user");
  definition(decision.body, "acts", turn.acts.join(", ") || "-");
  if (turn.intents.length > 0) {
    definition(decision.body, "intents", turn.intents.join(", "));
  }
  definition(decision.body, "sentiment", turn.sentiment);
  pane.appendChild(decision.root);

  const pool = card("candidate pool");
  const table = el("table", "pool");
  const head = el("tr");
  for (const column of ["rg", "score", "status", "topic", "says"]) {
    head.appendChild(el("th", undefined, column));
  }
  table.appendChild(head);
  for (const row of poolRows(turn)) {
    const tr = el("tr", row.won ? "won" : undefined);
    tr.appendChild(el("td", undefined, row.rg_name));
    tr.appendChild(el("td", "num", row.score === null ? "-" : row.score.toFixed(3)));
    tr.appendChild(el("td", undefined, row.status));
    tr.appendChild(el("td", undefined, row.topic ?? "-"));
    const says = [row.ground, row.opener, row.body].filter(Boolean).join(" ");
    tr.appendChild(el("td", "says", says));
    table.appendChild(tr);
  }
  pool.body.appendChild(table);
  pane.appendChild(pool.root);

  if (turn.coref.length > 0) {
    const coref = card("pronouns");
    for (const binding of turn.coref) {
      definition(
        coref.body,
        binding.pronoun,
        `${binding.antecedent} (${binding.entity_id}, ${binding.entity_type})`,
      );
    }
    pane.appendChild(coref.root);
  }

  const timeline = card("entity timeline");
  const turnsSoFar = controller.entries
    .slice(0, controller.selected + 1)
    .map((e) => e.payload.turn);
  const rows = entityTimeline(turnsSoFar);
  if (rows.length === 0) {
    timeline.body.appendChild(el("p", "hint", "No entities linked yet."));
  }
  for (const row of rows) {
    const line = el("div", "timeline-row");
    line.appendChild(el("span", "turn-no", `#${row.turn_index}`));
    line.appendChild(el("span", `badge source-${row.source}`, row.source));
    line.appendChild(el("span", "surface", row.surface));
    line.appendChild(el("span", "eid", `${row.entity_id} · ${row.entity_type}`));
    timeline.body.appendChild(line);
  }
  pane.appendChild(timeline.root);

  const topics = card("topics this session");
  for (const share of topicShares(controller.topics)) {
    const row = el("div", "topic-row");
    row.appendChild(el("span", "k", share.topic));
    const bar = el("div", "bar");
    const fill = el("div", "fill");
    fill.style.width = `${Math.round(share.share * 100)}%`;
    bar.appendChild(fill);
    row.appendChild(bar);
    row.appendChild(el("span", "v num", String(share.turns)));
    topics.body.appendChild(row);
  }
  pane.appendChild(topics.root);

  const user = card("user model");
  for (const field of userFields(controller.user)) {
    definition(user.body, field.label, field.value);
  }
  pane.appendChild(user.root);
}

// ---------------------------------------------------------------------------
// chrome

function renderChrome(): void {
  byId<HTMLDivElement>("banner").hidden = !controller.offline;
  const input = byId<HTMLInputElement>("utterance");
  const send = byId<HTMLButtonElement>("send");
  const disabled = controller.offline || controller.closed || controller.sessionId === null;
  input.disabled = disabled;
  send.disabled = disabled;
  byId<HTMLSpanElement>("session-info").textContent =
    controller.sessionId === null
      ? "connecting..."
      : `session ${controller.sessionId} · seed ${controller.seed}${controller.closed ? " · ended" : ""}`;
}

function renderAll(): void {
  renderTranscript();
  renderInspector();
  renderChrome();
}

async function submit(utterance: string): Promise<void> {
  try {
    await controller.send(utterance);
  } catch (err) {
    if (err instanceof ApiError) {
      window.alert(`engine refused the turn: ${err.message}`);
    }
    // connection loss is reflected by the banner; nothing else to do
  }
  renderAll();
}

async function endSession(): Promise<void> {
  const picked = byId<HTMLSelectElement>("rating").value;
  const rating = picked === "" ? null : Number(picked);
  try {
    const ended = await controller.end(rating);
    window.alert(
      `Conversation saved: ${ended.turns} turns` +
        (ended.rating === null ? "" : `, rated ${ended.rating}`),
    );
  } catch (err) {
    if (err instanceof ApiError) window.alert(err.message);
  }
  renderAll();
}

function wire(): void {
  const form = byId<HTMLFormElement>("composer");
  const input = byId<HTMLInputElement>("utterance");
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const text = input.value;
    input.value = "";
    void submit(text);
  });
  byId<HTMLButtonElement>("end").addEventListener("click", () => {
    void endSession();
  });
  byId<HTMLButtonElement>("retry").addEventListener("click", () => {
    void boot();
  });
}

async function boot(): Promise<void> {
  try {
    await controller.start({});
  } catch {
    controller.offline = true;
  }
  renderAll();
}

wire();
void boot();
