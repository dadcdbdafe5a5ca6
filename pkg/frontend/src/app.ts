// Browser wiring: every action round-trips to the server; the page holds
// only view state.  Optimistic updates are deliberately absent.

import { ApiError, SessionClient } from "./api.js";
import { renderBoardSvg } from "./board.js";
import {
  buildBoardState,
  invariantRows,
  moveKey,
  sameInvariants,
  type BoardState,
} from "./state.js";
import type { ClusterOut, InvariantsOut, MoveOut } from "./types.js";

interface Ui {
  server: HTMLInputElement;
  cluster: HTMLInputElement;
  goal: HTMLInputElement;
  load: HTMLButtonElement;
  undo: HTMLButtonElement;
  hint: HTMLButtonElement;
  board: HTMLElement;
  panel: HTMLElement;
  status: HTMLElement;
  banner: HTMLElement;
}

function grab(): Ui {
  const el = <T extends HTMLElement>(id: string) => document.getElementById(id) as T;
  return {
    server: el("server"),
    cluster: el("cluster"),
    goal: el("goal"),
    load: el("load"),
    undo: el("undo"),
    hint: el("hint"),
    board: el("board"),
    panel: el("panel"),
    status: el("status"),
    banner: el("banner"),
  };
}

let client: SessionClient | null = null;
let session = "";
let lastInvariants: InvariantsOut | null = null;
let board: BoardState | null = null;

async function refresh(ui: Ui, extra: {
  cluster: ClusterOut; depth: string; hintMove?: MoveOut | null; status?: string;
}): Promise<void> {
  if (!client) return;
  const [moves, invariants] = await Promise.all([
    client.moves(session),
    client.invariants(session),
  ]);
  const goalName = ui.goal.value.trim() || null;
  let goalCluster: ClusterOut | null = null;
  let reached = false;
  if (goalName) {
    goalCluster = await client.getCluster(goalName);
    reached = (await client.goal(session, goalName)).reached;
  }
  let status = extra.status ?? "";
  if (lastInvariants && !sameInvariants(lastInvariants, invariants)) {
    status = "invariants changed unexpectedly -- this should never happen";
  }
  lastInvariants = invariants;
  board = buildBoardState({
    session,
    cluster: extra.cluster,
    moves: moves.moves,
    invariants,
    depth: extra.depth,
    goalName,
    goalCluster,
    goalReached: reached,
    hintMove: extra.hintMove ?? null,
    status,
  });
  draw(ui);
}

function draw(ui: Ui): void {
  if (!board) return;
  ui.board.innerHTML = renderBoardSvg(board);
  ui.panel.innerHTML = invariantRows(board.invariants)
    .map(([k, v]) => `<tr><td>${k}</td><td>${v}</td></tr>`)
    .join("");
  ui.status.textContent = board.status;
  ui.banner.textContent = board.goalReached
    ? `goal reached: ${board.goalName} (up to translation) in ${board.depth} moves`
    : "";
  ui.banner.className = board.goalReached ? "banner on" : "banner";
  for (const el of ui.board.querySelectorAll("[data-move]")) {
    el.addEventListener("click", () => {
      const key = el.getAttribute("data-move");
      const mv = board?.legalMoves.find((m) => moveKey(m) === key);
      if (mv) void applyMove(ui, mv);
    });
  }
}

async function applyMove(ui: Ui, mv: MoveOut): Promise<void> {
  if (!client) return;
  try {
    const out = await client.apply(session, {
      x: mv.x, y: mv.y, dir: mv.dir, n: mv.n,
    });
    await refresh(ui, { cluster: out.cluster, depth: out.depth });
  } catch (err) {
    ui.status.textContent = err instanceof ApiError ? err.detail : String(err);
  }
}

async function loadCluster(ui: Ui): Promise<void> {
  client = new SessionClient(ui.server.value.trim());
  lastInvariants = null;
  try {
    const out = await client.createSession({ name: ui.cluster.value.trim() });
    session = out.session;
    await refresh(ui, { cluster: out.cluster, depth: out.depth, status: "loaded" });
  } catch (err) {
    ui.status.textContent = err instanceof ApiError ? err.detail : String(err);
  }
}

async function undoMove(ui: Ui): Promise<void> {
  if (!client || !session) return;
  try {
    const out = await client.undo(session);
    await refresh(ui, { cluster: out.cluster, depth: out.depth, status: "undone" });
  } catch (err) {
    ui.status.textContent = err instanceof ApiError ? err.detail : String(err);
  }
}

async function askHint(ui: Ui): Promise<void> {
  if (!client || !session || !board) return;
  const goalName = ui.goal.value.trim();
  if (!goalName) {
    ui.status.textContent = "set a goal cluster to get hints";
    return;
  }
  try {
    const out = await client.hint(session, goalName, 7);
    if (!out.move) {
      ui.status.textContent = out.reason;
      return;
    }
    board = { ...board, hintMove: out.move, status: `hint: ${out.reason}` };
    draw(ui);
  } catch (err) {
    ui.status.textContent = err instanceof ApiError ? err.detail : String(err);
  }
}

export function start(): void {
  const ui = grab();
  ui.load.addEventListener("click", () => void loadCluster(ui));
  ui.undo.addEventListener("click", () => void undoMove(ui));
  ui.hint.addEventListener("click", () => void askHint(ui));
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", start);
}
