// End-to-end: drive a real session service (spawned as a child process)
// through the client, replaying the explorer's acceptance flow.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, SessionClient } from "../src/api.js";
import { buildBoardState, moveKey, sameInvariants } from "../src/state.js";
import { sameUpToTranslation } from "../src/hex.js";
import { grapesToCells } from "../src/state.js";
import type { InvariantsOut, MoveOut } from "../src/types.js";

const PORT = 8911;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(ms = 20000): Promise<void> {
  const deadline = Date.now() + ms;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${BASE}/v1/clusters`);
      if (resp.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error("session service did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "grapecalc.cli", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForServer();
}, 30000);

afterAll(() => {
  server?.kill();
});

describe("explorer flow against the live service", () => {
  const client = new SessionClient(BASE);

  it("loads the E8 cluster and highlights exactly the server's moves", async () => {
    const session = await client.createSession({ name: "e8" });
    expect(session.cluster.grapes.length).toBe(8);
    const moves = await client.moves(session.session);
    const invariants = await client.invariants(session.session);
    const board = buildBoardState({
      session: session.session,
      cluster: session.cluster,
      moves: moves.moves,
      invariants,
      depth: session.depth,
      goalName: null,
      goalCluster: null,
      goalReached: false,
    });
    const again = await client.moves(session.session);
    expect(board.legalMoves.map(moveKey)).toEqual(again.moves.map(moveKey));
    expect(board.legalMoves.length).toBeGreaterThan(0);
  });

  it("keeps the invariant panel fixed under every legal move", async () => {
    const session = await client.createSession({ name: "e8" });
    const sid = session.session;
    const before = await client.invariants(sid);
    const moves = (await client.moves(sid)).moves;
    for (const mv of moves) {
      const applied = await client.apply(sid, {
        x: mv.x, y: mv.y, dir: mv.dir, n: mv.n,
      });
      const after = await client.invariants(sid);
      expect(sameInvariants(before, after)).toBe(true);
      expect(applied.depth).toBe("1");
      await client.undo(sid);
    }
  });

  it("shows the server's reason for an illegal move", async () => {
    const session = await client.createSession({ name: "e8" });
    try {
      await client.apply(session.session, { x: "4", y: "0", dir: "E", n: "1" });
      expect.unreachable("illegal move must be rejected");
    } catch (err) {
      const e = err as ApiError;
      expect(e.status).toBe(409);
      expect(e.detail.length).toBeGreaterThan(0);
    }
  });

  it("walks hint by hint from E8 to the goal and sees the banner condition",
    async () => {
      const session = await client.createSession({ name: "e8" });
      const sid = session.session;
      const inv0 = await client.invariants(sid);
      let reached = (await client.goal(sid, "c2")).reached;
      expect(reached).toBe(false);
      let steps = 0;
      while (!reached && steps < 7) {
        const hint = await client.hint(sid, "c2", 7);
        expect(hint.move).not.toBeNull();
        const mv = hint.move as MoveOut;
        await client.apply(sid, { x: mv.x, y: mv.y, dir: mv.dir, n: mv.n });
        steps += 1;
        reached = (await client.goal(sid, "c2")).reached;
      }
      expect(reached).toBe(true);
      expect(steps).toBe(7);
      // the panel never moved
      const inv1: InvariantsOut = await client.invariants(sid);
      expect(sameInvariants(inv0, inv1)).toBe(true);
      // and the client agrees the endpoint matches the goal up to translation
      const goalCluster = await client.getCluster("c2");
      const finalCluster = (await client.undo(sid)).cluster; // depth 6 now
      const redo = await client.hint(sid, "c2", 7);
      expect(redo.move).not.toBeNull();
      const mv = redo.move as MoveOut;
      const finalAgain = await client.apply(sid, {
        x: mv.x, y: mv.y, dir: mv.dir, n: mv.n,
      });
      expect(
        sameUpToTranslation(
          grapesToCells(finalAgain.cluster),
          grapesToCells(goalCluster),
        ),
      ).toBe(true);
      expect(finalCluster.grapes.length).toBe(8);
    }, 120000);

  it("hint reports exhaustion politely when the budget is too small", async () => {
    const session = await client.createSession({ name: "e8" });
    const hint = await client.hint(session.session, "c2", 1);
    expect(hint.move).toBeNull();
    expect(hint.reason).toContain("no hint");
  });
});
