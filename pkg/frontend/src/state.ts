// View-model assembly.  The server is authoritative: the board state is
// nothing but the latest server responses stitched together.

import type { Cell } from "./hex.js";
import { overlayOffset } from "./hex.js";
import type { ClusterOut, InvariantsOut, MoveOut } from "./types.js";

export interface BoardGrape extends Cell {
  label: string;
}

export interface BoardState {
  session: string;
  grapes: BoardGrape[];
  legalMoves: MoveOut[];
  invariants: InvariantsOut | null;
  depth: number;
  goalName: string | null;
  goalReached: boolean;
  goalOverlay: Cell[];
  hintMove: MoveOut | null;
  status: string;
}

export function grapesToCells(cluster: ClusterOut): BoardGrape[] {
  return cluster.grapes.map((g) => ({
    label: g.label,
    x: parseInt(g.x, 10),
    y: parseInt(g.y, 10),
  }));
}

export function buildBoardState(args: {
  session: string;
  cluster: ClusterOut;
  moves: MoveOut[];
  invariants: InvariantsOut | null;
  depth: string;
  goalName: string | null;
  goalCluster: ClusterOut | null;
  goalReached: boolean;
  hintMove?: MoveOut | null;
  status?: string;
}): BoardState {
  const grapes = grapesToCells(args.cluster);
  let overlay: Cell[] = [];
  if (args.goalCluster) {
    const goalCells = grapesToCells(args.goalCluster);
    const { dx, dy } = overlayOffset(grapes, goalCells);
    overlay = goalCells.map((c) => ({ x: c.x + dx, y: c.y + dy }));
  }
  return {
    session: args.session,
    grapes,
    legalMoves: args.moves,
    invariants: args.invariants,
    depth: parseInt(args.depth, 10),
    goalName: args.goalName,
    goalReached: args.goalReached,
    goalOverlay: overlay,
    hintMove: args.hintMove ?? null,
    status: args.status ?? "",
  };
}

/** The invariant panel rows, in display order. */
export function invariantRows(inv: InvariantsOut | null): Array<[string, string]> {
  if (!inv) return [];
  return [
    ["rank", inv.rank],
    ["determinant", inv.determinant],
    ["signature", inv.signature],
    ["type", inv.even ? "even" : "odd"],
    ["class", inv.definiteness],
  ];
}

export function sameInvariants(a: InvariantsOut, b: InvariantsOut): boolean {
  return (
    a.dim === b.dim &&
    a.rank === b.rank &&
    a.determinant === b.determinant &&
    a.signature === b.signature &&
    a.even === b.even &&
    a.definiteness === b.definiteness
  );
}

export function moveKey(m: MoveOut): string {
  return `${m.x},${m.y},${m.dir},${m.n}`;
}
