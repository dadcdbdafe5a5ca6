// Pure SVG rendering of a board state: grape circles with labels,
// tangency marks (+/- by slope class), dashed landing cells for every
// legal move, and a translucent goal overlay.

import type { Cell } from "./hex.js";
import { cellCenter, isAdjacent, twistSign } from "./hex.js";
import { moveKey, type BoardState } from "./state.js";

const SCALE = 46;
const RADIUS = 21;

interface Extent {
  minX: number;
  maxX: number;
  minY: number;
  maxY: number;
}

function extend(e: Extent, c: Cell): void {
  const { cx, cy } = cellCenter(c);
  e.minX = Math.min(e.minX, cx);
  e.maxX = Math.max(e.maxX, cx);
  e.minY = Math.min(e.minY, cy);
  e.maxY = Math.max(e.maxY, cy);
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/"/g, "&quot;");
}

export function renderBoardSvg(state: BoardState): string {
  const cells: Cell[] = [...state.grapes];
  const targets = state.legalMoves.map((m) => ({
    x: parseInt(m.target_x, 10),
    y: parseInt(m.target_y, 10),
  }));
  const extentCells = cells.concat(targets, state.goalOverlay);
  if (extentCells.length === 0) {
    return '<svg xmlns="http://www.w3.org/2000/svg" width="80" height="80"></svg>';
  }
  const e: Extent = { minX: Infinity, maxX: -Infinity, minY: Infinity, maxY: -Infinity };
  for (const c of extentCells) extend(e, c);
  const pad = 0.85;
  const w = (e.maxX - e.minX + 2 * pad) * SCALE;
  const h = (e.maxY - e.minY + 2 * pad) * SCALE;
  const px = (c: Cell) => ((cellCenter(c).cx - e.minX + pad) * SCALE).toFixed(1);
  const py = (c: Cell) => ((cellCenter(c).cy - e.minY + pad) * SCALE).toFixed(1);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${w.toFixed(0)}" ` +
    `height="${h.toFixed(0)}" viewBox="0 0 ${w.toFixed(1)} ${h.toFixed(1)}">`);

  // goal overlay first, underneath everything
  for (const c of state.goalOverlay) {
    parts.push(
      `<circle class="goal" cx="${px(c)}" cy="${py(c)}" r="${RADIUS}" ` +
      `fill="none" stroke="#9ec9a0" stroke-width="5" opacity="0.6"/>`);
  }

  // grapes
  for (const g of state.grapes) {
    parts.push(
      `<circle class="grape" cx="${px(g)}" cy="${py(g)}" r="${RADIUS}" ` +
      `fill="#f4ecff" stroke="#4b3a6b" stroke-width="2"/>`);
    parts.push(
      `<text class="label" x="${px(g)}" y="${py(g)}" dy="4" ` +
      `text-anchor="middle" font-size="12">${esc(g.label)}</text>`);
  }

  // tangency marks between adjacent grapes
  const seen = new Set<string>();
  for (const a of state.grapes) {
    for (const b of state.grapes) {
      if (a === b || !isAdjacent(a, b)) continue;
      const key = [a.x, a.y, b.x, b.y].join(",");
      const rkey = [b.x, b.y, a.x, a.y].join(",");
      if (seen.has(key) || seen.has(rkey)) continue;
      seen.add(key);
      const mx = (parseFloat(px(a)) + parseFloat(px(b))) / 2;
      const my = (parseFloat(py(a)) + parseFloat(py(b))) / 2;
      const sign = twistSign(b.x - a.x, b.y - a.y);
      const mark = sign > 0 ? "+" : "−";
      parts.push(
        `<text class="twist" x="${mx.toFixed(1)}" y="${my.toFixed(1)}" dy="4" ` +
        `text-anchor="middle" font-size="14" fill="#9a2f2f">${mark}</text>`);
    }
  }

  // legal-move landing cells, clickable
  for (const m of state.legalMoves) {
    const target = { x: parseInt(m.target_x, 10), y: parseInt(m.target_y, 10) };
    const hinted = state.hintMove && moveKey(state.hintMove) === moveKey(m);
    const stroke = hinted ? "#d88200" : "#3f7fc1";
    parts.push(
      `<circle class="move${hinted ? " hint" : ""}" data-move="${esc(moveKey(m))}" ` +
      `cx="${px(target)}" cy="${py(target)}" r="${RADIUS - 3}" fill="rgba(63,127,193,0.08)" ` +
      `stroke="${stroke}" stroke-width="2" stroke-dasharray="6 4" cursor="pointer"/>`);
  }

  parts.push("</svg>");
  return parts.join("\n");
}
