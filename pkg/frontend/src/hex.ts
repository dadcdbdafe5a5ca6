// Hex-lattice geometry for drawing.  Cells are integer pairs (x, y) with
// center (x + y/2, y*sqrt(3)/2); the board flips y so that increasing
// lattice y points up on screen.  Twist signs mirror the server's
// calibrated convention and are used only to draw tangency marks.

export interface Cell {
  x: number;
  y: number;
}

export const NEIGHBOR_OFFSETS: ReadonlyArray<readonly [number, number]> = [
  [1, 0], [-1, 0], [0, 1], [0, -1], [1, -1], [-1, 1],
];

export const DIRECTION_NAMES: Record<string, readonly [number, number]> = {
  E: [1, 0], W: [-1, 0], NE: [0, 1], SW: [0, -1], SE: [1, -1], NW: [-1, 1],
};

const SQRT3_2 = Math.sqrt(3) / 2;

export function cellCenter(c: Cell): { cx: number; cy: number } {
  return { cx: c.x + c.y / 2, cy: -c.y * SQRT3_2 };
}

export function isAdjacent(a: Cell, b: Cell): boolean {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  return NEIGHBOR_OFFSETS.some(([ox, oy]) => ox === dx && oy === dy);
}

/** Tangency mark sign: -1 for the right-handed (positive slope) class. */
export function twistSign(dx: number, dy: number): -1 | 1 {
  if (dx === 0 && (dy === 1 || dy === -1)) return -1;
  return 1;
}

export function cellKey(c: Cell): string {
  return `${c.x},${c.y}`;
}

/** Translate cells so their (y,x)-least member sits at the origin. */
export function canonicalTranslate(cells: Cell[]): Cell[] {
  if (cells.length === 0) return [];
  let base = cells[0];
  for (const c of cells) {
    if (c.y < base.y || (c.y === base.y && c.x < base.x)) base = c;
  }
  return cells.map((c) => ({ x: c.x - base.x, y: c.y - base.y }));
}

/** Offset aligning the goal's base cell with the current cluster's. */
export function overlayOffset(current: Cell[], goal: Cell[]): { dx: number; dy: number } {
  if (current.length === 0 || goal.length === 0) return { dx: 0, dy: 0 };
  const least = (cells: Cell[]) => {
    let b = cells[0];
    for (const c of cells) {
      if (c.y < b.y || (c.y === b.y && c.x < b.x)) b = c;
    }
    return b;
  };
  const a = least(current);
  const b = least(goal);
  return { dx: a.x - b.x, dy: a.y - b.y };
}

export function sameUpToTranslation(a: Cell[], b: Cell[]): boolean {
  if (a.length !== b.length) return false;
  const key = (cells: Cell[]) =>
    canonicalTranslate(cells)
      .map(cellKey)
      .sort()
      .join(";");
  return key(a) === key(b);
}
