import { describe, expect, it } from "vitest";

import {
  canonicalTranslate,
  cellCenter,
  isAdjacent,
  overlayOffset,
  sameUpToTranslation,
  twistSign,
  NEIGHBOR_OFFSETS,
} from "../src/hex.js";

describe("hex geometry", () => {
  it("has six distinct neighbor offsets", () => {
    expect(new Set(NEIGHBOR_OFFSETS.map((o) => o.join(","))).size).toBe(6);
  });

  it("adjacency matches the offsets", () => {
    const c = { x: 2, y: -1 };
    for (const [dx, dy] of NEIGHBOR_OFFSETS) {
      expect(isAdjacent(c, { x: c.x + dx, y: c.y + dy })).toBe(true);
    }
    expect(isAdjacent(c, { x: c.x + 1, y: c.y + 1 })).toBe(false);
    expect(isAdjacent(c, c)).toBe(false);
  });

  it("centers follow the skewed lattice embedding", () => {
    expect(cellCenter({ x: 0, y: 0 })).toEqual({ cx: 0, cy: -0 });
    const up = cellCenter({ x: 0, y: 1 });
    expect(up.cx).toBeCloseTo(0.5);
    expect(up.cy).toBeCloseTo(-Math.sqrt(3) / 2);
  });

  it("marks the positive-slope class as the minus twist", () => {
    expect(twistSign(0, 1)).toBe(-1);
    expect(twistSign(0, -1)).toBe(-1);
    expect(twistSign(1, 0)).toBe(1);
    expect(twistSign(-1, 1)).toBe(1);
    expect(twistSign(1, -1)).toBe(1);
  });

  it("canonical translation and comparison up to translation", () => {
    const a = [{ x: 3, y: 2 }, { x: 4, y: 2 }];
    const b = [{ x: -1, y: 0 }, { x: 0, y: 0 }];
    expect(canonicalTranslate(a)).toEqual([{ x: 0, y: 0 }, { x: 1, y: 0 }]);
    expect(sameUpToTranslation(a, b)).toBe(true);
    expect(sameUpToTranslation(a, [{ x: 0, y: 0 }, { x: 0, y: 1 }])).toBe(false);
  });

  it("overlay offset aligns base cells", () => {
    const current = [{ x: 5, y: 1 }, { x: 6, y: 1 }];
    const goal = [{ x: 0, y: 0 }, { x: 1, y: 0 }];
    expect(overlayOffset(current, goal)).toEqual({ dx: 5, dy: 1 });
  });
});
