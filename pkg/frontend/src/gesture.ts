import type { LineShiftMove, TapMove } from "./types";

export interface DragInput {
  startX: number; // pixels, relative to the board
  startY: number;
  endX: number;
  endY: number;
}

export interface GridGeometry {
  rows: number;
  cols: number;
  tileSize: number; // pixels per tile side
}

/** Drags shorter than this fraction of a tile are accidental touches. */
export const MIN_AMOUNT = 0.05;

/**
 * Turn a drag into a line-shift move: the dominant axis picks row vs
 * column, the start cell picks the line, and the signed drag distance in
 * tile-widths becomes the shift amount (clamped to the line length).
 * Returns null for sub-threshold jiggles or out-of-board starts.
 */
export function dragToMove(drag: DragInput, grid: GridGeometry, snap = false): LineShiftMove | null {
  const dx = drag.endX - drag.startX;
  const dy = drag.endY - drag.startY;
  const row = Math.floor(drag.startY / grid.tileSize);
  const col = Math.floor(drag.startX / grid.tileSize);
  if (row < 0 || row >= grid.rows || col < 0 || col >= grid.cols) {
    return null;
  }
  const horizontal = Math.abs(dx) >= Math.abs(dy);
  const span = horizontal ? grid.cols : grid.rows;
  let amount = (horizontal ? dx : dy) / grid.tileSize;
  amount = Math.max(-span, Math.min(span, amount));
  if (snap) {
    amount = Math.round(amount);
  }
  if (Math.abs(amount) < MIN_AMOUNT) {
    return null;
  }
  // A horizontal drag shifts the row under the start point; vertical
  // drags shift the column. Positive = right / down, matching the service.
  return horizontal
    ? { axis: "row", index: row, amount }
    : { axis: "col", index: col, amount };
}

/** Classic mode uses taps: map a click position to the tapped cell. */
export function pointToTap(x: number, y: number, grid: GridGeometry): TapMove | null {
  const row = Math.floor(y / grid.tileSize);
  const col = Math.floor(x / grid.tileSize);
  if (row < 0 || row >= grid.rows || col < 0 || col >= grid.cols) {
    return null;
  }
  return { tap: [row, col] };
}
