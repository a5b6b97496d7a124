export interface RenderGrid {
  rows: number;
  cols: number;
  intensity: number[][];
  angle: number[][] | null;
}

export interface BoardDoc {
  mode: string;
  rows: number;
  cols: number;
  tolerance: number;
  nyquistSign: number;
  cells: [number, number][];
  goal: [number, number][];
  hole: [number, number] | null;
  tiles: number | null;
  block: number | null;
}

export interface SessionResponse {
  id: string;
  seed?: number;
  board: BoardDoc;
  renderGrid: RenderGrid;
  solved?: boolean;
}

export interface MoveResponse {
  board: BoardDoc;
  renderGrid: RenderGrid;
  solved: boolean;
}

export type LineShiftMove = { axis: "row" | "col"; index: number; amount: number };
export type TapMove = { tap: [number, number] };
export type Move = LineShiftMove | TapMove;

export interface ApiErrorBody {
  code: string;
  message: string;
}
