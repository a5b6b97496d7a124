import { ApiClient, NewGameOptions } from "./api";
import { cellColor } from "./color";
import type { Move, RenderGrid } from "./types";

export interface ViewState {
  sessionId: string | null;
  mode: string;
  grid: RenderGrid | null;
  solved: boolean;
  inFlight: boolean;
}

export interface Painter {
  paint(grid: RenderGrid, mode: string, holeCells: string[]): void;
  celebrate(on: boolean): void;
}

/**
 * Drives the service from UI events. Exactly one request may be in
 * flight; gestures arriving while busy are dropped (turn-based clarity
 * beats input buffering). Every repaint uses a grid the service
 * actually returned.
 */
export class GameController {
  state: ViewState = { sessionId: null, mode: "gcs", grid: null, solved: false, inFlight: false };

  constructor(
    private api: ApiClient,
    private painter: Painter,
  ) {}

  private repaint(holeCells: string[] = []): void {
    if (this.state.grid) {
      this.painter.paint(this.state.grid, this.state.mode, holeCells);
    }
    this.painter.celebrate(this.state.solved);
  }

  async newGame(opts: NewGameOptions): Promise<void> {
    if (this.state.inFlight) return;
    this.state.inFlight = true;
    try {
      const res = await this.api.createSession(opts);
      this.state = {
        sessionId: res.id,
        mode: opts.mode,
        grid: res.renderGrid,
        solved: res.solved ?? false,
        inFlight: false,
      };
      this.repaint();
    } finally {
      this.state.inFlight = false;
    }
  }

  /** Returns true when the move was actually sent. */
  async submitMove(move: Move): Promise<boolean> {
    if (this.state.inFlight || !this.state.sessionId) return false;
    this.state.inFlight = true;
    try {
      const res = await this.api.postMove(this.state.sessionId, move);
      this.state.grid = res.renderGrid;
      this.state.solved = res.solved;
      this.repaint();
      return true;
    } catch (err) {
      // Illegal moves leave the board untouched server-side; just skip.
      return false;
    } finally {
      this.state.inFlight = false;
    }
  }

  async undo(): Promise<void> {
    if (this.state.inFlight || !this.state.sessionId) return;
    this.state.inFlight = true;
    try {
      const res = await this.api.postUndo(this.state.sessionId);
      this.state.grid = res.renderGrid;
      this.state.solved = res.solved;
      this.repaint();
    } catch (err) {
      // NOTHING_TO_UNDO: ignore.
    } finally {
      this.state.inFlight = false;
    }
  }
}

/** Paints onto a canvas 2D context; kept free of controller logic so the
 * controller is testable without a DOM. */
export class CanvasPainter implements Painter {
  constructor(
    private ctx: CanvasRenderingContext2D,
    private tileSize: number,
    private banner: HTMLElement,
  ) {}

  paint(grid: RenderGrid, mode: string, holeCells: string[]): void {
    const size = this.tileSize;
    for (let r = 0; r < grid.rows; r++) {
      for (let c = 0; c < grid.cols; c++) {
        const angle = grid.angle ? grid.angle[r][c] : null;
        this.ctx.fillStyle = holeCells.includes(`${r},${c}`)
          ? "#ffffff"
          : cellColor(grid.intensity[r][c], angle);
        this.ctx.fillRect(c * size, r * size, size - 1, size - 1);
      }
    }
  }

  celebrate(on: boolean): void {
    this.banner.style.display = on ? "block" : "none";
  }
}
