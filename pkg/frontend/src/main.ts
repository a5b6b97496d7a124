import { ApiClient } from "./api";
import { dragToMove, pointToTap, GridGeometry } from "./gesture";
import { CanvasPainter, GameController, Painter } from "./view";
import type { RenderGrid } from "./types";

const TILE_SIZE = 72;
const TAP_SLOP = 4; // pixels: anything shorter is a tap, not a drag

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setup(): void {
  const canvas = el<HTMLCanvasElement>("board");
  const banner = el<HTMLElement>("solved-banner");
  const modeSelect = el<HTMLSelectElement>("mode");
  const sizeInput = el<HTMLInputElement>("size");
  const seedInput = el<HTMLInputElement>("seed");
  const snapToggle = el<HTMLInputElement>("snap");
  const newButton = el<HTMLButtonElement>("new-game");
  const undoButton = el<HTMLButtonElement>("undo");

  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("canvas 2d context unavailable");

  const api = new ApiClient(window.location.origin.replace(/:\d+$/, ":8080"));
  const basePainter = new CanvasPainter(ctx, TILE_SIZE, banner);

  // Resize the canvas whenever a new grid arrives.
  const painter: Painter = {
    paint(grid: RenderGrid, mode: string, holeCells: string[]): void {
      canvas.width = grid.cols * TILE_SIZE;
      canvas.height = grid.rows * TILE_SIZE;
      basePainter.paint(grid, mode, holeCells);
    },
    celebrate(on: boolean): void {
      basePainter.celebrate(on);
    },
  };

  const controller = new GameController(api, painter);

  function geometry(): GridGeometry | null {
    const grid = controller.state.grid;
    if (!grid) return null;
    return { rows: grid.rows, cols: grid.cols, tileSize: TILE_SIZE };
  }

  newButton.addEventListener("click", () => {
    const seed = seedInput.value.trim();
    void controller.newGame({
      mode: modeSelect.value,
      size: Number(sizeInput.value) || 4,
      seed: seed === "" ? undefined : Number(seed),
    });
  });

  undoButton.addEventListener("click", () => {
    void controller.undo();
  });

  let dragStart: { x: number; y: number } | null = null;

  canvas.addEventListener("pointerdown", (ev) => {
    const rect = canvas.getBoundingClientRect();
    dragStart = { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
    canvas.setPointerCapture(ev.pointerId);
  });

  canvas.addEventListener("pointerup", (ev) => {
    if (!dragStart) return;
    const rect = canvas.getBoundingClientRect();
    const end = { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
    const start = dragStart;
    dragStart = null;

    const grid = geometry();
    if (!grid) return;

    const dist = Math.hypot(end.x - start.x, end.y - start.y);
    if (controller.state.mode === "classic") {
      if (dist <= TAP_SLOP) {
        const tap = pointToTap(start.x, start.y, grid);
        if (tap) void controller.submitMove(tap);
      }
      return;
    }

    const snap = controller.state.mode === "integer" || snapToggle.checked;
    const move = dragToMove(
      { startX: start.x, startY: start.y, endX: end.x, endY: end.y },
      grid,
      snap,
    );
    if (move) void controller.submitMove(move);
  });

  // Start with a default game so the page is never blank.
  void controller.newGame({ mode: modeSelect.value, size: 4 });
}

document.addEventListener("DOMContentLoaded", setup);
