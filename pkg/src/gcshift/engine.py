"""Game state machine for the sliding-tile variants.

Four modes share one board representation:

* classic  -- the traditional hole puzzle; taps slide an adjacent tile
  into the empty cell.
* integer  -- no hole; swipes circularly shift a whole row or column by
  an integer amount.
* gcs      -- real-valued shifts; the goal is the +/-1 matrix and the
  solved check compares cell magnitudes against 1 within a tolerance.
* image    -- a tiled grayscale image shifted at tile granularity.

Boards and sessions are immutable; every operation returns a new value.
"""

from __future__ import annotations

import json
import math
import random
import secrets
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Union

import numpy as np

from .core import DEFAULT_CONVENTION, FrequencyConvention, gcs, integer_cshift
from .matrix import TileImage, block_col_shift, block_row_shift
from .pgm import ImageFormatError, parse_pgm


class EngineError(Exception):
    code = "BAD_REQUEST"


class NoOpIllegalMove(EngineError):
    code = "ILLEGAL_MOVE"


class InvalidAmount(EngineError):
    code = "INVALID_AMOUNT"


class InvalidIndex(EngineError):
    code = "INVALID_INDEX"


class NothingToUndo(EngineError):
    code = "NOTHING_TO_UNDO"


class ParseError(EngineError):
    code = "BAD_REQUEST"


class GameMode(Enum):
    CLASSIC = "classic"
    INTEGER = "integer"
    GCS = "gcs"
    IMAGE = "image"


@dataclass(frozen=True)
class Tap:
    row: int
    col: int


@dataclass(frozen=True)
class LineShift:
    axis: str  # "row" or "col"
    index: int
    amount: float


Move = Union[Tap, LineShift]


@dataclass(frozen=True)
class Board:
    mode: GameMode
    rows: int
    cols: int
    cells: np.ndarray
    goal: np.ndarray
    tolerance: float
    hole: Optional[tuple] = None
    conv: FrequencyConvention = DEFAULT_CONVENTION
    tiles: Optional[int] = None  # image mode: tiles per side
    block: Optional[int] = None  # image mode: pixels per tile side


@dataclass(frozen=True)
class RenderGrid:
    intensity: np.ndarray
    angle: Optional[np.ndarray] = None


@dataclass(frozen=True)
class Session:
    id: str
    seed: int
    initial: Board
    board: Board
    history: tuple


DEFAULT_BLOCK = 8


def _gcs_goal(rows: int, cols: int) -> np.ndarray:
    goal = np.ones((rows, cols), dtype=complex)
    for i in range(rows):
        goal[i, i % cols] = -1.0
    return goal


def _default_image(side: int) -> np.ndarray:
    # Plane gradient; every tile carries a distinct patch.
    i = np.arange(side)[:, None]
    j = np.arange(side)[None, :]
    return ((i + j) * 255.0 / (2 * side - 2)).astype(float)


def new_board(mode: GameMode, rows: int, cols: int, tolerance: Optional[float] = None,
              conv: FrequencyConvention = DEFAULT_CONVENTION,
              block: int = DEFAULT_BLOCK) -> Board:
    """A board in its goal state.  For image mode rows == cols gives the
    tile count per side and `block` the tile pixel size."""
    if rows < 2 or cols < 2:
        raise EngineError("board dimensions must be at least 2x2")
    if mode is GameMode.CLASSIC:
        vals = np.roll(np.arange(rows * cols), -1).reshape(rows, cols).astype(complex)
        return Board(mode, rows, cols, vals.copy(), vals.copy(),
                     0.0 if tolerance is None else tolerance,
                     hole=(rows - 1, cols - 1), conv=conv)
    if mode is GameMode.INTEGER:
        vals = np.arange(1, rows * cols + 1).reshape(rows, cols).astype(complex)
        return Board(mode, rows, cols, vals.copy(), vals.copy(),
                     0.0 if tolerance is None else tolerance, conv=conv)
    if mode is GameMode.GCS:
        goal = _gcs_goal(rows, cols)
        return Board(mode, rows, cols, goal.copy(), goal.copy(),
                     0.05 if tolerance is None else tolerance, conv=conv)
    if mode is GameMode.IMAGE:
        if rows != cols:
            raise EngineError("image boards must be square (rows == cols)")
        side = rows * block
        px = _default_image(side).astype(complex)
        return Board(mode, side, side, px.copy(), px.copy(),
                     0.05 if tolerance is None else tolerance, conv=conv,
                     tiles=rows, block=block)
    raise EngineError(f"unknown mode {mode!r}")


def board_from_image(img: TileImage, tolerance: float = 0.05,
                     conv: FrequencyConvention = DEFAULT_CONVENTION) -> Board:
    side = img.t * img.b
    return Board(GameMode.IMAGE, side, side, img.pixels.copy(), img.pixels.copy(),
                 tolerance, conv=conv, tiles=img.t, block=img.b)


def load_image(data: bytes, t: int) -> TileImage:
    """Decode PGM bytes into a square tile image with t tiles per side."""
    arr = parse_pgm(data)
    h, w = arr.shape
    if h != w:
        raise ImageFormatError(f"image must be square, got {w}x{h}")
    if t < 1 or h % t != 0:
        raise ImageFormatError(f"side {h} not divisible into {t} tiles")
    return TileImage(t, h // t, arr.astype(complex))


def _check_shift(board: Board, move: LineShift) -> None:
    if move.axis not in ("row", "col"):
        raise EngineError(f"axis must be 'row' or 'col', got {move.axis!r}")
    if board.mode is GameMode.IMAGE:
        bound = board.tiles
    else:
        bound = board.rows if move.axis == "row" else board.cols
    if not 0 <= move.index < bound:
        raise InvalidIndex(f"index {move.index} out of range [0, {bound})")
    if not math.isfinite(move.amount):
        raise InvalidAmount("shift amount must be finite")
    limit = board.tiles if board.mode is GameMode.IMAGE else max(board.rows, board.cols)
    if abs(move.amount) > limit:
        raise InvalidAmount(f"|amount| must be <= {limit}")


def apply_move(board: Board, move: Move) -> Board:
    """Apply one move, returning a new board.  History is the session's
    concern, not this function's."""
    if isinstance(move, Tap):
        if board.mode is not GameMode.CLASSIC:
            raise EngineError("tap moves only apply to classic boards")
        if not (0 <= move.row < board.rows and 0 <= move.col < board.cols):
            raise InvalidIndex(f"tap ({move.row}, {move.col}) out of range")
        hr, hc = board.hole
        if abs(move.row - hr) + abs(move.col - hc) != 1:
            raise NoOpIllegalMove("tapped tile is not adjacent to the hole")
        cells = board.cells.copy()
        cells[hr, hc] = cells[move.row, move.col]
        cells[move.row, move.col] = 0
        return replace(board, cells=cells, hole=(move.row, move.col))

    if not isinstance(move, LineShift):
        raise EngineError(f"unknown move type {type(move).__name__}")
    if board.mode is GameMode.CLASSIC:
        raise EngineError("classic boards take tap moves only")
    _check_shift(board, move)

    if board.mode is GameMode.IMAGE:
        img = TileImage(board.tiles, board.block, board.cells)
        if move.axis == "row":
            img = block_row_shift(img, move.index, move.amount, board.conv)
        else:
            img = block_col_shift(img, move.index, move.amount, board.conv)
        return replace(board, cells=img.pixels)

    cells = board.cells.copy()
    if board.mode is GameMode.INTEGER:
        if not float(move.amount).is_integer():
            raise InvalidAmount("integer mode requires whole-number shifts")
        k = int(move.amount)
        if move.axis == "row":
            cells[move.index, :] = integer_cshift(cells[move.index, :], k)
        else:
            cells[:, move.index] = integer_cshift(cells[:, move.index], k)
    else:  # GCS
        if move.axis == "row":
            cells[move.index, :] = gcs(cells[move.index, :], move.amount, board.conv)
        else:
            cells[:, move.index] = gcs(cells[:, move.index], move.amount, board.conv)
    return replace(board, cells=cells)


def is_solved(board: Board) -> bool:
    if board.mode is GameMode.GCS:
        return bool(np.all(np.abs(np.abs(board.cells) - 1.0) <= board.tolerance))
    if board.mode is GameMode.IMAGE:
        return bool(np.max(np.abs(board.cells - board.goal)) <= 255.0 * board.tolerance)
    return bool(np.array_equal(board.cells, board.goal))


def _random_move(board: Board, rng: random.Random) -> Move:
    if board.mode is GameMode.CLASSIC:
        hr, hc = board.hole
        options = [(hr + dr, hc + dc) for dr, dc in ((1, 0), (-1, 0), (0, 1), (0, -1))
                   if 0 <= hr + dr < board.rows and 0 <= hc + dc < board.cols]
        r, c = rng.choice(options)
        return Tap(r, c)
    axis = rng.choice(("row", "col"))
    if board.mode is GameMode.IMAGE:
        index = rng.randrange(board.tiles)
        span = board.tiles
    else:
        index = rng.randrange(board.rows if axis == "row" else board.cols)
        span = board.cols if axis == "row" else board.rows
    if board.mode is GameMode.INTEGER:
        amount = float(rng.choice([k for k in range(-(span - 1), span) if k != 0]))
    else:
        amount = rng.uniform(-span / 2, span / 2)
        while abs(amount) < 0.1:
            amount = rng.uniform(-span / 2, span / 2)
    return LineShift(axis, index, amount)


def scramble(board: Board, seed: int, num_moves: int):
    """Deterministically scramble with legal random moves; keeps drawing
    until the board is actually away from the goal."""
    if num_moves < 1:
        raise EngineError("num_moves must be >= 1")
    rng = random.Random(seed)
    history = []
    for _ in range(num_moves):
        mv = _random_move(board, rng)
        board = apply_move(board, mv)
        history.append(mv)
    while is_solved(board):
        mv = _random_move(board, rng)
        board = apply_move(board, mv)
        history.append(mv)
    return board, history


def start_session(mode: GameMode, rows: int, cols: int, seed: Optional[int] = None,
                  moves: int = 20, tolerance: Optional[float] = None,
                  conv: FrequencyConvention = DEFAULT_CONVENTION,
                  block: int = DEFAULT_BLOCK) -> Session:
    """Create, scramble, and wrap a board in a fresh session.  Fully
    deterministic once the seed is fixed."""
    if seed is None:
        seed = secrets.randbits(64)
    rng = random.Random(seed)
    sid = f"{rng.getrandbits(128):032x}"
    initial = new_board(mode, rows, cols, tolerance, conv, block)
    board, history = scramble(initial, rng.getrandbits(64), moves)
    # The scrambled state is the session's replay origin.
    return Session(sid, seed, board, board, tuple())


def session_apply(session: Session, move: Move) -> Session:
    board = apply_move(session.board, move)
    return replace(session, board=board, history=session.history + (move,))


def replay(session: Session) -> Board:
    board = session.initial
    for mv in session.history:
        board = apply_move(board, mv)
    return board


def undo(session: Session) -> Session:
    """Reverse the last move: negated shift for line moves, replay for
    taps (the inverse tap target depends on the pre-move hole)."""
    if not session.history:
        raise NothingToUndo("no moves to undo")
    last = session.history[-1]
    rest = session.history[:-1]
    if isinstance(last, LineShift):
        board = apply_move(session.board, replace(last, amount=-last.amount))
    else:
        trimmed = replace(session, history=rest)
        board = replay(trimmed)
    return replace(session, board=board, history=rest)


def _v_ref(board: Board) -> float:
    return 2.0 * float(np.max(np.abs(board.goal)))


def render_grey(board: Board) -> RenderGrid:
    """Magnitude display: a solved gcs board renders at uniform 0.5."""
    intensity = np.clip(np.abs(board.cells) / _v_ref(board), 0.0, 1.0)
    return RenderGrid(intensity=intensity)


def render_complex(board: Board) -> RenderGrid:
    """Magnitude plus phase; zero-magnitude cells get angle 0."""
    grid = render_grey(board)
    angle = np.where(np.abs(board.cells) < 1e-12, 0.0, np.angle(board.cells))
    return RenderGrid(intensity=grid.intensity, angle=angle)


# --- serialization ---------------------------------------------------------

def _pairs(matrix: np.ndarray) -> list:
    return [[float(c.real), float(c.imag)] for c in matrix.ravel()]


def _from_pairs(pairs, rows: int, cols: int) -> np.ndarray:
    if not isinstance(pairs, list) or len(pairs) != rows * cols:
        raise ParseError(f"expected {rows * cols} cell pairs")
    out = np.empty(rows * cols, dtype=complex)
    for i, pair in enumerate(pairs):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, (int, float)) and math.isfinite(x) for x in pair)):
            raise ParseError(f"cell {i} is not a finite [re, im] pair")
        out[i] = complex(pair[0], pair[1])
    return out.reshape(rows, cols)


def board_to_dict(board: Board) -> dict:
    return {
        "mode": board.mode.value,
        "rows": board.rows,
        "cols": board.cols,
        "tolerance": board.tolerance,
        "nyquistSign": board.conv.nyquist_sign,
        "cells": _pairs(board.cells),
        "goal": _pairs(board.goal),
        "hole": list(board.hole) if board.hole is not None else None,
        "tiles": board.tiles,
        "block": board.block,
    }


def board_from_dict(doc) -> Board:
    if not isinstance(doc, dict):
        raise ParseError("board document must be an object")
    try:
        mode = GameMode(doc["mode"])
        rows, cols = int(doc["rows"]), int(doc["cols"])
        tolerance = float(doc["tolerance"])
        conv = FrequencyConvention(int(doc["nyquistSign"]))
        cells = _from_pairs(doc["cells"], rows, cols)
        goal = _from_pairs(doc["goal"], rows, cols)
        hole = doc.get("hole")
    except ParseError:
        raise
    except (KeyError, ValueError, TypeError) as e:
        raise ParseError(f"bad board document: {e}") from e
    if rows < 2 or cols < 2 or not math.isfinite(tolerance) or tolerance < 0:
        raise ParseError("bad board dimensions or tolerance")
    if mode is GameMode.CLASSIC:
        if (not isinstance(hole, list) or len(hole) != 2
                or not all(isinstance(x, int) for x in hole)
                or not (0 <= hole[0] < rows and 0 <= hole[1] < cols)
                or cells[hole[0], hole[1]] != 0):
            raise ParseError("classic board hole does not match the empty cell")
        hole = (hole[0], hole[1])
    else:
        hole = None
    tiles = block = None
    if mode is GameMode.IMAGE:
        tiles, block = doc.get("tiles"), doc.get("block")
        if not (isinstance(tiles, int) and isinstance(block, int)
                and tiles * block == rows and rows == cols):
            raise ParseError("image board needs consistent tiles/block fields")
    return Board(mode, rows, cols, cells, goal, tolerance, hole, conv, tiles, block)


def board_to_json(board: Board) -> str:
    return json.dumps(board_to_dict(board))


def board_from_json(text: str) -> Board:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    return board_from_dict(doc)


def move_to_dict(move: Move) -> dict:
    if isinstance(move, Tap):
        return {"tap": [move.row, move.col]}
    return {"axis": move.axis, "index": move.index, "amount": move.amount}


def move_from_dict(doc) -> Move:
    if not isinstance(doc, dict):
        raise ParseError("move must be an object")
    if "tap" in doc:
        tap = doc["tap"]
        if not isinstance(tap, list) or len(tap) != 2:
            raise ParseError("tap must be [row, col]")
        return Tap(int(tap[0]), int(tap[1]))
    try:
        axis = doc["axis"]
        index = int(doc["index"])
        amount = float(doc["amount"])
    except (KeyError, ValueError, TypeError) as e:
        raise ParseError(f"bad move: {e}") from e
    if not math.isfinite(amount):
        raise ParseError("move amount must be finite")
    return LineShift(axis, index, amount)


def session_to_dict(session: Session) -> dict:
    return {
        "id": session.id,
        "seed": session.seed,
        "initial": board_to_dict(session.initial),
        "board": board_to_dict(session.board),
        "history": [move_to_dict(m) for m in session.history],
    }


def session_from_dict(doc) -> Session:
    if not isinstance(doc, dict):
        raise ParseError("session document must be an object")
    try:
        sid = str(doc["id"])
        seed = int(doc["seed"])
        initial = board_from_dict(doc["initial"])
        board = board_from_dict(doc["board"])
        history = tuple(move_from_dict(m) for m in doc["history"])
    except ParseError:
        raise
    except (KeyError, ValueError, TypeError) as e:
        raise ParseError(f"bad session document: {e}") from e
    return Session(sid, seed, initial, board, history)


def session_to_json(session: Session) -> str:
    return json.dumps(session_to_dict(session))


def session_from_json(text: str) -> Session:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
    return session_from_dict(doc)
