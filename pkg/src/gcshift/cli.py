"""Command-line front end: verify reference values, create and play
boards from scripts, benchmark the shift kernel, transform images."""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

import numpy as np

from . import checks, engine
from .core import convention_from_env, gcs, gcs_dense_oracle
from .engine import EngineError, GameMode, LineShift, Tap
from .matrix import TileImage, block_col_shift, block_row_shift, program_from_json
from .pgm import ImageFormatError, write_pgm


def cmd_verify(args) -> int:
    conv = convention_from_env()
    results = checks.run_checks(conv)
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.name:28s} max_dev={r.max_dev:.3e}  tol={r.tol:.1e}")
            if r.note:
                print(f"      note: {r.note}")
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} checks passed (nyquist_sign={conv.nyquist_sign})")
    return 0 if all(r.passed for r in results) else 1


def _write_out(text: str, out) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_new(args, parser) -> int:
    if args.size < 2:
        parser.error("--size must be at least 2")
    session = engine.start_session(
        GameMode(args.mode), args.size, args.size,
        seed=args.seed, moves=args.moves, tolerance=args.tolerance,
        conv=convention_from_env())
    _write_out(engine.session_to_json(session), args.output)
    return 0


def _parse_move_spec(spec: str):
    try:
        kind, rest = spec.split(":", 1)
        if kind == "tap":
            r, c = rest.split(",")
            return Tap(int(r), int(c))
        if kind in ("row", "col"):
            index, amount = rest.split(":")
            return LineShift(kind, int(index), float(amount))
    except ValueError:
        pass
    raise EngineError(f"bad move spec {spec!r}; use row|col:<index>:<amount> or tap:<r>,<c>")


def cmd_move(args) -> int:
    session = engine.session_from_json(Path(args.session).read_text())
    move = _parse_move_spec(args.move)
    session = engine.session_apply(session, move)
    out = args.output or (args.session if args.in_place else None)
    _write_out(engine.session_to_json(session), out)
    return 0


def cmd_bench(args, parser) -> int:
    if not 10 <= args.max_exp <= 22:
        parser.error("--max-exp must be between 10 and 22")
    conv = convention_from_env()
    rng = np.random.default_rng(12345)
    rows = []
    for exp in range(10, args.max_exp + 1):
        n = 2 ** exp
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        gcs(v, 0.37, conv)  # warm up
        times = []
        for _ in range(args.reps):
            t0 = time.perf_counter()
            gcs(v, 0.37, conv)
            times.append(time.perf_counter() - t0)
        rows.append(("fft", n, statistics.median(times)))
    for n in (64, 128, 256):
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        gcs_dense_oracle(v, 0.37, conv)
        times = []
        for _ in range(args.reps):
            t0 = time.perf_counter()
            gcs_dense_oracle(v, 0.37, conv)
            times.append(time.perf_counter() - t0)
        rows.append(("dense", n, statistics.median(times)))
    if args.csv:
        print("path,n,median_us")
        for path, n, t in rows:
            print(f"{path},{n},{t * 1e6:.3f}")
    else:
        print(f"{'path':6s} {'n':>8s} {'median_us':>12s}")
        for path, n, t in rows:
            print(f"{path:6s} {n:8d} {t * 1e6:12.3f}")
    return 0


def _load_tile_image(path: str, t: int) -> TileImage:
    sidecar = Path(path + ".json")
    if sidecar.exists():
        doc = json.loads(sidecar.read_text())
        side = doc["t"] * doc["b"]
        px = np.array([complex(re, im) for re, im in doc["cells"]]).reshape(side, side)
        if doc["t"] != t:
            raise ImageFormatError(f"sidecar tile count {doc['t']} != requested {t}")
        return TileImage(doc["t"], doc["b"], px)
    return engine.load_image(Path(path).read_bytes(), t)


def cmd_image(args) -> int:
    img = _load_tile_image(args.input, args.tiles)
    ops = program_from_json(Path(args.program).read_text())
    for op in reversed(ops):  # execution order
        if len(op.params) != img.t:
            raise EngineError(f"{op.kind} op needs {img.t} parameters, got {len(op.params)}")
        shift = block_row_shift if op.kind == "row" else block_col_shift
        for band, k in enumerate(op.params):
            if k != 0:
                img = shift(img, band, k, convention_from_env())
    Path(args.output).write_bytes(write_pgm(np.abs(img.pixels)))
    # Full-precision sidecar keeps the transform invertible despite the
    # 8-bit quantization of the PGM itself.
    sidecar = {
        "t": img.t, "b": img.b,
        "cells": [[float(c.real), float(c.imag)] for c in img.pixels.ravel()],
    }
    Path(args.output + ".json").write_text(json.dumps(sidecar))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gcshift")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the frozen reference checks")
    p.add_argument("--json", action="store_true", help="machine-readable results")

    p = sub.add_parser("new", help="create and scramble a session")
    p.add_argument("--mode", choices=[m.value for m in GameMode], default="gcs")
    p.add_argument("--size", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--moves", type=int, default=20)
    p.add_argument("--tolerance", type=float, default=None)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("move", help="apply a move to a stored session")
    p.add_argument("session")
    p.add_argument("move", help="row|col:<index>:<amount> or tap:<r>,<c>")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--in-place", action="store_true")

    p = sub.add_parser("bench", help="time the shift kernel")
    p.add_argument("--max-exp", type=int, default=15)
    p.add_argument("--reps", type=int, default=9)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("image", help="apply a block-shift program to a PGM image")
    p.add_argument("input")
    p.add_argument("program")
    p.add_argument("output")
    p.add_argument("--tiles", type=int, required=True)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "new":
            return cmd_new(args, parser)
        if args.command == "move":
            return cmd_move(args)
        if args.command == "bench":
            return cmd_bench(args, parser)
        if args.command == "image":
            return cmd_image(args)
    except (EngineError, ImageFormatError, ValueError, OSError) as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
