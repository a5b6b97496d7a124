"""Fractional circular shifts and the sliding-tile puzzle built on them."""

from .core import (
    DEFAULT_CONVENTION,
    FrequencyConvention,
    convention_from_env,
    frequencies,
    gcs,
    gcs_dense_oracle,
    integer_cshift,
    real_view,
    shift_matrix,
)
from .matrix import (
    LineOp,
    TileImage,
    apply_program,
    block_col_shift,
    block_row_shift,
    col_shift_op,
    invert_program,
    program_from_json,
    program_to_json,
    row_shift_op,
)

__all__ = [
    "DEFAULT_CONVENTION",
    "FrequencyConvention",
    "convention_from_env",
    "frequencies",
    "gcs",
    "gcs_dense_oracle",
    "integer_cshift",
    "real_view",
    "shift_matrix",
    "LineOp",
    "TileImage",
    "apply_program",
    "block_col_shift",
    "block_row_shift",
    "col_shift_op",
    "invert_program",
    "program_from_json",
    "program_to_json",
    "row_shift_op",
]
