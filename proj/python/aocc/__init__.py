"""Event-camera denoising evaluation (AOCC, labeled metrics, ESR) backed by a C++ core."""

from ._aocc import (
    EventStream,
    FormatError,
    IoError,
    LengthError,
    ParseError,
    aocc,
    average_contrast,
    coarse_grid,
    confusion,
    contrast,
    dwf_denoise,
    esr,
    frame,
    inject,
    oracle_scores,
    read_stream,
    report,
    roc,
    standard_grid,
    synthesize,
    threshold_denoise,
    write_stream,
)

__all__ = [name for name in dir() if not name.startswith("_")]
