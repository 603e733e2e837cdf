"""Python bindings for the bicumulant library."""

from ._core import (
    DEFAULT_CAP,
    CapExceeded,
    ParseError,
    canonical,
    expand,
    forests,
    kappa,
    law_names,
    model_check,
    partitions,
    verify,
    verify_paths,
    verify_sweep,
)

__all__ = [
    "DEFAULT_CAP",
    "CapExceeded",
    "ParseError",
    "canonical",
    "expand",
    "forests",
    "kappa",
    "law_names",
    "model_check",
    "partitions",
    "verify",
    "verify_paths",
    "verify_sweep",
]
