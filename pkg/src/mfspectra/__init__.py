"""Exact weight combinatorics for multiplicity free systems and their wells."""

__version__ = "0.1.0"

from .errors import MFSError  # noqa: E402

__all__ = ["MFSError", "__version__"]
