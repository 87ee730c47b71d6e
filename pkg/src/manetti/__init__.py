"""Exact combinatorics of Manetti surfaces and del Pezzo degenerations."""

__version__ = "0.1.0"

from .errors import CatalogueError, InconsistencyError, InvalidInput

__all__ = ["CatalogueError", "InconsistencyError", "InvalidInput", "__version__"]
