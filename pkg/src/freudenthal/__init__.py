"""Exact computational-algebra toolkit: split composition algebras,
rank-3 Jordan algebras, graded-space orbit enumeration over finite
fields, root-system constants, and Satake-parameter lift maps."""

from . import census, cli, composition, field, fts, jordan, lattices, linalg, rootdata, satake

__version__ = "0.1.0"

__all__ = [
    "census",
    "cli",
    "composition",
    "field",
    "fts",
    "jordan",
    "lattices",
    "linalg",
    "rootdata",
    "satake",
    "__version__",
]
