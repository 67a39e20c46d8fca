"""Spanning trees with large leaf distance: graphs, spectra, extremal graphs and oracles."""

from ._leafspan import *  # noqa: F401,F403
from ._leafspan import MatrixKind, InputError  # noqa: F401

__version__ = "0.1.0"
