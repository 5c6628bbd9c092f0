"""Force-directed graph layout with centrality-weighted gravity."""

from ._core import *  # noqa: F401,F403
from ._core import (
    Graph,
    LayoutConfig,
    ParseError,
    RenderError,
    SocgravError,
)

__version__ = "0.1.0"


def read_graph(path):
    """Loads an edge list or JSON graph from a file."""
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())  # noqa: F405
