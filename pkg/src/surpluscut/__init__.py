"""Constructive surplus lower bounds for MaxCut on graphs with sparse neighborhoods."""

from .graph import Graph, read_edgelist, write_edgelist

__version__ = "0.1.0"

__all__ = ["Graph", "read_edgelist", "write_edgelist", "__version__"]
