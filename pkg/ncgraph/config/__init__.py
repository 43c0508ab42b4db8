"""
Configuration for ncgraph: environment-driven settings and the built-in
verification sweep catalog.
"""

from .settings import OUTPUT_FORMATS, NcgraphConfig

__all__ = ["OUTPUT_FORMATS", "NcgraphConfig"]
