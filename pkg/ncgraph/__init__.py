"""
ncgraph - non-commuting graphs of finite groups.

Builds finite groups and their non-commuting graphs, decides AC/CC-group
status and graph matroid-ness by independent procedures, and computes and
cross-validates clique numbers.
"""

__version__ = "1.0.0"
