"""Braid group embeddings into mapping class groups, at the level of free-group actions and mod-p homology."""

__version__ = "0.1.0"
