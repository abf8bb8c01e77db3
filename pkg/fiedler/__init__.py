"""Vertex types (downer / neutral / Parter) in threshold and chain graphs."""

__version__ = "0.3.0"
