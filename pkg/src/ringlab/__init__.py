"""Executable hierarchy of nonunital ring classes."""
