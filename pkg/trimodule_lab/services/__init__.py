"""Exact algebra services: kernel, structures, monads, serialization and acceptance."""
