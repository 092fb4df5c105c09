"""Pydantic models and data schemas package."""
