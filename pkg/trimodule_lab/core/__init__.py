"""Core configuration and utilities package."""
