"""Canonical keys, the classification engine and census tables."""
