"""Exact lattice arithmetic and convex geometry."""
