"""Nodes of the census workflow."""
