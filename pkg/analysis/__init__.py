"""Fano polytope analysis: validation, B-transformation, predicates and families."""
