"""Exact computations with superdominance, tropicalized moment cones and
limit Gram pencils of symmetric sums of squares."""

__version__ = "0.1.0"
