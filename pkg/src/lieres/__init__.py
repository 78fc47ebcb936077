"""Exact symmetric-function and Lie-cohomology computations for restrictions from GL_n to S_n."""

__version__ = "0.1.0"
