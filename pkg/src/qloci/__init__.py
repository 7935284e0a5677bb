"""Exact combinatorics of bipartite type-A quiver loci.

Computes Zelevinsky permutations, enumerates pipe dreams and lacing
diagrams, and evaluates multidegrees and K-polynomials of orbit closures
by independent formulas (pipe, component, ratio), cross-checking every
bijection along the way.
"""

__version__ = "0.1.0"
