"""Jack characters, Stanley polynomials and bipartite map enumeration."""

__version__ = "0.1.0"
