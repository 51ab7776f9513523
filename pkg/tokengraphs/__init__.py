"""tokengraphs: generalized token graphs, exact invariants and theorem checks."""

__version__ = "0.1.0"
