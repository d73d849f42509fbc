"""Deep reinforcement relevance networks for text games."""

__version__ = "0.1.0"
