"""irrlab: irregularity indices of graphs and a verifier for published claims."""

__version__ = "1.0.0"
