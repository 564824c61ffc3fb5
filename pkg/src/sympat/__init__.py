"""Linear degenerations of Lagrangian Grassmannians: juggling patterns, affine type C, GKM."""

__version__ = "0.1.0"
