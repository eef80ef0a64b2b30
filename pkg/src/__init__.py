"""
Micro-tensile machine toolkit.

Designs, simulates and reduces campaigns of residual-stress-driven on-chip
tensile machines, and fits film properties from the reduced points.
"""

__version__ = "0.1.0"
__description__ = "Design, simulation and data reduction for residual-stress micro-tensile machines"
