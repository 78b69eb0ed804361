"""Exact engine for line arrangements in the projective plane, their
quadrilateral dual tilings, coherent configurations and Desargues flips."""

from .projective import ProjLine, ProjPoint, collinear, concurrent, incident, \
    join, meet, normalize

__version__ = "0.1.0"

__all__ = ["ProjLine", "ProjPoint", "collinear", "concurrent", "incident",
           "join", "meet", "normalize", "__version__"]
