"""Gelfand-Tsetlin type bases of sp4 = o5 representations in matrix minors."""

from .diagrams import GTDiagram, HighestWeight, HWLabel, enumerate_diagrams, enumerate_labels, weyl_dim
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GTDiagram",
    "HWLabel",
    "HighestWeight",
    "enumerate_diagrams",
    "enumerate_labels",
    "weyl_dim",
]
