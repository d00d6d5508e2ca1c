"""
Brauer Algebra

Package: src.brauer
Purpose: Diagrams, elements, generators and Jucys-Murphy elements of B_m(ω)
Status: Complete
"""

from src.brauer.diagram import BrauerDiagram, all_diagrams, count_basis
from src.brauer.element import BrauerElement, commutator, diagram_multiply
from src.brauer.generators import (
    contraction,
    eps,
    generator,
    jm_element,
    s,
    symmetric_jm_element,
    transposition,
)

__all__ = [
    "BrauerDiagram",
    "BrauerElement",
    "all_diagrams",
    "commutator",
    "contraction",
    "count_basis",
    "diagram_multiply",
    "eps",
    "generator",
    "jm_element",
    "s",
    "symmetric_jm_element",
    "transposition",
]
