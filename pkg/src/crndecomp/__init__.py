"""Fundamental decompositions of chemical reaction networks."""

from .decomp import (
    Decomposition,
    Orientation,
    build_decomposition,
    classify_type,
    default_orientation,
    equivalence_classes,
    fundamental_classes,
    kernel_coordinates,
    summarize_types,
)
from .kinetics import KineticSystem, cf_rm, classify_plk, mass_action
from .linalg import RationalMatrix, nullspace_basis, rank, rref
from .model import Complex, Network, Reaction, structural_numbers
from .parser import ParseError, format_network, parse_kinetic_system, parse_network
from .verdict import Conclusion, analyze_multistationarity

__version__ = "0.1.0"
