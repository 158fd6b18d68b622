"""Periodicity, perfect state transfer and size bounds for continuous-time quantum walks."""

from .analysis import analyze, enumerate_labeled_graphs
from .config import DEFAULT, Tolerances
from .evolution import detect_pst, fidelity, fidelity_curve, transition_matrix
from .graph import (Graph, cartesian_power, cartesian_product, complete, cycle, distances,
                    eccentricity, hypercube, parse_graph6, path, star, to_graph6)
from .hamiltonian import Hamiltonian, Kind, build, trace_square
from .periodicity import NotPeriodic, PeriodicityCertificate, classify_support, is_periodic
from .spectral import char_poly, decompose, eigenvalue_support, walk_module_dimension

__version__ = "0.1.0"
