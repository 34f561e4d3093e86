"""Decompositions of the hypercube Q_n into 2^m n-cycles with a perfect matching."""

from .basis import basis_decomposition, select_matching
from .decompose import decompose, path_decomposition
from .errors import DecompositionError, ParseError
from .hypercube import CycleSpec, Edge, walk_cycle
from .induction import lift_decomposition
from .kotzig import kotzig_pair, product_sequence
from .model import Decomposition, PathDecomposition
from .mollard_ramras import two_n_cycle_decomposition
from .qcyc import dumps, loads, read_decomposition, write_decomposition
from .verify import Report, verify_decomposition

__all__ = [
    "CycleSpec",
    "Decomposition",
    "DecompositionError",
    "Edge",
    "ParseError",
    "PathDecomposition",
    "Report",
    "basis_decomposition",
    "decompose",
    "dumps",
    "kotzig_pair",
    "lift_decomposition",
    "loads",
    "path_decomposition",
    "product_sequence",
    "read_decomposition",
    "select_matching",
    "two_n_cycle_decomposition",
    "verify_decomposition",
    "walk_cycle",
    "write_decomposition",
]
