"""Reversible-circuit construction, resource accounting and verification
for qubit-optimized AES-128 and S-AES encryption circuits."""

from .circuit import (
    CNOT,
    NOT,
    TOFFOLI,
    Circuit,
    CircuitBuilder,
    CircuitError,
    Gate,
    Register,
    ResourceReport,
    append_gate,
    ccx,
    compose,
    cx,
    depth,
    invert,
    resources,
    x,
)
from .gf2 import (
    AffineLayer,
    BinaryMatrix,
    circuit_to_matrix,
    synth_affine,
    synth_inplace_linear,
)
from .sim import BACKEND, BitState, TruthTable, run, truth_table

__all__ = [
    "AffineLayer", "BACKEND", "BinaryMatrix", "BitState", "CNOT", "Circuit",
    "CircuitBuilder", "CircuitError", "Gate", "NOT", "Register",
    "ResourceReport", "TOFFOLI", "TruthTable", "append_gate", "ccx",
    "circuit_to_matrix", "compose", "cx", "depth", "invert", "resources",
    "run", "synth_affine", "synth_inplace_linear", "truth_table", "x",
]

__version__ = "0.1.0"
