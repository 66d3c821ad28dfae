"""Classical basis-state simulation and exhaustive truth-table extraction.

The circuits contain only NOT/CNOT/TOFFOLI, so basis states are closed
under simulation and a single run is exact.  States pack one bit per wire.

A compiled kernel (``rqcaes._simcore``, Cython) is used when available;
otherwise the pure-Python backend in ``_simpure`` runs the same word-level
algorithms.  ``BACKEND`` names the one in use.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .circuit import CNOT, NOT, TOFFOLI, Circuit, CircuitError, Register

try:  # pragma: no cover - exercised only when the extension is built
    from . import _simcore as _backend
except ImportError:  # pragma: no cover
    from . import _simpure as _backend

BACKEND = _backend.BACKEND_NAME

_KIND_CODE = {NOT: 0, CNOT: 1, TOFFOLI: 2}

MAX_TRUTH_TABLE_INPUTS = 20


@dataclass(frozen=True)
class BitState:
    """Assignment of one classical bit per wire, packed as an int."""

    width: int
    value: int

    def __post_init__(self):
        if self.value < 0 or self.value >> self.width:
            raise CircuitError("state value does not fit the wire count")

    @classmethod
    def zeros(cls, width: int) -> "BitState":
        return cls(width, 0)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitState":
        v = 0
        for i, b in enumerate(bits):
            if b:
                v |= 1 << i
        return cls(len(bits), v)

    def bit(self, wire: int) -> int:
        return (self.value >> wire) & 1

    def bits(self) -> list[int]:
        return [(self.value >> i) & 1 for i in range(self.width)]

    def with_register(self, reg: Register, value: int) -> "BitState":
        """Set a register's wires from an integer (wires[0] = MSB)."""
        v = self.value
        n = len(reg.wires)
        if value < 0 or value >> n:
            raise CircuitError(f"value does not fit register {reg.name}")
        for i, w in enumerate(reg.wires):
            bit = (value >> (n - 1 - i)) & 1
            v = (v | (1 << w)) if bit else (v & ~(1 << w))
        return BitState(self.width, v)

    def read_register(self, reg: Register) -> int:
        """Read a register's wires as an integer (wires[0] = MSB)."""
        n = len(reg.wires)
        out = 0
        for i, w in enumerate(reg.wires):
            out |= self.bit(w) << (n - 1 - i)
        return out


_compiled_cache: dict[int, tuple] = {}


def compile_gates(circuit: Circuit) -> np.ndarray:
    """Gates as an int32 array of [kind, c1, c2, target], cached per circuit."""
    key = id(circuit)
    hit = _compiled_cache.get(key)
    if hit is not None and hit[0]() is circuit:
        return hit[1]
    arr = np.zeros((len(circuit.gates), 4), dtype=np.int32)
    for i, g in enumerate(circuit.gates):
        code = _KIND_CODE[g.kind]
        arr[i, 0] = code
        arr[i, 3] = g.target
        if code == 1:
            arr[i, 1] = g.controls[0]
        elif code == 2:
            arr[i, 1] = g.controls[0]
            arr[i, 2] = g.controls[1]
    try:
        ref = weakref.ref(circuit, lambda _r, k=key: _compiled_cache.pop(k, None))
        _compiled_cache[key] = (ref, arr)
    except TypeError:
        pass
    return arr


def run(circuit: Circuit, state: BitState) -> BitState:
    """Apply the circuit's gates in order to one basis state."""
    if state.width != circuit.wire_count:
        raise CircuitError(
            f"state width {state.width} != circuit wire count {circuit.wire_count}")
    gates = compile_gates(circuit)
    if hasattr(_backend, "run_single_words"):
        nwords = max(1, (circuit.wire_count + 63) // 64)
        words = np.zeros(nwords, dtype=np.uint64)
        v = state.value
        for i in range(nwords):
            words[i] = (v >> (64 * i)) & 0xFFFFFFFFFFFFFFFF
        _backend.run_single_words(gates, words)
        out = 0
        for i in range(nwords):
            out |= int(words[i]) << (64 * i)
        return BitState(circuit.wire_count, out)
    return BitState(circuit.wire_count, _backend.run_single(gates, state.value))


def run_batch_words(circuit: Circuit, words: np.ndarray) -> None:
    """Bit-sliced batch run in place; words has shape (wires, nwords)."""
    if words.shape[0] != circuit.wire_count:
        raise CircuitError("word array height must equal wire count")
    _backend.run_batch(compile_gates(circuit), words)


@dataclass(frozen=True)
class TruthTable:
    """Exhaustive table over designated input wires.

    ``outputs[p]`` is the output-wire pattern for input pattern ``p``; both
    patterns are read most-significant-first along the given wire lists.
    ``inputs_preserved`` / ``others_restored`` report whether the input
    wires, resp. every remaining wire, ended at their initial values for
    every pattern.
    """

    input_wires: tuple[int, ...]
    output_wires: tuple[int, ...]
    outputs: np.ndarray
    inputs_preserved: bool
    others_restored: bool

    def __getitem__(self, pattern: int) -> int:
        return int(self.outputs[pattern])

    def __len__(self) -> int:
        return len(self.outputs)


def truth_table(circuit: Circuit,
                input_wires: Sequence[int],
                output_wires: Sequence[int],
                fixed: Mapping[int, int] | None = None) -> TruthTable:
    """Simulate all 2^n input patterns at once (bit-sliced).

    Wires outside ``input_wires`` start at ``fixed`` (default 0).  Capped at
    20 input wires; larger requests are rejected rather than sampled.
    """
    input_wires = tuple(input_wires)
    output_wires = tuple(output_wires)
    fixed = dict(fixed or {})
    n = len(input_wires)
    if n > MAX_TRUTH_TABLE_INPUTS:
        raise CircuitError(f"truth_table is capped at {MAX_TRUTH_TABLE_INPUTS} input wires")
    if len(set(input_wires)) != n or len(set(output_wires)) != len(output_wires):
        raise CircuitError("wire lists must not repeat wires")
    if set(fixed) & set(input_wires):
        raise CircuitError("fixed assignment overlaps the input wires")
    for w in list(input_wires) + list(output_wires) + list(fixed):
        if not 0 <= w < circuit.wire_count:
            raise CircuitError(f"wire {w} out of range")

    n_states = 1 << n
    nwords = max(1, (n_states + 63) // 64)
    words = np.zeros((circuit.wire_count, nwords), dtype=np.uint64)
    # input wire at position i carries bit (n-1-i) of the pattern
    patterns = np.arange(n_states, dtype=np.uint64)
    for i, w in enumerate(input_wires):
        bits = np.zeros(nwords * 64, dtype=np.uint8)
        bits[:n_states] = (patterns >> np.uint64(n - 1 - i)) & np.uint64(1)
        words[w] = np.packbits(bits, bitorder="little").view(np.uint64)
    full = np.uint64(0xFFFFFFFFFFFFFFFF)
    for w, val in fixed.items():
        if val & 1:
            words[w] = full
    initial = words.copy()

    run_batch_words(circuit, words)

    def wire_bits(w: int) -> np.ndarray:
        return np.unpackbits(words[w].view(np.uint8), bitorder="little")[:n_states]

    outputs = np.zeros(n_states, dtype=np.int64)
    for i, w in enumerate(output_wires):
        outputs |= wire_bits(w).astype(np.int64) << (len(output_wires) - 1 - i)

    valid = np.full(nwords, full, dtype=np.uint64)
    if n_states % 64:
        valid[-1] = np.uint64((1 << (n_states % 64)) - 1)

    def unchanged(w: int) -> bool:
        return bool(np.all(((words[w] ^ initial[w]) & valid) == 0))

    inputs_preserved = all(unchanged(w) for w in input_wires)
    rest = set(range(circuit.wire_count)) - set(input_wires) - set(output_wires)
    others_restored = all(unchanged(w) for w in rest)

    return TruthTable(input_wires, output_wires, outputs,
                      inputs_preserved, others_restored)
